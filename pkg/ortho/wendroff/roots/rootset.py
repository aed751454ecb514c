# Copyright 2026 The ortho-wendroff Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Certified isolation and refinement of real roots by bisection."""

import csv
import io
import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ortho.wendroff.exact import Polynomial, RationalLike, format_rational, parse_rational
from ortho.wendroff.exceptions import MultiplicityError
from ortho.wendroff.roots.sturm import SturmChain, cauchy_bound, sturm_chain
from ortho.wendroff.utils import default_tolerance, format_decimal

__all__ = ['RootInterval', 'RootSet', 'isolate', 'refine', 'find_roots']

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootInterval:
    """An interval containing exactly one real root.

    Non-exact intervals are open, :math:`(lo, hi)`. Exact roots have
    ``lo == hi`` equal to the root.
    """
    lo: Fraction
    hi: Fraction
    exact: bool = False

    def __post_init__(self):
        if self.lo > self.hi or (self.exact and self.lo != self.hi):
            raise ValueError("invalid root interval ({}, {})".format(self.lo, self.hi))
        if not self.exact and self.lo == self.hi:
            raise ValueError("an empty open interval cannot hold a root")

    @classmethod
    def point(cls, x: Fraction) -> 'RootInterval':
        return cls(x, x, True)

    @property
    def value(self) -> Fraction:
        """The midpoint."""
        return (self.lo + self.hi) / 2

    @property
    def radius(self) -> Fraction:
        """Certified bound on the distance between :attr:`value` and the root."""
        return (self.hi - self.lo) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def mirror(self) -> 'RootInterval':
        return RootInterval(-self.hi, -self.lo, self.exact)


@dataclass(frozen=True)
class RootSet:
    """Certified, sorted real roots of one polynomial.

    Attributes:
        poly: Source polynomial.
        intervals: Pairwise disjoint isolating intervals, sorted ascending.
        poly_id: Optional label of the source, e.g. ``"D10"``.
        tol: Tolerance the intervals were refined to, ``None`` if only
            isolated.
        sum_hint: Exact sum of all (complex) roots, :math:`-c_1/c_0`.

    """
    poly: Polynomial
    intervals: Tuple[RootInterval, ...]
    poly_id: Optional[str] = None
    tol: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, 'intervals', tuple(self.intervals))
        for left, right in zip(self.intervals, self.intervals[1:]):
            if left.hi > right.lo or (left.hi == right.lo and left.exact and right.exact):
                raise ValueError("root intervals overlap or are unsorted: {} and {}".format(
                    left, right))

    @property
    def real_count(self) -> int:
        return len(self.intervals)

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def sum_hint(self) -> Fraction:
        if self.poly.degree < 1:
            return Fraction(0)
        return -self.poly.beta(1) / self.poly.leading

    @property
    def values(self) -> Tuple[Fraction, ...]:
        return tuple(iv.value for iv in self.intervals)

    @property
    def radii(self) -> Tuple[Fraction, ...]:
        return tuple(iv.radius for iv in self.intervals)

    def to_numpy(self) -> np.ndarray:
        """Root values as a float array."""
        return np.array([float(v) for v in self.values], dtype=float)

    def is_symmetric(self) -> bool:
        """True if the interval list is its own mirror image about 0."""
        mirrored = [iv.mirror() for iv in reversed(self.intervals)]
        return list(self.intervals) == mirrored

    def __len__(self):
        return len(self.intervals)

    def __getitem__(self, i) -> RootInterval:
        return self.intervals[i]

    def to_json(self) -> Dict[str, Any]:
        return {
            'poly': self.poly_id,
            'tol': None if self.tol is None else format_rational(self.tol),
            'roots': [{'value': format_rational(iv.value),
                       'radius': format_rational(iv.radius),
                       'exact': iv.exact} for iv in self.intervals],
            }

    def to_csv(self) -> str:
        """One root per row: index, value (p/q), approx, radius, exact."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(['index', 'value', 'approx', 'radius', 'exact'])
        for j, iv in enumerate(self.intervals, start=1):
            writer.writerow([j, format_rational(iv.value), format_decimal(iv.value),
                             format_rational(iv.radius), str(iv.exact).lower()])
        return buf.getvalue()


def _bisect(chain: SturmChain, lo: Fraction, hi: Fraction) -> List[RootInterval]:
    # isolating intervals for the roots in (lo, hi]
    variations: Dict[Fraction, int] = {}

    def var(x):
        if x not in variations:
            variations[x] = chain.variations(x)
        return variations[x]

    found = []
    stack = [(lo, hi, var(lo) - var(hi))]
    while stack:
        lo, hi, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            hi_is_root = chain.sign_of_p(hi) == 0
            found.append(RootInterval.point(hi) if hi_is_root else RootInterval(lo, hi))
            continue
        mid = (lo + hi) / 2
        left = var(lo) - var(mid)
        stack.append((lo, mid, left))
        stack.append((mid, hi, count - left))
    return found


def _detach(chain: SturmChain, iv: RootInterval) -> RootInterval:
    # shrink an open interval off endpoints that are themselves (neighbouring) roots
    if iv.exact:
        return iv
    lo, hi = iv.lo, iv.hi
    while chain.sign_of_p(lo) == 0 or chain.sign_of_p(hi) == 0:
        mid = (lo + hi) / 2
        if chain.sign_of_p(mid) == 0:
            return RootInterval.point(mid)
        if chain.variations(lo) - chain.variations(mid) == 1:
            hi = mid
        else:
            lo = mid
    return RootInterval(lo, hi)


def _sign_right_of_root(chain: SturmChain, iv: RootInterval) -> int:
    """Sign of ``p`` between the root of an open ``iv`` and ``iv.hi``."""
    sign_hi = chain.sign_of_p(iv.hi)
    return sign_hi if sign_hi else -chain.sign_of_p(iv.lo)


def isolate(p: Polynomial,
            bound: Optional[RationalLike] = None,
            *,
            chain: Optional[SturmChain] = None,
            poly_id: Optional[str] = None) -> RootSet:
    """Isolate every real root of ``p`` in :math:`(-bound, bound)`.

    The search interval is bisected, driven by Sturm counts, until each
    piece holds one root. A bisection point that is itself a root is
    recorded exactly. For a symmetric polynomial only the positive half is
    searched and the result is mirrored, so the intervals are symmetric
    about 0. No open interval has a root at either endpoint.

    Args:
        p: A nonzero polynomial.
        bound: Search radius. Defaults to :func:`cauchy_bound`, which covers
            every real root.
        chain: A precomputed (primitive) Sturm sequence of ``p``.
        poly_id: Label carried into the result.

    Raises:
        ValueError: ``p`` is zero or ``bound`` is not positive.
        MultiplicityError: ``p`` has a repeated root.

    Examples:
        >>> from ortho.wendroff.exact import Polynomial
        >>> from ortho.wendroff.roots import isolate
        >>> rs = isolate(Polynomial([1, 0, '-10/9', 0]))
        >>> rs.real_count
        3
        >>> rs[1].exact, rs[1].value
        (True, Fraction(0, 1))

    """
    if p.is_zero():
        raise ValueError("cannot isolate the roots of the zero polynomial")
    if p.degree == 0:
        return RootSet(p, (), poly_id=poly_id)

    if chain is None:
        chain = sturm_chain(p, primitive=True)
    if not chain.squarefree:
        raise MultiplicityError(
            "polynomial {} has a repeated root, gcd(p, p') = {}".format(
                poly_id or p, chain[-1]))

    bound = cauchy_bound(p) if bound is None else parse_rational(bound)
    if bound <= 0:
        raise ValueError("'bound' must be positive: value = {}".format(bound))

    if p.is_symmetric():
        positive = _bisect(chain, Fraction(0), bound)
        found = [iv.mirror() for iv in positive] + positive
        if chain.sign_of_p(0) == 0:
            found.append(RootInterval.point(Fraction(0)))
    else:
        found = _bisect(chain, -bound, bound)

    # a root exactly at +bound lies outside the open search interval
    found = [_detach(chain, iv) for iv in found if not (iv.exact and abs(iv.lo) == bound)]
    found.sort(key=lambda iv: (iv.lo, iv.hi))
    logger.debug("isolated %d real roots of %s", len(found), poly_id or 'polynomial')
    return RootSet(p, found, poly_id=poly_id)


def refine(p: Polynomial,
           roots: RootSet,
           tol: Optional[RationalLike] = None,
           *,
           chain: Optional[SturmChain] = None) -> RootSet:
    """Bisect every isolating interval until its width is at most ``2*tol``.

    The midpoint of each interval is then within ``tol`` of its root. A
    bisection point at which ``p`` vanishes becomes an exact root.

    Examples:
        >>> from fractions import Fraction
        >>> from ortho.wendroff.exact import Polynomial
        >>> from ortho.wendroff.roots import find_roots
        >>> rs = find_roots(Polynomial([1, 0, -2]), '1/1000')
        >>> rs.real_count, all(abs(v * v - 2) < Fraction(1, 100) for v in rs.values)
        (2, True)

    """
    tol = default_tolerance() if tol is None else parse_rational(tol)
    if tol <= 0:
        raise ValueError("'tol' must be positive: value = {}".format(tol))
    if chain is None:
        chain = sturm_chain(p, primitive=True)

    refined = []
    for iv in roots.intervals:
        lo, hi = iv.lo, iv.hi
        if iv.exact or hi - lo <= 2 * tol:
            refined.append(iv)
            continue
        # one simple root in (lo, hi); an endpoint may be a neighbouring root
        sign_right = _sign_right_of_root(chain, iv)
        exact = None
        while hi - lo > 2 * tol:
            mid = (lo + hi) / 2
            sign_mid = chain.sign_of_p(mid)
            if sign_mid == 0:
                exact = mid
                break
            if sign_mid == sign_right:
                hi = mid
            else:
                lo = mid
        refined.append(RootInterval.point(exact) if exact is not None else RootInterval(lo, hi))

    return RootSet(roots.poly, refined, poly_id=roots.poly_id, tol=tol)


def find_roots(p: Polynomial,
               tol: Optional[RationalLike] = None,
               bound: Optional[RationalLike] = None,
               *,
               poly_id: Optional[str] = None) -> RootSet:
    """:func:`isolate` followed by :func:`refine`, sharing one Sturm sequence."""
    if p.is_zero():
        raise ValueError("cannot isolate the roots of the zero polynomial")
    chain = sturm_chain(p, primitive=True)
    return refine(p, isolate(p, bound, chain=chain, poly_id=poly_id), tol, chain=chain)
