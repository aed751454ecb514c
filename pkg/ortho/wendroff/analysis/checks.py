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

"""Certified zero-ordering and containment checks.

Every ordering is decided on isolating intervals, never on rounded values.
Two roots whose intervals overlap are compared exactly through a common
factor of their polynomials when there is one; otherwise the comparison
raises :class:`~ortho.wendroff.exceptions.UndecidableOrderingError` and
:func:`decide` refines and retries.
"""

import functools
import logging

from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Tuple, Union

from ortho.wendroff.embedding import WendroffSequence
from ortho.wendroff.exact import Polynomial, RationalLike, parse_rational, polygcd
from ortho.wendroff.exceptions import PreconditionError, UndecidableOrderingError
from ortho.wendroff.roots import RootSet, count_roots, refine
from ortho.wendroff.ultraspherical import UltrasphericalParams, ultraspherical_table
from ortho.wendroff.utils import default_tolerance

__all__ = [
    'check_interlacing',
    'check_quasi_ordering',
    'check_bdj_ordering',
    'check_containment',
    'check_seed_zeros',
    'check_ultraspherical_containment',
    'decide',
    ]

logger = logging.getLogger(__name__)

# a chain item is either the j-th root of a root set or a fixed rational
_Item = Union[Tuple[RootSet, int], Fraction]


def _sign(value) -> int:
    return (value > 0) - (value < 0)


@functools.lru_cache(maxsize=1024)
def _common_factor(p: Polynomial, q: Polynomial) -> Polynomial:
    return polygcd(p, q)


def _compare_root_to_value(rs: RootSet, j: int, x: Fraction) -> int:
    """Exact sign of ``root_j - x``."""
    iv = rs.intervals[j]
    if iv.exact:
        return _sign(iv.lo - x)
    if iv.hi <= x:
        return -1
    if iv.lo >= x:
        return 1
    # x inside (lo, hi) and p changes sign exactly once there; an endpoint
    # may be a neighbouring root, so take the sign right of the root from
    # whichever endpoint is not
    px = rs.poly(x)
    if px == 0:
        return 0
    right = _sign(rs.poly(iv.hi)) or -_sign(rs.poly(iv.lo))
    return -1 if _sign(px) == right else 1


def _compare_roots(a: RootSet, i: int, b: RootSet, j: int) -> int:
    """Exact sign of ``root_i(a) - root_j(b)``."""
    if a.poly == b.poly:
        return _sign(i - j)

    ia, ib = a.intervals[i], b.intervals[j]
    if ia.exact:
        return -_compare_root_to_value(b, j, ia.lo)
    if ib.exact:
        return _compare_root_to_value(a, i, ib.lo)
    if ia.hi <= ib.lo:
        return -1
    if ib.hi <= ia.lo:
        return 1

    # overlap: equal roots are exactly the common roots in the intersection
    lo, hi = max(ia.lo, ib.lo), min(ia.hi, ib.hi)
    g = _common_factor(a.poly, b.poly)
    if g.degree > 0 and count_roots(g, lo, hi) - (g(hi) == 0) > 0:
        return 0

    raise UndecidableOrderingError(
        "cannot order roots in ({}, {}) and ({}, {}) at the current tolerance".format(
            ia.lo, ia.hi, ib.lo, ib.hi))


def _compare(left: _Item, right: _Item) -> int:
    if isinstance(left, Fraction):
        if isinstance(right, Fraction):
            return _sign(left - right)
        return -_compare_root_to_value(right[0], right[1], left)
    if isinstance(right, Fraction):
        return _compare_root_to_value(left[0], left[1], right)
    return _compare_roots(left[0], left[1], right[0], right[1])


def _strictly_increasing(items: Iterable[_Item]) -> bool:
    items = list(items)
    return all(_compare(left, right) < 0 for left, right in zip(items, items[1:]))


def check_interlacing(lo: RootSet, hi: RootSet) -> bool:
    """True if the real roots of ``lo`` strictly interlace those of ``hi``.

    ``hi`` must have exactly one more real root than ``lo``:
    :math:`h_1 < l_1 < h_2 < \\dots < l_{m-1} < h_m`.

    Raises:
        UndecidableOrderingError: Two intervals overlap at the current
            tolerance; refine and retry, e.g. with :func:`decide`.

    """
    if hi.real_count != lo.real_count + 1:
        return False
    chain: List[_Item] = []
    for j in range(lo.real_count):
        chain.append((hi, j))
        chain.append((lo, j))
    chain.append((hi, hi.real_count - 1))
    return _strictly_increasing(chain)


def check_quasi_ordering(zc_prev: RootSet, zc: RootSet, params: UltrasphericalParams) -> bool:
    """Zero ordering of :math:`C_{n-1}^\\lambda` and :math:`C_n^\\lambda` for
    :math:`-3/2 < \\lambda < -1/2`:

    .. math::

        x_{1,n-1} < x_{1,n} < -1 < x_{2,n} < x_{2,n-1} < \\dots
        < x_{n-1,n} < 1 < x_{n,n} < x_{n-1,n-1}

    Raises:
        PreconditionError: :math:`\\lambda` outside the quasi-orthogonal range
            or ``n < 4``.
        UndecidableOrderingError: See :func:`check_interlacing`.

    """
    if not params.quasi_orthogonal:
        raise PreconditionError(
            "quasi-orthogonal ordering needs -3/2 < lambda < -1/2: lambda = {}".format(
                params.lam))
    n = zc.degree
    if n < 4 or zc_prev.degree != n - 1:
        raise PreconditionError(
            "expected degrees n - 1 and n with n >= 4, got {} and {}".format(
                zc_prev.degree, zc.degree))
    if zc.real_count != n or zc_prev.real_count != n - 1:
        return False

    one = Fraction(1)
    chain: List[_Item] = [(zc_prev, 0), (zc, 0), -one]
    for j in range(1, n - 2):
        chain.append((zc, j))
        chain.append((zc_prev, j))
    chain.extend([(zc, n - 2), one, (zc, n - 1), (zc_prev, n - 2)])
    return _strictly_increasing(chain)


def check_bdj_ordering(z_prev: RootSet, z: RootSet, z_next: RootSet) -> bool:
    """Ordering of the zeros of three consecutive :math:`D_{n-1}, D_n, D_{n+1}`.

    Checks the chain through the lower halves,

    .. math::

        y_{1,n+1} < y_{1,n} < y_{1,n-1} < y_{2,n+1} < y_{2,n} < y_{2,n-1} < \\dots

    and the mirrored chain through the upper halves,
    :math:`y_{n+1,n+1} > y_{n,n} > y_{n-1,n-1} > y_{n,n+1} > \\dots`. The
    chains run through the strictly negative (positive) roots. When
    :math:`D_n` has odd degree its root at 0 closes both chains; the roots
    at 0 shared by :math:`D_{n-1}` and :math:`D_{n+1}` are not ordered.

    Examples:
        >>> from ortho.wendroff.analysis import check_bdj_ordering
        >>> from ortho.wendroff.embedding import WendroffConfig, build
        >>> from ortho.wendroff.roots import find_roots
        >>> seq = build(WendroffConfig.from_parameters('-5/4', n=5, k=1))
        >>> check_bdj_ordering(*(find_roots(seq[m]) for m in (4, 5, 6)))
        True

    """
    counts = (z_prev.real_count, z.real_count, z_next.real_count)
    if counts[1] != counts[0] + 1 or counts[2] != counts[1] + 1:
        return False

    sets = (z_next, z, z_prev)
    lower: List[_Item] = []
    upper: List[_Item] = []
    for j in range(z_next.real_count // 2):
        for rs in sets:
            if j < rs.real_count // 2:
                lower.append((rs, j))
                upper.append((rs, rs.real_count - 1 - j))
    if z.real_count % 2:
        lower.append((z, z.real_count // 2))
        upper.append((z, z.real_count // 2))
    return _strictly_increasing(lower) and _strictly_increasing(reversed(upper))


def check_containment(z: RootSet, a: RationalLike) -> bool:
    """True if every root of ``z`` lies in :math:`(-a, a)`.

    Decided by an exact Sturm count on :math:`(-a, a)`, independent of the
    refinement tolerance.
    """
    a = parse_rational(a)
    if not z.real_count:
        return True
    if a <= 0 or z.poly(a) == 0:
        return False
    return count_roots(z.poly, -a, a) == z.real_count


def check_seed_zeros(seq: WendroffSequence, roots_n: Optional[RootSet] = None) -> bool:
    """Check the seed identities of a sequence.

    :math:`D_{n-1} = C_{n-1}^\\lambda` and
    :math:`D_n = (x^2-1) C_{n-2}^\\lambda`, so :math:`D_n(\\pm 1) = 0` and the
    other zeros of :math:`D_n` are those of :math:`C_{n-2}^\\lambda`. If the
    roots of :math:`D_n` are given, ``-1`` and ``1`` must also sit at the
    expected positions: second and second-to-last in the quasi-orthogonal
    range, extreme otherwise.
    """
    config = seq.config
    n = config.n
    table = ultraspherical_table(n - 1, config.params)
    x2_minus_1 = Polynomial([1, 0, -1])
    if seq[n - 1] != table[n - 1] or seq[n] != x2_minus_1 * table[n - 2]:
        return False
    if seq[n](1) != 0 or seq[n](-1) != 0:
        return False
    if roots_n is None:
        return True
    if roots_n.real_count != n:
        return False
    offset = 1 if config.params.quasi_orthogonal else 0
    return (_compare_root_to_value(roots_n, offset, Fraction(-1)) == 0
            and _compare_root_to_value(roots_n, n - 1 - offset, Fraction(1)) == 0)


def check_ultraspherical_containment(params: UltrasphericalParams, a: RationalLike,
                                     degrees: Iterable[int]) -> bool:
    """True if :math:`(-a, a)` holds all ``m`` zeros of every :math:`C_m^\\lambda`.

    Examples:
        >>> from ortho.wendroff.analysis import check_ultraspherical_containment
        >>> from ortho.wendroff.ultraspherical import UltrasphericalParams
        >>> check_ultraspherical_containment(UltrasphericalParams('-3/4'), '10/9', range(3, 9))
        True

    """
    a = parse_rational(a)
    degrees = list(degrees)
    if not degrees:
        return True
    table = ultraspherical_table(max(degrees), params)
    for m in degrees:
        c = table[m]
        if c(a) == 0 or count_roots(c, -a, a) != m:
            logger.debug("C_%d^%s has zeros outside (-%s, %s)", m, params.lam, a, a)
            return False
    return True


def decide(check: Callable[..., bool], *rootsets: RootSet,
           tol: Optional[RationalLike] = None, max_rounds: int = 12, **kwargs) -> bool:
    """Run an ordering check, refining the root sets while it is undecidable.

    Each round divides the tolerance by 10.

    Args:
        check: One of the ordering checks.
        *rootsets: Its root set arguments.
        tol: Starting tolerance; defaults to the coarsest tolerance of the
            root sets, or :func:`~ortho.wendroff.utils.default_tolerance`.
        max_rounds: Refinement rounds before giving up.
        **kwargs: Passed through to ``check``.

    Raises:
        UndecidableOrderingError: Still undecidable after ``max_rounds``.

    """
    if tol is None:
        tols = [rs.tol for rs in rootsets if rs.tol is not None]
        tol = max(tols) if tols else default_tolerance()
    tol = parse_rational(tol)

    for round_ in range(max_rounds + 1):
        try:
            return check(*rootsets, **kwargs)
        except UndecidableOrderingError:
            if round_ == max_rounds:
                raise
            tol /= 10
            logger.debug("%s undecidable, refining to %s", check.__name__, tol)
            rootsets = tuple(refine(rs.poly, rs, tol) for rs in rootsets)
