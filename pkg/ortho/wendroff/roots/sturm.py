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

"""Sturm sequences and exact real root counting."""

import functools
import math

from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple

from ortho.wendroff.exact import (
    Polynomial, RationalLike, derivative, parse_rational, polydivmod)
from ortho.wendroff.exceptions import BoundaryRootError

__all__ = [
    'SturmChain',
    'sturm_chain',
    'sign_variations',
    'count_roots',
    'real_root_count',
    'cauchy_bound',
    'is_squarefree',
    ]


def _integer_coeffs(p: Polynomial) -> Tuple[int, ...]:
    # positive rescaling to coprime integers, signs everywhere are unchanged
    den = functools.reduce(lambda acc, c: acc * c.denominator // math.gcd(acc, c.denominator),
                           p.coeffs, 1)
    ints = [c.numerator * (den // c.denominator) for c in p.coeffs]
    g = functools.reduce(math.gcd, ints, 0)
    return tuple(c // g for c in ints) if g else tuple(ints)


def _sign(value) -> int:
    return (value > 0) - (value < 0)


def _sign_at(ints: Sequence[int], x: Optional[Fraction], at_minus_infinity=False) -> int:
    if not ints:
        return 0
    if x is None:
        degree = len(ints) - 1
        lead = _sign(ints[0])
        return -lead if at_minus_infinity and degree % 2 else lead
    # den**degree * p(num/den), with den > 0
    num, den = x.numerator, x.denominator
    acc, power = ints[0], 1
    for c in ints[1:]:
        power *= den
        acc = acc * num + c * power
    return _sign(acc)


class SturmChain:
    """A Sturm sequence :math:`p_0 = p, p_1 = p', p_{i+1} = -\\mathrm{rem}(p_{i-1}, p_i)`.

    Behaves as a read-only sequence of :class:`~ortho.wendroff.exact.Polynomial`.
    Signs are evaluated on integer-scaled copies of the members.
    """

    __slots__ = ('_polys', '_ints')

    def __init__(self, polys: Sequence[Polynomial]):
        self._polys = tuple(polys)
        self._ints = tuple(_integer_coeffs(p) for p in self._polys)

    def __len__(self):
        return len(self._polys)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self._polys)

    def __getitem__(self, i):
        return self._polys[i]

    def __repr__(self):
        return 'SturmChain({!r})'.format(list(self._polys))

    @property
    def squarefree(self) -> bool:
        """True if the last member, :math:`\\gcd(p, p')` up to scaling, is constant."""
        return self._polys[-1].degree == 0

    def signs(self, x: Optional[RationalLike], at_minus_infinity: bool = False
              ) -> Tuple[int, ...]:
        """Signs of the members at ``x``; ``x=None`` means :math:`\\pm\\infty`."""
        if x is not None:
            x = parse_rational(x)
        return tuple(_sign_at(ints, x, at_minus_infinity) for ints in self._ints)

    def variations(self, x: Optional[RationalLike], at_minus_infinity: bool = False) -> int:
        """Number of sign changes at ``x``, zeros dropped."""
        changes, previous = 0, 0
        for s in self.signs(x, at_minus_infinity):
            if s:
                if previous and s != previous:
                    changes += 1
                previous = s
        return changes

    def sign_of_p(self, x: RationalLike) -> int:
        """Sign of the first member at a rational ``x``."""
        return _sign_at(self._ints[0], parse_rational(x))


def _primitive(p: Polynomial) -> Polynomial:
    return Polynomial(_integer_coeffs(p))


def sturm_chain(p: Polynomial, *, primitive: bool = False) -> SturmChain:
    """Sturm sequence of ``p``.

    Args:
        p: A nonzero polynomial.

        primitive:
            If True, every member is replaced by a positive multiple with
            coprime integer coefficients. Sign variations, and so all
            counts, are unchanged, and evaluation is much cheaper for the
            high degree polynomials of long sequences.

    Raises:
        ValueError: ``p`` is the zero polynomial.

    Examples:
        >>> from ortho.wendroff.exact import Polynomial
        >>> from ortho.wendroff.roots import sturm_chain
        >>> for q in sturm_chain(Polynomial([1, 0, '-18/19'])):
        ...     print(q)
        x^2 - 18/19
        2x
        18/19

    """
    if p.is_zero():
        raise ValueError("the Sturm sequence of the zero polynomial is undefined")

    scale = _primitive if primitive else (lambda q: q)
    chain = [scale(p)]
    if p.degree > 0:
        chain.append(scale(derivative(p)))
        while chain[-1].degree > 0:
            remainder = polydivmod(chain[-2], chain[-1])[1]
            if remainder.is_zero():
                break
            chain.append(scale(-remainder))
    return SturmChain(chain)


def sign_variations(chain: SturmChain, x: Optional[RationalLike],
                    at_minus_infinity: bool = False) -> int:
    """Sign variations of ``chain`` at ``x`` (zeros dropped).

    ``x=None`` evaluates at :math:`+\\infty`, or at :math:`-\\infty` when
    ``at_minus_infinity`` is set.
    """
    return chain.variations(x, at_minus_infinity)


def count_roots(p: Polynomial,
                lo: Optional[RationalLike] = None,
                hi: Optional[RationalLike] = None,
                *,
                chain: Optional[SturmChain] = None,
                strict: bool = False) -> int:
    """Number of distinct real roots of ``p`` in :math:`(lo, hi]`.

    ``None`` bounds stand for :math:`-\\infty` and :math:`+\\infty`.

    Args:
        p: A nonzero polynomial.
        lo: Lower (excluded) bound.
        hi: Upper (included) bound.
        chain: A precomputed Sturm sequence of ``p``.
        strict: If True, a root at either bound is an error instead of being
            counted by the half-open convention.

    Raises:
        ValueError: ``lo >= hi``.
        BoundaryRootError: ``strict`` is set and ``p`` vanishes at a bound;
            the error's ``endpoint`` is ``'lo'`` or ``'hi'``.

    Examples:
        >>> from ortho.wendroff.exact import Polynomial
        >>> from ortho.wendroff.roots import count_roots
        >>> d5 = Polynomial([1, 0, -3, 0, 2, 0])
        >>> count_roots(d5, 0, 2)
        2

    """
    if chain is None:
        chain = sturm_chain(p, primitive=True)
    lo = None if lo is None else parse_rational(lo)
    hi = None if hi is None else parse_rational(hi)
    if lo is not None and hi is not None and lo >= hi:
        raise ValueError("'lo' must be less than 'hi': lo = {}, hi = {}".format(lo, hi))

    if strict:
        for name, bound in (('lo', lo), ('hi', hi)):
            if bound is not None and chain.sign_of_p(bound) == 0:
                raise BoundaryRootError(
                    "polynomial vanishes at {} = {}; perturb the bound".format(name, bound),
                    endpoint=name)

    return chain.variations(lo, at_minus_infinity=True) - chain.variations(hi)


def real_root_count(p: Polynomial, *, chain: Optional[SturmChain] = None) -> int:
    """Number of distinct real roots of ``p``.

    Examples:
        >>> from ortho.wendroff.exact import Polynomial
        >>> from ortho.wendroff.roots import real_root_count
        >>> real_root_count(Polynomial([1, 0, 2]))
        0

    """
    return count_roots(p, chain=chain)


def cauchy_bound(p: Polynomial) -> Fraction:
    """:math:`1 + \\max_i |c_i / c_0|`, strictly larger than every root's modulus."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no root bound")
    lead = p.leading
    return 1 + max((abs(c / lead) for c in p.coeffs[1:]), default=Fraction(0))


def is_squarefree(p: Polynomial) -> bool:
    """True if :math:`\\gcd(p, p')` is constant, i.e. every root is simple."""
    if p.is_zero():
        raise ValueError("the zero polynomial is not squarefree")
    return sturm_chain(p, primitive=True).squarefree
