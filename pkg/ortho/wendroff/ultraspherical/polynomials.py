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

"""Monic ultraspherical (Gegenbauer) polynomials and their zero bounds.

The monic polynomials satisfy

.. math::

    C_m^\\lambda(x) = x C_{m-1}^\\lambda(x) - b_m^\\lambda C_{m-2}^\\lambda(x),
    \\qquad C_{-1}^\\lambda \\equiv 0,\\quad C_0^\\lambda = 1,

with :math:`b_m^\\lambda = (m-1)(m-2+2\\lambda) / (4(m-2+\\lambda)(m-1+\\lambda))`.
"""

import logging
import threading

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from ortho.wendroff.exact import (
    MonicPolynomial, RationalLike, axpy, mul_x, parse_rational)
from ortho.wendroff.exceptions import ParameterDomainError

__all__ = [
    'UltrasphericalParams',
    'recurrence_b',
    'ultraspherical',
    'ultraspherical_table',
    ]

logger = logging.getLogger(__name__)

LAMBDA_LOWER = Fraction(-3, 2)


@dataclass(frozen=True)
class UltrasphericalParams:
    """Validated ultraspherical parameter :math:`\\lambda`.

    Args:
        lam: :math:`\\lambda`, as an int, :class:`~fractions.Fraction` or
            ``"p/q"`` string. Must satisfy :math:`\\lambda > -3/2`,
            :math:`\\lambda \\notin \\{-1, 0\\}` and must not be a half-odd
            integer :math:`(2k-1)/2`, :math:`k \\geq 0`.

    Raises:
        TypeError: ``lam`` is a float.
        ParameterDomainError: ``lam`` is outside the admissible set.

    Examples:
        >>> from ortho.wendroff.ultraspherical import UltrasphericalParams
        >>> UltrasphericalParams('-5/4').lam
        Fraction(-5, 4)

    """
    lam: Fraction

    def __post_init__(self):
        lam = parse_rational(self.lam)
        object.__setattr__(self, 'lam', lam)

        if lam <= LAMBDA_LOWER:
            raise ParameterDomainError(
                "'lambda' must be greater than -3/2: value = {}".format(lam))
        if lam in (0, -1):
            raise ParameterDomainError(
                "'lambda' cannot be 0 or -1: value = {}".format(lam))
        twice = 2 * lam
        if twice.denominator == 1 and twice.numerator % 2:
            raise ParameterDomainError(
                "'lambda' cannot be of the form (2k-1)/2, k = 0, 1, ...: "
                "value = {}".format(lam))

    @property
    def quasi_orthogonal(self) -> bool:
        """True on :math:`(-3/2, -1/2)`, where two zeros lie outside (-1, 1)."""
        return self.lam < Fraction(-1, 2)


def recurrence_b(n: int, params: UltrasphericalParams) -> Fraction:
    """Recurrence coefficient :math:`b_n^\\lambda`.

    Examples:
        >>> from ortho.wendroff.ultraspherical import UltrasphericalParams, recurrence_b
        >>> recurrence_b(2, UltrasphericalParams('-5/4'))
        Fraction(-2, 1)

    """
    if n < 1:
        raise ValueError("'n' must be a positive integer: value = {}".format(n))
    lam = params.lam
    return Fraction((n - 1) * (n - 2 + 2 * lam)) / (4 * (n - 2 + lam) * (n - 1 + lam))


class _TableCache:
    # one growing list per lambda; appends happen under the lock and readers
    # only ever see fully built prefixes
    def __init__(self):
        self._lock = threading.Lock()
        self._tables: Dict[Fraction, List[MonicPolynomial]] = {}

    def get(self, params: UltrasphericalParams, m: int) -> Tuple[MonicPolynomial, ...]:
        table = self._tables.get(params.lam)
        if table is not None and len(table) > m:
            return tuple(table[:m + 1])

        with self._lock:
            table = self._tables.setdefault(
                params.lam, [MonicPolynomial([1]), MonicPolynomial([1, 0])])
            while len(table) <= m:
                degree = len(table)
                b = recurrence_b(degree, params)
                nxt = MonicPolynomial.from_polynomial(
                    axpy(mul_x(table[-1]), table[-2], -b))
                table.append(nxt)
                logger.debug("C_%d^%s built, b = %s", degree, params.lam, b)
            return tuple(table[:m + 1])

    def clear(self):
        with self._lock:
            self._tables.clear()


_cache = _TableCache()


def ultraspherical_table(m: int, params: UltrasphericalParams) -> Tuple[MonicPolynomial, ...]:
    """Return :math:`(C_0^\\lambda, \\dots, C_m^\\lambda)`.

    Tables are built once per :math:`\\lambda` and extended on demand; the
    cache is safe to share between threads.
    """
    if m < 0:
        raise ValueError("'m' must be a nonnegative integer: value = {}".format(m))
    return _cache.get(params, m)


def ultraspherical(m: int, params: UltrasphericalParams) -> MonicPolynomial:
    """Monic ultraspherical polynomial :math:`C_m^\\lambda`.

    Examples:
        >>> from ortho.wendroff.ultraspherical import UltrasphericalParams, ultraspherical
        >>> print(ultraspherical(4, UltrasphericalParams('-5/4')))
        x^4 - (12/7)x^2 + 4/7

    """
    return ultraspherical_table(m, params)[m]
