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

"""Upper bounds on extreme zeros and the radius of the orthogonality interval."""

import enum
import math
import warnings

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from ortho.wendroff.exact import RationalLike, parse_rational
from ortho.wendroff.exceptions import ParameterDomainError, RadiusModeWarning
from ortho.wendroff.ultraspherical.polynomials import UltrasphericalParams

__all__ = [
    'RadiusMode',
    'IntervalRadius',
    'upper_sqrt',
    'a1_squared',
    'a2',
    'extreme_zero_upper_bounds',
    'interval_radius',
    ]

SQRT_TOLERANCE = Fraction(1, 10**6)
"""Maximum over-approximation of square-root bounds, on the squared value."""


class RadiusMode(str, enum.Enum):
    """How the radius ``a`` of the interval :math:`(-a, a)` is chosen."""

    AUTO = 'auto'
    """Pick :attr:`A1`, :attr:`A2` or :attr:`UNIT` from :math:`\\lambda`."""

    A1 = 'a1'
    """:math:`(2/(2\\lambda+3))^{1/2}`, rounded up to a rational."""

    A2 = 'a2'
    """:math:`4(2+\\lambda)/(3(3+2\\lambda))`."""

    UNIT = 'unit'
    """``a = 1``."""

    EXPLICIT = 'explicit'
    """A user supplied positive rational."""

    THEOREM = 'theorem'
    """Largest-zero bound of :math:`C_{n-2}^\\lambda` plus a user supplied epsilon."""


@dataclass(frozen=True)
class IntervalRadius:
    """The radius ``a`` together with how it was obtained.

    Attributes:
        value: The radius, always positive.
        mode: The resolved mode (never :attr:`RadiusMode.AUTO`).
        slack: Amount by which a square-root bound was over-approximated,
            measured on the square: ``value**2 - exact**2``. Zero when the
            radius is exact.
        epsilon: The epsilon added in :attr:`RadiusMode.THEOREM` mode.

    """
    value: Fraction
    mode: RadiusMode
    slack: Fraction = Fraction(0)
    epsilon: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, 'value', parse_rational(self.value))
        object.__setattr__(self, 'mode', RadiusMode(self.mode))
        object.__setattr__(self, 'slack', parse_rational(self.slack))
        if self.value <= 0:
            raise ParameterDomainError(
                "the radius 'a' must be positive: value = {}".format(self.value))
        if self.slack < 0:
            raise ValueError("'slack' must be nonnegative: value = {}".format(self.slack))


def upper_sqrt(q: RationalLike,
               tol: RationalLike = SQRT_TOLERANCE) -> Tuple[Fraction, Fraction]:
    """Rational upper bound ``v`` of :math:`\\sqrt{q}`.

    Returns ``(v, v**2 - q)``. Exact rational square roots are returned
    exactly with zero slack; otherwise ``v`` is a decimal fraction with
    ``v - sqrt(q) <= tol`` and ``v**2 - q <= tol``.

    Examples:
        >>> from ortho.wendroff.ultraspherical import upper_sqrt
        >>> upper_sqrt(4)
        (Fraction(2, 1), Fraction(0, 1))
        >>> v, slack = upper_sqrt(2)
        >>> from fractions import Fraction
        >>> 0 < v * v - 2 == slack <= Fraction(1, 10**6)
        True

    """
    q = parse_rational(q)
    tol = parse_rational(tol)
    if q < 0:
        raise ValueError("cannot take the square root of a negative: value = {}".format(q))
    if tol <= 0:
        raise ValueError("'tol' must be positive: value = {}".format(tol))

    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd), Fraction(0)

    scale = 10
    while Fraction(1, scale) > tol:
        scale *= 10

    while True:
        s = math.isqrt(q.numerator * scale * scale // q.denominator)
        while Fraction(s, scale) ** 2 < q:
            s += 1
        value = Fraction(s, scale)
        slack = value * value - q
        if slack <= tol:
            return value, slack
        scale *= 10


def a1_squared(params: UltrasphericalParams) -> Fraction:
    """:math:`A_1(\\lambda)^2 = 2/(2\\lambda+3)`."""
    return Fraction(2) / (2 * params.lam + 3)


def a2(params: UltrasphericalParams) -> Fraction:
    """:math:`A_2(\\lambda) = 4(2+\\lambda)/(3(3+2\\lambda))`."""
    lam = params.lam
    return 4 * (2 + lam) / (3 * (3 + 2 * lam))


def extreme_zero_upper_bounds(m: int, params: UltrasphericalParams,
                              tol: RationalLike = SQRT_TOLERANCE
                              ) -> Tuple[Fraction, Fraction]:
    """Two upper bounds for the largest zero :math:`x_{m,m}` of :math:`C_m^\\lambda`.

    Returns ``(sqrt_bound, algebraic_bound)`` where ``sqrt_bound`` is a
    rational over-approximation of :math:`((m-1)/(2\\lambda+m))^{1/2}` and
    ``algebraic_bound`` is :math:`1 - (2\\lambda+1)/(m(m+2\\lambda))` exactly.
    Either bound, and so their minimum, bounds :math:`x_{m,m}` from above.

    Examples:
        >>> from ortho.wendroff.ultraspherical import (
        ...     UltrasphericalParams, extreme_zero_upper_bounds)
        >>> extreme_zero_upper_bounds(3, UltrasphericalParams('-5/4'))
        (Fraction(2, 1), Fraction(2, 1))

    """
    if m < 3:
        raise ValueError("'m' must be at least 3: value = {}".format(m))
    lam = params.lam
    sqrt_bound, _ = upper_sqrt(Fraction(m - 1) / (2 * lam + m), tol)
    algebraic_bound = 1 - (2 * lam + 1) / (m * (m + 2 * lam))
    return sqrt_bound, algebraic_bound


def _resolve_auto(params: UltrasphericalParams) -> RadiusMode:
    lam = params.lam
    if lam < Fraction(-5, 4):
        return RadiusMode.A1
    if lam < Fraction(-1, 2):
        return RadiusMode.A2
    return RadiusMode.UNIT


def interval_radius(params: UltrasphericalParams,
                    mode: RadiusMode = RadiusMode.AUTO,
                    *,
                    value: Optional[RationalLike] = None,
                    epsilon: Optional[RationalLike] = None,
                    n: Optional[int] = None,
                    tol: RationalLike = SQRT_TOLERANCE) -> IntervalRadius:
    """Choose the radius ``a`` of the interval :math:`(-a, a)`.

    Args:
        params: Ultraspherical parameter.

        mode:
            One of the :class:`RadiusMode` values:

            * "auto": :math:`A_1` for :math:`-3/2 < \\lambda < -5/4`,
              :math:`A_2` for :math:`-5/4 \\le \\lambda < -1/2` and 1 for
              :math:`\\lambda > -1/2`.
            * "a1", "a2", "unit": force that choice.
            * "explicit": use ``value``.
            * "theorem": the smaller of the two bounds of
              :func:`extreme_zero_upper_bounds` for ``m = n - 2``, raised to
              at least 1, plus ``epsilon``.

        value: Radius for "explicit" mode.
        epsilon: Positive offset for "theorem" mode.
        n: Seed degree for "theorem" mode, at least 5.
        tol: Over-approximation tolerance for square-root bounds.

    Raises:
        ParameterDomainError: A mode argument is missing or not positive.

    Examples:
        >>> from ortho.wendroff.ultraspherical import UltrasphericalParams, interval_radius
        >>> interval_radius(UltrasphericalParams('-3/4')).value
        Fraction(10, 9)
        >>> interval_radius(UltrasphericalParams('-1/4'), 'a2').value
        Fraction(14, 15)

    """
    mode = RadiusMode(mode)
    lam = params.lam

    if mode is RadiusMode.AUTO:
        mode = _resolve_auto(params)
    elif mode in (RadiusMode.A1, RadiusMode.A2) and lam > Fraction(-1, 2):
        warnings.warn(
            "radius mode {!r} with lambda = {} > -1/2: the seed polynomial has "
            "zeros at -1 and 1, which need not lie inside (-a, a)".format(
                mode.value, lam), RadiusModeWarning, stacklevel=2)
    elif mode is RadiusMode.UNIT and params.quasi_orthogonal:
        warnings.warn(
            "radius mode 'unit' with lambda = {} < -1/2: two zeros of the seed "
            "polynomials lie outside (-1, 1)".format(lam),
            RadiusModeWarning, stacklevel=2)

    if mode is RadiusMode.A1:
        root, slack = upper_sqrt(a1_squared(params), tol)
        return IntervalRadius(root, mode, slack)

    if mode is RadiusMode.A2:
        return IntervalRadius(a2(params), mode)

    if mode is RadiusMode.UNIT:
        return IntervalRadius(Fraction(1), mode)

    if mode is RadiusMode.EXPLICIT:
        if value is None:
            raise ParameterDomainError("'value' is required for radius mode 'explicit'")
        value = parse_rational(value)
        if value <= 0:
            raise ParameterDomainError(
                "an explicit radius must be positive: value = {}".format(value))
        return IntervalRadius(value, mode)

    # theorem mode
    if epsilon is None:
        raise ParameterDomainError("'epsilon' is required for radius mode 'theorem'")
    epsilon = parse_rational(epsilon)
    if epsilon <= 0:
        raise ParameterDomainError("'epsilon' must be positive: value = {}".format(epsilon))
    if n is None or n < 5:
        raise ParameterDomainError(
            "radius mode 'theorem' needs the seed degree n >= 5: value = {}".format(n))

    sqrt_bound, algebraic_bound = extreme_zero_upper_bounds(n - 2, params, tol)
    if sqrt_bound < algebraic_bound:
        bound = sqrt_bound
        _, slack = upper_sqrt(Fraction(n - 3) / (2 * lam + n - 2), tol)
    else:
        bound, slack = algebraic_bound, Fraction(0)

    # D_n vanishes at +-1, so the radius can never be below 1
    if bound < 1:
        bound, slack = Fraction(1), Fraction(0)

    return IntervalRadius(bound + epsilon, mode, slack, epsilon)
