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

"""Downward and upward three-term recurrences of the Wendroff construction.

Starting from the seed :math:`D_{n-1} = C_{n-1}^\\lambda` and
:math:`D_n = (x^2 - 1) C_{n-2}^\\lambda`, the recurrence

.. math::

    D_m = x D_{m-1} - \\ell_m D_{m-2}

is run backwards down to :math:`D_0 = 1` and forwards up to
:math:`D_{n+k}`. Every :math:`\\ell_m` must be strictly positive.
"""

import logging

from fractions import Fraction
from typing import Tuple

from ortho.wendroff.embedding.sequence import WendroffConfig, WendroffSequence
from ortho.wendroff.exact import (
    MonicPolynomial, Polynomial, RationalLike, axpy, mul_x, parse_rational)
from ortho.wendroff.exceptions import (
    ConstructionError, InternalConsistencyError, InvalidRadiusError,
    ParameterDomainError, PreconditionError)
from ortho.wendroff.ultraspherical import UltrasphericalParams, ultraspherical_table

__all__ = [
    'seed',
    'downward_step',
    'upward_first',
    'upward_rest',
    'upward_general',
    'upward_bound',
    'build',
    ]

logger = logging.getLogger(__name__)


def seed(n: int, params: UltrasphericalParams) -> Tuple[MonicPolynomial, MonicPolynomial]:
    """Return :math:`(D_{n-1}, D_n) = (C_{n-1}^\\lambda, (x^2-1) C_{n-2}^\\lambda)`.

    Examples:
        >>> from ortho.wendroff.embedding import seed
        >>> from ortho.wendroff.ultraspherical import UltrasphericalParams
        >>> d4, d5 = seed(5, UltrasphericalParams('-5/4'))
        >>> print(d5)
        x^5 - 3x^3 + 2x

    """
    if n < 5:
        raise ParameterDomainError("'n' should be an integer >= 5: value = {}".format(n))
    table = ultraspherical_table(n - 1, params)
    c_nm2 = table[n - 2]
    d_n = axpy(mul_x(mul_x(c_nm2)), c_nm2, -1)
    return table[n - 1], MonicPolynomial.from_polynomial(d_n)


def downward_step(d_hi: Polynomial, d_mid: Polynomial) -> Tuple[Fraction, MonicPolynomial]:
    """One backward step of the recurrence.

    Given :math:`D_m` and :math:`D_{m-1}`, returns :math:`\\ell_m` and
    :math:`D_{m-2} = -(D_m - x D_{m-1}) / \\ell_m` where
    :math:`\\ell_m = \\beta_2(D_{m-1}) - \\beta_2(D_m)`.

    Raises:
        PreconditionError: The degrees are not ``m`` and ``m - 1`` with ``m >= 2``.
        ConstructionError: :math:`\\ell_m \\le 0`.
        InternalConsistencyError: :math:`D_{m-2}` comes out with the wrong
            degree or not monic, which happens when an input is not symmetric.

    Examples:
        >>> from ortho.wendroff.embedding import downward_step, seed
        >>> from ortho.wendroff.ultraspherical import UltrasphericalParams
        >>> ell, d3 = downward_step(*reversed(seed(5, UltrasphericalParams('-5/4'))))
        >>> ell
        Fraction(9, 7)
        >>> print(d3)
        x^3 - (10/9)x

    """
    m = d_hi.degree
    if m < 2 or d_mid.degree != m - 1:
        raise PreconditionError(
            "downward step needs degrees m >= 2 and m - 1, got {} and {}".format(
                m, d_mid.degree))

    ell = d_mid.beta(2) - d_hi.beta(2)
    if ell <= 0:
        raise ConstructionError(
            "recurrence coefficient ell_{} = {} is not positive".format(m, ell), degree=m - 2)

    d_lo = axpy(d_hi, mul_x(d_mid), -1) * (-1 / ell)
    if d_lo.degree != m - 2 or not d_lo.is_monic():
        raise InternalConsistencyError(
            "downward step produced {} instead of a monic polynomial of degree {}".format(
                d_lo, m - 2), degree=m - 2)
    return ell, MonicPolynomial.from_polynomial(d_lo)


def upward_bound(d_prev: Polynomial, d_prevprev: Polynomial, a: RationalLike) -> Fraction:
    """Supremum :math:`a D_{m-1}(a) / D_{m-2}(a)` of admissible :math:`\\ell_m`.

    Raises:
        InvalidRadiusError: :math:`D_{m-1}(a) \\le 0` or :math:`D_{m-2}(a) \\le 0`,
            so ``a`` does not lie to the right of their zeros.

    """
    a = parse_rational(a)
    value_prev, value_prevprev = d_prev(a), d_prevprev(a)
    if value_prev <= 0 or value_prevprev <= 0:
        raise InvalidRadiusError(
            "D_{}(a) = {} and D_{}(a) = {} must both be positive; a = {} does not "
            "exceed their largest zeros".format(
                d_prev.degree, value_prev, d_prevprev.degree, value_prevprev, a),
            degree=d_prev.degree + 1)
    return a * value_prev / value_prevprev


def upward_first(d_n: Polynomial, d_nm1: Polynomial,
                 a: RationalLike, sigma: RationalLike) -> Tuple[Fraction, MonicPolynomial]:
    """First forward step, :math:`\\ell_{n+1} = a D_n(a) / (\\sigma D_{n-1}(a))`.

    Raises:
        ParameterDomainError: ``sigma <= 1``.
        InvalidRadiusError: ``a`` does not exceed the zeros of the seed.

    """
    sigma = parse_rational(sigma)
    if sigma <= 1:
        raise ParameterDomainError("'sigma' must be greater than 1: value = {}".format(sigma))
    ell = upward_bound(d_n, d_nm1, a) / sigma
    return ell, MonicPolynomial.from_polynomial(axpy(mul_x(d_n), d_nm1, -ell))


def upward_rest(d_prev: Polynomial, d_prevprev: Polynomial,
                a: RationalLike, sigma: RationalLike) -> Tuple[Fraction, MonicPolynomial]:
    """Later forward steps, :math:`\\ell = (\\sigma - 1) a^2 / \\sigma^2`.

    The first step fixes :math:`D_m(a)/D_{m-1}(a) = a(\\sigma-1)/\\sigma` and
    this constant keeps it there, so :math:`\\ell` stays at ``1/sigma`` of its
    admissible supremum at every later degree.
    """
    a = parse_rational(a)
    sigma = parse_rational(sigma)
    if sigma <= 1:
        raise ParameterDomainError("'sigma' must be greater than 1: value = {}".format(sigma))
    ell = (sigma - 1) * a * a / (sigma * sigma)
    return ell, MonicPolynomial.from_polynomial(axpy(mul_x(d_prev), d_prevprev, -ell))


def upward_general(d_prev: Polynomial, d_prevprev: Polynomial,
                   a: RationalLike, ell: RationalLike) -> Tuple[Fraction, MonicPolynomial]:
    """Forward step with a caller-chosen coefficient.

    Any :math:`0 < \\ell < a D_{m-1}(a) / D_{m-2}(a)` keeps the zeros of the
    new polynomial inside :math:`(-a, a)` and interlacing with those of
    :math:`D_{m-1}`.

    Raises:
        InvalidRadiusError: ``a`` does not exceed the zeros of the inputs.
        ConstructionError: ``ell`` lies outside the admissible interval.

    """
    ell = parse_rational(ell)
    upper = upward_bound(d_prev, d_prevprev, a)
    if not 0 < ell < upper:
        raise ConstructionError(
            "ell_{} = {} must lie in (0, {})".format(d_prev.degree + 1, ell, upper),
            degree=d_prev.degree + 1)
    return ell, MonicPolynomial.from_polynomial(axpy(mul_x(d_prev), d_prevprev, -ell))


def build(config: WendroffConfig) -> WendroffSequence:
    """Construct :math:`D_0, \\dots, D_{n+k}`.

    Raises:
        ConstructionError: Some :math:`\\ell_m` is not positive; the failing
            degree is available as ``err.degree``.
        InvalidRadiusError: The radius does not exceed the zeros of
            :math:`D_n` and :math:`D_{n-1}`.

    Examples:
        >>> from ortho.wendroff.embedding import WendroffConfig, build
        >>> seq = build(WendroffConfig.from_parameters('-5/4', n=5, k=2))
        >>> seq.ells[6]
        Fraction(21, 17)
        >>> print(seq[2])
        x^2 - 18/19

    """
    n, k, a = config.n, config.k, config.a
    polys = {}
    polys[n - 1], polys[n] = seed(n, config.params)
    ells = {}

    for m in range(n, 1, -1):
        try:
            ell, polys[m - 2] = downward_step(polys[m], polys[m - 1])
        except ConstructionError as err:
            if err.degree is None:
                err.degree = m - 2
            raise
        ells[m] = ell
        logger.debug("downward ell_%d = %s", m, ell)

    if polys[1] != Polynomial([1, 0]) or polys[0] != Polynomial([1]):
        raise InternalConsistencyError(
            "downward recurrence ended at D_1 = {}, D_0 = {}".format(polys[1], polys[0]),
            degree=0)

    for j in range(1, k + 1):
        m = n + j
        try:
            if config.upward_ells is not None:
                ell, polys[m] = upward_general(polys[m - 1], polys[m - 2], a,
                                               config.upward_ells[j - 1])
            elif j == 1:
                ell, polys[m] = upward_first(polys[m - 1], polys[m - 2], a, config.sigma)
            else:
                ell, polys[m] = upward_rest(polys[m - 1], polys[m - 2], a, config.sigma)
        except ConstructionError as err:
            if err.degree is None:
                err.degree = m
            raise
        ells[m] = ell
        logger.debug("upward ell_%d = %s", m, ell)

    logger.info("built D_0..D_%d for lambda = %s, a = %s", n + k, config.lam, a)
    return WendroffSequence(config=config,
                            polys=tuple(polys[m] for m in range(n + k + 1)),
                            ells=ells)
