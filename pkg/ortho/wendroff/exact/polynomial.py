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

"""Exact rational scalars and dense univariate polynomials.

Coefficients are stored in descending powers: index ``j`` of
:attr:`Polynomial.coeffs` holds the coefficient of :math:`x^{d-j}`, where
:math:`d` is the degree. For a monic polynomial
:math:`x^m + \\sum_{j=1}^m \\beta_{j,m} x^{m-j}` the entry ``coeffs[j]`` is
therefore :math:`\\beta_{j,m}`, so the second coefficient used by the
downward construction is an O(1) lookup.
"""

import numbers
import re

from fractions import Fraction
from typing import Any, Dict, Iterable, Tuple, Union

__all__ = [
    'Rational',
    'RationalLike',
    'parse_rational',
    'format_rational',
    'Polynomial',
    'MonicPolynomial',
    'mul_x',
    'axpy',
    'evaluate',
    'derivative',
    'polydivmod',
    'polygcd',
    ]

Rational = Fraction
"""Exact scalar type. Always in lowest terms with a positive denominator."""

RationalLike = Union[Fraction, int, str]

_RATIONAL_PATTERN = re.compile(r'([+-]?\d+)(?:/(\d+))?')


def parse_rational(value: RationalLike) -> Fraction:
    """Convert ``value`` to an exact :class:`~fractions.Fraction`.

    Integers and fractions are accepted as-is. Strings must have the form
    ``"p/q"`` or ``"p"``. Floating point values and decimal strings are
    rejected so that no binary rounding can enter the computation.

    Examples:
        >>> from ortho.wendroff.exact import parse_rational
        >>> parse_rational('-5/4')
        Fraction(-5, 4)
        >>> parse_rational('6/8')
        Fraction(3, 4)

    Raises:
        TypeError: ``value`` is a float or of an unsupported type.
        ValueError: ``value`` is a malformed string or has a zero denominator.

    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("expected a rational, got a bool: value = {!r}".format(value))
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, float):
        raise TypeError(
            "floating point values are not accepted, pass a 'p/q' string "
            "instead: value = {!r}".format(value))
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if not isinstance(value, str):
        raise TypeError("expected an int, Fraction or 'p/q' string: "
                        "value = {!r}".format(value))

    match = _RATIONAL_PATTERN.fullmatch(value.strip())
    if match is None:
        hint = ''
        if '.' in value or 'e' in value.lower():
            hint = " (decimals are not accepted, write e.g. '-5/4' instead of '-1.25')"
        raise ValueError("malformed rational {!r}{}".format(value, hint))

    numerator, denominator = match.groups()
    denominator = 1 if denominator is None else int(denominator)
    if denominator == 0:
        raise ValueError("zero denominator in {!r}".format(value))
    return Fraction(int(numerator), denominator)


def format_rational(value: Fraction) -> str:
    """Canonical lowest-terms string of an exact rational, e.g. ``"-12/17"``."""
    return str(Fraction(value))


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    Leading zero coefficients are trimmed on construction so that
    :attr:`degree` is exact. The zero polynomial has no coefficients and
    degree ``-1``.

    Args:
        coeffs: Coefficients in descending powers. Each entry is converted
            with :func:`parse_rational`.

    Examples:
        >>> from ortho.wendroff.exact import Polynomial
        >>> p = Polynomial([1, 0, -3, 0, 2, 0])
        >>> print(p)
        x^5 - 3x^3 + 2x
        >>> p(2)
        Fraction(12, 1)

    """
    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [parse_rational(c) for c in coeffs]
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        self._coeffs: Tuple[Fraction, ...] = tuple(cs[start:])

    @classmethod
    def zero(cls) -> 'Polynomial':
        return Polynomial()

    @classmethod
    def constant(cls, value: RationalLike) -> 'Polynomial':
        return Polynomial([value])

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        """Coefficients in descending powers, leading entry nonzero."""
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[0] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def is_symmetric(self) -> bool:
        """True if :math:`p(-x) = (-1)^d p(x)`, i.e. every odd-index entry is 0."""
        return all(c == 0 for c in self._coeffs[1::2])

    def beta(self, j: int) -> Fraction:
        """Coefficient of :math:`x^{d-j}`; zero when ``j`` exceeds the degree."""
        if j < 0:
            raise ValueError("j must be nonnegative: value = {}".format(j))
        if j < len(self._coeffs):
            return self._coeffs[j]
        return Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        return evaluate(self, x)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return axpy(self, other, 1)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return axpy(self, other, -1)

    def __neg__(self):
        return Polynomial(-c for c in self._coeffs)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial()
            product = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if a:
                    for j, b in enumerate(other._coeffs):
                        product[i + j] += a * b
            return Polynomial(product)
        try:
            scalar = parse_rational(other)
        except TypeError:
            return NotImplemented
        return Polynomial(scalar * c for c in self._coeffs)

    __rmul__ = __mul__

    def __repr__(self):
        return '{}([{}])'.format(type(self).__name__,
                                 ', '.join(repr(format_rational(c)) for c in self._coeffs))

    def __str__(self):
        if not self._coeffs:
            return '0'
        terms = []
        for j, c in enumerate(self._coeffs):
            if c == 0:
                continue
            power = self.degree - j
            sign = '-' if c < 0 else '+'
            magnitude = abs(c)
            if power == 0:
                body = format_rational(magnitude)
            else:
                monomial = 'x' if power == 1 else 'x^{}'.format(power)
                if magnitude == 1:
                    body = monomial
                elif magnitude.denominator == 1:
                    body = '{}{}'.format(magnitude, monomial)
                else:
                    body = '({}){}'.format(format_rational(magnitude), monomial)
            terms.append((sign, body))

        first_sign, first_body = terms[0]
        out = ('-' if first_sign == '-' else '') + first_body
        for sign, body in terms[1:]:
            out += ' {} {}'.format(sign, body)
        return out

    def to_json(self) -> Dict[str, Any]:
        """Canonical serializable form ``{"degree": d, "coeffs": ["p/q", ...]}``."""
        return {'degree': self.degree,
                'coeffs': [format_rational(c) for c in self._coeffs]}

    @classmethod
    def from_json(cls, obj: Dict[str, Any]) -> 'Polynomial':
        """Inverse of :meth:`to_json`.

        Raises:
            ValueError: The stored degree disagrees with the coefficients, or
                the leading coefficient is zero (non-canonical input).

        """
        coeffs = [parse_rational(c) for c in obj['coeffs']]
        if coeffs and coeffs[0] == 0:
            raise ValueError("leading coefficient must be nonzero")
        poly = cls(coeffs)
        if poly.degree != obj['degree']:
            raise ValueError("degree {} does not match {} coefficients".format(
                obj['degree'], len(coeffs)))
        return poly


class MonicPolynomial(Polynomial):
    """A :class:`Polynomial` whose leading coefficient is exactly 1.

    Raises:
        ValueError: The coefficients do not describe a monic polynomial.

    Examples:
        >>> from ortho.wendroff.exact import MonicPolynomial
        >>> MonicPolynomial([1, 0, '-18/19']).beta(2)
        Fraction(-18, 19)

    """
    __slots__ = ()

    def __init__(self, coeffs: Iterable[RationalLike] = (1,)):
        super().__init__(coeffs)
        if not self.is_monic():
            raise ValueError("polynomial is not monic: {}".format(
                Polynomial(self.coeffs)))

    @classmethod
    def from_polynomial(cls, poly: Polynomial) -> 'MonicPolynomial':
        if isinstance(poly, cls):
            return poly
        return cls(poly.coeffs)


def mul_x(p: Polynomial) -> Polynomial:
    """Return :math:`x \\cdot p`. Monic inputs give monic outputs.

    Examples:
        >>> from ortho.wendroff.exact import MonicPolynomial, mul_x
        >>> print(mul_x(MonicPolynomial([1, 0, '-18/19'])))
        x^3 - (18/19)x

    """
    if p.is_zero():
        return Polynomial()
    return type(p)(p.coeffs + (Fraction(0),))


def axpy(p: Polynomial, q: Polynomial, c: RationalLike) -> Polynomial:
    """Return :math:`p + c q` with leading zeros trimmed.

    The result is a general :class:`Polynomial` even for monic operands,
    since differences of monic polynomials are generally not monic.
    """
    c = parse_rational(c)
    size = max(len(p.coeffs), len(q.coeffs))
    pc = (Fraction(0),) * (size - len(p.coeffs)) + p.coeffs
    qc = (Fraction(0),) * (size - len(q.coeffs)) + q.coeffs
    return Polynomial(a + c * b for a, b in zip(pc, qc))


def evaluate(p: Polynomial, x: RationalLike) -> Fraction:
    """Exact Horner evaluation of ``p`` at ``x``."""
    x = parse_rational(x)
    acc = Fraction(0)
    for c in p.coeffs:
        acc = acc * x + c
    return acc


def derivative(p: Polynomial) -> Polynomial:
    """Formal derivative. Constants (and zero) map to the zero polynomial."""
    d = p.degree
    return Polynomial(c * (d - j) for j, c in enumerate(p.coeffs[:-1]))


def polydivmod(p: Polynomial, q: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """Exact Euclidean division, ``p = quotient * q + remainder``.

    Raises:
        ZeroDivisionError: ``q`` is the zero polynomial.

    """
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")

    remainder = list(p.coeffs)
    dq = q.degree
    if p.degree < dq:
        return Polynomial(), p

    lead = q.leading
    quotient = []
    for i in range(len(remainder) - dq):
        factor = remainder[i] / lead
        quotient.append(factor)
        if factor:
            for j, b in enumerate(q.coeffs):
                remainder[i + j] -= factor * b
    return Polynomial(quotient), Polynomial(remainder[len(remainder) - dq:])


def polygcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor; ``polygcd(0, 0)`` is the zero polynomial."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, polydivmod(a, b)[1]
    if a.is_zero():
        return a
    return MonicPolynomial(c / a.leading for c in a.coeffs)
