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

"""Configuration and result types of the Wendroff construction."""

import numbers

from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple

from ortho.wendroff.exact import (
    Polynomial, RationalLike, format_rational, parse_rational)
from ortho.wendroff.exceptions import ParameterDomainError
from ortho.wendroff.ultraspherical import (
    IntervalRadius, RadiusMode, UltrasphericalParams, interval_radius)
from ortho.wendroff.utils import default_tolerance

__all__ = ['WendroffConfig', 'WendroffSequence']


def _check_integer(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError("'{}' should be an integer >= {}: value = {!r}".format(
            name, minimum, value))
    if value < minimum:
        raise ParameterDomainError("'{}' should be an integer >= {}: value = {}".format(
            name, minimum, value))
    return int(value)


@dataclass(frozen=True)
class WendroffConfig:
    """Inputs of the construction of :math:`D_0, \\dots, D_{n+k}`.

    Use :meth:`from_parameters` to build one from plain values; the
    constructor expects an already resolved :class:`IntervalRadius`.

    Attributes:
        n: Seed degree, :math:`D_{n-1} = C_{n-1}` and
            :math:`D_n = (x^2-1) C_{n-2}`. At least 5.
        k: Number of polynomials generated above the seed. At least 1.
        params: Ultraspherical parameter :math:`\\lambda`.
        sigma: Upward-scheme parameter, greater than 1.
        radius: Radius ``a`` of the interval :math:`(-a, a)`.
        tol: Root refinement tolerance for downstream analysis.
        upward_ells: If given, the ``k`` upward recurrence coefficients
            :math:`\\ell_{n+1}, \\dots, \\ell_{n+k}` chosen freely inside their
            admissible intervals instead of by the sigma scheme.

    """
    n: int
    k: int
    params: UltrasphericalParams
    sigma: Fraction
    radius: IntervalRadius
    tol: Fraction = field(default_factory=default_tolerance)
    upward_ells: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, 'n', _check_integer('n', self.n, 5))
        object.__setattr__(self, 'k', _check_integer('k', self.k, 1))

        sigma = parse_rational(self.sigma)
        if sigma <= 1:
            raise ParameterDomainError(
                "'sigma' must be greater than 1: value = {}".format(sigma))
        object.__setattr__(self, 'sigma', sigma)

        tol = parse_rational(self.tol)
        if tol <= 0:
            raise ParameterDomainError("'tol' must be positive: value = {}".format(tol))
        object.__setattr__(self, 'tol', tol)

        if self.upward_ells is not None:
            ells = tuple(parse_rational(ell) for ell in self.upward_ells)
            if len(ells) != self.k:
                raise ParameterDomainError(
                    "'upward_ells' must hold k = {} values, got {}".format(self.k, len(ells)))
            object.__setattr__(self, 'upward_ells', ells)

    @classmethod
    def from_parameters(cls,
                        lam: RationalLike,
                        n: int = 5,
                        k: int = 5,
                        sigma: RationalLike = 2,
                        a_mode: RadiusMode = RadiusMode.AUTO,
                        a: Optional[RationalLike] = None,
                        epsilon: Optional[RationalLike] = None,
                        tol: Optional[RationalLike] = None,
                        upward_ells: Optional[Sequence[RationalLike]] = None,
                        ) -> 'WendroffConfig':
        """Validate plain values and resolve the radius.

        Examples:
            >>> from ortho.wendroff.embedding import WendroffConfig
            >>> config = WendroffConfig.from_parameters('-5/4', n=5, k=5, sigma=2)
            >>> config.radius.value
            Fraction(2, 1)

        """
        params = UltrasphericalParams(lam)
        a_mode = RadiusMode(a_mode)
        if a is not None and a_mode is RadiusMode.AUTO:
            a_mode = RadiusMode.EXPLICIT
        radius = interval_radius(params, a_mode, value=a, epsilon=epsilon,
                                 n=n if isinstance(n, numbers.Integral) else None)
        if tol is None:
            tol = default_tolerance()
        return cls(n=n, k=k, params=params, sigma=sigma, radius=radius, tol=tol,
                   upward_ells=None if upward_ells is None else tuple(upward_ells))

    @property
    def lam(self) -> Fraction:
        return self.params.lam

    @property
    def a(self) -> Fraction:
        return self.radius.value

    @property
    def max_degree(self) -> int:
        return self.n + self.k

    def to_json(self) -> Dict[str, Any]:
        obj = {
            'n': self.n,
            'k': self.k,
            'lambda': format_rational(self.lam),
            'sigma': format_rational(self.sigma),
            'a_mode': self.radius.mode.value,
            'a': format_rational(self.radius.value),
            'slack': format_rational(self.radius.slack),
            'tol': format_rational(self.tol),
            }
        if self.radius.epsilon is not None:
            obj['epsilon'] = format_rational(self.radius.epsilon)
        if self.upward_ells is not None:
            obj['upward_ells'] = [format_rational(ell) for ell in self.upward_ells]
        return obj

    @classmethod
    def from_json(cls, obj: Mapping[str, Any]) -> 'WendroffConfig':
        epsilon = obj.get('epsilon')
        radius = IntervalRadius(
            value=parse_rational(obj['a']),
            mode=RadiusMode(obj['a_mode']),
            slack=parse_rational(obj.get('slack', 0)),
            epsilon=None if epsilon is None else parse_rational(epsilon))
        return cls(n=obj['n'], k=obj['k'],
                   params=UltrasphericalParams(obj['lambda']),
                   sigma=obj['sigma'], radius=radius, tol=obj['tol'],
                   upward_ells=obj.get('upward_ells'))


@dataclass(frozen=True)
class WendroffSequence:
    """The polynomials :math:`D_0, \\dots, D_{n+k}` and their recurrence data.

    Attributes:
        config: The configuration the sequence was built from.
        polys: ``polys[m]`` is :math:`D_m`.
        ells: Recurrence coefficients keyed by degree, for
            :math:`m = 2, \\dots, n+k`, so that
            :math:`D_m = x D_{m-1} - \\ell_m D_{m-2}`.
        info: Extra run information, e.g. ``info["timing"]``.

    """
    config: WendroffConfig
    polys: Tuple[Polynomial, ...]
    ells: Mapping[int, Fraction]
    info: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'polys', tuple(self.polys))
        object.__setattr__(self, 'ells', MappingProxyType(
            {int(m): parse_rational(ell) for m, ell in sorted(self.ells.items())}))

    @property
    def a(self) -> Fraction:
        return self.config.radius.value

    @property
    def degrees(self) -> range:
        return range(len(self.polys))

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, m: int) -> Polynomial:
        return self.polys[m]

    def ratio_at_radius(self, m: int) -> Fraction:
        """:math:`D_m(a) / D_{m-1}(a)`."""
        return self.polys[m](self.a) / self.polys[m - 1](self.a)

    def to_json(self) -> Dict[str, Any]:
        return {
            'config': self.config.to_json(),
            'a': format_rational(self.a),
            'ells': {str(m): format_rational(ell) for m, ell in self.ells.items()},
            'polys': [p.to_json() for p in self.polys],
            }

    @classmethod
    def from_json(cls, obj: Mapping[str, Any]) -> 'WendroffSequence':
        """Load a sequence without re-running the construction.

        Loaded data is taken as-is so that a modified file can be checked by
        :func:`~ortho.wendroff.analysis.verify_sequence`.
        """
        config = WendroffConfig.from_json(obj['config'])
        if parse_rational(obj['a']) != config.a:
            raise ValueError("'a' = {} disagrees with the configuration's radius {}".format(
                obj['a'], config.a))
        polys = [Polynomial.from_json(p) for p in obj['polys']]
        return cls(config=config, polys=polys,
                   ells={int(m): parse_rational(ell) for m, ell in obj['ells'].items()})
