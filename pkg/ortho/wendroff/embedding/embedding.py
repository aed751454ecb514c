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

import typing
import warnings

from ortho.wendroff.embedding.construction import build
from ortho.wendroff.embedding.sequence import WendroffConfig, WendroffSequence
from ortho.wendroff.exact import RationalLike
from ortho.wendroff.ultraspherical import RadiusMode
from ortho.wendroff.utils import DEFAULT_TOLERANCE, tictoc

__all__ = ['WendroffEmbedding']


class WendroffEmbedding:
    """Embeds monic ultraspherical polynomials into a Wendroff sequence.

    Examples:

        >>> from ortho.wendroff import WendroffEmbedding
        >>> embedding = WendroffEmbedding()

        Build :math:`D_0, \\dots, D_{10}` for :math:`\\lambda = -5/4`.

        >>> seq = embedding.build('-5/4', n=5, k=5)
        >>> len(seq)
        11

        Choose the upward coefficients by hand.

        >>> seq = embedding.build('-5/4', n=5, k=1, upward_ells=['1/2'])
        >>> seq.ells[6]
        Fraction(1, 2)

    """

    parameters: typing.Mapping[str, typing.List] = None
    """Keyword arguments accepted by :meth:`build`.

    Examples:

        >>> from ortho.wendroff import WendroffEmbedding
        >>> sorted(WendroffEmbedding().parameters)
        ['a', 'a_mode', 'epsilon', 'k', 'n', 'sigma', 'tol', 'upward_ells']

    """

    properties: typing.Mapping[str, typing.Any] = None
    """Information about the construction: radius modes and defaults."""

    def __init__(self):
        self.parameters = {
            'n': [],
            'k': [],
            'sigma': [],
            'a_mode': ['a_modes'],
            'a': [],
            'epsilon': [],
            'tol': [],
            'upward_ells': [],
            }
        self.properties = {
            'a_modes': tuple(mode.value for mode in RadiusMode),
            'upward_schemes': ('sigma', 'general'),
            'default_tolerance': DEFAULT_TOLERANCE,
            }

    def build(self,
              lam: RationalLike,
              *,
              n: int = 5,
              k: int = 5,
              sigma: RationalLike = 2,
              a_mode: typing.Union[str, RadiusMode] = RadiusMode.AUTO,
              a: typing.Optional[RationalLike] = None,
              epsilon: typing.Optional[RationalLike] = None,
              tol: typing.Optional[RationalLike] = None,
              upward_ells: typing.Optional[typing.Sequence[RationalLike]] = None,
              **kwargs,
              ) -> WendroffSequence:
        """Construct :math:`D_0, \\dots, D_{n+k}`.

        Args:
            lam: Ultraspherical parameter :math:`\\lambda`.

            n: Seed degree, at least 5.

            k: Number of upward steps, at least 1.

            sigma:
                Upward-scheme parameter, greater than 1. Ignored when
                ``upward_ells`` is given.

            a_mode:
                How the radius ``a`` is chosen, see
                :func:`~ortho.wendroff.ultraspherical.interval_radius`.
                Giving ``a`` with the default mode selects "explicit".

            a: Radius for "explicit" mode.

            epsilon: Offset for "theorem" mode.

            tol:
                Refinement tolerance recorded with the sequence. Defaults to
                :func:`~ortho.wendroff.utils.default_tolerance`.

            upward_ells:
                ``k`` coefficients for the upward steps, each strictly inside
                its admissible interval.

        Returns:
            The built sequence. Build time in seconds is stored in
            ``seq.info['timing']``.

        """
        if kwargs:
            warnings.warn("Ignoring unknown kwarg(s): {}".format(', '.join(sorted(kwargs))),
                          UserWarning, stacklevel=2)

        config = WendroffConfig.from_parameters(
            lam, n=n, k=k, sigma=sigma, a_mode=a_mode, a=a, epsilon=epsilon,
            tol=tol, upward_ells=upward_ells)

        with tictoc() as tt:
            seq = build(config)
        seq.info['timing'] = tt.dt
        return seq
