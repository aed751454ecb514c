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

"""SVG figures overlaying the zeros of :math:`D_m` and :math:`C_m`."""

import io

from dataclasses import dataclass
from typing import BinaryIO, Optional, Tuple, Union

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402

from ortho.wendroff.embedding import WendroffSequence  # noqa: E402
from ortho.wendroff.exact import RationalLike, format_rational, parse_rational  # noqa: E402
from ortho.wendroff.roots import find_roots  # noqa: E402
from ortho.wendroff.ultraspherical import ultraspherical  # noqa: E402

__all__ = ['FigureSpec', 'figure_spec', 'render_svg']

SVG_HASHSALT = 'ortho-wendroff'


@dataclass(frozen=True)
class FigureSpec:
    """Everything drawn in one figure.

    The point for the ``j``-th smallest zero of a series is drawn at
    ``(j, zero)``, ``j = 1, 2, ...``.
    """
    title: str
    zeros_d: Tuple[float, ...]
    zeros_c: Tuple[float, ...]
    a: float
    label_d: str = 'D'
    label_c: str = 'C'
    marker_d: str = 'D'
    marker_c: str = 'o'
    color_d: str = 'brown'
    color_c: str = 'blue'
    size: Tuple[float, float] = (6.4, 4.8)

    @property
    def gridlines(self) -> Tuple[float, ...]:
        return tuple(sorted({-self.a, -1.0, 1.0, self.a}))


def figure_spec(seq: WendroffSequence, m: int,
                tol: Optional[RationalLike] = None) -> FigureSpec:
    """Zeros of :math:`D_m` and :math:`C_m^\\lambda` for a built sequence.

    Raises:
        ValueError: ``m`` is not a degree of the sequence.

    """
    if not 0 <= m < len(seq):
        raise ValueError("degree {} is not in the sequence D_0..D_{}".format(m, len(seq) - 1))
    tol = seq.config.tol if tol is None else parse_rational(tol)
    lam = format_rational(seq.config.lam)
    zd = find_roots(seq[m], tol)
    zc = find_roots(ultraspherical(m, seq.config.params), tol)
    return FigureSpec(
        title='n={}, lambda={}, m={}, a={}'.format(seq.config.n, lam, m, format_rational(seq.a)),
        zeros_d=tuple(float(v) for v in zd.values),
        zeros_c=tuple(float(v) for v in zc.values),
        a=float(seq.a),
        label_d='D_{}^({})'.format(m, lam),
        label_c='C_{}^({})'.format(m, lam),
        )


def render_svg(spec: FigureSpec, out: Union[str, BinaryIO, None] = None) -> bytes:
    """Draw ``spec`` as SVG.

    Output is byte-identical for equal specs: the SVG id salt is fixed and
    no date is embedded. Returns the SVG bytes, also written to ``out`` if
    given (a path or binary file object).
    """
    with matplotlib.rc_context({'svg.hashsalt': SVG_HASHSALT, 'svg.fonttype': 'path'}):
        fig, ax = plt.subplots(figsize=spec.size)
        try:
            for y in spec.gridlines:
                ax.axhline(y, color='0.75', linewidth=0.8, zorder=1)
            ax.scatter(range(1, len(spec.zeros_d) + 1), spec.zeros_d, marker=spec.marker_d,
                       color=spec.color_d, s=24, label=spec.label_d, zorder=3)
            ax.scatter(range(1, len(spec.zeros_c) + 1), spec.zeros_c, marker=spec.marker_c,
                       color=spec.color_c, s=18, label=spec.label_c, zorder=2)
            ax.set_title(spec.title)
            ax.set_xlabel('index')
            ax.set_ylabel('zero')
            ax.legend(loc='upper left')

            buf = io.BytesIO()
            fig.savefig(buf, format='svg', metadata={'Date': None})
        finally:
            plt.close(fig)

    data = buf.getvalue()
    if isinstance(out, str):
        with open(out, 'wb') as f:
            f.write(data)
    elif out is not None:
        out.write(data)
    return data
