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

"""The ``wendroff`` command line tool.

Exit codes: 0 on success, 1 when verification fails, 2 for invalid
parameters or usage, 3 when the construction itself fails.
"""

import argparse
import json
import logging
import sys

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ortho.wendroff.analysis import compare, verify_sequence
from ortho.wendroff.cli.figure import figure_spec, render_svg
from ortho.wendroff.embedding import WendroffConfig, WendroffSequence, build
from ortho.wendroff.exact import RationalLike, parse_rational
from ortho.wendroff.exceptions import ConstructionError, WendroffError
from ortho.wendroff.roots import find_roots
from ortho.wendroff.ultraspherical import RadiusMode, ultraspherical
from ortho.wendroff.utils import default_tolerance, format_decimal

__all__ = ['RunConfig', 'parse_a_mode', 'main']

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CONSTRUCTION = 3

_FORMATS = {
    'build': ('json',),
    'zeros': ('csv', 'json'),
    'verify': ('json', 'csv'),
    'compare': ('csv', 'json'),
    'figure': ('svg',),
    }


def parse_a_mode(text: str) -> Tuple[RadiusMode, Optional[RationalLike], Optional[RationalLike]]:
    """Parse ``auto``, ``a1``, ``a2``, ``unit``, ``value:P/Q`` or ``theorem:P/Q``.

    Returns ``(mode, value, epsilon)``.

    Examples:
        >>> from ortho.wendroff.cli.main import parse_a_mode
        >>> parse_a_mode('value:3/2')
        (<RadiusMode.EXPLICIT: 'explicit'>, Fraction(3, 2), None)

    """
    name, _, arg = text.partition(':')
    if name == 'value':
        return RadiusMode.EXPLICIT, parse_rational(arg), None
    if name == 'theorem':
        return RadiusMode.THEOREM, None, parse_rational(arg)
    if arg or name not in ('auto', 'a1', 'a2', 'unit'):
        raise ValueError("invalid a-mode {!r}; expected auto, a1, a2, unit, "
                         "value:P/Q or theorem:P/Q".format(text))
    return RadiusMode(name), None, None


@dataclass(frozen=True)
class RunConfig:
    """Parsed command line. All numbers stay exact fraction strings until
    :meth:`wendroff_config` converts them."""
    command: str
    n: int = 5
    k: int = 5
    lam: str = '-5/4'
    sigma: str = '2'
    a_mode: str = 'auto'
    tol: Optional[str] = None
    degrees: Tuple[int, ...] = ()
    out: Optional[str] = None
    fmt: Optional[str] = None
    input: Optional[str] = None
    upward_ells: Optional[Tuple[str, ...]] = None
    verbose: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'RunConfig':
        return cls(command=args.command, n=args.n, k=args.k, lam=args.lam, sigma=args.sigma,
                   a_mode=args.a_mode, tol=args.tol, degrees=tuple(args.m or ()),
                   out=args.out, fmt=args.format, input=args.input,
                   upward_ells=tuple(args.ells) if args.ells else None,
                   verbose=args.verbose)

    @property
    def format(self) -> str:
        return self.fmt or _FORMATS[self.command][0]

    def tolerance(self):
        return default_tolerance() if self.tol is None else parse_rational(self.tol)

    def wendroff_config(self) -> WendroffConfig:
        mode, value, epsilon = parse_a_mode(self.a_mode)
        return WendroffConfig.from_parameters(
            self.lam, n=self.n, k=self.k, sigma=self.sigma, a_mode=mode, a=value,
            epsilon=epsilon, tol=self.tolerance(), upward_ells=self.upward_ells)

    def sequence(self) -> WendroffSequence:
        if self.input is not None:
            with open(self.input) as f:
                return WendroffSequence.from_json(json.load(f))
        return build(self.wendroff_config())


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--n', type=int, default=5, help="seed degree, at least 5")
    common.add_argument('--k', type=int, default=5, help="number of upward steps, at least 1")
    common.add_argument('--lambda', dest='lam', default='-5/4', help="lambda as P/Q")
    common.add_argument('--sigma', default='2', help="sigma > 1 as P/Q")
    common.add_argument('--a-mode', default='auto',
                        help="auto, a1, a2, unit, value:P/Q or theorem:EPS; for lambda > -1/2 auto "
                             "and unit give a = 1, where D_n vanishes and the build fails, "
                             "so use theorem:EPS there")
    common.add_argument('--ells', nargs='+', metavar='P/Q',
                        help="explicit upward coefficients, one per upward step")
    common.add_argument('--tol', help="refinement tolerance as P/Q (default WENDROFF_TOL or 1/1000000)")
    common.add_argument('--m', type=int, nargs='+', metavar='M', help="degrees to report")
    common.add_argument('--input', help="read a sequence JSON file instead of building")
    common.add_argument('--out', help="output path, '-' for standard output")
    common.add_argument('--format', choices=('json', 'csv', 'svg'))
    common.add_argument('-v', '--verbose', action='store_true', help="debug logging")

    parser = argparse.ArgumentParser(
        prog='wendroff',
        description="Wendroff embeddings of monic ultraspherical polynomials")
    sub = parser.add_subparsers(dest='command', required=True)
    sub.add_parser('build', parents=[common], help="write the sequence D_0..D_{n+k} as JSON")
    sub.add_parser('zeros', parents=[common], help="refined zeros of selected degrees")
    sub.add_parser('verify', parents=[common], help="verify every claimed zero property")
    sub.add_parser('compare', parents=[common], help="compare zeros of D_m and C_m")
    sub.add_parser('figure', parents=[common], help="SVG figure of the zeros of D_m and C_m")
    return parser


def _write(data, out: Optional[str]):
    if isinstance(data, str):
        if out in (None, '-'):
            sys.stdout.write(data)
        else:
            with open(out, 'w', newline='\n') as f:
                f.write(data)
    else:
        if out in (None, '-'):
            sys.stdout.buffer.write(data)
        else:
            with open(out, 'wb') as f:
                f.write(data)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + '\n'


def _degrees(run: RunConfig, seq: WendroffSequence) -> List[int]:
    degrees = list(run.degrees) if run.degrees else list(seq.degrees)
    bad = [m for m in degrees if not 0 <= m < len(seq)]
    if bad:
        raise ValueError("degrees {} are not in the sequence D_0..D_{}".format(
            bad, len(seq) - 1))
    return degrees


def cmd_build(run: RunConfig) -> int:
    seq = run.sequence()
    _write(_dumps(seq.to_json()), run.out)
    return EXIT_OK


def cmd_zeros(run: RunConfig) -> int:
    seq = run.sequence()
    tol = run.tolerance()
    found = [find_roots(seq[m], tol, poly_id='D{}'.format(m)) for m in _degrees(run, seq)]

    if run.format == 'json':
        obj = {}
        for rs in found:
            entry = rs.to_json()
            for root, value in zip(entry['roots'], rs.values):
                root['approx'] = format_decimal(value)
            obj[str(rs.degree)] = entry
        _write(_dumps(obj), run.out)
    else:
        lines = ['degree,index,value,exact\n']
        for rs in found:
            for j, iv in enumerate(rs.intervals, start=1):
                lines.append('{},{},{},{}\n'.format(
                    rs.degree, j, format_decimal(iv.value), str(iv.exact).lower()))
        _write(''.join(lines), run.out)
    return EXIT_OK


def cmd_verify(run: RunConfig) -> int:
    seq = run.sequence()
    report = verify_sequence(seq, run.tolerance() if run.tol is not None else None)
    if run.out is not None:
        _write(_dumps(report.to_json()) if run.format == 'json' else report.to_csv(), run.out)
    summary = report.summary()
    print(summary, file=sys.stderr if run.out == '-' else sys.stdout)
    for diagnostic in report.failures:
        logger.error("degree %d: %s: %s", diagnostic.degree, diagnostic.check, diagnostic.message)
    return EXIT_OK if report.overall else EXIT_VERIFY_FAILED


def cmd_compare(run: RunConfig) -> int:
    seq = run.sequence()
    tol = run.tolerance()
    reports = []
    for m in _degrees(run, seq):
        zd = find_roots(seq[m], tol, poly_id='D{}'.format(m))
        zc = find_roots(ultraspherical(m, seq.config.params), tol, poly_id='C{}'.format(m))
        reports.append(compare(zd, zc))

    if run.format == 'json':
        _write(_dumps([r.to_json() for r in reports]), run.out)
    else:
        chunks = []
        for r in reports:
            rows = r.to_csv().splitlines(keepends=True)
            if not chunks:
                chunks.append('degree,' + rows[0])
            chunks.extend('{},{}'.format(r.degree, row) for row in rows[1:])
        _write(''.join(chunks), run.out)
    return EXIT_OK


def cmd_figure(run: RunConfig) -> int:
    if len(run.degrees) != 1:
        raise ValueError("figure needs exactly one degree, e.g. --m 10")
    seq = run.sequence()
    spec = figure_spec(seq, run.degrees[0], run.tolerance())
    _write(render_svg(spec), run.out)
    return EXIT_OK


_COMMANDS = {
    'build': cmd_build,
    'zeros': cmd_zeros,
    'verify': cmd_verify,
    'compare': cmd_compare,
    'figure': cmd_figure,
    }


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    run = RunConfig.from_args(args)

    logging.basicConfig(level=logging.DEBUG if run.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr,
                        force=True)
    logging.captureWarnings(True)

    if run.format not in _FORMATS[run.command]:
        print("wendroff {}: format {!r} is not supported".format(run.command, run.format),
              file=sys.stderr)
        return EXIT_USAGE

    try:
        return _COMMANDS[run.command](run)
    except ConstructionError as err:
        print("wendroff {}: construction failed: {}".format(run.command, err), file=sys.stderr)
        return EXIT_CONSTRUCTION
    except (ValueError, TypeError, OSError, KeyError) as err:
        print("wendroff {}: {}".format(run.command, err), file=sys.stderr)
        return EXIT_USAGE
    except WendroffError as err:
        print("wendroff {}: {}".format(run.command, err), file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == '__main__':
    sys.exit(main())
