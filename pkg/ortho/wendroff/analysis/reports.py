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

"""Verification of built sequences and D-versus-C zero comparisons."""

import concurrent.futures
import csv
import io
import logging

from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ortho.wendroff.analysis.checks import check_containment, check_interlacing, decide
from ortho.wendroff.embedding import WendroffSequence
from ortho.wendroff.exact import Polynomial, RationalLike, axpy, format_rational, mul_x, parse_rational
from ortho.wendroff.exceptions import UndecidableOrderingError, WendroffError
from ortho.wendroff.roots import RootSet, find_roots
from ortho.wendroff.utils import format_decimal, tictoc

__all__ = [
    'ComparisonReport',
    'compare',
    'DegreeRecord',
    'Diagnostic',
    'VerificationReport',
    'verify_sequence',
    ]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComparisonReport:
    """Index-matched comparison of the sorted zeros of :math:`D_m` and :math:`C_m`.

    When the real-root counts differ, the ``ceil(k/2)`` smallest and
    ``floor(k/2)`` largest zeros of each list are paired, ``k`` being the
    smaller count, and :attr:`count_mismatch` is set.

    Attributes:
        degree: ``m``.
        zeros_d: Refined zeros of :math:`D_m`, ascending.
        zeros_c: Refined zeros of :math:`C_m`, ascending.
        pairs: Index pairs ``(i, j)`` into ``zeros_d`` and ``zeros_c``.
        deltas: ``zeros_d[i] - zeros_c[j]`` for each pair.
        count_mismatch: The two lists have different lengths.

    """
    degree: int
    zeros_d: Tuple[Fraction, ...]
    zeros_c: Tuple[Fraction, ...]
    pairs: Tuple[Tuple[int, int], ...]
    deltas: np.ndarray = field(compare=False)
    count_mismatch: bool = False

    @property
    def max_delta(self) -> float:
        return float(np.max(np.abs(self.deltas))) if self.deltas.size else 0.0

    @property
    def extreme_deltas(self) -> Tuple[Optional[float], Optional[float]]:
        """Deltas of the smallest and the largest zeros."""
        if not self.deltas.size:
            return None, None
        return float(self.deltas[0]), float(self.deltas[-1])

    def to_json(self) -> Dict[str, Any]:
        smallest, largest = self.extreme_deltas
        return {
            'degree': self.degree,
            'zeros_d': [format_rational(v) for v in self.zeros_d],
            'zeros_c': [format_rational(v) for v in self.zeros_c],
            'deltas': [float(d) for d in self.deltas],
            'max_delta': self.max_delta,
            'extreme_deltas': {'smallest': smallest, 'largest': largest},
            'count_mismatch': self.count_mismatch,
            }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(['index', 'zero_D', 'zero_C', 'delta'])
        for k, ((i, j), delta) in enumerate(zip(self.pairs, self.deltas), start=1):
            writer.writerow([k, format_decimal(self.zeros_d[i]),
                             format_decimal(self.zeros_c[j]), format_decimal(delta)])
        return buf.getvalue()


def compare(zd: RootSet, zc: RootSet) -> ComparisonReport:
    """Compare the zeros of :math:`D_m` with those of :math:`C_m`.

    Examples:
        >>> from ortho.wendroff.analysis import compare
        >>> from ortho.wendroff.exact import Polynomial
        >>> from ortho.wendroff.roots import find_roots
        >>> rs = find_roots(Polynomial([1, 0, -2, 0]))
        >>> compare(rs, rs).max_delta
        0.0

    """
    kd, kc = zd.real_count, zc.real_count
    if kd == kc:
        pairs = [(j, j) for j in range(kd)]
    else:
        k = min(kd, kc)
        head = (k + 1) // 2
        pairs = [(j, j) for j in range(head)]
        pairs += [(kd - k + j, kc - k + j) for j in range(head, k)]
        logger.debug("degree %d: %d zeros of D against %d of C", zd.degree, kd, kc)

    values_d, values_c = zd.values, zc.values
    deltas = np.array([float(values_d[i]) - float(values_c[j]) for i, j in pairs], dtype=float)
    return ComparisonReport(degree=zd.degree, zeros_d=values_d, zeros_c=values_c,
                            pairs=tuple(pairs), deltas=deltas, count_mismatch=kd != kc)


@dataclass(frozen=True)
class Diagnostic:
    """One failed check."""
    degree: int
    check: str
    message: str


@dataclass(frozen=True)
class DegreeRecord:
    """Outcome of every check at one degree of a sequence."""
    degree: int
    monic: bool
    symmetric: bool
    ell_positive: bool
    recurrence_ok: bool
    ratio_ok: bool
    real_count_ok: bool
    contained_in_a: bool
    interlaces_predecessor: bool

    @property
    def ok(self) -> bool:
        return all(getattr(self, f.name) for f in fields(self) if f.name != 'degree')

    def failed(self) -> List[str]:
        return [f.name for f in fields(self) if f.name != 'degree' and not getattr(self, f.name)]


@dataclass
class VerificationReport:
    """Checkable consequences of the construction, one record per degree.

    Attributes:
        records: Per-degree results, ascending degree.
        failures: Diagnostics for every failed check.
        info: Run information; ``info['elapsed']`` is the verification time
            in seconds and ``info['tol']`` the refinement tolerance.

    """
    records: List[DegreeRecord]
    failures: List[Diagnostic] = field(default_factory=list)
    info: Dict[str, Any] = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return bool(self.records) and all(r.ok for r in self.records)

    def summary(self) -> str:
        passed = sum(r.ok for r in self.records)
        total = len(self.records)
        if self.overall:
            return "OK: {}/{} degrees verified".format(passed, total)
        failing = sorted({d.degree for d in self.failures})
        return "FAILED: {}/{} degrees verified; failing degrees: {}".format(
            passed, total, ', '.join(map(str, failing)))

    def to_json(self) -> Dict[str, Any]:
        info = {key: format_rational(value) if isinstance(value, Fraction) else value
                for key, value in self.info.items() if key != 'elapsed'}
        return {
            'overall': self.overall,
            'records': [asdict(r) for r in self.records],
            'failures': [asdict(d) for d in self.failures],
            'info': info,
            }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        names = [f.name for f in fields(DegreeRecord)]
        writer.writerow(names + ['ok'])
        for r in self.records:
            writer.writerow([getattr(r, name) for name in names] + [r.ok])
        return buf.getvalue()


def _roots_or_error(poly: Polynomial, tol: Fraction, label: str):
    try:
        return find_roots(poly, tol, poly_id=label), None
    except WendroffError as err:
        return None, err


def verify_sequence(seq: WendroffSequence,
                    tol: Optional[RationalLike] = None,
                    *,
                    max_workers: Optional[int] = None) -> VerificationReport:
    """Check every polynomial of a sequence.

    For each degree ``m``: monic of degree ``m``, symmetric,
    :math:`\\ell_m > 0`, :math:`D_m = x D_{m-1} - \\ell_m D_{m-2}` exactly, the
    ratio :math:`D_m(a)/D_{m-1}(a) = a(\\sigma-1)/\\sigma` above the seed under
    the sigma scheme, ``m`` real roots, all inside :math:`(-a, a)`, and
    strict interlacing with the roots of :math:`D_{m-1}`.

    Args:
        seq: The sequence, built or loaded from a file.
        tol: Refinement tolerance. Defaults to the sequence's configured one.
        max_workers: If given, roots of different degrees are found in a
            thread pool of this size.

    Examples:
        >>> from ortho.wendroff.analysis import verify_sequence
        >>> from ortho.wendroff.embedding import WendroffConfig, build
        >>> report = verify_sequence(build(WendroffConfig.from_parameters('-5/4')))
        >>> report.summary()
        'OK: 11/11 degrees verified'

    """
    config = seq.config
    tol = config.tol if tol is None else parse_rational(tol)
    a, n, sigma = config.a, config.n, config.sigma
    sigma_scheme = config.upward_ells is None
    fixed_ratio = a * (sigma - 1) / sigma
    x = Polynomial([1, 0])
    labels = ['D{}'.format(m) for m in seq.degrees]

    with tictoc() as tt:
        if max_workers is not None and max_workers > 1:
            with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
                found = list(executor.map(_roots_or_error, seq.polys,
                                          [tol] * len(seq), labels))
        else:
            found = [_roots_or_error(p, tol, label) for p, label in zip(seq.polys, labels)]

        records, failures = [], []
        for m, poly in enumerate(seq.polys):
            roots, error = found[m]
            if error is not None:
                failures.append(Diagnostic(m, 'roots', str(error)))

            ell = seq.ells.get(m)
            if m == 0:
                ell_positive, recurrence_ok = True, poly == Polynomial([1])
            elif m == 1:
                ell_positive, recurrence_ok = True, poly == x
            else:
                ell_positive = ell is not None and ell > 0
                recurrence_ok = ell is not None and poly == axpy(
                    mul_x(seq[m - 1]), seq[m - 2], -ell)

            ratio_ok = True
            if sigma_scheme and m > n:
                try:
                    ratio_ok = seq.ratio_at_radius(m) == fixed_ratio
                except ZeroDivisionError:
                    ratio_ok = False

            real_count_ok = roots is not None and roots.real_count == m == poly.degree
            contained = roots is not None and check_containment(roots, a)

            interlaces = True
            if m >= 1:
                previous = found[m - 1][0]
                try:
                    interlaces = (roots is not None and previous is not None
                                  and decide(check_interlacing, previous, roots))
                except UndecidableOrderingError as err:
                    interlaces = False
                    failures.append(Diagnostic(m, 'interlaces_predecessor', str(err)))

            record = DegreeRecord(
                degree=m,
                monic=poly.is_monic() and poly.degree == m,
                symmetric=poly.is_symmetric(),
                ell_positive=ell_positive,
                recurrence_ok=recurrence_ok,
                ratio_ok=ratio_ok,
                real_count_ok=real_count_ok,
                contained_in_a=contained,
                interlaces_predecessor=interlaces,
                )
            for name in record.failed():
                if not any(d.degree == m and d.check == name for d in failures):
                    failures.append(Diagnostic(m, name, 'check {!r} failed at degree {}'.format(
                        name, m)))
            records.append(record)

    report = VerificationReport(records=records, failures=failures,
                                info={'tol': tol, 'elapsed': tt.dt})
    logger.info("verification of degrees 0..%d: %s", len(seq) - 1, report.summary())
    return report
