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

"""Small shared helpers: run timing, the default refinement tolerance and
decimal rendering."""

import os
import time

from fractions import Fraction

import numpy as np

__all__ = ['tictoc', 'DEFAULT_TOLERANCE', 'default_tolerance', 'format_decimal']

DEFAULT_TOLERANCE = Fraction(1, 10**6)
"""Refinement tolerance used when none is given (six significant digits)."""

TOLERANCE_ENVVAR = 'WENDROFF_TOL'


def default_tolerance() -> Fraction:
    """Return the default root refinement tolerance.

    The ``WENDROFF_TOL`` environment variable, if set, overrides
    :data:`DEFAULT_TOLERANCE`. It must be a ``"p/q"`` or integer string.

    Raises:
        ValueError: The environment value is not an exact positive rational.

    """
    # deferred to avoid a cycle, exact imports nothing from here
    from ortho.wendroff.exact import parse_rational

    value = os.environ.get(TOLERANCE_ENVVAR)
    if not value:
        return DEFAULT_TOLERANCE

    tol = parse_rational(value)
    if tol <= 0:
        raise ValueError("{} must be a positive rational: value = {}".format(
            TOLERANCE_ENVVAR, value))
    return tol


class tictoc:
    """Timer as a context manager.

    Elapsed wall clock time in floating point seconds available in :attr:`.dt`.

    Examples:
        >>> from ortho.wendroff.utils import tictoc
        >>> with tictoc() as tt:
        ...     _ = sum(range(10))
        >>> tt.dt >= 0
        True

    """
    dt: float = None

    def __enter__(self):
        self.tick = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.dt = time.perf_counter() - self.tick


def format_decimal(value, digits: int = 6) -> str:
    """Render ``value`` with ``digits`` significant digits in fixed-point notation.

    Examples:
        >>> from ortho.wendroff.utils import format_decimal
        >>> format_decimal(-5.033279e-07)
        '-0.000000503328'
        >>> format_decimal(1.0), format_decimal(2 ** 0.5)
        ('1', '1.41421')

    """
    # adding 0.0 turns -0.0 into 0.0
    return np.format_float_positional(float(value) + 0.0, precision=digits,
                                      unique=False, fractional=False, trim='-')
