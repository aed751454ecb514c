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

"""Exceptions and warnings raised by :mod:`ortho.wendroff`."""

__all__ = [
    'WendroffError',
    'ParameterDomainError',
    'PreconditionError',
    'ConstructionError',
    'InvalidRadiusError',
    'InternalConsistencyError',
    'MultiplicityError',
    'BoundaryRootError',
    'UndecidableOrderingError',
    'RadiusModeWarning',
    ]


class WendroffError(Exception):
    """Base class for all errors raised by this package."""


class ParameterDomainError(WendroffError, ValueError):
    """A parameter lies outside the domain the construction is defined on."""


class PreconditionError(WendroffError, ValueError):
    """The inputs of a check do not satisfy its stated precondition."""


class ConstructionError(WendroffError, ArithmeticError):
    """A recurrence coefficient violated positivity during construction.

    Args:
        message: Human-readable diagnostic.
        degree: Degree of the polynomial being constructed, if known.

    """
    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree

    def __str__(self):
        msg = super().__str__()
        if self.degree is None:
            return msg
        return "{} (degree {})".format(msg, self.degree)


class InvalidRadiusError(ConstructionError, ValueError):
    """The interval radius ``a`` does not exceed the zeros of the seed pair."""


class InternalConsistencyError(ConstructionError):
    """A constructed polynomial does not have the degree it must have."""


class MultiplicityError(WendroffError, ValueError):
    """A polynomial handed to root isolation has a repeated root."""


class BoundaryRootError(WendroffError, ValueError):
    """An interval endpoint is an exact root of the polynomial.

    Attributes:
        endpoint: The offending rational endpoint.

    """
    def __init__(self, message, endpoint=None):
        super().__init__(message)
        self.endpoint = endpoint


class UndecidableOrderingError(WendroffError):
    """Certified root intervals overlap at the current tolerance.

    This is a request to refine and retry, not a verdict. See
    :func:`ortho.wendroff.analysis.decide`.
    """


class RadiusModeWarning(UserWarning):
    """A radius mode was forced outside the range it is prescribed for."""
