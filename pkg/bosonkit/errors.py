# Copyright 2026 The bosonkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


class BosonKitError(Exception):
    pass


class PreconditionError(BosonKitError, ValueError):
    """A documented bound or shape requirement of an operation is violated."""


class NonSquare(PreconditionError):
    pass


class DimensionTooLarge(PreconditionError):
    pass


class DimensionMismatch(PreconditionError):
    pass


class ParticleNumberMismatch(PreconditionError):
    pass


class NotUnitary(PreconditionError):
    pass


class NonFiniteEntries(PreconditionError):
    pass


class SingularImaginaryPart(PreconditionError):
    pass


class OutsideValidityRegion(PreconditionError):
    pass


class ClassicallyForbidden(PreconditionError):
    pass


class InsufficientData(PreconditionError):
    pass


class MatrixFormatError(BosonKitError, ValueError):
    pass


class NoSolutionFound(BosonKitError):
    """
    No multi-start run of the shooting solver met the residual tolerance.

    The best run is kept on ``best`` so callers can still report it; an
    empty solution set is a legitimate outcome of the boundary problem.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class ValidationFailed(BosonKitError):
    """At least one consistency check failed; ``report`` holds them all."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
