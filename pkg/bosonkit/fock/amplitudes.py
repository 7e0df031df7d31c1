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

import logging
from collections.abc import Sequence
from math import factorial, prod, sqrt
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from bosonkit.core.matrices import ComplexMatrix, UnitaryMatrix, as_unitary
from bosonkit.core.permanents import permanent
from bosonkit.errors import (
    DimensionTooLarge,
    ParticleNumberMismatch,
    PreconditionError,
)
from bosonkit.fock.config import (
    AMPLITUDE_MAX_PARTICLES,
    AMPLITUDE_MODULUS_SLACK,
    AMPLITUDE_PATHS,
    CONTOUR_MAX_MODES,
    CONTOUR_MAX_PARTICLES,
    ORACLE_MAX_MODES,
    ORACLE_MAX_PARTICLES,
)
from bosonkit.fock.occupations import (
    OccupationVector,
    as_occupation,
    check_modes,
    compositions_descending,
    index_map,
    multinomial,
)

logger = logging.getLogger(__name__)

OccupationLike = OccupationVector | Sequence[int] | str


class ComplexAmplitude(BaseModel):
    """A transition amplitude together with the path that produced it."""

    model_config = ConfigDict(frozen=True)

    value: complex
    path: Literal["permanent", "contour", "oracle", "integral"]

    @model_validator(mode="after")
    def _check_modulus(self):
        # Fock-to-Fock amplitudes are overlaps of unit vectors.
        if self.path != "integral":
            if abs(self.value) > 1.0 + AMPLITUDE_MODULUS_SLACK:
                raise ValueError(
                    f"|amplitude| = {abs(self.value)} exceeds 1 on the "
                    f"{self.path} path"
                )

        return self

    @property
    def probability(self) -> float:
        return abs(self.value) ** 2


class ExpandedMatrix(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    base: UnitaryMatrix
    input_occupation: OccupationVector
    output_occupation: OccupationVector
    matrix: ComplexMatrix


def _prepare(
    u, n, m
) -> tuple[UnitaryMatrix, OccupationVector, OccupationVector]:
    u = as_unitary(u)
    n = as_occupation(n)
    m = as_occupation(m)

    check_modes(n, u.dimension)
    check_modes(m, u.dimension)

    if n.total != m.total:
        raise ParticleNumberMismatch(
            f"Input carries {n.total} particles, output carries {m.total}"
        )

    return u, n, m


def _normalization(n: OccupationVector, m: OccupationVector) -> float:
    return sqrt(n.factorial_product() * m.factorial_product())


def expand_matrix(u, n: OccupationLike, m: OccupationLike) -> ExpandedMatrix:
    """
    Build the N x N matrix M with M_jk = u[d_j(n), d_k(m)].

    Row i of u is repeated n_i times and column j is repeated m_j times.

    Args:
        u (UnitaryMatrix | array-like): The M x M single-particle matrix.
        n (OccupationVector | Sequence[int] | str): Row occupations.
        m (OccupationVector | Sequence[int] | str): Column occupations.

    Returns:
        ExpandedMatrix: The expanded matrix and what it was built from.

    Raises:
        ParticleNumberMismatch: If sum(n) != sum(m) or N = 0.
        DimensionMismatch: If an occupation length differs from M.
    """
    u, n, m = _prepare(u, n, m)

    if n.total < 1:
        raise ParticleNumberMismatch("expand_matrix needs N >= 1, got N = 0")

    rows = index_map(n)
    cols = index_map(m)

    return ExpandedMatrix(
        base=u,
        input_occupation=n,
        output_occupation=m,
        matrix=ComplexMatrix(u.entries[np.ix_(rows, cols)]),
    )


def amplitude_fock(
    u, n: OccupationLike, m: OccupationLike, method: str = "ryser"
) -> ComplexAmplitude:
    """
    Fock-to-Fock transition amplitude <m'|n> from a matrix permanent.

    With the convention that a single particle going from mode i to mode
    j picks up u[j, i], the amplitude is Perm(expand_matrix(u^T, n, m))
    divided by sqrt(prod n_i! prod m_j!). This matches
    amplitude_fock_oracle exactly.

    Args:
        u (UnitaryMatrix | array-like): The M x M single-particle unitary.
        n (OccupationVector | Sequence[int] | str): Input occupations.
        m (OccupationVector | Sequence[int] | str): Output occupations.
        method (str): Permanent algorithm, "ryser", "glynn" or "naive".

    Returns:
        ComplexAmplitude: The amplitude with path "permanent".

    Raises:
        ParticleNumberMismatch: If sum(n) != sum(m).
        DimensionTooLarge: If N exceeds 12.

    Example:
        >>> amplitude_fock(beamsplitter(), (1, 1), (1, 1)).value
        0j
    """
    u, n, m = _prepare(u, n, m)

    if n.total > AMPLITUDE_MAX_PARTICLES:
        raise DimensionTooLarge(
            f"amplitude_fock supports N <= {AMPLITUDE_MAX_PARTICLES}, "
            f"got N = {n.total}"
        )

    if n.total == 0:
        return ComplexAmplitude(value=1.0 + 0j, path="permanent")

    expanded = expand_matrix(u.transpose(), n, m)
    value = permanent(expanded.matrix, method) / _normalization(n, m)

    return ComplexAmplitude(value=value, path="permanent")


def amplitude_fock_contour(
    u, n: OccupationLike, m: OccupationLike
) -> ComplexAmplitude:
    """
    Fock amplitude as a Fourier coefficient of the generating function.

    The amplitude is sqrt(prod m! n!) times the coefficient of
    prod x_j^m_j y_i^n_i in exp(x . u . y). Only the total-degree-N part
    (x . u . y)^N / N! contributes to that coefficient, and its degree in
    any single variable is at most N, so sampling it on N + 1 points of
    the unit circle per variable extracts the coefficient without
    aliasing. The 2M-fold contour integral becomes one fftn.

    Args:
        u (UnitaryMatrix | array-like): M x M unitary, M <= 3.
        n (OccupationVector | Sequence[int] | str): Input occupations.
        m (OccupationVector | Sequence[int] | str): Output occupations,
            N = sum(m) <= 6.

    Returns:
        ComplexAmplitude: The amplitude with path "contour".
    """
    u, n, m = _prepare(u, n, m)
    modes = u.dimension
    particles = n.total

    if modes > CONTOUR_MAX_MODES or particles > CONTOUR_MAX_PARTICLES:
        raise DimensionTooLarge(
            f"amplitude_fock_contour supports M <= {CONTOUR_MAX_MODES} and "
            f"N <= {CONTOUR_MAX_PARTICLES}, got M = {modes}, N = {particles}"
        )

    if particles == 0:
        return ComplexAmplitude(value=1.0 + 0j, path="contour")

    points = particles + 1
    circle = np.exp(2j * np.pi * np.arange(points) / points)
    axes = np.meshgrid(*([circle] * (2 * modes)), indexing="ij", sparse=True)
    xs, ys = axes[:modes], axes[modes:]

    logger.debug(
        f"Contour grid: {points} points per variable, {2 * modes} variables"
    )

    bilinear = sum(
        u.entries[j, i] * xs[j] * ys[i]
        for j in range(modes)
        for i in range(modes)
    )
    samples = bilinear**particles / factorial(particles)

    coefficients = np.fft.fftn(samples) / points ** (2 * modes)
    coefficient = coefficients[m.occupations + n.occupations]

    value = complex(coefficient) * _normalization(n, m)

    return ComplexAmplitude(value=value, path="contour")


def _power_terms(row: np.ndarray, power: int) -> dict[tuple, complex]:
    # (sum_i row_i b_i^dagger)^power by the multinomial theorem.
    terms = {}

    for exponents in compositions_descending(power, len(row)):
        coefficient = multinomial(power, exponents) * prod(
            complex(row[i]) ** k for i, k in enumerate(exponents)
        )

        if coefficient != 0:
            terms[exponents] = coefficient

    return terms


def _multiply(left: dict, right: dict) -> dict[tuple, complex]:
    result: dict[tuple, complex] = {}

    for left_key, left_value in left.items():
        for right_key, right_value in right.items():
            key = tuple(a + b for a, b in zip(left_key, right_key))
            result[key] = result.get(key, 0j) + left_value * right_value

    return result


def amplitude_fock_oracle(
    u, n: OccupationLike, m: OccupationLike
) -> ComplexAmplitude:
    """
    Brute-force <m'|n> from the creation-operator expansion of |m'>.

    Each primed creation operator is (b'_j)^dagger =
    sum_i conj(u[j, i]) b_i^dagger. The state
    prod_j ((b'_j)^dagger)^m_j / sqrt(m_j!) |0> is expanded as a
    polynomial in the unprimed operators, term by term with multinomial
    coefficients; a monomial prod (b_i^dagger)^k_i |0> equals
    sqrt(prod k_i!) |k>. The coefficient of |n> is read off and
    conjugated.

    Args:
        u (UnitaryMatrix | array-like): M x M unitary, M <= 4.
        n (OccupationVector | Sequence[int] | str): Input occupations.
        m (OccupationVector | Sequence[int] | str): Output occupations,
            N <= 5.

    Returns:
        ComplexAmplitude: The amplitude with path "oracle".
    """
    u, n, m = _prepare(u, n, m)
    modes = u.dimension

    if modes > ORACLE_MAX_MODES or n.total > ORACLE_MAX_PARTICLES:
        raise DimensionTooLarge(
            f"amplitude_fock_oracle supports M <= {ORACLE_MAX_MODES} and "
            f"N <= {ORACLE_MAX_PARTICLES}, got M = {modes}, N = {n.total}"
        )

    state = {(0,) * modes: 1.0 + 0j}
    conjugate = u.entries.conj()

    for j, count in enumerate(m.occupations):
        if count:
            state = _multiply(state, _power_terms(conjugate[j], count))

    coefficient = state.get(n.occupations, 0j)
    overlap = coefficient * sqrt(n.factorial_product())
    overlap /= sqrt(m.factorial_product())

    return ComplexAmplitude(value=overlap.conjugate(), path="oracle")


_PATHS = {
    "permanent": amplitude_fock,
    "contour": amplitude_fock_contour,
    "oracle": amplitude_fock_oracle,
}


def amplitude(
    u, n: OccupationLike, m: OccupationLike, path: str = "permanent"
) -> ComplexAmplitude:
    if path not in _PATHS:
        raise PreconditionError(
            f"Unknown amplitude path {path!r}, expected one of "
            f"{AMPLITUDE_PATHS}"
        )

    logger.debug(f"Fock amplitude via {path} path")

    return _PATHS[path](u, n, m)


def transition_probability(
    u, n: OccupationLike, m: OccupationLike
) -> float:
    return amplitude_fock(u, n, m).probability


def beamsplitter() -> UnitaryMatrix:
    """Balanced 50/50 beamsplitter (1/sqrt 2) [[1, 1], [1, -1]]."""
    return UnitaryMatrix(np.array([[1.0, 1.0], [1.0, -1.0]]) / sqrt(2.0))

