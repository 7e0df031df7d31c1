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
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.linalg import qr

from bosonkit.config import DEFAULT_SEED
from bosonkit.core.matrices import ComplexMatrix, UnitaryMatrix
from bosonkit.ensembles.config import DEFAULT_DISORDER, DEFAULT_SIGMA2
from bosonkit.errors import PreconditionError

logger = logging.getLogger(__name__)

SeedLike = int | np.random.Generator | None


class EnsembleSpec(BaseModel):
    """Parameters of one seeded random-matrix draw."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["haar", "ginibre", "quench"]
    dimension: int = Field(ge=1)
    sigma2: float = DEFAULT_SIGMA2
    disorder: float = Field(default=DEFAULT_DISORDER, ge=0.0)
    seed: int = DEFAULT_SEED

    @model_validator(mode="after")
    def _check_sigma2(self):
        if self.kind == "ginibre" and not self.sigma2 > 0.0:
            raise ValueError(f"sigma2 must be > 0, got {self.sigma2}")

        return self


def make_generator(seed: SeedLike = None) -> np.random.Generator:
    """PCG64 generator (128-bit state) from an integer seed, or the
    generator itself when one is passed."""
    if isinstance(seed, np.random.Generator):
        return seed

    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)


def _check_dimension(name: str, dimension: int) -> None:
    if dimension < 1:
        raise PreconditionError(f"{name} needs M >= 1, got {dimension}")


def sample_haar(dimension: int, seed: SeedLike = None) -> UnitaryMatrix:
    """
    Draw a Haar-distributed unitary matrix.

    A complex Ginibre draw with unit-variance entries is QR-decomposed and
    each column of Q is multiplied by the phase of the matching diagonal
    entry of R; without that correction QR is not Haar-distributed.

    Args:
        dimension (int): Matrix size M >= 1.
        seed (int | np.random.Generator | None): Integer seed, or a
            generator to continue drawing from.

    Returns:
        UnitaryMatrix: An M x M unitary.

    Example:
        >>> sample_haar(1, seed=3).entries.shape
        (1, 1)
    """
    _check_dimension("sample_haar", dimension)
    rng = make_generator(seed)

    z = (
        rng.standard_normal((dimension, dimension))
        + 1j * rng.standard_normal((dimension, dimension))
    ) / np.sqrt(2.0)

    q, r = qr(z)

    diagonal = np.diag(r)
    phases = diagonal / np.abs(diagonal)

    return UnitaryMatrix(q * phases)


def sample_ginibre(
    dimension: int, sigma2: float, seed: SeedLike = None
) -> ComplexMatrix:
    """
    Draw an N x N complex Ginibre matrix whose real and imaginary parts are
    independent with mean 0 and variance sigma2.

    Args:
        dimension (int): Matrix size N >= 1.
        sigma2 (float): Variance of each real and each imaginary part.
        seed (int | np.random.Generator | None): Seed or generator.

    Returns:
        ComplexMatrix: The draw.
    """
    _check_dimension("sample_ginibre", dimension)

    if not sigma2 > 0.0:
        raise PreconditionError(
            f"sample_ginibre needs sigma2 > 0, got {sigma2}"
        )

    return ComplexMatrix(ginibre_stack(1, dimension, sigma2, seed)[0])


def ginibre_stack(
    count: int, dimension: int, sigma2: float, seed: SeedLike = None
) -> np.ndarray:
    """count independent Ginibre draws as one (count, N, N) array."""
    rng = make_generator(seed)
    scale = np.sqrt(sigma2)
    shape = (count, dimension, dimension)

    real = rng.standard_normal(shape)
    imag = rng.standard_normal(shape)

    return scale * (real + 1j * imag)


def fourier_matrix(dimension: int) -> np.ndarray:
    indices = np.arange(dimension)

    return np.exp(
        2j * np.pi * np.outer(indices, indices) / dimension
    ) / np.sqrt(dimension)


def quench_unitary(
    dimension: int, disorder: float = 0.0, seed: SeedLike = None
) -> UnitaryMatrix:
    """
    Unitary relating Wannier orbitals to momentum orbitals after a quench
    with random on-site energies.

    Returns F D with F_jk = exp(2 pi i j k / M) / sqrt(M) and
    D = diag(exp(i phi_j)), phi_j uniform on [-disorder pi, disorder pi].
    The on-site energies evolved for unit time enter only as these phases.

    Args:
        dimension (int): Number of lattice sites M >= 1.
        disorder (float): Phase-disorder strength, >= 0.
        seed (int | np.random.Generator | None): Seed or generator.

    Returns:
        UnitaryMatrix: The M x M quench unitary.
    """
    _check_dimension("quench_unitary", dimension)

    if disorder < 0.0:
        raise PreconditionError(
            f"quench_unitary needs disorder >= 0, got {disorder}"
        )

    rng = make_generator(seed)
    phases = rng.uniform(-disorder * np.pi, disorder * np.pi, size=dimension)

    return UnitaryMatrix(fourier_matrix(dimension) * np.exp(1j * phases))


def sample(spec: EnsembleSpec) -> ComplexMatrix:
    logger.debug(f"Sampling {spec.kind} matrix of dimension {spec.dimension}")

    match spec.kind:
        case "haar":
            return sample_haar(spec.dimension, spec.seed)
        case "ginibre":
            return sample_ginibre(spec.dimension, spec.sigma2, spec.seed)
        case "quench":
            return quench_unitary(spec.dimension, spec.disorder, spec.seed)
