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

from math import factorial, pi, sqrt

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from bosonkit.errors import DimensionMismatch, NonFiniteEntries


class CoherentLabel(BaseModel):
    """Complex field amplitudes labelling a multimode coherent state."""

    model_config = ConfigDict(frozen=True)

    amplitudes: tuple[complex, ...]

    @field_validator("amplitudes")
    @classmethod
    def _finite(cls, values):
        if not all(np.isfinite(value) for value in values):
            raise ValueError("Coherent amplitudes must be finite")

        return values

    def as_array(self) -> np.ndarray:
        return np.array(self.amplitudes, dtype=np.complex128)


class QuadraturePoint(BaseModel):
    """Real quadrature values, one per mode."""

    model_config = ConfigDict(frozen=True)

    values: tuple[float, ...]

    @field_validator("values")
    @classmethod
    def _finite(cls, values):
        if not all(np.isfinite(value) for value in values):
            raise ValueError("Quadrature values must be finite")

        return values

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.float64)


def as_vector(values, dtype=np.complex128) -> np.ndarray:
    if isinstance(values, (CoherentLabel, QuadraturePoint)):
        values = values.as_array()

    array = np.atleast_1d(np.asarray(values, dtype=dtype))

    if array.ndim != 1:
        raise DimensionMismatch(f"Expected a vector, got shape {array.shape}")

    if not np.all(np.isfinite(array)):
        raise NonFiniteEntries("Vector entries must be finite")

    return array


def hermite_polynomial(n: int, x):
    """Physicists' Hermite polynomial H_n(x) from
    H_{k+1} = 2x H_k - 2k H_{k-1}."""
    x = np.asarray(x, dtype=np.float64)
    previous = np.zeros_like(x)
    current = np.ones_like(x)

    for k in range(n):
        previous, current = current, 2.0 * x * current - 2.0 * k * previous

    return current


def hermite_function(n: int, x):
    """
    Normalized Hermite function pi^(-1/4) e^(-x^2/2) H_n(x) / sqrt(2^n n!).

    Evaluated by the normalized recurrence
    psi_{k+1} = sqrt(2/(k+1)) x psi_k - sqrt(k/(k+1)) psi_{k-1},
    which stays finite for the large n where H_n and 2^n n! overflow.
    """
    x = np.asarray(x, dtype=np.float64)
    previous = np.zeros_like(x)
    current = pi**-0.25 * np.exp(-0.5 * x * x)

    for k in range(n):
        previous, current = current, (
            sqrt(2.0 / (k + 1)) * x * current
            - sqrt(k / (k + 1)) * previous
        )

    return current


def kernel_number_quadrature(n: int, q):
    """
    Number-to-quadrature kernel <q|n>.

    Equals e^(-q^2/4) H_n(q / sqrt 2) / sqrt(2^n n! sqrt(2 pi)), computed as
    2^(-1/4) times the normalized Hermite function at q / sqrt 2.

    Args:
        n (int): Occupation, >= 0.
        q (float | np.ndarray): Quadrature value(s).

    Returns:
        float | np.ndarray: The (real) kernel.

    Example:
        >>> round(float(kernel_number_quadrature(0, 0.0)), 12)
        0.631618777746
    """
    if n < 0:
        raise ValueError(f"Occupation must be >= 0, got {n}")

    return 2.0**-0.25 * hermite_function(n, np.asarray(q) / sqrt(2.0))


def kernel_number_pquadrature(n: int, p):
    """Number-to-momentum-quadrature kernel <p|n> = (-i)^n <q=p|n>."""
    return (-1j) ** n * kernel_number_quadrature(n, p)


def kernel_coherent_quadrature(phi: complex, q):
    """Coherent-to-quadrature kernel <q|phi>."""
    phi = complex(phi)
    q = np.asarray(q, dtype=np.float64)

    exponent = -0.5 * abs(phi) ** 2 - (q / 2.0 - phi) ** 2 + phi**2 / 2.0

    return (2.0 * pi) ** -0.25 * np.exp(exponent)


def kernel_coherent_number(n: int, phi: complex) -> complex:
    """Coherent-to-number kernel <n|phi> = phi^n e^(-|phi|^2/2) / sqrt(n!)."""
    phi = complex(phi)

    return phi**n * np.exp(-0.5 * abs(phi) ** 2) / sqrt(factorial(n))


def kernel_qp(q, p) -> complex:
    """Position-momentum overlap <q|p> = e^(i q.p/2) / (4 pi)^(M/2)."""
    q = as_vector(q, np.float64)
    p = as_vector(p, np.float64)

    if q.shape != p.shape:
        raise DimensionMismatch(
            f"q has {q.size} modes, p has {p.size} modes"
        )

    return complex(
        np.exp(0.5j * np.dot(q, p)) / (4.0 * pi) ** (q.size / 2.0)
    )
