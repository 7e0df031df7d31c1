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
from math import pi

import numpy as np

from bosonkit.core.matrices import as_unitary
from bosonkit.errors import DimensionMismatch, SingularImaginaryPart
from bosonkit.representations.config import CONDITION_NUMBER_LIMIT
from bosonkit.representations.kernels import as_vector

logger = logging.getLogger(__name__)


def _check_length(vector: np.ndarray, dimension: int, name: str) -> None:
    if vector.size != dimension:
        raise DimensionMismatch(
            f"{name} has {vector.size} modes, u has dimension {dimension}"
        )


def amplitude_coherent(u, phi, psi) -> complex:
    """
    Coherent-state transition amplitude <psi'|phi>.

    Args:
        u (UnitaryMatrix | array-like): The M x M single-particle unitary.
        phi (CoherentLabel | array-like): Incoming amplitudes, length M.
        psi (CoherentLabel | array-like): Outgoing amplitudes, length M.

    Returns:
        complex: exp(-phi*.phi/2 - psi*.psi/2 + psi*.u.phi).

    Raises:
        DimensionMismatch: If a label length differs from M.
    """
    u = as_unitary(u)
    phi = as_vector(phi)
    psi = as_vector(psi)

    _check_length(phi, u.dimension, "phi")
    _check_length(psi, u.dimension, "psi")

    exponent = (
        -0.5 * np.vdot(phi, phi)
        - 0.5 * np.vdot(psi, psi)
        + np.vdot(psi, u.entries @ phi)
    )

    return complex(np.exp(exponent))


def probability_coherent(u, phi, psi) -> float:
    """Transition probability exp(-|psi - u.phi|^2), the squared modulus of
    amplitude_coherent."""
    u = as_unitary(u)
    phi = as_vector(phi)
    psi = as_vector(psi)

    _check_length(phi, u.dimension, "phi")
    _check_length(psi, u.dimension, "psi")

    distance = psi - u.entries @ phi

    return float(np.exp(-np.vdot(distance, distance).real))


def imaginary_part_inverse(u) -> np.ndarray:
    """Inverse of u^i = Im u, or SingularImaginaryPart when u^i is singular
    or worse conditioned than the configured limit."""
    imaginary = as_unitary(u).imag_part()
    condition = np.linalg.cond(imaginary)

    if not np.isfinite(condition) or condition > CONDITION_NUMBER_LIMIT:
        raise SingularImaginaryPart(
            f"Imaginary part of u has condition number {condition:.3e}, "
            f"limit is {CONDITION_NUMBER_LIMIT:.0e}"
        )

    return np.linalg.inv(imaginary)


def _quadrature_determinant(u) -> complex:
    entries = as_unitary(u).entries
    imaginary = entries.imag

    return complex(np.linalg.det(-4j * pi * entries @ imaginary.T))


def amplitude_quadrature(u, q, Q) -> complex:
    """
    Quadrature-state transition amplitude <Q'|q>.

    The Gaussian solution of the eigenvalue equations
    [i u^i d/dq - (u^r q - Q)/2] A = 0:

        A = exp{-(i/4) [q.S.q - 2 q.(u^i)^-1.Q + Q.u^r (u^i)^-1.Q]}
            / sqrt(det(-4 pi i u (u^i)^T))

    with S = (u^i)^-1 u^r, which is symmetric for unitary u. The square
    root takes the principal branch, so the overall phase is a
    convention; |A|^2 = 1 / |det(4 pi u (u^i)^T)| does not depend on q
    or Q.

    Args:
        u (UnitaryMatrix | array-like): M x M unitary with invertible
            imaginary part.
        q (QuadraturePoint | array-like): Incoming quadratures, length M.
        Q (QuadraturePoint | array-like): Outgoing quadratures, length M.

    Returns:
        complex: The amplitude.

    Raises:
        SingularImaginaryPart: If u^i has condition number above 1e8.
        DimensionMismatch: If q or Q has the wrong length.
    """
    u = as_unitary(u)
    q = as_vector(q, np.float64)
    Q = as_vector(Q, np.float64)

    _check_length(q, u.dimension, "q")
    _check_length(Q, u.dimension, "Q")

    inverse = imaginary_part_inverse(u)
    real = u.real_part()

    symmetric = inverse @ real
    symmetric = 0.5 * (symmetric + symmetric.T)

    form = q @ symmetric @ q - 2.0 * q @ inverse @ Q + Q @ real @ inverse @ Q
    prefactor = 1.0 / np.sqrt(_quadrature_determinant(u))

    return complex(prefactor * np.exp(-0.25j * form))


def probability_quadrature(u) -> float:
    """Flat quadrature transition probability 1 / |det(4 pi u (u^i)^T)|."""
    imaginary_part_inverse(u)

    return 1.0 / abs(_quadrature_determinant(u))


def amplitude_quadrature_single_mode(u, q, Q):
    """amplitude_quadrature for M = 1, broadcast over arrays of q and Q."""
    u = as_unitary(u)

    if u.dimension != 1:
        raise DimensionMismatch(
            f"Single-mode quadrature amplitude needs M = 1, got M = "
            f"{u.dimension}"
        )

    inverse = imaginary_part_inverse(u)[0, 0]
    real = u.real_part()[0, 0]
    q = np.asarray(q, dtype=np.float64)
    Q = np.asarray(Q, dtype=np.float64)

    form = real * inverse * (q * q + Q * Q) - 2.0 * inverse * q * Q
    prefactor = 1.0 / np.sqrt(_quadrature_determinant(u))

    return prefactor * np.exp(-0.25j * form)
