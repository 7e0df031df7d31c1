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
from collections.abc import Callable
from math import factorial, pi, sqrt

import numpy as np
from numpy.polynomial.hermite import hermgauss

from bosonkit.core.matrices import UnitaryMatrix, as_unitary
from bosonkit.errors import DimensionTooLarge, PreconditionError
from bosonkit.fock.amplitudes import ComplexAmplitude
from bosonkit.fock.occupations import OccupationVector
from bosonkit.representations.amplitudes import (
    amplitude_quadrature_single_mode,
)
from bosonkit.representations.config import (
    COHERENT_BLOCK_ROWS,
    COHERENT_INTEGRAL_MAX_ORDER,
    GAUSS_HERMITE_ORDER,
    INTEGRAL_MAX_OCCUPATION,
    INTEGRAL_TOLERANCE,
    QUADRATURE_INTEGRAL_MAX_ORDER,
)
from bosonkit.representations.kernels import hermite_polynomial

logger = logging.getLogger(__name__)


def _single_mode(u, name: str) -> UnitaryMatrix:
    u = as_unitary(u)

    if u.dimension != 1:
        raise DimensionTooLarge(
            f"{name} supports M = 1, got M = {u.dimension}"
        )

    return u


def _occupation(value, name: str) -> int:
    if isinstance(value, OccupationVector):
        value = value.occupations

    if not isinstance(value, (int, np.integer)):
        (value,) = value

    value = int(value)

    if value < 0:
        raise PreconditionError(f"{name} needs occupations >= 0, got {value}")

    if value > INTEGRAL_MAX_OCCUPATION:
        raise DimensionTooLarge(
            f"{name} supports occupations <= {INTEGRAL_MAX_OCCUPATION}, "
            f"got {value}"
        )

    return value


def _refine(
    evaluate: Callable[[int], complex], max_order: int, name: str
) -> complex:
    # Double the Gauss-Hermite order until successive values agree.
    order = GAUSS_HERMITE_ORDER
    value = evaluate(order)
    change = float("inf")

    while order * 2 <= max_order:
        order *= 2
        refined = evaluate(order)
        change = abs(refined - value)
        value = refined

        logger.debug(f"{name}: order {order}, change {change:.3e}")

        if change < INTEGRAL_TOLERANCE:
            return value

    logger.warning(
        f"{name}: no convergence to {INTEGRAL_TOLERANCE:.0e} by order "
        f"{order}, last change {change:.3e}"
    )

    return value


def amplitude_fock_via_coherent_integral(u, n, m) -> ComplexAmplitude:
    """
    Single-mode Fock amplitude from the coherent-state integral

        A = (1/pi^2) int d^2phi d^2psi <m|psi> <psi'|phi> <phi|n>,

    with d^2phi = dRe(phi) dIm(phi). The Gaussian factor
    exp(-|phi|^2 - |psi|^2) is the Gauss-Hermite weight in all four real
    coordinates; the remaining factor psi^m conj(phi)^n exp(conj(psi) u
    phi) is summed over the tensor grid in blocks of psi rows.

    Args:
        u (UnitaryMatrix | array-like): 1 x 1 unitary.
        n (int | Sequence[int]): Input occupation, <= 4.
        m (int | Sequence[int]): Output occupation, <= 4.

    Returns:
        ComplexAmplitude: The amplitude with path "integral".
    """
    name = "amplitude_fock_via_coherent_integral"
    phase = complex(_single_mode(u, name).entries[0, 0])
    n = _occupation(n, name)
    m = _occupation(m, name)

    def evaluate(order: int) -> complex:
        nodes, weights = hermgauss(order)
        real, imag = np.meshgrid(nodes, nodes, indexing="ij")
        points = (real + 1j * imag).ravel()
        plane_weights = np.outer(weights, weights).ravel()

        phi_side = plane_weights * np.conj(points) ** n
        psi_side = plane_weights * points**m

        total = 0j
        for start in range(0, points.size, COHERENT_BLOCK_ROWS):
            stop = start + COHERENT_BLOCK_ROWS
            block = np.conj(points[start:stop]) * phase
            kernel = np.exp(np.outer(block, points))
            total += psi_side[start:stop] @ (kernel @ phi_side)

        return total / (pi**2 * sqrt(factorial(n) * factorial(m)))

    value = _refine(evaluate, COHERENT_INTEGRAL_MAX_ORDER, name)

    return ComplexAmplitude(value=value, path="integral")


def amplitude_fock_via_quadrature_integral(u, n, m) -> ComplexAmplitude:
    """
    Single-mode Fock amplitude from the quadrature-state integral

        A = int dQ dq <m|Q> <Q'|q> <q|n>.

    Substituting q = 2x and Q = 2y turns the Gaussian factors of the two
    number kernels into the Gauss-Hermite weight; the order doubles from
    40 until successive values agree.

    Args:
        u (UnitaryMatrix | array-like): 1 x 1 unitary with nonzero
            imaginary part.
        n (int | Sequence[int]): Input occupation, <= 4.
        m (int | Sequence[int]): Output occupation, <= 4.

    Returns:
        ComplexAmplitude: The amplitude with path "integral".

    Raises:
        SingularImaginaryPart: If u is real.
    """
    name = "amplitude_fock_via_quadrature_integral"
    u = _single_mode(u, name)
    n = _occupation(n, name)
    m = _occupation(m, name)

    def polynomial(k: int, q: np.ndarray) -> np.ndarray:
        # <q|k> with the e^(-q^2/4) factor removed.
        scale = (2.0 * pi) ** -0.25 / sqrt(2.0**k * factorial(k))
        return scale * hermite_polynomial(k, q / sqrt(2.0))

    def evaluate(order: int) -> complex:
        nodes, weights = hermgauss(order)
        q = 2.0 * nodes

        incoming = weights * polynomial(n, q)
        outgoing = weights * polynomial(m, q)
        kernel = amplitude_quadrature_single_mode(u, q[None, :], q[:, None])

        return complex(4.0 * outgoing @ kernel @ incoming)

    value = _refine(evaluate, QUADRATURE_INTEGRAL_MAX_ORDER, name)

    return ComplexAmplitude(value=value, path="integral")
