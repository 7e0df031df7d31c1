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

import numpy as np

from bosonkit.core.matrices import UnitaryMatrix
from bosonkit.errors import OutsideValidityRegion
from bosonkit.representations.amplitudes import (
    amplitude_quadrature_single_mode,
)
from bosonkit.semiclassics.asymptotics import semiclassical_kernel_real
from bosonkit.semiclassics.config import (
    OSCILLATORY_BLOCK_ROWS,
    OSCILLATORY_GRID,
    TAPER_FRACTION,
    THREE_STEP_MAX_OCCUPATION,
    THREE_STEP_MIN_ABS_SIN,
    THREE_STEP_MIN_OCCUPATION,
)

logger = logging.getLogger(__name__)


def _tapered_grid(
    occupation: int, points: int
) -> tuple[np.ndarray, np.ndarray]:
    # Midpoints of the classically allowed box; the kernel is singular at
    # the box edges, where the cosine taper takes the weight to zero.
    half_width = 2.0 * np.sqrt(occupation + 0.5)
    step = 2.0 * half_width / points
    grid = -half_width + (np.arange(points) + 0.5) * step

    inner = (1.0 - TAPER_FRACTION) * half_width
    excess = np.clip(np.abs(grid) - inner, 0.0, None)
    taper = 0.5 * (1.0 + np.cos(np.pi * excess / (half_width - inner)))

    weights = step * taper * semiclassical_kernel_real(occupation, grid)

    return grid, weights


def three_step_amplitude_m1(
    alpha: float, n: int, m: int, points: int = OSCILLATORY_GRID
) -> complex:
    """
    Single-mode Fock amplitude composed from three semiclassical steps,

        A(n -> m) ~ int dQ dq <m|Q>_sc <Q'|q> <q|n>_sc,

    for u = e^(i alpha): the number-to-quadrature kernels are the real
    semiclassical ones and the quadrature step is exact. The integral is a
    midpoint rule on a points x points grid over |q| <= 2 sqrt(n + 1/2),
    |Q| <= 2 sqrt(m + 1/2), evaluated block by block as a matrix-vector
    product. The exact answer is e^(i n alpha) when n = m and 0 otherwise.

    Args:
        alpha (float): Phase of the single-mode unitary, |sin alpha| >= 0.1.
        n (int): Input occupation, 20 <= n <= 200.
        m (int): Output occupation, 20 <= m <= 200.
        points (int): Grid points per axis.

    Returns:
        complex: The semiclassical amplitude.

    Raises:
        OutsideValidityRegion: On occupations or phases outside the
            stationary-phase regime.
    """
    for name, value in (("n", n), ("m", m)):
        if not THREE_STEP_MIN_OCCUPATION <= value <= THREE_STEP_MAX_OCCUPATION:
            raise OutsideValidityRegion(
                f"three_step_amplitude_m1 needs {THREE_STEP_MIN_OCCUPATION} "
                f"<= {name} <= {THREE_STEP_MAX_OCCUPATION}, got {value}"
            )

    if abs(np.sin(alpha)) < THREE_STEP_MIN_ABS_SIN:
        raise OutsideValidityRegion(
            f"three_step_amplitude_m1 needs |sin alpha| >= "
            f"{THREE_STEP_MIN_ABS_SIN}, got {abs(np.sin(alpha)):.3g}"
        )

    u = UnitaryMatrix([[np.exp(1j * alpha)]])

    q, incoming = _tapered_grid(n, points)
    Q, outgoing = _tapered_grid(m, points)

    logger.debug(f"three_step_amplitude_m1: {points}^2 grid, alpha {alpha}")

    total = 0j
    for start in range(0, points, OSCILLATORY_BLOCK_ROWS):
        rows = slice(start, start + OSCILLATORY_BLOCK_ROWS)
        kernel = amplitude_quadrature_single_mode(u, q[None, :], Q[rows, None])
        total += outgoing[rows] @ (kernel @ incoming)

    return complex(total)
