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
from pydantic import BaseModel, ConfigDict

from bosonkit.core import permanent_batch
from bosonkit.ensembles import ginibre_stack, make_generator
from bosonkit.ensembles.samplers import SeedLike
from bosonkit.errors import DimensionTooLarge, PreconditionError
from bosonkit.moments.config import (
    MOMENT_ORDERS,
    MONTE_CARLO_BLOCK,
    MONTE_CARLO_MAX_DIMENSION,
    MONTE_CARLO_MIN_DRAWS,
)
from bosonkit.moments.exact import moment_exact

logger = logging.getLogger(__name__)


class MonteCarloEstimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    order: int
    dimension: int
    sigma2: float
    draws: int
    estimate: float
    stderr: float

    def deviation(self, exact: float) -> float:
        """|estimate - exact| in units of the standard error."""
        if self.stderr == 0.0:
            return 0.0 if self.estimate == exact else float("inf")

        return abs(self.estimate - exact) / self.stderr

    def deviation_from_exact(self) -> float:
        exact = moment_exact(self.order, self.dimension).raw(self.sigma2)

        return self.deviation(exact)


def moment_monte_carlo(
    order: int,
    dimension: int,
    sigma2: float,
    draws: int,
    seed: SeedLike = None,
) -> MonteCarloEstimate:
    """
    Sample mean and standard error of |Perm A|^{2n} over Ginibre draws.

    Draws are generated in fixed-size blocks from one generator, so the
    result depends only on the seed and the arguments.

    Args:
        order (int): n in {1, 2, 3}.
        dimension (int): Matrix size N <= MONTE_CARLO_MAX_DIMENSION.
        sigma2 (float): Variance of real and imaginary parts, > 0.
        draws (int): Number of matrices, >= MONTE_CARLO_MIN_DRAWS.
        seed (int | np.random.Generator | None): Seed or generator.

    Returns:
        MonteCarloEstimate: Estimate, standard error and the run settings.

    Raises:
        DimensionTooLarge: If N exceeds MONTE_CARLO_MAX_DIMENSION.
        PreconditionError: On a bad order, draw count or variance.
    """
    if order not in MOMENT_ORDERS:
        raise PreconditionError(
            f"Moment order must be one of {MOMENT_ORDERS}, got {order}"
        )

    if dimension < 1:
        raise PreconditionError(
            f"Moments need dimension N >= 1, got N = {dimension}"
        )

    if dimension > MONTE_CARLO_MAX_DIMENSION:
        raise DimensionTooLarge(
            f"moment_monte_carlo supports N <= {MONTE_CARLO_MAX_DIMENSION}, "
            f"got N = {dimension}"
        )

    if draws < MONTE_CARLO_MIN_DRAWS:
        raise PreconditionError(
            f"moment_monte_carlo needs draws >= {MONTE_CARLO_MIN_DRAWS}, "
            f"got {draws}"
        )

    if not sigma2 > 0:
        raise PreconditionError(f"sigma2 must be positive, got {sigma2}")

    rng = make_generator(seed)
    samples = np.empty(draws)

    for start in range(0, draws, MONTE_CARLO_BLOCK):
        count = min(MONTE_CARLO_BLOCK, draws - start)
        stack = ginibre_stack(count, dimension, sigma2, rng)
        samples[start : start + count] = (
            np.abs(permanent_batch(stack)) ** (2 * order)
        )

    estimate = float(np.mean(samples))
    stderr = float(np.std(samples, ddof=1) / np.sqrt(draws))

    logger.debug(
        f"moment_monte_carlo: n = {order}, N = {dimension}, "
        f"{draws} draws, estimate {estimate:.6g} +- {stderr:.2g}"
    )

    return MonteCarloEstimate(
        order=order,
        dimension=dimension,
        sigma2=sigma2,
        draws=draws,
        estimate=estimate,
        stderr=stderr,
    )
