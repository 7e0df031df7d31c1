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

from bosonkit.core.matrices import as_unitary
from bosonkit.ensembles.samplers import SeedLike, make_generator
from bosonkit.errors import DimensionTooLarge, PreconditionError
from bosonkit.fock.amplitudes import OccupationLike, amplitude_fock
from bosonkit.fock.config import (
    DISTRIBUTION_MAX_MODES,
    DISTRIBUTION_MAX_PARTICLES,
)
from bosonkit.fock.occupations import (
    OccupationVector,
    as_occupation,
    check_modes,
    compositions_descending,
)

logger = logging.getLogger(__name__)


def output_distribution(
    u, n: OccupationLike
) -> list[tuple[OccupationVector, float]]:
    """
    Exact boson-sampling output distribution for input occupations n.

    Every output m with sum(m) = N is listed in lexicographically
    descending order with probability |amplitude_fock(u, n, m)|^2.

    Args:
        u (UnitaryMatrix | array-like): M x M unitary, M <= 8.
        n (OccupationVector | Sequence[int] | str): Input, N <= 6.

    Returns:
        list[tuple[OccupationVector, float]]: (m, probability) pairs.

    Raises:
        DimensionTooLarge: If M > 8 or N > 6.

    Example:
        >>> [round(p, 12) for _, p in output_distribution(bs, (1, 1))]
        [0.5, 0.0, 0.5]
    """
    u = as_unitary(u)
    n = as_occupation(n)
    check_modes(n, u.dimension)

    if u.dimension > DISTRIBUTION_MAX_MODES or n.total > (
        DISTRIBUTION_MAX_PARTICLES
    ):
        raise DimensionTooLarge(
            f"output_distribution supports M <= {DISTRIBUTION_MAX_MODES} "
            f"and N <= {DISTRIBUTION_MAX_PARTICLES}, got M = "
            f"{u.dimension}, N = {n.total}"
        )

    distribution = []

    for occupations in compositions_descending(n.total, u.dimension):
        m = OccupationVector(occupations=occupations)
        distribution.append((m, amplitude_fock(u, n, m).probability))

    logger.debug(
        f"output_distribution: {len(distribution)} outcomes, total "
        f"probability {sum(p for _, p in distribution):.15f}"
    )

    return distribution


def sample_outputs(
    u, n: OccupationLike, count: int, seed: SeedLike = None
) -> list[OccupationVector]:
    """
    Draw output occupations by inverse-CDF sampling of the exact
    distribution.

    Uniform draws from the seeded generator are located in the cumulative
    distribution with a right-sided search, so outcomes of probability
    zero are never returned.

    Args:
        u (UnitaryMatrix | array-like): M x M unitary, M <= 8.
        n (OccupationVector | Sequence[int] | str): Input, N <= 6.
        count (int): Number of samples.
        seed (int | np.random.Generator | None): Seed or generator.

    Returns:
        list[OccupationVector]: The samples in draw order.
    """
    if count < 0:
        raise PreconditionError(
            f"sample_outputs needs count >= 0, got {count}"
        )

    distribution = output_distribution(u, n)
    outcomes = [m for m, _ in distribution]
    probabilities = np.array([p for _, p in distribution])

    cdf = np.cumsum(probabilities)
    cdf /= cdf[-1]

    rng = make_generator(seed)
    draws = rng.random(count)

    indices = np.searchsorted(cdf, draws, side="right")
    indices = np.minimum(indices, len(outcomes) - 1)

    return [outcomes[index] for index in indices]
