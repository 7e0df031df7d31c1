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
from collections import defaultdict
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, repeat
from math import factorial, prod
from typing import Literal

from pydantic import (
    BaseModel,
    ConfigDict,
    NonNegativeInt,
    PositiveInt,
    model_validator,
)

from bosonkit.errors import DimensionTooLarge, PreconditionError
from bosonkit.moments.config import (
    MOMENT6_MAX_DIMENSION,
    MOMENT_ORDERS,
    UNREDUCED_MAX_DIMENSION,
)

logger = logging.getLogger(__name__)

# Scaled third moments <|Perm A|^6> / (2 sigma^2)^{3N} / (N!)^3, N = 1..23.
PUBLISHED_SCALED_THIRD_MOMENTS: tuple[Fraction, ...] = tuple(
    Fraction(value)
    for value in (
        "6",
        "18",
        "122/3",
        "79",
        "140",
        "10508/45",
        "13068/35",
        "579",
        "276442/315",
        "228754/175",
        "3697434/1925",
        "48374363/17325",
        "12084328/3003",
        "55026632/9555",
        "5536562488/675675",
        "290360139/25025",
        "3748239326/229075",
        "73954590386/3216213",
        "156246017726/4849845",
        "33081258263/734825",
        "95883756128092/1527701175",
        "767871070556/8793675",
        "750199663660/6186609",
    )
)


class MomentResult(BaseModel):
    """
    Exact Ginibre average of |Perm A|^{2n} for an N x N matrix A.

    The average equals ``coefficient * (2 sigma^2) ** sigma_power``, so the
    dependence on the entry variance sigma^2 is carried by ``sigma_power``
    alone. ``scaled`` is the coefficient divided by (N!)^n.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    order: Literal[1, 2, 3]
    dimension: PositiveInt
    coefficient: Fraction
    sigma_power: NonNegativeInt
    scaled: Fraction

    @model_validator(mode="after")
    def _check_scaling(self):
        if self.sigma_power != self.order * self.dimension:
            raise ValueError(
                f"sigma_power must be order * dimension = "
                f"{self.order * self.dimension}, got {self.sigma_power}"
            )

        if (
            self.scaled * factorial(self.dimension) ** self.order
            != self.coefficient
        ):
            raise ValueError("scaled * (N!)^order must equal coefficient")

        return self

    @classmethod
    def from_coefficient(
        cls, order: int, dimension: int, coefficient: int | Fraction
    ) -> "MomentResult":
        coefficient = Fraction(coefficient)

        return cls(
            order=order,
            dimension=dimension,
            coefficient=coefficient,
            sigma_power=order * dimension,
            scaled=coefficient / factorial(dimension) ** order,
        )

    def raw(self, sigma2: float) -> float:
        """The average itself for entry variance sigma2, as a float."""
        return float(self.coefficient) * (2.0 * sigma2) ** self.sigma_power


@lru_cache(maxsize=64)
def _factorials(limit: int) -> tuple[int, ...]:
    table = [1]
    for k in range(1, limit + 1):
        table.append(table[-1] * k)

    return tuple(table)


def _check_dimension(dimension: int) -> None:
    if dimension < 1:
        raise PreconditionError(
            f"Moments need dimension N >= 1, got N = {dimension}"
        )


def compositions_colex(
    total: int, parts: int
) -> Iterator[tuple[int, ...]]:
    """
    Every tuple of `parts` nonnegative integers summing to `total`, in
    colexicographic order (the last entry varies slowest).

    Example:
        >>> list(compositions_colex(2, 2))
        [(2, 0), (1, 1), (0, 2)]
    """
    if parts == 0:
        if total == 0:
            yield ()
        return

    if parts == 1:
        yield (total,)
        return

    for last in range(total + 1):
        for rest in compositions_colex(total - last, parts - 1):
            yield (*rest, last)


def moment2_exact(dimension: int) -> MomentResult:
    """<|Perm A|^2> = (2 sigma^2)^N N!."""
    _check_dimension(dimension)

    return MomentResult.from_coefficient(1, dimension, factorial(dimension))


def moment4_exact(dimension: int) -> MomentResult:
    """<|Perm A|^4> = (2 sigma^2)^{2N} N! (N + 1)!."""
    _check_dimension(dimension)

    return MomentResult.from_coefficient(
        2, dimension, factorial(dimension) * factorial(dimension + 1)
    )


def _third_moment_chunk(
    compositions: list[tuple[int, ...]], dimension: int
) -> int:
    f = _factorials(3 * dimension)
    total = 0

    for composition in compositions:
        n1, n2, n3, n4, n5, n6 = composition
        pairs = (
            n1 + n3,
            n2 + n5,
            n4 + n6,
            n2 + n6,
            n1 + n4,
            n3 + n5,
            n4 + n5,
            n3 + n6,
            n1 + n2,
        )
        weight = (
            f[dimension] // prod(f[k] for k in composition)
        ) * prod(f[p] for p in pairs)

        # Bounds keep every M_a >= 0; outside them the term vanishes.
        low = max(0, n1 - n5, n1 - n6)
        high = min(n1 + n2, n1 + n3, n1 + n4)

        inner = 0
        for m1 in range(low, high + 1):
            inner += f[dimension] // (
                f[m1]
                * f[n1 + n2 - m1]
                * f[n1 + n3 - m1]
                * f[n1 + n4 - m1]
                * f[n5 - n1 + m1]
                * f[n6 - n1 + m1]
            )

        total += weight * inner

    return total


def moment6_exact(dimension: int, workers: int = 1) -> MomentResult:
    """
    Exact <|Perm A|^6> over the complex Ginibre ensemble.

    Sums over the multiplicities N_1..N_6 of the six permutations of three
    copies in the x-table and over the free y-table multiplicity M_1. The
    other y multiplicities follow from the pair-counter constraints:

        M_2 = N_1 + N_2 - M_1,  M_3 = N_1 + N_3 - M_1,
        M_4 = N_1 + N_4 - M_1,  M_5 = N_5 - N_1 + M_1,
        M_6 = N_6 - N_1 + M_1,

    and a term with any negative M_a contributes nothing. All arithmetic is
    on Python integers.

    Args:
        dimension (int): Matrix size N, 1 <= N <= 30.
        workers (int): Processes to spread the outer compositions over.
            The integer sum does not depend on how they are split.

    Returns:
        MomentResult: Order 3 result with exact coefficient and scaled
        value.

    Raises:
        DimensionTooLarge: If N exceeds MOMENT6_MAX_DIMENSION.

    Example:
        >>> moment6_exact(3).scaled
        Fraction(122, 3)
    """
    _check_dimension(dimension)

    if dimension > MOMENT6_MAX_DIMENSION:
        raise DimensionTooLarge(
            f"moment6_exact supports N <= {MOMENT6_MAX_DIMENSION}, "
            f"got N = {dimension}"
        )

    compositions = list(compositions_colex(dimension, 6))
    logger.debug(
        f"moment6_exact: N = {dimension}, {len(compositions)} compositions, "
        f"{workers} worker(s)"
    )

    if workers <= 1:
        total = _third_moment_chunk(compositions, dimension)

    else:
        size = -(-len(compositions) // (4 * workers))
        chunks = [
            compositions[start : start + size]
            for start in range(0, len(compositions), size)
        ]

        with ProcessPoolExecutor(max_workers=workers) as executor:
            total = sum(
                executor.map(_third_moment_chunk, chunks, repeat(dimension))
            )

    return MomentResult.from_coefficient(3, dimension, total)


def moment_exact_unreduced(order: int, dimension: int) -> MomentResult:
    """
    Exact <|Perm A|^{2n}> from the unreduced table count, n = 1, 2 or 3.

    The x- and y-tables each distribute the n! permutations of the n copies
    over N rows. A pair of tables contributes
    multinomial(N; N_P) * multinomial(N; M_P) * prod_pairs p!, provided
    both tables use every pair (k, P(k)) equally often. Grouping x-tables
    by their pair counters turns the double sum into a sum of squares.

    Args:
        order (int): n in {1, 2, 3}.
        dimension (int): Matrix size N.

    Returns:
        MomentResult: The same quantity moment_exact returns.

    Raises:
        DimensionTooLarge: Past UNREDUCED_MAX_DIMENSION for the order.
    """
    _check_order(order)
    _check_dimension(dimension)

    limit = UNREDUCED_MAX_DIMENSION[order]
    if dimension > limit:
        raise DimensionTooLarge(
            f"moment_exact_unreduced supports N <= {limit} at order "
            f"{order}, got N = {dimension}"
        )

    f = _factorials(dimension)
    incidence = [
        [k * order + image for k, image in enumerate(permutation)]
        for permutation in permutations(range(order))
    ]

    grouped = defaultdict(int)
    for composition in compositions_colex(dimension, len(incidence)):
        counters = [0] * order**2
        for count, pairs in zip(composition, incidence):
            for pair in pairs:
                counters[pair] += count

        grouped[tuple(counters)] += f[dimension] // prod(
            f[k] for k in composition
        )

    total = sum(
        weight**2 * prod(f[p] for p in counters)
        for counters, weight in grouped.items()
    )

    return MomentResult.from_coefficient(order, dimension, total)


def _check_order(order: int) -> None:
    if order not in MOMENT_ORDERS:
        raise PreconditionError(
            f"Moment order must be one of {MOMENT_ORDERS}, got {order}"
        )


def moment_exact(order: int, dimension: int) -> MomentResult:
    """Dispatch to moment2_exact, moment4_exact or moment6_exact by n."""
    _check_order(order)

    match order:
        case 1:
            return moment2_exact(dimension)
        case 2:
            return moment4_exact(dimension)
        case _:
            return moment6_exact(dimension)


def moment_table(max_dimension: int, workers: int = 1) -> list[MomentResult]:
    """Third moments for N = 1..max_dimension."""
    return [
        moment6_exact(dimension, workers=workers)
        for dimension in range(1, max_dimension + 1)
    ]
