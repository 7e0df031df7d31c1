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

from collections.abc import Iterator, Sequence
from math import comb, factorial, prod

from pydantic import BaseModel, ConfigDict, NonNegativeInt

from bosonkit.errors import DimensionMismatch, MatrixFormatError


class OccupationVector(BaseModel):
    """Nonnegative particle counts per mode."""

    model_config = ConfigDict(frozen=True)

    occupations: tuple[NonNegativeInt, ...]

    @property
    def modes(self) -> int:
        return len(self.occupations)

    @property
    def total(self) -> int:
        return sum(self.occupations)

    def factorial_product(self) -> int:
        return prod(factorial(count) for count in self.occupations)

    def __len__(self) -> int:
        return len(self.occupations)

    def __getitem__(self, index):
        return self.occupations[index]

    def __str__(self) -> str:
        return ",".join(str(count) for count in self.occupations)

    @classmethod
    def parse(cls, text: str) -> "OccupationVector":
        """Parse a comma-separated list such as "1,2,0"."""
        try:
            values = tuple(int(part) for part in text.split(","))

        except ValueError as error:
            raise MatrixFormatError(
                f"Occupations must be comma-separated integers, got {text!r}"
            ) from error

        return cls(occupations=values)


def as_occupation(value) -> OccupationVector:
    if isinstance(value, OccupationVector):
        return value

    if isinstance(value, str):
        return OccupationVector.parse(value)

    return OccupationVector(occupations=tuple(int(v) for v in value))


def check_modes(occupation: OccupationVector, dimension: int) -> None:
    if occupation.modes != dimension:
        raise DimensionMismatch(
            f"Occupation vector has {occupation.modes} modes, matrix has "
            f"dimension {dimension}"
        )


def index_map(occupation: OccupationVector | Sequence[int]) -> list[int]:
    """
    Nondecreasing list of mode indices in which mode i appears n_i times.

    Mode indices are zero-based, so (0, 3, 1) maps to [1, 1, 1, 2].

    Args:
        occupation (OccupationVector | Sequence[int]): Occupations n.

    Returns:
        list[int]: The N entries d_1(n) <= ... <= d_N(n).
    """
    occupation = as_occupation(occupation)

    return [
        mode
        for mode, count in enumerate(occupation.occupations)
        for _ in range(count)
    ]


def compositions_descending(
    total: int, parts: int
) -> Iterator[tuple[int, ...]]:
    """Every tuple of `parts` nonnegative integers summing to `total`, in
    lexicographically descending order: (N, 0, ..), (N - 1, 1, ..), ..."""
    if parts == 0:
        if total == 0:
            yield ()
        return

    if parts == 1:
        yield (total,)
        return

    for first in range(total, -1, -1):
        for rest in compositions_descending(total - first, parts - 1):
            yield (first, *rest)


def multinomial(total: int, parts: Sequence[int]) -> int:
    result = 1
    remaining = total

    for part in parts:
        result *= comb(remaining, part)
        remaining -= part

    return result
