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

from fractions import Fraction
from math import comb, factorial

import pytest
from pydantic import ValidationError

from bosonkit.errors import DimensionTooLarge, PreconditionError
from bosonkit.moments import (
    PUBLISHED_SCALED_THIRD_MOMENTS,
    MomentResult,
    compositions_colex,
    moment2_exact,
    moment4_exact,
    moment6_exact,
    moment_exact,
    moment_exact_unreduced,
    moment_table,
)


def test_compositions_colex_order_and_count():
    assert list(compositions_colex(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(compositions_colex(2, 3))[:3] == [
        (2, 0, 0),
        (1, 1, 0),
        (0, 2, 0),
    ]

    compositions = list(compositions_colex(5, 6))
    assert len(compositions) == comb(10, 5)
    assert len(set(compositions)) == len(compositions)
    assert all(sum(c) == 5 for c in compositions)


@pytest.mark.parametrize("dimension, expected", [(1, 1), (2, 2), (5, 120)])
def test_second_moment(dimension, expected):
    result = moment2_exact(dimension)

    assert result.coefficient == expected
    assert result.sigma_power == dimension
    assert result.scaled == 1


@pytest.mark.parametrize("dimension, expected", [(1, 2), (2, 12)])
def test_fourth_moment(dimension, expected):
    assert moment4_exact(dimension).coefficient == expected


def test_closed_forms_up_to_twelve():
    for dimension in range(1, 13):
        f = factorial(dimension)

        assert moment2_exact(dimension).coefficient == f
        assert moment4_exact(dimension).coefficient == f * factorial(
            dimension + 1
        )


def test_fourth_moment_direct_sum():
    # One (N!)^2 per split N_1 + N_2 = N.
    for dimension in range(1, 9):
        direct = sum(
            factorial(dimension) ** 2
            for _ in compositions_colex(dimension, 2)
        )

        assert moment4_exact(dimension).coefficient == direct


@pytest.mark.parametrize(
    "dimension, expected",
    [(1, Fraction(6)), (2, Fraction(18)), (3, Fraction(122, 3))],
)
def test_third_moment_small(dimension, expected):
    result = moment6_exact(dimension)

    assert result.scaled == expected
    assert result.sigma_power == 3 * dimension
    assert result.coefficient == expected * factorial(dimension) ** 3


def test_third_moment_first_published_values():
    for dimension in range(1, 9):
        assert (
            moment6_exact(dimension).scaled
            == PUBLISHED_SCALED_THIRD_MOMENTS[dimension - 1]
        )


@pytest.mark.slow
def test_third_moment_full_published_table():
    table = moment_table(len(PUBLISHED_SCALED_THIRD_MOMENTS))

    assert tuple(r.scaled for r in table) == PUBLISHED_SCALED_THIRD_MOMENTS


def test_third_moment_reduced_matches_unreduced():
    for dimension in range(1, 7):
        assert (
            moment6_exact(dimension).coefficient
            == moment_exact_unreduced(3, dimension).coefficient
        )


def test_unreduced_reproduces_closed_forms():
    for dimension in range(1, 9):
        assert moment_exact_unreduced(1, dimension) == moment2_exact(
            dimension
        )
        assert moment_exact_unreduced(2, dimension) == moment4_exact(
            dimension
        )


def test_third_moment_increasing():
    scaled = [r.scaled for r in moment_table(12)]

    assert all(value > 0 for value in scaled)
    assert all(a < b for a, b in zip(scaled, scaled[1:]))


def test_parallel_split_gives_same_sum():
    assert moment6_exact(7, workers=2) == moment6_exact(7)


def test_dispatch():
    assert moment_exact(1, 4) == moment2_exact(4)
    assert moment_exact(2, 4) == moment4_exact(4)
    assert moment_exact(3, 4) == moment6_exact(4)

    with pytest.raises(PreconditionError):
        moment_exact(4, 2)


def test_guards():
    with pytest.raises(DimensionTooLarge):
        moment6_exact(31)

    with pytest.raises(DimensionTooLarge):
        moment_exact_unreduced(3, 7)

    with pytest.raises(PreconditionError):
        moment2_exact(0)


def test_raw_value_carries_sigma_power():
    result = moment4_exact(2)

    assert result.raw(0.5) == 12.0
    assert result.raw(1.0) == 12.0 * 2.0**4


def test_inconsistent_result_rejected():
    with pytest.raises(ValidationError):
        MomentResult(
            order=1,
            dimension=3,
            coefficient=Fraction(6),
            sigma_power=3,
            scaled=Fraction(2),
        )
