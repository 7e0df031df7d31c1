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

import itertools
from time import perf_counter

import numpy as np
import pytest

from bosonkit.core import (
    permanent,
    permanent_batch,
    permanent_glynn,
    permanent_naive,
    permanent_ryser,
)
from bosonkit.errors import DimensionTooLarge, NonSquare

ALGORITHMS = [permanent_naive, permanent_ryser, permanent_glynn]


def relative_error(value, reference):
    return abs(value - reference) / max(abs(reference), 1e-300)


@pytest.mark.parametrize("algorithm", ALGORITHMS)
def test_one_by_one_is_the_entry(algorithm):
    assert algorithm(np.array([[1.0]])) == 1.0
    assert algorithm(np.array([[2.5 - 1j]])) == 2.5 - 1j


@pytest.mark.parametrize("algorithm", ALGORITHMS)
def test_all_ones_gives_factorial(algorithm):
    assert np.isclose(algorithm(np.ones((3, 3))), 6.0)
    assert np.isclose(algorithm(np.ones((5, 5))), 120.0)


@pytest.mark.parametrize("algorithm", ALGORITHMS)
def test_identity(algorithm):
    assert np.isclose(algorithm(np.eye(4)), 1.0)


@pytest.mark.parametrize("algorithm", ALGORITHMS)
def test_two_by_two_closed_form(algorithm):
    matrix = np.array([[1 + 1j, 2], [0, 3 - 1j]])
    assert np.isclose(algorithm(matrix), 4 + 2j, rtol=1e-12, atol=0)


def test_naive_matches_ryser_on_six_by_six(ginibre):
    matrix = ginibre(6)
    assert relative_error(permanent_naive(matrix), permanent_ryser(matrix)) < (
        1e-10
    )


def test_glynn_matches_ryser_on_eight_by_eight(ginibre):
    matrix = ginibre(8, seed=3)
    assert relative_error(permanent_glynn(matrix), permanent_ryser(matrix)) < (
        1e-10
    )


def test_glynn_matches_ryser_up_to_twelve(ginibre):
    for size in range(9, 13):
        matrix = ginibre(size, seed=size)
        assert relative_error(
            permanent_glynn(matrix), permanent_ryser(matrix)
        ) < 1e-10


def test_cross_algorithm_agreement_on_fifty_matrices(rng):
    for trial in range(50):
        size = 2 + trial % 8
        matrix = rng.normal(size=(size, size)) + 1j * rng.normal(
            size=(size, size)
        )
        reference = permanent_naive(matrix)

        assert relative_error(permanent_ryser(matrix), reference) < 1e-10
        assert relative_error(permanent_glynn(matrix), reference) < 1e-10


@pytest.mark.parametrize("algorithm", ALGORITHMS)
def test_row_scaling_is_multilinear(algorithm, rng):
    for _ in range(20):
        matrix = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
        factor = complex(rng.normal(), rng.normal())
        row = int(rng.integers(5))

        scaled = matrix.copy()
        scaled[row] *= factor

        assert relative_error(
            algorithm(scaled), factor * algorithm(matrix)
        ) < 1e-10


@pytest.mark.parametrize("algorithm", ALGORITHMS)
def test_row_and_column_permutations_leave_value_unchanged(algorithm, rng):
    matrix = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    reference = algorithm(matrix)

    rows = rng.permutation(5)
    cols = rng.permutation(5)

    assert relative_error(algorithm(matrix[rows]), reference) < 1e-10
    assert relative_error(algorithm(matrix[:, cols]), reference) < 1e-10


@pytest.mark.parametrize("algorithm", ALGORITHMS)
def test_conjugation(algorithm, ginibre):
    matrix = ginibre(5, seed=2)
    assert relative_error(
        algorithm(matrix.conj()), np.conj(algorithm(matrix))
    ) < 1e-12


def test_naive_guard():
    with pytest.raises(DimensionTooLarge, match="n <= 11"):
        permanent_naive(np.ones((12, 12)))


@pytest.mark.parametrize("algorithm", [permanent_ryser, permanent_glynn])
def test_gray_code_guard(algorithm):
    with pytest.raises(DimensionTooLarge):
        algorithm(np.ones((31, 31)))


@pytest.mark.parametrize("algorithm", ALGORITHMS)
def test_non_square_rejected(algorithm):
    with pytest.raises(NonSquare):
        algorithm(np.ones((2, 3)))


def test_walk_spanning_several_chunks_matches_reference(ginibre):
    # 2^14 subsets span four chunks of the Gray-code walk.
    matrix = ginibre(14, seed=5)
    assert relative_error(permanent_glynn(matrix), permanent_ryser(matrix)) < (
        1e-9
    )


def test_repeated_calls_are_bitwise_identical(ginibre):
    matrix = ginibre(13, seed=9)
    assert permanent_ryser(matrix) == permanent_ryser(matrix)
    assert permanent_glynn(matrix) == permanent_glynn(matrix)


@pytest.mark.parametrize("method", ["ryser", "glynn", "naive"])
def test_batch_matches_single_calls_exactly(method, rng):
    stack = rng.normal(size=(6, 7, 7)) + 1j * rng.normal(size=(6, 7, 7))
    values = permanent_batch(stack, method)

    for matrix, value in zip(stack, values):
        assert value == permanent(matrix, method)


def test_permanent_of_all_ones_small_sizes():
    for size, expected in zip(itertools.count(1), [1, 2, 6, 24, 120, 720]):
        assert np.isclose(permanent(np.ones((size, size))), expected)


def timed(algorithm, matrix):
    start = perf_counter()
    value = algorithm(matrix)
    return value, perf_counter() - start


@pytest.mark.slow
def test_ryser_twenty_by_twenty_within_five_seconds(ginibre):
    permanent_ryser(ginibre(3))

    _, elapsed = timed(permanent_ryser, ginibre(20, seed=3))
    assert elapsed < 5.0


@pytest.mark.slow
def test_naive_is_slower_than_ryser_at_nine(ginibre):
    matrix = ginibre(9, seed=4)
    permanent_naive(ginibre(3))
    permanent_ryser(ginibre(3))

    naive_value, naive_time = timed(permanent_naive, matrix)
    ryser_value, ryser_time = timed(permanent_ryser, matrix)

    assert relative_error(naive_value, ryser_value) < 1e-10
    assert naive_time > ryser_time
