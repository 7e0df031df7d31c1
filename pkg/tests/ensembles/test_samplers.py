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

import numpy as np
import pytest
from pydantic import ValidationError

from bosonkit.ensembles import (
    EnsembleSpec,
    ginibre_stack,
    quench_unitary,
    sample,
    sample_ginibre,
    sample_haar,
)


def max_unitarity_error(u):
    entries = np.asarray(u)
    return np.max(np.abs(entries.conj().T @ entries - np.eye(len(entries))))


def test_haar_single_mode_is_a_phase():
    u = sample_haar(1, seed=4)
    assert abs(abs(u.entries[0, 0]) - 1.0) < 1e-14


@pytest.mark.parametrize("dimension", [1, 2, 3, 5, 8])
def test_haar_is_unitary(dimension):
    for seed in range(5):
        assert max_unitarity_error(sample_haar(dimension, seed)) < 1e-12


def test_haar_is_deterministic():
    first = sample_haar(4, seed=99)
    second = sample_haar(4, seed=99)
    assert np.array_equal(first.entries, second.entries)


@pytest.mark.parametrize("dimension", [2, 3, 4])
def test_haar_second_moment(dimension):
    rng = np.random.default_rng(1234)
    draws = 20000
    values = np.empty(draws)
    for index in range(draws):
        values[index] = abs(sample_haar(dimension, rng).entries[0, 1]) ** 2

    standard_error = values.std() / np.sqrt(draws)
    assert abs(values.mean() - 1.0 / dimension) < 3 * standard_error


def test_haar_invariant_under_fixed_unitary():
    rng = np.random.default_rng(5)
    fixed = sample_haar(2, seed=17).entries
    draws = 20000

    values = np.empty(draws)
    for index in range(draws):
        rotated = fixed @ sample_haar(2, rng).entries
        values[index] = abs(rotated[0, 0]) ** 2

    standard_error = values.std() / np.sqrt(draws)
    assert abs(values.mean() - 0.5) < 3 * standard_error


def test_ginibre_mean_and_variance():
    sigma2 = 0.7
    stack = ginibre_stack(25000, 4, sigma2, seed=8)
    real = stack.real.ravel()

    standard_error = np.sqrt(sigma2 / real.size)
    assert abs(real.mean()) < 3 * standard_error

    # Var of the sample variance of a Gaussian is 2 sigma^4 / n.
    variance_error = np.sqrt(2 * sigma2**2 / real.size)
    assert abs(real.var() - sigma2) < 3 * variance_error
    assert abs(stack.imag.var() - sigma2) < 3 * variance_error


def test_ginibre_is_deterministic():
    first = sample_ginibre(3, 0.5, seed=2)
    second = sample_ginibre(3, 0.5, seed=2)
    assert np.array_equal(first.entries, second.entries)


def test_ginibre_rejects_nonpositive_variance():
    with pytest.raises(ValueError):
        sample_ginibre(3, 0.0, seed=1)


def test_quench_without_disorder_is_the_fourier_matrix():
    u = quench_unitary(2, 0.0, seed=0)
    expected = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    assert np.allclose(u.entries, expected, atol=1e-15)


def test_quench_entries_have_equal_moduli():
    u = quench_unitary(4, 1.0, seed=3)
    assert np.allclose(np.abs(u.entries), 0.5, atol=1e-15)


@pytest.mark.parametrize("disorder", [0.0, 0.3, 1.0, 2.5])
def test_quench_columns_are_orthonormal(disorder):
    assert max_unitarity_error(quench_unitary(6, disorder, seed=1)) < 1e-12


def test_spec_dispatch_matches_direct_calls():
    spec = EnsembleSpec(kind="haar", dimension=3, seed=42)
    assert np.array_equal(sample(spec).entries, sample_haar(3, 42).entries)

    spec = EnsembleSpec(kind="ginibre", dimension=2, sigma2=2.0, seed=1)
    assert np.array_equal(
        sample(spec).entries, sample_ginibre(2, 2.0, 1).entries
    )

    spec = EnsembleSpec(kind="quench", dimension=3, disorder=0.5, seed=6)
    assert np.array_equal(
        sample(spec).entries, quench_unitary(3, 0.5, 6).entries
    )


def test_spec_validation():
    with pytest.raises(ValidationError):
        EnsembleSpec(kind="ginibre", dimension=2, sigma2=-1.0)

    with pytest.raises(ValidationError):
        EnsembleSpec(kind="haar", dimension=0)

    with pytest.raises(ValidationError):
        EnsembleSpec(kind="circular", dimension=2)
