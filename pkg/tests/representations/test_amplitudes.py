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

from math import pi, sqrt

import numpy as np
import pytest

from bosonkit.errors import DimensionMismatch, SingularImaginaryPart
from bosonkit.representations import (
    amplitude_coherent,
    amplitude_quadrature,
    kernel_coherent_number,
    probability_coherent,
    probability_quadrature,
)


def test_coherent_vacuum_overlap(haar):
    u = haar(3)
    assert np.isclose(amplitude_coherent(u, [0, 0, 0], [0, 0, 0]), 1.0)


def test_coherent_identity_with_equal_labels():
    phi = [0.3 + 1j, -2.0]
    assert np.isclose(amplitude_coherent(np.eye(2), phi, phi), 1.0)


def test_coherent_single_mode_matches_number_kernel():
    value = amplitude_coherent([[1.0]], [1.0], [0.0])
    assert np.isclose(value, kernel_coherent_number(0, 1.0))
    assert np.isclose(value, np.exp(-0.5))


def test_coherent_probability_peak_and_unit_distance(haar):
    u = haar(2, seed=4)
    phi = np.array([0.5, -1.0j])
    peak = u.entries @ phi

    assert np.isclose(probability_coherent(u, phi, peak), 1.0)
    assert np.isclose(
        probability_coherent(u, phi, peak + [1.0, 0.0]), np.exp(-1.0)
    )


def test_coherent_probability_is_squared_modulus(haar, rng):
    for trial in range(20):
        u = haar(3, seed=trial)
        phi = rng.normal(size=3) + 1j * rng.normal(size=3)
        psi = rng.normal(size=3) + 1j * rng.normal(size=3)

        amplitude = amplitude_coherent(u, phi, psi)
        probability = probability_coherent(u, phi, psi)

        assert abs(abs(amplitude) ** 2 - probability) < 1e-12


def test_coherent_label_length_checked(bs):
    with pytest.raises(DimensionMismatch):
        amplitude_coherent(bs, [1.0], [1.0, 0.0])


def test_quadrature_modulus_for_eighth_turn():
    u = [[np.exp(1j * pi / 4)]]
    expected = 1 / (2 * sqrt(2) * pi)

    assert np.isclose(probability_quadrature(u), expected)
    for q, Q in [(0.0, 0.0), (1.3, -0.4), (-5.0, 2.2)]:
        value = amplitude_quadrature(u, [q], [Q])
        assert np.isclose(abs(value) ** 2, expected)


def test_quadrature_probability_for_quarter_turn():
    assert np.isclose(probability_quadrature([[1j]]), 1 / (4 * pi))


def test_real_unitary_is_rejected(bs):
    with pytest.raises(SingularImaginaryPart):
        amplitude_quadrature(bs, [0.0, 0.0], [0.0, 0.0])

    with pytest.raises(SingularImaginaryPart):
        probability_quadrature([[1.0]])


def test_quadrature_probability_is_flat(haar, rng):
    u = haar(3, seed=2)
    values = np.array(
        [
            abs(
                amplitude_quadrature(u, rng.normal(size=3), rng.normal(size=3))
            )
            ** 2
            for _ in range(100)
        ]
    )

    assert values.std() / values.mean() < 1e-10
    assert np.allclose(values, probability_quadrature(u), rtol=1e-10)


def test_quadrature_amplitude_solves_eigenvalue_equation(haar, rng):
    u = haar(2, seed=5)
    real, imag = u.real_part(), u.imag_part()
    step = 1e-5

    for _ in range(20):
        q = rng.normal(size=2)
        Q = rng.normal(size=2)

        gradient = np.empty(2, dtype=complex)
        for k in range(2):
            shift = np.zeros(2)
            shift[k] = step
            gradient[k] = (
                amplitude_quadrature(u, q + shift, Q)
                - amplitude_quadrature(u, q - shift, Q)
            ) / (2 * step)

        value = amplitude_quadrature(u, q, Q)
        residual = 1j * imag @ gradient - 0.5 * (real @ q - Q) * value

        assert np.max(np.abs(residual)) < 1e-6
