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

from bosonkit.errors import DimensionTooLarge, SingularImaginaryPart
from bosonkit.fock import amplitude_fock
from bosonkit.representations import (
    amplitude_fock_via_coherent_integral,
    amplitude_fock_via_quadrature_integral,
)


def phase(alpha):
    return [[np.exp(1j * alpha)]]


def test_coherent_integral_vacuum():
    value = amplitude_fock_via_coherent_integral([[1.0]], 0, 0)
    assert abs(value.value - 1.0) < 1e-6
    assert value.path == "integral"


def test_coherent_integral_phase_preserves_number():
    value = amplitude_fock_via_coherent_integral(phase(0.4), 2, 2).value
    assert abs(abs(value) - 1.0) < 1e-6
    assert abs(value - np.exp(0.8j)) < 1e-6


def test_coherent_integral_vanishes_between_numbers():
    value = amplitude_fock_via_coherent_integral(phase(0.4), 2, 1).value
    assert abs(value) < 1e-6


@pytest.mark.parametrize("n", [0, 1, 3, 4])
def test_coherent_integral_matches_permanent(n):
    u = phase(-1.1)
    reference = amplitude_fock(u, [n], [n]).value
    value = amplitude_fock_via_coherent_integral(u, [n], [n]).value
    assert abs(value - reference) < 1e-6


def test_quadrature_integral_quarter_turn():
    u = [[1j]]
    vacuum = amplitude_fock_via_quadrature_integral(u, 0, 0).value
    assert abs(abs(vacuum) - 1.0) < 1e-5
    assert abs(amplitude_fock_via_quadrature_integral(u, 1, 0).value) < 1e-5


def test_quadrature_integral_matches_permanent():
    u = phase(np.pi / 3)
    reference = amplitude_fock(u, [3], [3]).value
    value = amplitude_fock_via_quadrature_integral(u, 3, 3).value
    assert abs(value - reference) < 1e-5


@pytest.mark.parametrize("n", [0, 1, 2, 4])
def test_quadrature_integral_carries_the_number_phase(n):
    u = phase(2.0)
    value = amplitude_fock_via_quadrature_integral(u, n, n).value
    assert abs(value - np.exp(2j * n)) < 1e-5


def test_integral_guards():
    with pytest.raises(DimensionTooLarge):
        amplitude_fock_via_coherent_integral(np.eye(2), 1, 1)

    with pytest.raises(DimensionTooLarge):
        amplitude_fock_via_coherent_integral([[1.0]], 5, 5)

    with pytest.raises(SingularImaginaryPart):
        amplitude_fock_via_quadrature_integral([[1.0]], 1, 1)
