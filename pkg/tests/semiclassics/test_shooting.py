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

from bosonkit.ensembles import sample_haar
from bosonkit.errors import NoSolutionFound, ParticleNumberMismatch
from bosonkit.semiclassics import (
    ShootingProblem,
    saddle_condition_residual,
    solve_shooting,
)


def feasible_two_mode(n, seed):
    # |y_1|^2 spans [(a sqrt n1 - b sqrt n2)^2, (a sqrt n1 + b sqrt n2)^2]
    # with a = |u_11|, b = |u_12|; pick an integer strictly inside.
    u = sample_haar(2, seed=seed)
    a, b = np.abs(u.entries[0])
    low = (a * np.sqrt(n[0]) - b * np.sqrt(n[1])) ** 2
    high = (a * np.sqrt(n[0]) + b * np.sqrt(n[1])) ** 2

    for m1 in range(sum(n) + 1):
        if low + 0.05 < m1 < high - 0.05:
            return u, (m1, sum(n) - m1)

    return None



def unit_frame(v, rng):
    # Unitary whose first column is v / |v|.
    dim = len(v)
    fill = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    fill[:, 0] = v
    q, r = np.linalg.qr(fill)
    q[:, 0] *= r[0, 0] / abs(r[0, 0])
    return q


def feasible_coupled(seed):
    # A unitary sending sqrt(n) e^{i theta} to sqrt(m) e^{i phi}, coupled
    # through a Haar block on the complement of those vectors.
    rng = np.random.default_rng(seed)
    dim = 2 + seed % 2
    total = int(rng.integers(dim, 7))

    def composition():
        cuts = np.sort(rng.choice(np.arange(1, total), dim - 1, replace=False))
        return tuple(int(k) for k in np.diff([0, *cuts, total]))

    n, m = composition(), composition()
    x = np.sqrt(n) * np.exp(1j * rng.uniform(0, 2 * np.pi, dim))
    y = np.sqrt(m) * np.exp(1j * rng.uniform(0, 2 * np.pi, dim))

    mixer = np.eye(dim, dtype=complex)
    mixer[1:, 1:] = sample_haar(dim - 1, seed=seed).entries
    u = unit_frame(y, rng) @ mixer @ unit_frame(x, rng).conj().T

    return u, n, m


def test_identity_keeps_zero_phases():
    problem = ShootingProblem.build(np.eye(3), (1, 2, 0), (1, 2, 0))
    solution = solve_shooting(problem, seed=0)

    assert solution.converged
    assert solution.residual < 1e-15
    assert solution.theta == (0.0, 0.0, 0.0)
    assert solution.start == 0


def test_beamsplitter_bunching(bs):
    problem = ShootingProblem.build(bs, (1, 1), (2, 0))
    solution = solve_shooting(problem, seed=3)

    assert solution.residual < 1e-10
    assert abs(np.angle(np.exp(1j * solution.theta[1]))) < 1e-4
    assert saddle_condition_residual(bs, (1, 1), (2, 0), solution.chi) < 1e-8


def test_impossible_boundary_data_reports_best_attempt():
    problem = ShootingProblem.build(np.eye(2), (2, 0), (0, 2))

    with pytest.raises(NoSolutionFound) as caught:
        solve_shooting(problem, seed=0)

    assert caught.value.best is not None
    assert not caught.value.best.converged
    assert caught.value.best.residual == pytest.approx(2.0)


def test_two_mode_interior_targets_converge():
    solved = 0
    for seed in range(10):
        found = feasible_two_mode((3, 2), seed)
        if found is None:
            continue

        u, m = found
        solution = solve_shooting(ShootingProblem.build(u, (3, 2), m), seed=1)

        assert solution.residual <= 1e-10
        assert solution.theta[0] == 0.0
        assert saddle_condition_residual(u, (3, 2), m, solution.chi) < 1e-8
        solved += 1

    assert solved >= 5


def test_three_mode_block_problem_converges():
    for seed in range(10):
        found = feasible_two_mode((3, 2), seed)
        if found is not None:
            break

    v, (m1, m2) = found
    block = np.zeros((3, 3), dtype=complex)
    block[:2, :2] = v.entries
    block[2, 2] = np.exp(0.7j)

    order = [2, 0, 1]
    u = block[np.ix_(order, order)]
    n = tuple((3, 2, 1)[k] for k in order)
    m = tuple((m1, m2, 1)[k] for k in order)

    solution = solve_shooting(ShootingProblem.build(u, n, m), seed=5)

    assert solution.residual <= 1e-10
    assert saddle_condition_residual(u, n, m, solution.chi) < 1e-8


@pytest.mark.parametrize("seed", range(20))
def test_feasible_coupled_problems_converge(seed):
    u, n, m = feasible_coupled(seed)
    solution = solve_shooting(ShootingProblem.build(u, n, m), seed=seed)

    assert solution.converged
    assert solution.residual < 1e-10
    assert saddle_condition_residual(u, n, m, solution.chi) < 1e-8


def test_solution_is_deterministic_for_a_seed():
    found = feasible_two_mode((3, 2), 0) or feasible_two_mode((3, 2), 1)
    u, m = found
    problem = ShootingProblem.build(u, (3, 2), m)

    assert solve_shooting(problem, seed=9) == solve_shooting(problem, seed=9)


def test_empty_output_modes_have_zero_chi():
    problem = ShootingProblem.build(np.eye(3), (2, 0, 1), (2, 0, 1))
    solution = solve_shooting(problem, seed=0)
    assert solution.chi[1] == 0.0


def test_particle_number_mismatch(bs):
    with pytest.raises(ParticleNumberMismatch):
        solve_shooting(ShootingProblem.build(bs, (1, 1), (1, 0)))
