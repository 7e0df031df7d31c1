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

from bosonkit.core.matrices import UnitaryMatrix, as_unitary
from bosonkit.ensembles.samplers import SeedLike, make_generator
from bosonkit.errors import NoSolutionFound, ParticleNumberMismatch
from bosonkit.fock.occupations import (
    OccupationVector,
    as_occupation,
    check_modes,
)
from bosonkit.semiclassics.config import (
    SHOOTING_MAX_ITERATIONS,
    SHOOTING_MIN_STEP,
    SHOOTING_STARTS_PER_MODE,
    SHOOTING_TOLERANCE,
)

logger = logging.getLogger(__name__)


class ShootingProblem(BaseModel):
    """Find phases with y = u x, |x_i|^2 = n_i and |y_l|^2 = m_l."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    u: UnitaryMatrix
    input_occupation: OccupationVector
    output_occupation: OccupationVector

    @classmethod
    def build(cls, u, n, m) -> "ShootingProblem":
        return cls(
            u=as_unitary(u),
            input_occupation=as_occupation(n),
            output_occupation=as_occupation(m),
        )


class ShootingSolution(BaseModel):
    model_config = ConfigDict(frozen=True)

    theta: tuple[float, ...]
    chi: tuple[float, ...]
    residual: float
    converged: bool
    start: int
    iterations: int

    def payload(self) -> dict:
        return {
            "theta": list(self.theta),
            "chi": list(self.chi),
            "residual": self.residual,
        }


def _check_problem(problem: ShootingProblem) -> None:
    n = problem.input_occupation
    m = problem.output_occupation

    check_modes(n, problem.u.dimension)
    check_modes(m, problem.u.dimension)

    if n.total != m.total:
        raise ParticleNumberMismatch(
            f"Input carries {n.total} particles, output carries {m.total}"
        )

    if n.total < 1:
        raise ParticleNumberMismatch("Shooting needs N >= 1, got N = 0")


class ShootingSolver:
    def __init__(self, problem: ShootingProblem, tolerance: float):
        _check_problem(problem)

        self.problem = problem
        self.tolerance = tolerance

        self._u = problem.u.entries
        self._amplitudes = np.sqrt(
            np.array(problem.input_occupation.occupations, dtype=np.float64)
        )
        self._targets = np.array(
            problem.output_occupation.occupations, dtype=np.float64
        )

        # The global phase is pinned on the first occupied mode; phases of
        # empty modes do not enter y.
        occupied = np.flatnonzero(self._amplitudes > 0.0)
        self._free = occupied[1:]

    @property
    def free_count(self) -> int:
        return self._free.size

    def _full_theta(self, free_theta: np.ndarray) -> np.ndarray:
        theta = np.zeros(self._amplitudes.size)
        theta[self._free] = free_theta
        return theta

    def _outputs(self, theta: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        x = self._amplitudes * np.exp(-1j * theta)
        return x, self._u @ x

    def residuals(self, free_theta: np.ndarray) -> np.ndarray:
        _, y = self._outputs(self._full_theta(free_theta))
        return np.abs(y) ** 2 - self._targets

    def _jacobian(self, free_theta: np.ndarray) -> np.ndarray:
        x, y = self._outputs(self._full_theta(free_theta))

        # d|y_l|^2 / d theta_i = 2 Im(conj(y_l) u_li x_i)
        full = 2.0 * np.imag(np.conj(y)[:, None] * self._u * x[None, :])
        return full[:, self._free]

    def run(self, start: np.ndarray) -> tuple[np.ndarray, float, int]:
        free_theta = start.copy()
        residual = self.residuals(free_theta)
        norm = np.linalg.norm(residual)

        for iteration in range(SHOOTING_MAX_ITERATIONS):
            if np.max(np.abs(residual)) <= self.tolerance or not start.size:
                return free_theta, float(np.max(np.abs(residual))), iteration

            jacobian = self._jacobian(free_theta)
            step, *_ = np.linalg.lstsq(jacobian, -residual, rcond=None)

            # Backtracking: halve the step until the residual norm drops.
            scale = 1.0
            while scale >= SHOOTING_MIN_STEP:
                candidate = free_theta + scale * step
                candidate_residual = self.residuals(candidate)
                candidate_norm = np.linalg.norm(candidate_residual)

                if candidate_norm < norm:
                    break

                scale *= 0.5

            else:
                return free_theta, float(np.max(np.abs(residual))), iteration

            free_theta = candidate
            residual = candidate_residual
            norm = candidate_norm

        return (
            free_theta,
            float(np.max(np.abs(residual))),
            SHOOTING_MAX_ITERATIONS,
        )

    def solution(
        self, free_theta: np.ndarray, residual: float, start: int, steps: int
    ) -> ShootingSolution:
        theta = np.angle(np.exp(1j * self._full_theta(free_theta)))
        _, y = self._outputs(theta)

        chi = np.where(self._targets > 0.0, np.angle(y), 0.0)

        return ShootingSolution(
            theta=tuple(float(value) for value in theta),
            chi=tuple(float(value) for value in chi),
            residual=residual,
            converged=residual <= self.tolerance,
            start=start,
            iterations=steps,
        )


def solve_shooting(
    problem: ShootingProblem,
    seed: SeedLike = None,
    tolerance: float = SHOOTING_TOLERANCE,
) -> ShootingSolution:
    """
    Solve the shooting problem y = u x with |x_i|^2 = n_i, |y_l|^2 = m_l.

    The unknowns are the input phases theta in x_i = sqrt(n_i) e^(-i
    theta_i). Start 0 is theta = 0; the other 8 M - 1 starts are uniform
    phases from the seeded generator. Each start runs damped Gauss-Newton
    with backtracking on the residuals |y_l|^2 - m_l. The start with the
    smallest max-residual wins, ties going to the lowest start index.

    Args:
        problem (ShootingProblem): u, n and m.
        seed (int | np.random.Generator | None): Seed for the random starts.
        tolerance (float): Max residual accepted as converged.

    Returns:
        ShootingSolution: theta, chi = arg(y) (0 on empty output modes),
        the residual and the winning start.

    Raises:
        NoSolutionFound: If no start reaches the tolerance. The best
            non-converged solution is attached as ``best``.

    Example:
        >>> problem = ShootingProblem.build(beamsplitter(), (1, 1), (2, 0))
        >>> solve_shooting(problem, seed=0).residual < 1e-10
        True
    """
    solver = ShootingSolver(problem, tolerance)
    rng = make_generator(seed)
    count = SHOOTING_STARTS_PER_MODE * problem.u.dimension

    starts = [np.zeros(solver.free_count)]
    starts += [
        rng.uniform(-np.pi, np.pi, size=solver.free_count)
        for _ in range(count - 1)
    ]

    best = None

    for index, start in enumerate(starts):
        free_theta, residual, steps = solver.run(start)
        logger.debug(
            f"Shooting start {index}: residual {residual:.3e} after "
            f"{steps} iterations"
        )

        if best is None or residual < best[1]:
            best = (free_theta, residual, index, steps)

    solution = solver.solution(*best)

    if not solution.converged:
        logger.warning(
            f"Shooting did not converge, best residual {solution.residual:.3e}"
        )
        raise NoSolutionFound(
            f"No start reached residual <= {tolerance:.0e}; best is "
            f"{solution.residual:.3e}",
            best=solution,
        )

    return solution


def saddle_condition_residual(u, n, m, chi) -> float:
    """
    Max over modes of | |sum_l conj(u_li) sqrt(m_l) e^(i chi_l)|^2 - n_i |.

    For unitary u this is |x_i|^2 - n_i with x = u^dagger y, the saddle
    condition a converged shooting solution must satisfy.
    """
    u = as_unitary(u)
    n = as_occupation(n)
    m = as_occupation(m)

    y = np.sqrt(np.array(m.occupations, dtype=np.float64)) * np.exp(
        1j * np.asarray(chi, dtype=np.float64)
    )
    x = u.entries.conj().T @ y

    return float(
        np.max(np.abs(np.abs(x) ** 2 - np.array(n.occupations, dtype=float)))
    )
