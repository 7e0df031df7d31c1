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

from collections.abc import Callable

from pydantic import BaseModel, ConfigDict

from bosonkit.cli.config import (
    VALIDATE_MONTE_CARLO_DRAWS,
    VALIDATE_PATH_TOLERANCE,
    VALIDATE_PERMANENT_TOLERANCE,
    VALIDATE_QUADRATURE_POINTS,
    VALIDATE_QUADRATURE_TOLERANCE,
    VALIDATE_SEED,
    VALIDATE_SIGMA_BOUND,
    VALIDATE_UNITARITY_TOLERANCE,
)
from bosonkit.core import permanent_glynn, permanent_naive, permanent_ryser
from bosonkit.ensembles import make_generator, sample_ginibre, sample_haar
from bosonkit.errors import SingularImaginaryPart, ValidationFailed
from bosonkit.fock import (
    amplitude_fock,
    amplitude_fock_contour,
    amplitude_fock_oracle,
    beamsplitter,
    compositions_descending,
    output_distribution,
)
from bosonkit.moments import (
    PUBLISHED_SCALED_THIRD_MOMENTS,
    moment_exact,
    moment_monte_carlo,
    moment_table,
)
from bosonkit.representations import (
    amplitude_quadrature,
    probability_quadrature,
)


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    worst: float
    bound: float
    cases: int

    def row(self) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "worst": self.worst,
            "bound": self.bound,
            "cases": self.cases,
        }


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    dim_max: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def rows(self) -> list[dict]:
        return [check.row() for check in self.checks]

    def raise_for_failures(self) -> None:
        failed = [check.name for check in self.checks if not check.passed]

        if failed:
            raise ValidationFailed(
                f"{len(failed)} check(s) failed: {', '.join(failed)}",
                report=self,
            )


class _Suite:
    def __init__(self, dim_max: int, inject_fault: bool):
        self.dim_max = dim_max
        self.rng = make_generator(VALIDATE_SEED)
        # Negative control: a flipped sign on the permanent path.
        self.sign = -1.0 if inject_fault else 1.0

    def permanent(self, matrix) -> complex:
        return self.sign * permanent_ryser(matrix)

    def amplitude(self, u, n, m) -> complex:
        return self.sign * amplitude_fock(u, n, m).value

    def permanents(self) -> tuple[float, int]:
        worst, cases = 0.0, 0

        for size in range(1, min(self.dim_max, 4) + 3):
            matrix = sample_ginibre(size, 0.5, seed=self.rng).entries
            reference = permanent_naive(matrix)
            scale = max(abs(reference), 1e-300)

            for value in (self.permanent(matrix), permanent_glynn(matrix)):
                worst = max(worst, abs(value - reference) / scale)
                cases += 1

        return worst, cases

    def amplitude_paths(self) -> tuple[float, int]:
        worst, cases = 0.0, 0

        for modes in range(2, min(self.dim_max, 3) + 1):
            for particles in range(1, min(self.dim_max, 4) + 1):
                u = sample_haar(modes, seed=self.rng)
                outputs = list(compositions_descending(particles, modes))
                n = outputs[self.rng.integers(len(outputs))]
                m = outputs[self.rng.integers(len(outputs))]

                reference = self.amplitude(u, n, m)
                for path in (amplitude_fock_contour, amplitude_fock_oracle):
                    worst = max(worst, abs(path(u, n, m).value - reference))
                    cases += 1

        return worst, cases

    def unitarity(self) -> tuple[float, int]:
        worst, cases = 0.0, 0

        for modes in range(2, min(self.dim_max, 4) + 1):
            u = sample_haar(modes, seed=self.rng)
            n = (1,) * min(modes, 3) + (0,) * (modes - min(modes, 3))

            total = sum(
                abs(self.amplitude(u, n, m)) ** 2
                for m in compositions_descending(sum(n), modes)
            )
            worst = max(worst, abs(total - 1.0))
            cases += 1

        return worst, cases

    def hong_ou_mandel(self) -> tuple[float, int]:
        distribution = output_distribution(beamsplitter(), "1,1")
        probabilities = [p for _, p in distribution]
        worst = max(
            abs(p - expected)
            for p, expected in zip(probabilities, (0.5, 0.0, 0.5))
        )

        return worst, 1

    def flat_quadrature(self) -> tuple[float, int]:
        worst, cases = 0.0, 0

        for modes in range(2, min(self.dim_max, 3) + 1):
            u = self._well_conditioned(modes)
            expected = probability_quadrature(u)

            for _ in range(VALIDATE_QUADRATURE_POINTS):
                q = self.rng.normal(size=modes)
                Q = self.rng.normal(size=modes)
                value = abs(amplitude_quadrature(u, q, Q)) ** 2
                worst = max(worst, abs(value - expected) / expected)
                cases += 1

        return worst, cases

    def _well_conditioned(self, modes: int):
        while True:
            u = sample_haar(modes, seed=self.rng)
            try:
                probability_quadrature(u)

            except SingularImaginaryPart:
                continue

            return u

    def moment_table(self) -> tuple[float, int]:
        count = min(2 * self.dim_max, len(PUBLISHED_SCALED_THIRD_MOMENTS))
        table = moment_table(count)

        mismatches = sum(
            result.scaled != published
            for result, published in zip(
                table, PUBLISHED_SCALED_THIRD_MOMENTS
            )
        )

        return float(mismatches), count

    def monte_carlo(self) -> tuple[float, int]:
        worst, cases = 0.0, 0
        runs = [(1, 2), (2, 2)] + ([(1, 3)] if self.dim_max >= 3 else [])

        for order, dimension in runs:
            estimate = moment_monte_carlo(
                order,
                dimension,
                0.5,
                VALIDATE_MONTE_CARLO_DRAWS,
                seed=self.rng,
            )
            exact = moment_exact(order, dimension).raw(0.5)
            worst = max(worst, estimate.deviation(exact))
            cases += 1

        return worst, cases


_CHECKS: tuple[tuple[str, float], ...] = (
    ("permanents", VALIDATE_PERMANENT_TOLERANCE),
    ("amplitude_paths", VALIDATE_PATH_TOLERANCE),
    ("unitarity", VALIDATE_UNITARITY_TOLERANCE),
    ("hong_ou_mandel", 1e-12),
    ("flat_quadrature", VALIDATE_QUADRATURE_TOLERANCE),
    ("moment_table", 0.0),
    ("monte_carlo", VALIDATE_SIGMA_BOUND),
)


def run_validation(
    dim_max: int,
    inject_fault: bool = False,
    progress: Callable[[CheckResult], None] | None = None,
) -> ValidationReport:
    """
    Run the cross-path consistency suite.

    Every check draws from one generator seeded with VALIDATE_SEED, so a
    report is reproducible. dim_max caps matrix sizes and the length of the
    moment table (2 * dim_max entries).

    Args:
        dim_max (int): Largest matrix dimension to exercise, >= 2.
        inject_fault (bool): Flip the sign of every permanent-path result,
            which must make the suite fail.
        progress (Callable[[CheckResult], None] | None): Called after each
            check.

    Returns:
        ValidationReport: One CheckResult per check.
    """
    suite = _Suite(max(dim_max, 2), inject_fault)
    checks = []

    for name, bound in _CHECKS:
        worst, cases = getattr(suite, name)()
        result = CheckResult(
            name=name,
            passed=bool(worst <= bound),
            worst=float(worst),
            bound=bound,
            cases=cases,
        )
        checks.append(result)

        if progress is not None:
            progress(result)

    return ValidationReport(dim_max=suite.dim_max, checks=tuple(checks))
