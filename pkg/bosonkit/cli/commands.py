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
from collections import Counter

from bosonkit.cli.config import MOMENT_POWERS
from bosonkit.cli.io import RunConfig, load_matrix
from bosonkit.cli.validate import CheckResult, run_validation
from bosonkit.core import write_matrix
from bosonkit.ensembles import EnsembleSpec, sample
from bosonkit.fock import amplitude, output_distribution, sample_outputs
from bosonkit.moments import (
    fit_scaling,
    moment_exact,
    moment_monte_carlo,
    moment_table,
)
from bosonkit.moments.config import FIT_MIN_POINTS
from bosonkit.representations import (
    CoherentLabel,
    QuadraturePoint,
    amplitude_coherent,
    amplitude_quadrature,
    probability_coherent,
    probability_quadrature,
)
from bosonkit.semiclassics import ShootingProblem, solve_shooting

logger = logging.getLogger(__name__)


def _amplitude_fields(value: complex) -> dict:
    return {
        "re": value.real,
        "im": value.imag,
        "modulus": abs(value),
        "probability": abs(value) ** 2,
    }


def cmd_amplitude(config: RunConfig) -> dict:
    u = load_matrix(config)
    n = config.option("input")
    m = config.option("target")
    path = config.option("path")

    result = amplitude(u, n, m, path=path)
    logger.info(f"Amplitude {n} -> {m} via {path}: {result.value}")

    return {
        "status": "success",
        "input": n,
        "output": m,
        **_amplitude_fields(result.value),
        "path": result.path,
    }


def cmd_distribution(config: RunConfig) -> dict:
    u = load_matrix(config)
    n = config.option("input")

    distribution = output_distribution(u, n)
    rows = [
        {"output": str(m), "probability": probability}
        for m, probability in distribution
    ]

    return {
        "status": "success",
        "input": n,
        "total": sum(probability for _, probability in distribution),
        "rows": rows,
    }


def cmd_sample(config: RunConfig) -> dict:
    u = load_matrix(config)
    n = config.option("input")
    count = config.option("count")

    samples = sample_outputs(u, n, count, seed=config.seed)
    frequencies = Counter(str(m) for m in samples)

    return {
        "status": "success",
        "input": n,
        "count": count,
        "seed": config.seed,
        "frequencies": dict(sorted(frequencies.items())),
        "rows": [
            {"draw": index, "output": str(m)}
            for index, m in enumerate(samples)
        ],
    }


def _moment_row(result) -> dict:
    return {
        "dimension": result.dimension,
        "coefficient": result.coefficient,
        "scaled": result.scaled,
        "sigma_power": result.sigma_power,
    }


def cmd_moments(config: RunConfig) -> dict:
    order = MOMENT_POWERS[config.option("order")]
    dimension = config.option("dim")
    draws = config.option("mc")

    if draws is not None:
        sigma2 = config.option("sigma2")
        estimate = moment_monte_carlo(
            order, dimension, sigma2, draws, seed=config.seed
        )
        exact = moment_exact(order, dimension).raw(sigma2)

        return {
            "status": "success",
            "order": 2 * order,
            "dimension": dimension,
            "sigma2": sigma2,
            "draws": draws,
            "estimate": estimate.estimate,
            "stderr": estimate.stderr,
            "exact": exact,
            "deviation": estimate.deviation(exact),
        }

    if config.option("table"):
        if order != 3:
            results = [
                moment_exact(order, size) for size in range(1, dimension + 1)
            ]
        else:
            results = moment_table(dimension)

        payload = {
            "status": "success",
            "order": 2 * order,
            "rows": [_moment_row(result) for result in results],
        }

        if len(results) >= FIT_MIN_POINTS:
            fit = fit_scaling([(r.dimension, r.scaled) for r in results])
            payload["rate"] = fit.rate
            payload["exponent"] = fit.exponent

        return payload

    result = moment_exact(order, dimension)

    return {
        "status": "success",
        "order": 2 * order,
        **_moment_row(result),
    }


def _ensemble(config: RunConfig, kind: str) -> dict:
    spec = EnsembleSpec(
        kind=kind,
        dimension=config.option("dim"),
        sigma2=config.option("sigma2", 0.5),
        disorder=config.option("disorder", 0.0),
        seed=config.seed,
    )
    matrix = sample(spec)

    if config.option("save") is not None:
        write_matrix(matrix, config.option("save"))
        logger.info(f"Saved {kind} matrix to {config.option('save')}")

    return {
        "status": "success",
        "kind": kind,
        "dimension": spec.dimension,
        "seed": config.seed,
        "entries": matrix.entries,
        "rows": [
            {"row": i, "col": j, "value": complex(matrix.entries[i, j])}
            for i in range(matrix.rows)
            for j in range(matrix.cols)
        ],
    }


def cmd_haar(config: RunConfig) -> dict:
    return _ensemble(config, "haar")


def cmd_ginibre(config: RunConfig) -> dict:
    return _ensemble(config, "ginibre")


def cmd_quench(config: RunConfig) -> dict:
    return _ensemble(config, "quench")


def cmd_shooting(config: RunConfig) -> dict:
    u = load_matrix(config)
    problem = ShootingProblem.build(
        u, config.option("input"), config.option("target")
    )

    solution = solve_shooting(
        problem, seed=config.seed, tolerance=config.option("tolerance")
    )

    return {
        "status": "success",
        **solution.payload(),
        "converged": solution.converged,
        "start": solution.start,
        "iterations": solution.iterations,
    }


def cmd_coherent(config: RunConfig) -> dict:
    u = load_matrix(config)
    phi = CoherentLabel(amplitudes=config.option("phi"))
    psi = CoherentLabel(amplitudes=config.option("psi"))

    value = amplitude_coherent(u, phi, psi)

    return {
        "status": "success",
        **_amplitude_fields(value),
        "probability": probability_coherent(u, phi, psi),
    }


def cmd_quadrature(config: RunConfig) -> dict:
    u = load_matrix(config)
    q = QuadraturePoint(values=config.option("q"))
    Q = QuadraturePoint(values=config.option("Q"))

    value = amplitude_quadrature(u, q, Q)

    return {
        "status": "success",
        **_amplitude_fields(value),
        "probability": probability_quadrature(u),
    }


def _log_check(result: CheckResult) -> None:
    logger.info(
        f"validate: {result.name} "
        f"{'passed' if result.passed else 'FAILED'} "
        f"(worst {result.worst:.3e}, bound {result.bound:.0e}, "
        f"{result.cases} cases)"
    )


def cmd_validate(config: RunConfig) -> dict:
    report = run_validation(
        config.option("dim_max"),
        inject_fault=config.option("inject_fault", False),
        progress=_log_check,
    )
    report.raise_for_failures()

    return {
        "status": "success",
        "dim_max": report.dim_max,
        "passed": report.passed,
        "rows": report.rows(),
    }
