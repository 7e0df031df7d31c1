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
from collections.abc import Sequence
from fractions import Fraction
from math import ceil, log

import numpy as np
from pydantic import BaseModel, ConfigDict

from bosonkit.errors import InsufficientData, PreconditionError
from bosonkit.moments.config import FIT_MIN_POINTS, FIT_TAIL_FRACTION

logger = logging.getLogger(__name__)


class ScalingFit(BaseModel):
    """log(value) ~ rate * N + exponent * log(N) + intercept."""

    model_config = ConfigDict(frozen=True)

    rate: float
    exponent: float
    intercept: float
    dimensions: tuple[int, ...]


def _log(value: Fraction | int | float) -> float:
    if value <= 0:
        raise PreconditionError(
            f"fit_scaling needs positive values, got {value}"
        )

    if isinstance(value, Fraction):
        return log(value.numerator) - log(value.denominator)

    return log(value)


def fit_scaling(
    points: Sequence[tuple[int, Fraction | int | float]],
) -> ScalingFit:
    """
    Least-squares fit of the growth e^{lambda N} N^nu.

    Fits log(value) against [N, log N, 1] over the largest dimensions:
    the top two thirds of the points, and never fewer than FIT_MIN_POINTS.
    Multiplying every value by a constant only moves the intercept.

    Args:
        points (Sequence[tuple[int, Fraction | int | float]]): (N, value)
            pairs, for example scaled third moments.

    Returns:
        ScalingFit: rate (lambda), exponent (nu) and intercept.

    Raises:
        InsufficientData: With fewer than FIT_MIN_POINTS points.
    """
    if len(points) < FIT_MIN_POINTS:
        raise InsufficientData(
            f"fit_scaling needs at least {FIT_MIN_POINTS} points, got "
            f"{len(points)}"
        )

    ordered = sorted(points, key=lambda point: point[0])
    keep = max(FIT_MIN_POINTS, ceil(FIT_TAIL_FRACTION * len(ordered)))
    tail = ordered[-keep:]

    dimensions = np.array([float(n) for n, _ in tail])
    values = np.array([_log(value) for _, value in tail])
    columns = np.column_stack([dimensions, np.log(dimensions)])

    # Centered and scaled columns keep the normal equations well conditioned.
    centers = columns.mean(axis=0)
    scales = columns.std(axis=0)
    offset = values.mean()

    weights, *_ = np.linalg.lstsq(
        (columns - centers) / scales, values - offset, rcond=None
    )
    rate, exponent = weights / scales
    intercept = offset - rate * centers[0] - exponent * centers[1]

    logger.debug(
        f"fit_scaling: N = {tail[0][0]}..{tail[-1][0]}, "
        f"lambda = {rate:.4f}, nu = {exponent:.4f}"
    )

    return ScalingFit(
        rate=float(rate),
        exponent=float(exponent),
        intercept=float(intercept),
        dimensions=tuple(int(n) for n, _ in tail),
    )
