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

import pytest

from bosonkit.errors import DimensionTooLarge, PreconditionError
from bosonkit.moments import moment_exact, moment_monte_carlo


def test_second_moment_quick():
    estimate = moment_monte_carlo(1, 2, 0.5, 20_000, seed=1)

    assert estimate.draws == 20_000
    assert estimate.stderr > 0
    assert estimate.deviation(2.0) < 3


def test_same_seed_same_estimate():
    first = moment_monte_carlo(2, 2, 0.5, 500, seed=4)
    second = moment_monte_carlo(2, 2, 0.5, 500, seed=4)

    assert first == second


def test_variance_enters_as_power():
    # sigma^2 = 1 doubles every entry variance: <|Perm|^2> = 2^N N!.
    estimate = moment_monte_carlo(1, 2, 1.0, 20_000, seed=2)
    exact = moment_exact(1, 2).raw(1.0)

    assert exact == 8.0
    assert estimate.deviation(exact) < 3


@pytest.mark.slow
@pytest.mark.parametrize(
    "order, dimension, draws",
    [(1, 3, 100_000), (2, 2, 100_000), (3, 2, 1_000_000)],
)
def test_concordance_with_exact(order, dimension, draws):
    estimate = moment_monte_carlo(order, dimension, 0.5, draws, seed=2026)

    assert estimate.deviation_from_exact() < 3


def test_guards():
    with pytest.raises(DimensionTooLarge):
        moment_monte_carlo(1, 11, 0.5, 100)

    with pytest.raises(PreconditionError):
        moment_monte_carlo(1, 2, 0.5, 99)

    with pytest.raises(PreconditionError):
        moment_monte_carlo(4, 2, 0.5, 100)

    with pytest.raises(PreconditionError):
        moment_monte_carlo(1, 2, 0.0, 100)
