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

from bosonkit.moments.exact import (
    PUBLISHED_SCALED_THIRD_MOMENTS,
    MomentResult,
    compositions_colex,
    moment2_exact,
    moment4_exact,
    moment6_exact,
    moment_exact,
    moment_exact_unreduced,
    moment_table,
)
from bosonkit.moments.monte_carlo import (
    MonteCarloEstimate,
    moment_monte_carlo,
)
from bosonkit.moments.scaling import ScalingFit, fit_scaling

__all__ = [
    "PUBLISHED_SCALED_THIRD_MOMENTS",
    "MomentResult",
    "MonteCarloEstimate",
    "ScalingFit",
    "compositions_colex",
    "fit_scaling",
    "moment2_exact",
    "moment4_exact",
    "moment6_exact",
    "moment_exact",
    "moment_exact_unreduced",
    "moment_monte_carlo",
    "moment_table",
]
