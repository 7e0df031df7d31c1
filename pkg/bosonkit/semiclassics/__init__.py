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

from bosonkit.semiclassics.asymptotics import (
    generating_f,
    generating_f_derivatives,
    hermite_asymptotic,
    hermite_envelope,
    hermite_relative_error,
    kernel_semiclassical_qn,
    kernel_semiclassical_qn_real,
)
from bosonkit.semiclassics.composition import three_step_amplitude_m1
from bosonkit.semiclassics.shooting import (
    ShootingProblem,
    ShootingSolution,
    saddle_condition_residual,
    solve_shooting,
)

__all__ = [
    "ShootingProblem",
    "ShootingSolution",
    "generating_f",
    "generating_f_derivatives",
    "hermite_asymptotic",
    "hermite_envelope",
    "hermite_relative_error",
    "kernel_semiclassical_qn",
    "kernel_semiclassical_qn_real",
    "saddle_condition_residual",
    "solve_shooting",
    "three_step_amplitude_m1",
]
