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

HERMITE_MIN_ORDER: int = 10
# Fraction of the turning point sqrt(2n + 1) inside which the cosine form
# of H_n is trusted.
HERMITE_TURNING_BAND: float = 0.95

# Kernels are trusted for |q| <= KERNEL_TURNING_BAND * sqrt(n).
KERNEL_TURNING_BAND: float = 1.9

SHOOTING_TOLERANCE: float = 1e-10
SHOOTING_STARTS_PER_MODE: int = 8
SHOOTING_MAX_ITERATIONS: int = 200
SHOOTING_MIN_STEP: float = 1e-10

OSCILLATORY_GRID: int = 4096
OSCILLATORY_BLOCK_ROWS: int = 256
TAPER_FRACTION: float = 0.01

THREE_STEP_MIN_OCCUPATION: int = 20
THREE_STEP_MAX_OCCUPATION: int = 200
THREE_STEP_MIN_ABS_SIN: float = 0.1
