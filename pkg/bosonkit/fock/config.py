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

AMPLITUDE_MAX_PARTICLES: int = 12

# Contour path cost grows as (N + 1)^(2M) grid points.
CONTOUR_MAX_MODES: int = 3
CONTOUR_MAX_PARTICLES: int = 6

ORACLE_MAX_MODES: int = 4
ORACLE_MAX_PARTICLES: int = 5

DISTRIBUTION_MAX_PARTICLES: int = 6
DISTRIBUTION_MAX_MODES: int = 8

AMPLITUDE_MODULUS_SLACK: float = 1e-9

AMPLITUDE_PATHS: tuple[str, ...] = ("permanent", "contour", "oracle")
