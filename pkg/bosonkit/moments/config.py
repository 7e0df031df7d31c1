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

MOMENT_ORDERS: tuple[int, ...] = (1, 2, 3)

MOMENT6_MAX_DIMENSION: int = 30
UNREDUCED_MAX_DIMENSION: dict[int, int] = {1: 12, 2: 12, 3: 6}

MONTE_CARLO_MAX_DIMENSION: int = 10
MONTE_CARLO_MIN_DRAWS: int = 100
MONTE_CARLO_BLOCK: int = 65536

FIT_MIN_POINTS: int = 10
# Share of the table, counted from the largest N, used by the fit.
FIT_TAIL_FRACTION: float = 2 / 3
