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

OUTPUT_FORMATS: tuple[str, ...] = ("json", "csv")
CSV_FLOAT_FORMAT: str = ".17g"

EXIT_OK: int = 0
EXIT_VALIDATION_FAILED: int = 1
EXIT_USAGE: int = 2
EXIT_PRECONDITION: int = 3

LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

MOMENT_POWERS: dict[int, int] = {2: 1, 4: 2, 6: 3}

VALIDATE_DIM_MAX: int = 4
VALIDATE_SEED: int = 20260101
VALIDATE_MONTE_CARLO_DRAWS: int = 20_000
VALIDATE_QUADRATURE_POINTS: int = 20
VALIDATE_PATH_TOLERANCE: float = 1e-8
VALIDATE_PERMANENT_TOLERANCE: float = 1e-10
VALIDATE_UNITARITY_TOLERANCE: float = 1e-9
VALIDATE_QUADRATURE_TOLERANCE: float = 1e-10
VALIDATE_SIGMA_BOUND: float = 3.0
