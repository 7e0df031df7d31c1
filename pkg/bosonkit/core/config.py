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

NAIVE_MAX_DIMENSION: int = 11
RYSER_MAX_DIMENSION: int = 30
GLYNN_MAX_DIMENSION: int = 30

# Fixed chunk length of the Gray-code walk; partial sums are reduced in
# chunk order, so results are identical at any thread count.
GRAY_CODE_CHUNK: int = 4096

UNITARITY_TOLERANCE: float = 1e-10

MATRIX_FLOAT_FORMAT: str = ".17g"
