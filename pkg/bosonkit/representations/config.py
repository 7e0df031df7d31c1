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

# u^i with a larger condition number counts as singular.
CONDITION_NUMBER_LIMIT: float = 1e8

GAUSS_HERMITE_ORDER: int = 40
COHERENT_INTEGRAL_MAX_ORDER: int = 80
QUADRATURE_INTEGRAL_MAX_ORDER: int = 160
INTEGRAL_TOLERANCE: float = 1e-10

INTEGRAL_MAX_OCCUPATION: int = 4

# Rows of the psi grid processed per block in the coherent integral.
COHERENT_BLOCK_ROWS: int = 512
