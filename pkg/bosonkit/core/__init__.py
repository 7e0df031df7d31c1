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

from bosonkit.core.matrices import (
    ComplexMatrix,
    UnitaryMatrix,
    format_matrix,
    parse_matrix,
    read_matrix,
    write_matrix,
)
from bosonkit.core.permanents import (
    permanent,
    permanent_batch,
    permanent_glynn,
    permanent_naive,
    permanent_ryser,
)

__all__ = [
    "ComplexMatrix",
    "UnitaryMatrix",
    "format_matrix",
    "parse_matrix",
    "permanent",
    "permanent_batch",
    "permanent_glynn",
    "permanent_naive",
    "permanent_ryser",
    "read_matrix",
    "write_matrix",
]
