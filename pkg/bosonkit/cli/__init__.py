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

from bosonkit.cli.io import RunConfig
from bosonkit.cli.main import build_parser, main
from bosonkit.cli.validate import ValidationReport, run_validation

__all__ = [
    "RunConfig",
    "ValidationReport",
    "build_parser",
    "main",
    "run_validation",
]
