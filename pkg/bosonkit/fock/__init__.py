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

from bosonkit.fock.amplitudes import (
    ComplexAmplitude,
    ExpandedMatrix,
    amplitude,
    amplitude_fock,
    amplitude_fock_contour,
    amplitude_fock_oracle,
    beamsplitter,
    expand_matrix,
    transition_probability,
)
from bosonkit.fock.occupations import (
    OccupationVector,
    compositions_descending,
    index_map,
)
from bosonkit.fock.sampling import output_distribution, sample_outputs

__all__ = [
    "ComplexAmplitude",
    "ExpandedMatrix",
    "OccupationVector",
    "amplitude",
    "amplitude_fock",
    "amplitude_fock_contour",
    "amplitude_fock_oracle",
    "beamsplitter",
    "compositions_descending",
    "expand_matrix",
    "index_map",
    "output_distribution",
    "sample_outputs",
    "transition_probability",
]
