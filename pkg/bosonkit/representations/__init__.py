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

from bosonkit.representations.amplitudes import (
    amplitude_coherent,
    amplitude_quadrature,
    probability_coherent,
    probability_quadrature,
)
from bosonkit.representations.integrals import (
    amplitude_fock_via_coherent_integral,
    amplitude_fock_via_quadrature_integral,
)
from bosonkit.representations.kernels import (
    CoherentLabel,
    QuadraturePoint,
    hermite_function,
    hermite_polynomial,
    kernel_coherent_number,
    kernel_coherent_quadrature,
    kernel_number_pquadrature,
    kernel_number_quadrature,
    kernel_qp,
)

__all__ = [
    "CoherentLabel",
    "QuadraturePoint",
    "amplitude_coherent",
    "amplitude_fock_via_coherent_integral",
    "amplitude_fock_via_quadrature_integral",
    "amplitude_quadrature",
    "hermite_function",
    "hermite_polynomial",
    "kernel_coherent_number",
    "kernel_coherent_quadrature",
    "kernel_number_pquadrature",
    "kernel_number_quadrature",
    "kernel_qp",
    "probability_coherent",
    "probability_quadrature",
]
