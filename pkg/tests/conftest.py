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

import numpy as np
import pytest

from bosonkit.ensembles import sample_ginibre, sample_haar
from bosonkit.fock import beamsplitter


@pytest.fixture
def bs():
    return beamsplitter()


@pytest.fixture
def rng():
    return np.random.default_rng(20260101)


@pytest.fixture
def haar():
    def draw(dimension, seed=7):
        return sample_haar(dimension, seed=seed)

    return draw


@pytest.fixture
def ginibre():
    def draw(dimension, seed=11, sigma2=0.5):
        return sample_ginibre(dimension, sigma2, seed=seed).entries

    return draw
