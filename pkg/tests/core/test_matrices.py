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

from bosonkit.core import (
    ComplexMatrix,
    UnitaryMatrix,
    format_matrix,
    parse_matrix,
    read_matrix,
    write_matrix,
)
from bosonkit.errors import (
    DimensionMismatch,
    MatrixFormatError,
    NonFiniteEntries,
    NonSquare,
    NotUnitary,
)


def test_complex_matrix_rejects_non_finite_entries():
    with pytest.raises(NonFiniteEntries):
        ComplexMatrix([[1.0, np.nan]])


def test_complex_matrix_needs_two_dimensions():
    with pytest.raises(DimensionMismatch):
        ComplexMatrix([1.0, 2.0])


def test_entries_are_read_only():
    matrix = ComplexMatrix([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        matrix.entries[0, 0] = 5


def test_real_and_imaginary_parts_recombine():
    matrix = ComplexMatrix([[1 + 2j, -3j], [0.5, 4 - 1j]])
    assert np.array_equal(
        matrix.real_part() + 1j * matrix.imag_part(), matrix.entries
    )


def test_unitary_checks_at_construction():
    with pytest.raises(NotUnitary):
        UnitaryMatrix([[1.0, 1.0], [0.0, 1.0]])

    with pytest.raises(NonSquare):
        UnitaryMatrix([[1.0, 0.0]])


def test_unitary_dagger_and_transpose(haar):
    u = haar(3)
    assert isinstance(u.dagger(), UnitaryMatrix)
    assert np.allclose(u.dagger().entries @ u.entries, np.eye(3))
    assert np.array_equal(u.transpose().entries, u.entries.T)


def test_format_parse_preserves_entries_bitwise(haar):
    u = haar(3, seed=21)
    parsed = parse_matrix(format_matrix(u))

    assert np.array_equal(parsed.entries, u.entries)


def test_format_header_and_layout():
    text = format_matrix(ComplexMatrix([[1, 1j]]))
    assert text == "1 2\n1,0 0,1\n"


def test_parse_accepts_any_whitespace():
    matrix = parse_matrix("2 2  1,0 0,0\n\n0,0   1,0")
    assert np.array_equal(matrix.entries, np.eye(2))


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2",
        "a b 1,0",
        "1 2 1,0",
        "1 1 1;0",
        "1 1 x,0",
        "1 1 nan,0",
        "1 1 1,inf",
        "0 1",
    ],
)
def test_parse_rejects_malformed_text(text):
    with pytest.raises(MatrixFormatError):
        parse_matrix(text)


def test_read_write(tmp_path, haar):
    u = haar(4, seed=1)
    path = tmp_path / "u.txt"

    write_matrix(u, path)

    assert np.array_equal(read_matrix(path).entries, u.entries)
