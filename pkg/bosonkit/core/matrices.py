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

import logging
from pathlib import Path

import numpy as np

from bosonkit.core.config import MATRIX_FLOAT_FORMAT, UNITARITY_TOLERANCE
from bosonkit.errors import (
    DimensionMismatch,
    MatrixFormatError,
    NonFiniteEntries,
    NonSquare,
    NotUnitary,
)

logger = logging.getLogger(__name__)


class ComplexMatrix:
    """
    Dense complex matrix with at least one row and one column and finite
    entries. The entries are copied on construction and kept read-only.
    """

    def __init__(self, entries):
        array = np.array(entries, dtype=np.complex128)

        if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
            raise DimensionMismatch(
                f"A matrix needs rows >= 1 and cols >= 1, got shape "
                f"{array.shape}"
            )

        if not np.all(np.isfinite(array)):
            raise NonFiniteEntries("Matrix entries must be finite")

        array.setflags(write=False)
        self._entries = array

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def cols(self) -> int:
        return self._entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._entries.shape

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def real_part(self) -> np.ndarray:
        return self._entries.real.copy()

    def imag_part(self) -> np.ndarray:
        return self._entries.imag.copy()

    def transpose(self):
        return type(self)(self._entries.T)

    def conjugate(self):
        return type(self)(self._entries.conj())

    def dagger(self):
        return type(self)(self._entries.conj().T)

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._entries.copy() if copy else self._entries

        return self._entries.astype(dtype)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(shape={self.shape})"


class UnitaryMatrix(ComplexMatrix):
    """
    Square complex matrix u with ‖u†u − I‖_max within the unitarity
    tolerance, checked at construction. Doubles as the single-particle
    scattering matrix.
    """

    def __init__(self, entries, tolerance: float = UNITARITY_TOLERANCE):
        super().__init__(entries)

        if not self.is_square:
            raise NonSquare(
                f"A unitary matrix must be square, got shape {self.shape}"
            )

        deviation = unitarity_deviation(self._entries)

        if deviation > tolerance:
            raise NotUnitary(
                f"max |u^dagger u - I| = {deviation:.3e} exceeds "
                f"{tolerance:.0e}"
            )

    @property
    def dimension(self) -> int:
        return self.rows


def unitarity_deviation(entries: np.ndarray) -> float:
    entries = np.asarray(entries, dtype=np.complex128)
    identity = np.eye(entries.shape[1])

    return float(np.max(np.abs(entries.conj().T @ entries - identity)))


def as_complex_array(matrix) -> np.ndarray:
    """Return the complex128 entries of a matrix or array-like, uncopied
    where possible."""
    if isinstance(matrix, ComplexMatrix):
        return matrix.entries

    return np.asarray(matrix, dtype=np.complex128)


def as_unitary(matrix) -> UnitaryMatrix:
    if isinstance(matrix, UnitaryMatrix):
        return matrix

    return UnitaryMatrix(as_complex_array(matrix))


def _format_float(value: float) -> str:
    return format(float(value), MATRIX_FLOAT_FORMAT)


def format_matrix(matrix) -> str:
    """
    Render a matrix in the shared text format.

    The first line holds "rows cols"; each following line holds one row of
    whitespace-separated "re,im" pairs with 17 significant digits, so a
    parse of the output reproduces every entry bit for bit.

    Args:
        matrix (ComplexMatrix | np.ndarray): The matrix to render.

    Returns:
        str: The text form, ending in a newline.

    Example:
        >>> format_matrix(ComplexMatrix([[1, 1j]]))
        '1 2\\n1,0 0,1\\n'
    """
    entries = as_complex_array(matrix)
    rows, cols = entries.shape

    lines = [f"{rows} {cols}"]

    for row in entries:
        lines.append(
            " ".join(
                f"{_format_float(value.real)},{_format_float(value.imag)}"
                for value in row
            )
        )

    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> ComplexMatrix:
    """
    Parse the shared text format into a ComplexMatrix.

    Args:
        text (str): "rows cols" followed by rows*cols "re,im" tokens in
            row-major order, separated by any whitespace.

    Returns:
        ComplexMatrix: The parsed matrix.

    Raises:
        MatrixFormatError: On a malformed header, a wrong entry count, an
            unparsable token or a non-finite value.
    """
    tokens = text.split()

    if len(tokens) < 2:
        raise MatrixFormatError("Missing 'rows cols' header")

    try:
        rows, cols = int(tokens[0]), int(tokens[1])

    except ValueError as error:
        raise MatrixFormatError(
            f"Header must be two integers, got {tokens[:2]}"
        ) from error

    if rows < 1 or cols < 1:
        raise MatrixFormatError(
            f"Header must have rows >= 1 and cols >= 1, got {rows} {cols}"
        )

    body = tokens[2:]

    if len(body) != rows * cols:
        raise MatrixFormatError(
            f"Expected {rows * cols} entries for a {rows}x{cols} matrix, "
            f"got {len(body)}"
        )

    entries = np.empty(rows * cols, dtype=np.complex128)

    for index, token in enumerate(body):
        parts = token.split(",")

        if len(parts) != 2:
            raise MatrixFormatError(
                f"Entry {index} must read 're,im', got {token!r}"
            )

        try:
            real, imag = float(parts[0]), float(parts[1])

        except ValueError as error:
            raise MatrixFormatError(
                f"Entry {index} is not numeric: {token!r}"
            ) from error

        if not (np.isfinite(real) and np.isfinite(imag)):
            raise MatrixFormatError(
                f"Entry {index} is not finite: {token!r}"
            )

        entries[index] = complex(real, imag)

    return ComplexMatrix(entries.reshape(rows, cols))


def read_matrix(path: str | Path) -> ComplexMatrix:
    logger.debug(f"Reading matrix from {path}")
    return parse_matrix(Path(path).read_text(encoding="utf-8"))


def write_matrix(matrix, path: str | Path) -> None:
    Path(path).write_text(format_matrix(matrix), encoding="utf-8")
    logger.debug(f"Wrote matrix to {path}")
