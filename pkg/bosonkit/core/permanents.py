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

import numba
import numpy as np

from bosonkit.core.config import (
    GLYNN_MAX_DIMENSION,
    GRAY_CODE_CHUNK,
    NAIVE_MAX_DIMENSION,
    RYSER_MAX_DIMENSION,
)
from bosonkit.core.matrices import as_complex_array
from bosonkit.errors import (
    DimensionTooLarge,
    NonFiniteEntries,
    NonSquare,
    PreconditionError,
)

logger = logging.getLogger(__name__)

PERMANENT_METHODS = ("ryser", "glynn", "naive")


@numba.njit(cache=True)
def _naive_kernel(a):
    n = a.shape[0]
    order = np.arange(n)
    counters = np.zeros(n, dtype=np.int64)

    total = 0j
    product = 1.0 + 0j
    for i in range(n):
        product *= a[i, order[i]]
    total += product

    # Heap's algorithm, iterative form.
    i = 1
    while i < n:
        if counters[i] < i:
            if i % 2 == 0:
                swap = 0
            else:
                swap = counters[i]
            order[swap], order[i] = order[i], order[swap]

            product = 1.0 + 0j
            for row in range(n):
                product *= a[row, order[row]]
            total += product

            counters[i] += 1
            i = 1
        else:
            counters[i] = 0
            i += 1

    return total


@numba.njit(cache=True)
def _trailing_zeros(k):
    bit = 0
    while ((k >> bit) & 1) == 0:
        bit += 1
    return bit


@numba.njit(cache=True)
def _ryser_chunk(a, start, stop):
    n = a.shape[0]
    rowsums = np.zeros(n, dtype=np.complex128)

    # Rebuild the row sums of the subset gray(start) from scratch.
    gray = start ^ (start >> 1)
    size = 0
    for col in range(n):
        if (gray >> col) & 1:
            size += 1
            for row in range(n):
                rowsums[row] += a[row, col]

    total = 0j
    for k in range(start, stop):
        if k > start:
            col = _trailing_zeros(k)
            if (gray >> col) & 1:
                for row in range(n):
                    rowsums[row] -= a[row, col]
                size -= 1
            else:
                for row in range(n):
                    rowsums[row] += a[row, col]
                size += 1
            gray ^= 1 << col

        if size > 0:
            product = 1.0 + 0j
            for row in range(n):
                product *= rowsums[row]

            if size % 2 == 1:
                total -= product
            else:
                total += product

    return total


@numba.njit(cache=True)
def _glynn_chunk(a, start, stop):
    n = a.shape[0]
    colsums = np.empty(n, dtype=np.complex128)

    # Bit b of the Gray code set means delta of row b + 1 is -1; row 0 is
    # pinned to +1.
    gray = start ^ (start >> 1)
    negatives = 0
    for col in range(n):
        colsums[col] = a[0, col]
    for bit in range(n - 1):
        row = bit + 1
        if (gray >> bit) & 1:
            negatives += 1
            for col in range(n):
                colsums[col] -= a[row, col]
        else:
            for col in range(n):
                colsums[col] += a[row, col]

    total = 0j
    for k in range(start, stop):
        if k > start:
            bit = _trailing_zeros(k)
            row = bit + 1
            if (gray >> bit) & 1:
                for col in range(n):
                    colsums[col] += 2.0 * a[row, col]
                negatives -= 1
            else:
                for col in range(n):
                    colsums[col] -= 2.0 * a[row, col]
                negatives += 1
            gray ^= 1 << bit

        product = 1.0 + 0j
        for col in range(n):
            product *= colsums[col]

        if negatives % 2 == 1:
            total -= product
        else:
            total += product

    return total


@numba.njit(cache=True)
def _ryser_serial(a, chunk):
    n = a.shape[0]
    steps = 1 << n
    total = 0j
    for start in range(0, steps, chunk):
        total += _ryser_chunk(a, start, min(start + chunk, steps))

    if n % 2 == 1:
        return -total
    return total


@numba.njit(parallel=True, cache=True)
def _ryser_parallel(a, chunk):
    n = a.shape[0]
    steps = 1 << n
    chunks = (steps + chunk - 1) // chunk
    partials = np.zeros(chunks, dtype=np.complex128)

    for index in numba.prange(chunks):
        start = index * chunk
        partials[index] = _ryser_chunk(a, start, min(start + chunk, steps))

    total = 0j
    for index in range(chunks):
        total += partials[index]

    if n % 2 == 1:
        return -total
    return total


@numba.njit(cache=True)
def _glynn_serial(a, chunk):
    n = a.shape[0]
    steps = 1 << (n - 1)
    total = 0j
    for start in range(0, steps, chunk):
        total += _glynn_chunk(a, start, min(start + chunk, steps))

    return total / steps


@numba.njit(parallel=True, cache=True)
def _glynn_parallel(a, chunk):
    n = a.shape[0]
    steps = 1 << (n - 1)
    chunks = (steps + chunk - 1) // chunk
    partials = np.zeros(chunks, dtype=np.complex128)

    for index in numba.prange(chunks):
        start = index * chunk
        partials[index] = _glynn_chunk(a, start, min(start + chunk, steps))

    total = 0j
    for index in range(chunks):
        total += partials[index]

    return total / steps


@numba.njit(parallel=True, cache=True)
def _batch_kernel(stack, method, chunk):
    count = stack.shape[0]
    values = np.empty(count, dtype=np.complex128)

    for index in numba.prange(count):
        if method == 0:
            values[index] = _ryser_serial(stack[index], chunk)
        elif method == 1:
            values[index] = _glynn_serial(stack[index], chunk)
        else:
            values[index] = _naive_kernel(stack[index])

    return values


_LIMITS = {
    "ryser": RYSER_MAX_DIMENSION,
    "glynn": GLYNN_MAX_DIMENSION,
    "naive": NAIVE_MAX_DIMENSION,
}


def _checked_square(matrix, method: str) -> np.ndarray:
    entries = np.ascontiguousarray(as_complex_array(matrix))

    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise NonSquare(
            f"permanent_{method} needs a square matrix, got shape "
            f"{entries.shape}"
        )

    size = entries.shape[0]
    limit = _LIMITS[method]

    if size < 1:
        raise NonSquare(f"permanent_{method} needs n >= 1, got n = {size}")

    if size > limit:
        raise DimensionTooLarge(
            f"permanent_{method} supports n <= {limit}, got n = {size}"
        )

    if not np.all(np.isfinite(entries)):
        raise NonFiniteEntries(f"permanent_{method} needs finite entries")

    return entries


def permanent_naive(matrix) -> complex:
    """
    Permanent by direct expansion over all n! permutations.

    Args:
        matrix (ComplexMatrix | np.ndarray): Square n x n, n <= 11.

    Returns:
        complex: sum over permutations pi of prod_i A[i, pi(i)].

    Raises:
        NonSquare: If the matrix is not square.
        DimensionTooLarge: If n > 11.
    """
    entries = _checked_square(matrix, "naive")
    return complex(_naive_kernel(entries))


def permanent_ryser(matrix) -> complex:
    """
    Permanent by Ryser inclusion-exclusion, O(2^n n).

    Column subsets are visited in Gray-code order so each step updates the
    row sums by a single column. The walk is split at fixed chunk
    boundaries and the chunk partial sums are added in chunk order, which
    makes the result bit-reproducible at any numba thread count.

    Args:
        matrix (ComplexMatrix | np.ndarray): Square n x n, n <= 30.

    Returns:
        complex: The permanent.

    Raises:
        NonSquare: If the matrix is not square.
        DimensionTooLarge: If n > 30.
    """
    entries = _checked_square(matrix, "ryser")
    return complex(_ryser_parallel(entries, GRAY_CODE_CHUNK))


def permanent_glynn(matrix) -> complex:
    """
    Permanent by the Glynn formula over sign vectors with the first sign
    fixed to +1, visited in Gray-code order with the same chunked
    reduction as permanent_ryser.

    Args:
        matrix (ComplexMatrix | np.ndarray): Square n x n, n <= 30.

    Returns:
        complex: The permanent.
    """
    entries = _checked_square(matrix, "glynn")
    return complex(_glynn_parallel(entries, GRAY_CODE_CHUNK))


_DISPATCH = {
    "ryser": permanent_ryser,
    "glynn": permanent_glynn,
    "naive": permanent_naive,
}


def permanent(matrix, method: str = "ryser") -> complex:
    if method not in _DISPATCH:
        raise PreconditionError(
            f"Unknown permanent method {method!r}, expected one of "
            f"{PERMANENT_METHODS}"
        )

    return _DISPATCH[method](matrix)


def permanent_batch(stack, method: str = "ryser") -> np.ndarray:
    """
    Permanents of a stack of equal-size square matrices.

    Each matrix runs through the serial form of the chosen kernel, with the
    same chunk boundaries as the single-matrix call, so every value equals
    ``permanent(stack[k], method)`` exactly. Parallelism is over the stack.

    Args:
        stack (np.ndarray): Array of shape (count, n, n).
        method (str): "ryser", "glynn" or "naive".

    Returns:
        np.ndarray: complex128 array of shape (count,).
    """
    if method not in _DISPATCH:
        raise PreconditionError(
            f"Unknown permanent method {method!r}, expected one of "
            f"{PERMANENT_METHODS}"
        )

    stack = np.ascontiguousarray(np.asarray(stack, dtype=np.complex128))

    if stack.ndim != 3:
        raise NonSquare(
            f"permanent_batch needs a (count, n, n) stack, got shape "
            f"{stack.shape}"
        )

    if stack.shape[0] == 0:
        return np.empty(0, dtype=np.complex128)

    _checked_square(stack[0], method)

    if not np.all(np.isfinite(stack)):
        raise NonFiniteEntries("permanent_batch needs finite entries")

    logger.debug(
        f"permanent_batch: {stack.shape[0]} matrices of size "
        f"{stack.shape[1]} via {method}"
    )

    code = PERMANENT_METHODS.index(method)
    return _batch_kernel(stack, code, GRAY_CODE_CHUNK)
