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
from math import lgamma, log, pi

import numpy as np

from bosonkit.errors import (
    ClassicallyForbidden,
    OutsideValidityRegion,
    PreconditionError,
)
from bosonkit.representations.kernels import hermite_function
from bosonkit.semiclassics.config import (
    HERMITE_MIN_ORDER,
    HERMITE_TURNING_BAND,
    KERNEL_TURNING_BAND,
)

logger = logging.getLogger(__name__)


def _check_hermite_region(n: int, q) -> np.ndarray:
    q = np.asarray(q, dtype=np.float64)
    limit = HERMITE_TURNING_BAND * np.sqrt(2 * n + 1)

    if n < HERMITE_MIN_ORDER:
        raise OutsideValidityRegion(
            f"hermite_asymptotic needs n >= {HERMITE_MIN_ORDER}, got n = {n}"
        )

    if np.any(np.abs(q) > limit):
        raise OutsideValidityRegion(
            f"hermite_asymptotic needs |q| <= {HERMITE_TURNING_BAND} "
            f"sqrt(2n + 1) = {limit:.6g}, got max |q| = "
            f"{np.max(np.abs(q)):.6g}"
        )

    return q


def _log_envelope(n: int, q: np.ndarray) -> np.ndarray:
    s = q / np.sqrt(2 * n + 1)
    return 0.5 * (
        (n + 1) * log(2.0) + n * log(n) - n + q * q - 0.5 * np.log1p(-s * s)
    )


def _hermite_phase(n: int, q: np.ndarray) -> np.ndarray:
    s = q / np.sqrt(2 * n + 1)
    return (n + 0.5) * (np.arcsin(s) + s * np.sqrt(1.0 - s * s)) - n * pi / 2


def hermite_envelope(n: int, q):
    """
    Amplitude of the oscillatory asymptotic form of H_n(q):
    sqrt(2^(n+1) n^n e^(q^2 - n) / sqrt(1 - s^2)), s = q / sqrt(2n + 1).
    Overflows to inf for n of a few hundred; hermite_relative_error works
    in log space instead.
    """
    q = _check_hermite_region(n, q)

    return np.exp(_log_envelope(n, q))


def hermite_asymptotic(n: int, q):
    """
    Large-n cosine form of the physicists' Hermite polynomial,

        H_n(q) ~ envelope(n, q)
                 * cos[(n + 1/2)(arcsin s + s sqrt(1 - s^2)) - n pi / 2],

    with s = q / sqrt(2n + 1), valid in the classically allowed region
    away from the turning points.

    Args:
        n (int): Order, >= 10.
        q (float | np.ndarray): Argument(s), |q| <= 0.95 sqrt(2n + 1).

    Returns:
        float | np.ndarray: The asymptotic value.

    Raises:
        OutsideValidityRegion: If n < 10 or q is too close to a turning
            point.

    Example:
        >>> hermite_asymptotic(50, 0.0) / hermite_polynomial(50, 0.0)
        1.00166...
    """
    q = _check_hermite_region(n, q)

    return np.exp(_log_envelope(n, q)) * np.cos(_hermite_phase(n, q))


def hermite_relative_error(n: int, q):
    """
    |hermite_asymptotic - H_n| / hermite_envelope at q, evaluated without
    forming either H_n or the envelope, so large n does not overflow.
    """
    q = _check_hermite_region(n, q)
    s = q / np.sqrt(2 * n + 1)

    # H_n(q) / envelope = psi_n(q) pi^(1/4) sqrt(n! / (2 n^n e^-n))
    #                     * (1 - s^2)^(1/4)
    log_scale = 0.25 * log(pi) + 0.5 * (
        lgamma(n + 1) - log(2.0) - n * log(n) + n
    )
    exact = (
        hermite_function(n, q)
        * np.exp(log_scale)
        * (1.0 - s * s) ** 0.25
    )

    return np.abs(np.cos(_hermite_phase(n, q)) - exact)


def _check_allowed(n, q, name: str) -> tuple[float, np.ndarray]:
    n = float(n)
    q = np.asarray(q, dtype=np.float64)

    if not n > 0.0:
        raise PreconditionError(f"{name} needs n > 0, got n = {n}")

    if np.any(np.abs(q) > 2.0 * np.sqrt(n)):
        raise ClassicallyForbidden(
            f"{name} needs |q| <= 2 sqrt(n) = {2.0 * np.sqrt(n):.6g}, got "
            f"max |q| = {np.max(np.abs(q)):.6g}"
        )

    return n, q


def _momentum_root(n, q):
    # Rounding can push 4n - q^2 a few ulps below zero at |q| = 2 sqrt(n).
    return np.sqrt(np.maximum(4.0 * n - q * q, 0.0))


def _turning_angle(n, q):
    return np.arccos(np.clip(q / (2.0 * np.sqrt(n)), -1.0, 1.0))


def _generating_f(n, q):
    return 0.25 * q * _momentum_root(n, q) - n * _turning_angle(n, q)


def generating_f(n: float, q):
    """
    Generating function of the number-to-quadrature transformation,
    f(n, q) = (q/4) sqrt(4n - q^2) - n arccos(q / (2 sqrt n)).

    Raises:
        ClassicallyForbidden: If |q| > 2 sqrt(n).
    """
    n, q = _check_allowed(n, q, "generating_f")

    return _generating_f(n, q)


def generating_f_derivatives(n: float, q):
    """(df/dn, df/dq, d2f/dn dq) = (-arccos(q / 2 sqrt n),
    sqrt(4n - q^2) / 2, 1 / sqrt(4n - q^2))."""
    n, q = _check_allowed(n, q, "generating_f_derivatives")
    root = _momentum_root(n, q)

    with np.errstate(divide="ignore"):
        mixed = 1.0 / root

    return -_turning_angle(n, q), 0.5 * root, mixed


def _check_kernel_band(n: float, q: np.ndarray, name: str) -> None:
    limit = KERNEL_TURNING_BAND * np.sqrt(n)

    if np.any(np.abs(q) > limit):
        raise OutsideValidityRegion(
            f"{name} needs |q| <= {KERNEL_TURNING_BAND} sqrt(n) = "
            f"{limit:.6g}, got max |q| = {np.max(np.abs(q)):.6g}"
        )


def kernel_semiclassical_qn(n: float, q):
    """
    Single-branch semiclassical kernel
    sqrt((1 / 2 pi i) d2f/dn dq) exp(i f(n, q)).

    Its squared modulus 1 / (2 pi sqrt(4n - q^2)) is half the locally
    averaged |<q|n>|^2: the exact kernel is the sum of this branch and its
    momentum mirror image, see kernel_semiclassical_qn_real.

    Raises:
        ClassicallyForbidden: If |q| > 2 sqrt(n).
        OutsideValidityRegion: If |q| > 1.9 sqrt(n).
    """
    n, q = _check_allowed(n, q, "kernel_semiclassical_qn")
    _check_kernel_band(n, q, "kernel_semiclassical_qn")

    mixed = 1.0 / np.sqrt(4.0 * n - q * q)

    return np.sqrt(mixed / (2j * pi)) * np.exp(1j * _generating_f(n, q))


def semiclassical_kernel_real(n: float, q: np.ndarray) -> np.ndarray:
    # Unchecked form for grids that reach into the turning-point band.
    shifted = n + 0.5
    mixed = 1.0 / np.sqrt(4.0 * shifted - q * q)

    return (
        2.0
        * np.sqrt(mixed / (2.0 * pi))
        * np.cos(_generating_f(shifted, q) + pi / 4)
    )


def kernel_semiclassical_qn_real(n: int, q):
    """
    Real semiclassical approximation of <q|n>: the two momentum branches
    of kernel_semiclassical_qn added together, with the occupation shifted
    to n + 1/2 so the phase matches the exact kernel,

        2 sqrt(d2f/dn dq / 2 pi) cos(f(n + 1/2, q) + pi / 4).

    Raises:
        ClassicallyForbidden: If |q| > 2 sqrt(n + 1/2).
        OutsideValidityRegion: If |q| > 1.9 sqrt(n).
    """
    _, q = _check_allowed(n + 0.5, q, "kernel_semiclassical_qn_real")
    _check_kernel_band(float(n), q, "kernel_semiclassical_qn_real")

    return semiclassical_kernel_real(n, q)
