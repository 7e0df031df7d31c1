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
import os

from dotenv import load_dotenv

dotenv_path = os.path.join(os.path.dirname(os.path.dirname(__file__)), ".env")
load_dotenv(dotenv_path)

logger = logging.getLogger(__name__)


def _read_threads() -> int | None:
    raw_value = os.getenv("BOSONKIT_THREADS")

    if raw_value is None or raw_value.strip() == "":
        return None

    try:
        threads = int(raw_value)

    except ValueError:
        logger.warning(f"Ignoring non-integer BOSONKIT_THREADS={raw_value!r}")
        return None

    if threads < 1:
        logger.warning(f"Ignoring BOSONKIT_THREADS={threads}, must be >= 1")
        return None

    return threads


BOSONKIT_THREADS: int | None = _read_threads()
BOSONKIT_LOG_LEVEL: str = os.getenv("BOSONKIT_LOG_LEVEL", "WARNING").upper()

DEFAULT_SEED: int = 0


def apply_thread_limit(threads: int | None = None) -> int:
    """
    Cap the number of threads used by the parallel permanent kernels.

    Results do not depend on the thread count: the kernels reduce over
    fixed chunk boundaries in a fixed order.

    Args:
        threads (int | None): Explicit cap. Falls back to BOSONKIT_THREADS,
            and to numba's default when neither is set.

    Returns:
        int: The thread count numba will use.
    """
    import numba

    limit = threads if threads is not None else BOSONKIT_THREADS

    if limit is not None:
        limit = min(limit, numba.config.NUMBA_NUM_THREADS)
        numba.set_num_threads(limit)

    return numba.get_num_threads()
