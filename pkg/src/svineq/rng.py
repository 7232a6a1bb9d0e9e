"""Counter-based random streams keyed by (seed, purpose, index).

Every random draw in svineq comes from `stream(seed, *key)`. Philox is
counter-based, so a stream depends only on its key and never on which
thread or in which order it is consumed; a trial run serially and the same
trial run in a worker pool see identical numbers.
"""

from enum import IntEnum

import numpy as np

from svineq.errors import ConfigError

MAX_SEED = 2**64 - 1


class Purpose(IntEnum):
    """First spawn-key component, separating streams by use."""

    TRIALS = 0
    REFINE = 1
    RESTARTS = 2


def check_seed(seed: int) -> int:
    if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed <= MAX_SEED:
        raise ConfigError(f"seed must be an integer in 0..2**64-1, got {seed!r}")
    return seed


def stream(seed: int, purpose: Purpose, *index: int) -> np.random.Generator:
    """Independent generator for `(seed, purpose, *index)`."""
    sequence = np.random.SeedSequence(check_seed(seed), spawn_key=(int(purpose), *index))
    return np.random.Generator(np.random.Philox(sequence))
