"""Random number plumbing shared by the stochastic components."""

from typing import Optional, Union

import numpy as np

RngLike = Union[np.random.Generator, int, None]


def as_rng(rng: RngLike) -> np.random.Generator:
    """Return a Generator, seeding a fresh one from an int or None."""
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def derive_seed(master: Optional[int], index: int) -> int:
    """Per-instance seed from a master seed and an instance index.

    The same (master, index) always yields the same seed, so parallel
    campaigns reduce to identical results regardless of scheduling.
    """
    entropy = [0 if master is None else int(master), int(index)]
    return int(np.random.SeedSequence(entropy).generate_state(1, dtype=np.uint64)[0])
