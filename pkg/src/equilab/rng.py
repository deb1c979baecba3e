"""Deterministic random streams.

All Monte Carlo paths draw from a counter-based Philox generator keyed
through ``numpy.random.SeedSequence`` with an explicit spawn key, so a
stream is a pure function of (seed, *path).  Work items (grid points,
replications) get disjoint streams and results are identical however the
work is scheduled.
"""

import numpy as np


def spawn_rng(seed: int, *path: int) -> np.random.Generator:
    """Generator for the stream identified by ``(seed, *path)``."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(p) for p in path))
    return np.random.Generator(np.random.Philox(ss))
