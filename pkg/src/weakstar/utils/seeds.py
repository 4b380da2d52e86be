from __future__ import annotations

"""Seed helpers to keep runs deterministic."""

import os
import random
from typing import Optional

import numpy as np

DEFAULT_SEED = 20240229


def seed_everything(seed: int = DEFAULT_SEED, *, numpy_seed: Optional[int] = None) -> np.random.Generator:
    """Seed Python and NumPy PRNGs and return a NumPy generator for callers."""

    random.seed(seed)
    np.random.seed(numpy_seed or seed)
    os.environ.setdefault("PYTHONHASHSEED", str(seed))
    return np.random.default_rng(numpy_seed or seed)
