import random

import numpy as np

from .logger import Logger


def set_seed(seed: int) -> np.random.Generator:
    """
    Set random seed for reproducibility

    Args:
        seed: Random seed to set

    Returns:
        A numpy Generator seeded with the same value
    """
    random.seed(seed)
    np.random.seed(seed)
    Logger("seed").debug(f"Random Seed: {seed}")
    return np.random.default_rng(seed)
