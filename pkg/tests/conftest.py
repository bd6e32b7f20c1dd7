import numpy as np
import pytest

from models.kripke import Model
from utils import Logger, set_seed

Logger.initialize(log_dir=None, console_level='WARNING')


@pytest.fixture
def rng() -> np.random.Generator:
    return set_seed(42)


@pytest.fixture
def footnote_model() -> Model:
    """One state where p and q are neither verified nor falsified"""
    return Model.from_sets(['x'], plus={'p': [], 'q': []}, minus={'p': [], 'q': []})


@pytest.fixture
def both_model() -> Model:
    """One state where p is both verified and falsified"""
    return Model.from_sets(['x'], plus={'p': [0]}, minus={'p': [0]})


@pytest.fixture
def twin_model() -> Model:
    """s0 -a-> s1, s0 -a-> s2; s1 and s2 agree on everything"""
    return Model.from_sets(
        ['s0', 's1', 's2'],
        relations={'a': [(0, 1), (0, 2)]},
        plus={'p': [1, 2]},
        minus={'p': [0]},
    )


@pytest.fixture
def sign_twin_model() -> Model:
    """Two states that agree on the support of p and disagree on its anti-support"""
    return Model.from_sets(['x', 'y'], plus={'p': [0, 1]}, minus={'p': [0]})
