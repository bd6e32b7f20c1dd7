"""
Exhaustive search for small models, used to cross-check the decision procedure.

Models are enumerated by size, then by relation assignment; valuations are checked a
batch at a time with numpy. Evaluation propagates state sets backwards through the
programs and never materializes program relations, so it is independent of the
evaluators in ``semantics`` and ``decide.classical``.
"""
import itertools
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from models.kripke import Model
from syntax.base import (
    And,
    Atom,
    AtomicProg,
    Bottom,
    Box,
    Choice,
    Diamond,
    Formula,
    Implies,
    Or,
    Program,
    Seq,
    Star,
    StrongNeg,
    Test,
    atomic_programs,
    atoms,
)
from utils.logger import Logger

BATCH_SIZE = 4096


class BatchEvaluator:
    """
    Support and anti-support of formulas for a batch of valuations over fixed relations

    Args:
        relations: Atomic program name -> (n, n) boolean relation
        plus: Atom name -> (batch, n) boolean support sets
        minus: Atom name -> (batch, n) boolean anti-support sets
    """

    def __init__(self, relations: Dict[str, np.ndarray], plus: Dict[str, np.ndarray],
                 minus: Dict[str, np.ndarray], batch: int, n: int):
        # diamond over one step: row b, state i has a successor in s[b]
        self.steps = {a: r.T.astype(np.int64) for a, r in relations.items()}
        self.plus, self.minus = plus, minus
        self.shape = (batch, n)
        self._memo: Dict[Formula, Tuple[np.ndarray, np.ndarray]] = {}

    def can_reach(self, program: Program, target: np.ndarray) -> np.ndarray:
        if isinstance(program, AtomicProg):
            step = self.steps.get(program.name)
            if step is None:
                return np.zeros(self.shape, dtype=bool)
            return (target.astype(np.int64) @ step) > 0
        if isinstance(program, Seq):
            return self.can_reach(program.first, self.can_reach(program.second, target))
        if isinstance(program, Choice):
            return self.can_reach(program.left, target) | self.can_reach(program.right, target)
        if isinstance(program, Test):
            return self.sets(program.formula)[0] & target
        if isinstance(program, Star):
            reached = target
            while True:
                grown = reached | self.can_reach(program.body, reached)
                if np.array_equal(grown, reached):
                    return reached
                reached = grown
        raise TypeError(f"Unknown program node: {program!r}")

    def must_reach(self, program: Program, target: np.ndarray) -> np.ndarray:
        return ~self.can_reach(program, ~target)

    def sets(self, f: Formula) -> Tuple[np.ndarray, np.ndarray]:
        if f not in self._memo:
            self._memo[f] = self._sets(f)
        return self._memo[f]

    def _sets(self, f: Formula) -> Tuple[np.ndarray, np.ndarray]:
        if isinstance(f, Atom):
            empty = np.zeros(self.shape, dtype=bool)
            return self.plus.get(f.name, empty), self.minus.get(f.name, empty)
        if isinstance(f, Bottom):
            return np.zeros(self.shape, dtype=bool), np.ones(self.shape, dtype=bool)
        if isinstance(f, StrongNeg):
            p, m = self.sets(f.body)
            return m, p
        if isinstance(f, (And, Or, Implies)):
            (lp, lm), (rp, rm) = self.sets(f.left), self.sets(f.right)
            if isinstance(f, And):
                return lp & rp, lm | rm
            if isinstance(f, Or):
                return lp | rp, lm & rm
            return ~lp | rp, lp & rm
        if isinstance(f, Box):
            p, m = self.sets(f.body)
            return self.must_reach(f.program, p), self.can_reach(f.program, m)
        if isinstance(f, Diamond):
            p, m = self.sets(f.body)
            return self.can_reach(f.program, p), self.must_reach(f.program, m)
        raise TypeError(f"Unknown formula node: {f!r}")


def _relation_assignments(n: int, programs: List[str]) -> Iterator[Dict[str, np.ndarray]]:
    cells = n * n
    for codes in itertools.product(range(2 ** cells), repeat=len(programs)):
        yield {a: ((code >> np.arange(cells)) & 1).astype(bool).reshape(n, n) for a, code in zip(programs, codes)}


def _valuation_batches(n: int, atom_names: List[str]) -> Iterator[Tuple[Dict[str, np.ndarray], Dict[str, np.ndarray]]]:
    width = 2 * n * len(atom_names)
    total = 2 ** width
    for start in range(0, total, BATCH_SIZE):
        codes = np.arange(start, min(start + BATCH_SIZE, total), dtype=np.int64)
        bits = ((codes[:, None] >> np.arange(width)) & 1).astype(bool)
        plus, minus = {}, {}
        for k, p in enumerate(atom_names):
            plus[p] = bits[:, 2 * n * k: 2 * n * k + n]
            minus[p] = bits[:, 2 * n * k + n: 2 * n * (k + 1)]
        yield plus, minus


def bounded_countermodel_search(phi: Formula, max_states: int) -> Optional[Tuple[Model, str]]:
    """
    Find a model of at most ``max_states`` states with a state verifying ``phi``

    All models over the atoms and atomic programs of ``phi`` are tried, smallest first.

    Args:
        phi: Formula to satisfy
        max_states: Largest model size tried (at least 1)

    Returns:
        The first model found and the name of its first verifying state, or None
    """
    if max_states < 1:
        raise ValueError(f"max_states must be at least 1, got {max_states}")
    logger = Logger("search")
    atom_names, programs = atoms(phi), atomic_programs(phi)
    for n in range(1, max_states + 1):
        states = [f"s{i}" for i in range(n)]
        checked = 0
        for relations in _relation_assignments(n, programs):
            for plus, minus in _valuation_batches(n, atom_names):
                batch = next(iter(plus.values())).shape[0] if plus else 1
                hits = BatchEvaluator(relations, plus, minus, batch, n).sets(phi)[0]
                checked += batch
                rows = np.flatnonzero(hits.any(axis=1))
                if len(rows) == 0:
                    continue
                b = int(rows[0])
                x = int(np.flatnonzero(hits[b])[0])
                model = Model(
                    states=tuple(states),
                    relations=relations,
                    plus={p: s[b] for p, s in plus.items()},
                    minus={p: s[b] for p, s in minus.items()},
                )
                logger.debug(f"Found a {n}-state model for {phi} after {checked} candidates")
                return model, states[x]
        logger.debug(f"No {n}-state model for {phi} ({checked} candidates)")
    return None
