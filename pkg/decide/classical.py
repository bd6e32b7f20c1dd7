"""
Two-valued evaluation of strong-negation free formulas, and the correspondence between
four-valued models and classical models over doubled atoms.

The evaluator here works on Python sets of states and explicit path search. It shares
nothing with the numpy evaluator in ``semantics`` so that each can check the other.
"""
from collections import deque
from typing import Dict, FrozenSet, Set, Tuple

import numpy as np

from models.kripke import Model, StateRef
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
)
from utils.logger import Logger
from .translation import MINUS_SUFFIX, PLUS_SUFFIX, split_doubled

Pairs = FrozenSet[Tuple[int, int]]


class ClassicalEvaluator:
    """
    Classical satisfaction in a model: an atom holds where it is verified; the
    anti-support sets of the model are ignored.
    """

    def __init__(self, model: Model):
        self.model = model
        self._formulas: Dict[Formula, FrozenSet[int]] = {}
        self._programs: Dict[Program, Pairs] = {}
        self._states = frozenset(range(model.size))

    def holds_at(self, formula: Formula) -> FrozenSet[int]:
        if formula in self._formulas:
            return self._formulas[formula]
        result = self._holds_at(formula)
        self._formulas[formula] = result
        return result

    def _holds_at(self, f: Formula) -> FrozenSet[int]:
        if isinstance(f, Atom):
            return frozenset(int(i) for i in np.flatnonzero(self.model.val_plus(f.name)))
        if isinstance(f, Bottom):
            return frozenset()
        if isinstance(f, And):
            return self.holds_at(f.left) & self.holds_at(f.right)
        if isinstance(f, Or):
            return self.holds_at(f.left) | self.holds_at(f.right)
        if isinstance(f, Implies):
            return (self._states - self.holds_at(f.left)) | self.holds_at(f.right)
        if isinstance(f, Box):
            body = self.holds_at(f.body)
            edges = self.pairs(f.program)
            return frozenset(x for x in self._states if all(y in body for (s, y) in edges if s == x))
        if isinstance(f, Diamond):
            body = self.holds_at(f.body)
            return frozenset(x for (x, y) in self.pairs(f.program) if y in body)
        if isinstance(f, StrongNeg):
            raise ValueError(f"Strong negation in a classical formula: {f}")
        raise TypeError(f"Unknown formula node: {f!r}")

    def pairs(self, program: Program) -> Pairs:
        if program not in self._programs:
            self._programs[program] = self._pairs(program)
        return self._programs[program]

    def _pairs(self, p: Program) -> Pairs:
        if isinstance(p, AtomicProg):
            rel = self.model.relation(p.name)
            return frozenset((int(i), int(j)) for i, j in zip(*np.nonzero(rel)))
        if isinstance(p, Seq):
            second = self.pairs(p.second)
            return frozenset((x, z) for (x, y) in self.pairs(p.first) for (y2, z) in second if y == y2)
        if isinstance(p, Choice):
            return self.pairs(p.left) | self.pairs(p.right)
        if isinstance(p, Test):
            return frozenset((x, x) for x in self.holds_at(p.formula))
        if isinstance(p, Star):
            step: Dict[int, Set[int]] = {}
            for x, y in self.pairs(p.body):
                step.setdefault(x, set()).add(y)
            result = set()
            for x in self._states:
                seen = {x}
                queue = deque([x])
                while queue:
                    u = queue.popleft()
                    for v in step.get(u, ()):
                        if v not in seen:
                            seen.add(v)
                            queue.append(v)
                result.update((x, y) for y in seen)
            return frozenset(result)
        raise TypeError(f"Unknown program node: {p!r}")


def classical_holds(m: Model, x: StateRef, formula: Formula) -> bool:
    """Whether ``formula`` (strong-negation free) is classically true at ``x``"""
    return m.state_index(x) in ClassicalEvaluator(m).holds_at(formula)


def doubled_model(m: Model) -> Model:
    """Classical model in which ``p+`` holds on V+(p) and ``p-`` on V-(p)"""
    plus = {}
    for atom in m.atom_names():
        plus[atom + PLUS_SUFFIX] = m.val_plus(atom)
        plus[atom + MINUS_SUFFIX] = m.val_minus(atom)
    return Model(states=m.states, relations=dict(m.relations), plus=plus, minus={})


def fold_doubled(m: Model) -> Model:
    """
    Inverse of ``doubled_model``: ``p+`` becomes V+(p) and ``p-`` becomes V-(p)

    Atoms that are not doubled are dropped with a warning.
    """
    n = m.size
    plus: Dict[str, np.ndarray] = {}
    minus: Dict[str, np.ndarray] = {}
    for name in m.atom_names():
        try:
            base, sign = split_doubled(name)
        except ValueError:
            Logger("classical").warning(f"Dropping atom {name!r} while folding a doubled model")
            continue
        target = plus if sign == PLUS_SUFFIX else minus
        target[base] = m.val_plus(name)
    for table, other in ((plus, minus), (minus, plus)):
        for base in other:
            table.setdefault(base, np.zeros(n, dtype=bool))
    return Model(states=m.states, relations=dict(m.relations), plus=plus, minus=minus)
