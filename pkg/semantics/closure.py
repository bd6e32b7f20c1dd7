"""
Fischer-Ladner closure and the signed state fingerprints taken over it.
"""
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from models.kripke import Model, StateRef
from syntax.base import (
    And,
    AtomicProg,
    Box,
    Choice,
    Diamond,
    Formula,
    Implies,
    Or,
    Seq,
    Star,
    StrongNeg,
    Test,
)
from utils.logger import Logger
from .evaluator import BelnapValue, Evaluator

Fingerprint = Tuple[BelnapValue, ...]


class ClosureSet:
    """
    Ordered, duplicate-free set of formulas closed under the Fischer-Ladner rules

    Args:
        origin: The seed formula
        members: Members in the order the fixpoint computation reached them
    """

    def __init__(self, origin: Formula, members: List[Formula]):
        self.origin = origin
        self.members = tuple(members)
        self._index: Dict[Formula, int] = {f: i for i, f in enumerate(self.members)}

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.members)

    def __contains__(self, f) -> bool:
        return f in self._index

    def __getitem__(self, i: int) -> Formula:
        return self.members[i]

    def index(self, f: Formula) -> int:
        return self._index[f]

    def __repr__(self) -> str:
        return f"ClosureSet({self.origin}, {len(self)} members)"


def _modal_unfolding(f: Formula) -> List[Formula]:
    """Formulas a box or diamond adds by unfolding its program one level"""
    mod = type(f)
    prog, body = f.program, f.body
    if isinstance(prog, AtomicProg):
        return []
    if isinstance(prog, Test):
        return [prog.formula]
    if isinstance(prog, Choice):
        return [mod(prog.left, body), mod(prog.right, body)]
    if isinstance(prog, Seq):
        return [mod(prog.first, mod(prog.second, body))]
    if isinstance(prog, Star):
        return [mod(prog.body, f)]
    raise TypeError(f"Unknown program node: {prog!r}")


def _successors(f: Formula) -> List[Formula]:
    if isinstance(f, StrongNeg):
        return [f.body]
    if isinstance(f, (And, Or, Implies)):
        return [f.left, f.right]
    if isinstance(f, (Box, Diamond)):
        return _modal_unfolding(f) + [f.body]
    return []


def fl_closure(phi: Formula) -> ClosureSet:
    """
    Fischer-Ladner closure of ``phi``

    Least set containing ``phi``, closed under subformulas and under the unfolding
    rules for tests, choice, composition and iteration (for boxes and diamonds alike).
    Members are listed in depth-first discovery order, unfoldings before bodies.
    """
    members: List[Formula] = []
    seen = set()
    stack = [phi]
    while stack:
        f = stack.pop()
        if f in seen:
            continue
        seen.add(f)
        members.append(f)
        stack.extend(reversed(_successors(f)))
    Logger("closure").debug(f"FL({phi}) has {len(members)} members")
    return ClosureSet(phi, members)


def closure_bits(m: Model, T: ClosureSet, session: Optional[Evaluator] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    Support and anti-support bits of every closure member at every state

    Returns:
        Two boolean arrays of shape (states, len(T))
    """
    session = session or Evaluator(m)
    plus = np.zeros((m.size, len(T)), dtype=bool)
    minus = np.zeros((m.size, len(T)), dtype=bool)
    for k, f in enumerate(T):
        sets = session.truth_sets(f)
        plus[:, k] = sets.plus
        minus[:, k] = sets.minus
    return plus, minus


def fingerprint(m: Model, x: StateRef, T: ClosureSet, session: Optional[Evaluator] = None) -> Fingerprint:
    """Belnap value of each closure member at ``x``, in closure order"""
    session = session or Evaluator(m)
    return tuple(session.belnap_value(x, f) for f in T)


def fingerprint_key(m: Model, x: StateRef, T: ClosureSet, both_signs: bool = True,
                    session: Optional[Evaluator] = None) -> tuple:
    """
    Hashable key under which states are identified by filtration

    Args:
        both_signs: When False only support is compared and anti-support is ignored
    """
    if both_signs:
        return fingerprint(m, x, T, session)
    session = session or Evaluator(m)
    return tuple(session.supports(x, f, '+') for f in T)
