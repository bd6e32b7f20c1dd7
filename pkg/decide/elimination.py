"""
Satisfiability of classical PDL formulas by elimination of Hintikka types.

A type assigns a truth bit to every member of the Fischer-Ladner closure of the input
and respects the propositional and unfolding constraints between members. Types that
cannot fulfil their demands in the graph of surviving types are deleted until nothing
changes; the input is satisfiable iff a surviving type makes it true.
"""
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from models.kripke import Model
from semantics.closure import ClosureSet, fl_closure
from semantics.evaluator import BelnapValue
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
    Test,
)
from utils.errors import CertificateError, ResourceLimit
from utils.logger import Logger
from .classical import classical_holds
from .translation import is_classical, translate
from .verdict import Verdict

DEFAULT_TYPE_LIMIT = 2 ** 20

# local constraint kinds
FREE, ZERO, AND, OR, IMP, EQ = range(6)


@dataclass(frozen=True, eq=False)
class HintikkaType:
    """One row of the type table: a truth bit per closure member"""
    closure: ClosureSet
    bits: np.ndarray

    def value(self, f: Formula) -> bool:
        return bool(self.bits[self.closure.index(f)])

    def belnap_value(self, phi: Formula) -> BelnapValue:
        """
        Four-valued reading of a source formula whose verification and falsification
        conditions both belong to the closure
        """
        t, f = translate(phi)
        return BelnapValue.from_bits(self.value(t), self.value(f))

    def true_members(self) -> List[Formula]:
        return [f for f, bit in zip(self.closure, self.bits) if bit]


def local_rule(f: Formula, index: Dict[Formula, int]) -> Tuple[int, Tuple[int, ...]]:
    """How the bit of ``f`` is fixed by the bits of other closure members"""
    if isinstance(f, Atom):
        return FREE, ()
    if isinstance(f, Bottom):
        return ZERO, ()
    if isinstance(f, And):
        return AND, (index[f.left], index[f.right])
    if isinstance(f, Or):
        return OR, (index[f.left], index[f.right])
    if isinstance(f, Implies):
        return IMP, (index[f.left], index[f.right])
    if isinstance(f, (Box, Diamond)):
        box = isinstance(f, Box)
        mod = type(f)
        prog, body = f.program, f.body
        if isinstance(prog, AtomicProg):
            return FREE, ()
        if isinstance(prog, Test):
            if box:
                return IMP, (index[prog.formula], index[body])
            return AND, (index[prog.formula], index[body])
        if isinstance(prog, Choice):
            return (AND if box else OR), (index[mod(prog.left, body)], index[mod(prog.right, body)])
        if isinstance(prog, Seq):
            return EQ, (index[mod(prog.first, mod(prog.second, body))],)
        if isinstance(prog, Star):
            # [a*]q = q & [a][a*]q, <a*>q = q | <a><a*>q
            return (AND if box else OR), (index[body], index[mod(prog.body, f)])
        raise TypeError(f"Unknown program node: {prog!r}")
    raise ValueError(f"Not a classical formula: {f}")


def _apply(kind: int, args: Tuple[int, ...], bits: List[bool]) -> bool:
    if kind == AND:
        return bits[args[0]] and bits[args[1]]
    if kind == OR:
        return bits[args[0]] or bits[args[1]]
    if kind == IMP:
        return (not bits[args[0]]) or bits[args[1]]
    if kind == EQ:
        return bits[args[0]]
    return False


class TypeElimination:
    """
    Type table and elimination state for one classical formula

    Args:
        formula: Strong-negation free formula over doubled atoms
        type_limit: Largest number of types enumerated before giving up
    """

    def __init__(self, formula: Formula, type_limit: int = DEFAULT_TYPE_LIMIT):
        if not is_classical(formula):
            raise ValueError(f"Type elimination expects a classical formula: {formula}")
        self.logger = Logger("elimination")
        self.formula = formula
        self.type_limit = type_limit
        self.closure = fl_closure(formula)
        self.index = {f: i for i, f in enumerate(self.closure)}
        self.rules = [local_rule(f, self.index) for f in self.closure]

        # per atomic program: (modal member, body) index pairs
        self.boxes: Dict[str, List[Tuple[int, int]]] = defaultdict(list)
        self.diamonds: Dict[str, List[Tuple[int, int]]] = defaultdict(list)
        for i, f in enumerate(self.closure):
            if isinstance(f, (Box, Diamond)) and isinstance(f.program, AtomicProg):
                table = self.boxes if isinstance(f, Box) else self.diamonds
                table[f.program.name].append((i, self.index[f.body]))
        self.programs = sorted(set(self.boxes) | set(self.diamonds))

        self.types = self._enumerate_types()
        self.alive = np.ones(len(self.types), dtype=bool)
        self.rounds = 0

    # ---- type enumeration ----

    def _evaluation_order(self) -> List[int]:
        """Closure indices with every member after the members it depends on, cycles aside"""
        order: List[int] = []
        visited = set()

        def visit(i):
            visited.add(i)
            for j in self.rules[i][1]:
                if j not in visited:
                    visit(j)
            order.append(i)

        for i in range(len(self.closure)):
            if i not in visited:
                visit(i)
        return order

    def _enumerate_types(self) -> np.ndarray:
        order = self._evaluation_order()
        position = {i: p for p, i in enumerate(order)}
        determined = [False] * len(order)
        checks_at: Dict[int, List[int]] = defaultdict(list)
        for i, (kind, args) in enumerate(self.rules):
            if kind == FREE:
                continue
            if all(position[j] < position[i] for j in args):
                determined[i] = True
            else:
                # cyclic unfolding: guessed, then checked once every argument is set
                checks_at[max([position[i]] + [position[j] for j in args])].append(i)

        bits = [False] * len(order)
        rows: List[List[bool]] = []

        def consistent(p):
            return all(bits[i] == _apply(*self.rules[i], bits) for i in checks_at.get(p, ()))

        def extend(p):
            if p == len(order):
                if len(rows) >= self.type_limit:
                    self.logger.error(f"More than {self.type_limit} types for a closure of {len(order)} members")
                    raise ResourceLimit(f"Type count exceeds the limit of {self.type_limit}")
                rows.append(list(bits))
                return
            i = order[p]
            if determined[i]:
                bits[i] = _apply(*self.rules[i], bits)
                if consistent(p):
                    extend(p + 1)
                return
            for value in (False, True):
                bits[i] = value
                if consistent(p):
                    extend(p + 1)

        extend(0)
        self.logger.debug(f"Enumerated {len(rows)} types over {len(order)} closure members")
        return np.array(rows, dtype=bool).reshape(len(rows), len(order))

    # ---- demands ----

    def _atomic_preimage(self, name: str, target: np.ndarray) -> np.ndarray:
        """Alive types with a compatible ``name``-successor in ``target``"""
        if not target.any():
            return np.zeros_like(target)
        boxes, diamonds = self.boxes.get(name, []), self.diamonds.get(name, [])
        if not boxes and not diamonds:
            return self.alive.copy()
        T = self.types
        box_cols, box_bodies = [b for b, _ in boxes], [q for _, q in boxes]
        dia_cols, dia_bodies = [d for d, _ in diamonds], [q for _, q in diamonds]

        # a source type requires its boxed bodies true and its refuted diamond bodies false
        requirement = np.concatenate([T[:, box_cols], ~T[:, dia_cols]], axis=1)
        keys, inverse = np.unique(requirement, axis=0, return_inverse=True)
        offers = np.unique(np.concatenate([T[target][:, box_bodies], T[target][:, dia_bodies]], axis=1), axis=0)

        nb = len(boxes)
        needs_true, needs_false = keys[:, :nb].astype(np.int64), keys[:, nb:].astype(np.int64)
        has_true, has_false = offers[:, :nb], offers[:, nb:]
        conflicts = needs_true @ (~has_true).T.astype(np.int64) + needs_false @ has_false.T.astype(np.int64)
        matched = (conflicts == 0).any(axis=1)
        return matched[np.asarray(inverse).reshape(-1)] & self.alive

    def preimage(self, program: Program, target: np.ndarray) -> np.ndarray:
        """Alive types from which some ``program``-path in the type graph ends in ``target``"""
        target = target & self.alive
        if isinstance(program, AtomicProg):
            return self._atomic_preimage(program.name, target)
        if isinstance(program, Seq):
            return self.preimage(program.first, self.preimage(program.second, target))
        if isinstance(program, Choice):
            return self.preimage(program.left, target) | self.preimage(program.right, target)
        if isinstance(program, Test):
            return target & self.types[:, self.index[program.formula]]
        if isinstance(program, Star):
            reached = target
            while True:
                grown = reached | self.preimage(program.body, reached)
                if np.array_equal(grown, reached):
                    return reached
                reached = grown
        raise TypeError(f"Unknown program node: {program!r}")

    def eliminate(self) -> np.ndarray:
        """
        Delete types until every surviving type has its diamonds fulfilled and its
        refuted boxes refuted by a path through surviving types
        """
        T = self.types
        demands = [(i, f) for i, f in enumerate(self.closure) if isinstance(f, (Box, Diamond))]
        changed = True
        while changed:
            changed = False
            self.rounds += 1
            for i, f in demands:
                body = T[:, self.index[f.body]]
                if isinstance(f, Diamond):
                    pending, wanted = self.alive & T[:, i], body
                else:
                    pending, wanted = self.alive & ~T[:, i], ~body
                if not pending.any():
                    continue
                failed = pending & ~self.preimage(f.program, wanted)
                if failed.any():
                    self.alive &= ~failed
                    changed = True
            self.logger.debug(f"Round {self.rounds}: {int(self.alive.sum())} of {len(T)} types alive")
        return self.alive

    # ---- witness ----

    def successors(self, u: int, name: str) -> np.ndarray:
        T = self.types
        row = T[u]
        required = [q for b, q in self.boxes.get(name, []) if row[b]]
        forbidden = [q for d, q in self.diamonds.get(name, []) if not row[d]]
        mask = self.alive.copy()
        if required:
            mask &= T[:, required].all(axis=1)
        if forbidden:
            mask &= ~T[:, forbidden].any(axis=1)
        return mask

    def witness(self, root: int) -> Model:
        """Model of the surviving types reachable from ``root``, states w0, w1, ..."""
        position = {root: 0}
        queue = deque([root])
        edges: Dict[str, List[Tuple[int, int]]] = {a: [] for a in self.programs}
        while queue:
            u = queue.popleft()
            for a in self.programs:
                for v in np.flatnonzero(self.successors(u, a)):
                    v = int(v)
                    if v not in position:
                        position[v] = len(position)
                        queue.append(v)
                    edges[a].append((position[u], position[v]))
        reached = sorted(position, key=position.get)
        atoms = [(f.name, i) for i, f in enumerate(self.closure) if isinstance(f, Atom)]
        return Model.from_sets(
            states=[f"w{k}" for k in range(len(reached))],
            relations=edges,
            plus={name: [k for k, u in enumerate(reached) if self.types[u, i]] for name, i in atoms},
        )

    def hintikka_type(self, i: int) -> HintikkaType:
        bits = self.types[i].copy()
        bits.setflags(write=False)
        return HintikkaType(self.closure, bits)


def pdl_sat(formula: Formula, type_limit: int = DEFAULT_TYPE_LIMIT) -> Verdict:
    """
    Decide classical satisfiability of a strong-negation free formula

    Args:
        formula: Formula over (doubled) atoms
        type_limit: Ceiling on the number of enumerated types

    Returns:
        SAT with a classical witness model and state, or UNSAT

    Raises:
        ResourceLimit: If the type table would exceed ``type_limit`` rows
        CertificateError: If the witness does not satisfy the formula
    """
    logger = Logger("elimination")
    run = TypeElimination(formula, type_limit)
    alive = run.eliminate()
    candidates = np.flatnonzero(alive & run.types[:, run.index[formula]])
    logger.info(f"{len(run.types)} types, {int(alive.sum())} survive after {run.rounds} rounds; "
                f"{len(candidates)} satisfy the input")
    if len(candidates) == 0:
        return Verdict.unsat()

    model = run.witness(int(candidates[0]))
    if not classical_holds(model, 0, formula):
        logger.error(f"Witness for {formula} fails re-checking")
        raise CertificateError(f"Witness model does not satisfy {formula}")
    return Verdict.sat(model, model.states[0])
