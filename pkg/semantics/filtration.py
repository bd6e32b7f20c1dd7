"""
Filtration of a model through a Fischer-Ladner closure, and an exhaustive checker for
the filtration lemma on small models.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from models.kripke import Model
from syntax.base import Box, Diamond, Formula
from utils.errors import GuardExceeded
from utils.logger import Logger
from .closure import ClosureSet, closure_bits, fl_closure
from .evaluator import Evaluator

LEMMA_ITEMS = ('i', 'ii', 'iii', 'iv', 'v', 'vi', 'vii')


@dataclass(frozen=True, eq=False)
class Filtration:
    """
    Quotient of a model by agreement on a closure set

    Args:
        quotient: The filtrated model, states named c0, c1, ...
        class_of: Original state index -> quotient state index
        witness: Quotient state index -> least original state index of the class
        closure: The closure set filtrated through
        original: The source model
    """
    quotient: Model
    class_of: Tuple[int, ...]
    witness: Tuple[int, ...]
    closure: ClosureSet
    original: Model

    def class_map(self) -> Dict[str, str]:
        """Original state name -> quotient state name"""
        return {name: self.quotient.states[self.class_of[i]] for i, name in enumerate(self.original.states)}


def filtrate(m: Model, T: ClosureSet, both_signs: bool = True) -> Filtration:
    """
    Filtrate ``m`` through ``T``

    States with equal fingerprints over ``T`` are merged. An atomic relation holds
    between two classes if it holds between some members, and a class verifies
    (falsifies) an atom if some member does. Classes are numbered in order of first
    occurrence, so each representative is the least index in its class.

    Args:
        m: Source model
        T: Closure set
        both_signs: Identify states by support and anti-support; False compares support
            only (which does not yield a filtration in general)
    """
    logger = Logger("filtration")
    plus, minus = closure_bits(m, T)
    keys = np.concatenate([plus, minus], axis=1) if both_signs else plus

    classes: Dict[bytes, int] = {}
    class_of, witness = [], []
    for i in range(m.size):
        key = keys[i].tobytes()
        if key not in classes:
            classes[key] = len(witness)
            witness.append(i)
        class_of.append(classes[key])
    k = len(witness)

    # membership matrix: original state i belongs to class j
    member = np.zeros((m.size, k), dtype=np.int64)
    member[np.arange(m.size), class_of] = 1
    relations = {a: (member.T @ rel.astype(np.int64) @ member) > 0 for a, rel in m.relations.items()}
    lift_plus = {p: (s.astype(np.int64) @ member) > 0 for p, s in m.plus.items()}
    lift_minus = {p: (s.astype(np.int64) @ member) > 0 for p, s in m.minus.items()}

    quotient = Model(
        states=tuple(f"c{j}" for j in range(k)),
        relations=relations,
        plus=lift_plus,
        minus=lift_minus,
    )
    logger.debug(f"Filtrated {m.size} states into {k} classes over {len(T)} closure members")
    return Filtration(quotient, tuple(class_of), tuple(witness), T, m)


@dataclass(frozen=True)
class Violation:
    item: str
    formula: Formula
    states: Tuple[str, ...]


@dataclass
class FiltrationReport:
    checked: Dict[str, int] = field(default_factory=lambda: {item: 0 for item in LEMMA_ITEMS})
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def failed_items(self) -> List[str]:
        return sorted({v.item for v in self.violations}, key=LEMMA_ITEMS.index)


def check_filtration_lemma(m: Model, phi: Formula, max_states: int = 6,
                           both_signs: bool = True) -> FiltrationReport:
    """
    Exhaustively check the seven items of the filtration lemma for ``m`` and FL(``phi``)

    Items:
        i: R(a)xy implies R'(a)[x][y], for every program a boxed or diamonded in FL
        ii: R'(a)[x][y] and x verifies [a]q imply y verifies q
        iii: R'(a)[x][y] and y verifies q imply x verifies <a>q
        iv: R'(a)[x][y] and x falsifies <a>q imply y falsifies q
        v: R'(a)[x][y] and y falsifies q imply x falsifies [a]q
        vi: x verifies q iff [x] verifies q, for every q in FL
        vii: x falsifies q iff [x] falsifies q, for every q in FL

    where R' interprets programs in the quotient by the standard clauses.

    Args:
        m: Model to filtrate
        phi: Seed formula of the closure
        max_states: Largest model accepted
        both_signs: Passed on to ``filtrate``

    Returns:
        Counts of checked instances per item and every violation found

    Raises:
        GuardExceeded: If ``m`` has more than ``max_states`` states
    """
    logger = Logger("filtration")
    if m.size > max_states:
        logger.error(f"Model has {m.size} states, the lemma checker accepts at most {max_states}")
        raise GuardExceeded(f"Model has {m.size} states; the bound is {max_states}")

    T = fl_closure(phi)
    filt = filtrate(m, T, both_signs)
    q = filt.quotient
    cls = np.asarray(filt.class_of)
    names = m.states
    original, lifted = Evaluator(m), Evaluator(q)
    report = FiltrationReport()

    def violate(item, formula, *states):
        report.violations.append(Violation(item, formula, tuple(states)))

    for f in T:
        if not isinstance(f, (Box, Diamond)):
            continue
        r = original.relation_of(f.program)
        # R'(a) pulled back to original states
        rq = lifted.relation_of(f.program)[np.ix_(cls, cls)]
        outer, body = original.truth_sets(f), original.truth_sets(f.body)

        for x, y in zip(*np.nonzero(r)):
            report.checked['i'] += 1
            if not rq[x, y]:
                violate('i', f, names[x], names[y])

        for x, y in zip(*np.nonzero(rq)):
            if isinstance(f, Box):
                report.checked['ii'] += 1
                if outer.plus[x] and not body.plus[y]:
                    violate('ii', f, names[x], names[y])
                report.checked['v'] += 1
                if body.minus[y] and not outer.minus[x]:
                    violate('v', f, names[x], names[y])
            else:
                report.checked['iii'] += 1
                if body.plus[y] and not outer.plus[x]:
                    violate('iii', f, names[x], names[y])
                report.checked['iv'] += 1
                if outer.minus[x] and not body.minus[y]:
                    violate('iv', f, names[x], names[y])

    for f in T:
        here, there = original.truth_sets(f), lifted.truth_sets(f)
        for x in range(m.size):
            report.checked['vi'] += 1
            if here.plus[x] != there.plus[cls[x]]:
                violate('vi', f, names[x], q.states[cls[x]])
            report.checked['vii'] += 1
            if here.minus[x] != there.minus[cls[x]]:
                violate('vii', f, names[x], q.states[cls[x]])

    if report.ok:
        logger.debug(f"Filtration lemma holds for {phi} on {m.size} states ({sum(report.checked.values())} checks)")
    else:
        logger.info(f"Filtration lemma violated for {phi}: items {report.failed_items()}")
    return report
