"""
Four-valued model checking over finite standard models.

Every formula is interpreted by a pair of state sets: its support set (the states that
verify it) and its anti-support set (the states that falsify it). The two are
independent, so a state may verify and falsify a formula at once or do neither.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from models.kripke import Model, StateRef
from models.relations import Relation, StateSet, compose, identity_on, image_exists, image_forall, rtc, union
from syntax.base import (
    And,
    Atom,
    AtomicProg,
    Bottom,
    Box,
    Choice,
    Diamond,
    Expression,
    Formula,
    Implies,
    Or,
    Program,
    Seq,
    Star,
    StrongNeg,
    Test,
    subexpressions,
)
from utils.logger import Logger


class BelnapValue(Enum):
    TRUE_ONLY = "TrueOnly"
    FALSE_ONLY = "FalseOnly"
    BOTH = "Both"
    NEITHER = "Neither"

    @classmethod
    def from_bits(cls, plus: bool, minus: bool) -> 'BelnapValue':
        if plus and minus:
            return cls.BOTH
        if plus:
            return cls.TRUE_ONLY
        if minus:
            return cls.FALSE_ONLY
        return cls.NEITHER

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, eq=False)
class TruthSets:
    """Support set ``plus`` and anti-support set ``minus`` of a formula"""
    plus: StateSet
    minus: StateSet

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruthSets):
            return NotImplemented
        return np.array_equal(self.plus, other.plus) and np.array_equal(self.minus, other.minus)

    def swapped(self) -> 'TruthSets':
        return TruthSets(self.minus, self.plus)


class Evaluator:
    """
    Evaluation session for one model

    Owns the memo tables for program relations and formula truth sets, so that tests
    nested inside programs and repeated subformulas are computed once. A session is
    not meant to be shared between threads; the model itself is immutable.

    Args:
        model: The model to evaluate in
    """

    def __init__(self, model: Model):
        self.model = model
        self.logger = Logger("evaluator")
        self._relations: Dict[Program, Relation] = {}
        self._truth: Dict[Formula, TruthSets] = {}
        self.stats = {'relations': 0, 'formulas': 0}

    def relation_of(self, program: Program) -> Relation:
        """Relation denoted by ``program``"""
        self._evaluate(program)
        return self._relations[program]

    def truth_sets(self, formula: Formula) -> TruthSets:
        """Support and anti-support sets of ``formula``"""
        self._evaluate(formula)
        return self._truth[formula]

    def _evaluate(self, root: Expression):
        if root in self._truth or root in self._relations:
            return
        # post-order: every child is computed before its parent
        for node in subexpressions(root):
            if isinstance(node, Formula):
                if node not in self._truth:
                    self._truth[node] = self._formula_clause(node)
                    self.stats['formulas'] += 1
            elif node not in self._relations:
                rel = self._program_clause(node)
                rel.setflags(write=False)
                self._relations[node] = rel
                self.stats['relations'] += 1
        self.logger.debug(f"Session totals after {root}: {self.stats}")

    def _program_clause(self, program: Program) -> Relation:
        m = self.model
        if isinstance(program, AtomicProg):
            return m.relation(program.name).copy()
        if isinstance(program, Seq):
            return compose(self._relations[program.first], self._relations[program.second])
        if isinstance(program, Choice):
            return union(self._relations[program.left], self._relations[program.right])
        if isinstance(program, Star):
            return rtc(self._relations[program.body])
        if isinstance(program, Test):
            return identity_on(self._truth[program.formula].plus)
        raise TypeError(f"Unknown program node: {program!r}")

    def _formula_clause(self, formula: Formula) -> TruthSets:
        m = self.model
        t = self._truth
        if isinstance(formula, Atom):
            return TruthSets(m.val_plus(formula.name), m.val_minus(formula.name))
        if isinstance(formula, Bottom):
            return TruthSets(np.zeros(m.size, dtype=bool), np.ones(m.size, dtype=bool))
        if isinstance(formula, StrongNeg):
            return t[formula.body].swapped()
        if isinstance(formula, And):
            a, b = t[formula.left], t[formula.right]
            return TruthSets(a.plus & b.plus, a.minus | b.minus)
        if isinstance(formula, Or):
            a, b = t[formula.left], t[formula.right]
            return TruthSets(a.plus | b.plus, a.minus & b.minus)
        if isinstance(formula, Implies):
            a, b = t[formula.left], t[formula.right]
            return TruthSets(~a.plus | b.plus, a.plus & b.minus)
        if isinstance(formula, Box):
            r, body = self._relations[formula.program], t[formula.body]
            return TruthSets(image_forall(r, body.plus), image_exists(r, body.minus))
        if isinstance(formula, Diamond):
            r, body = self._relations[formula.program], t[formula.body]
            return TruthSets(image_exists(r, body.plus), image_forall(r, body.minus))
        raise TypeError(f"Unknown formula node: {formula!r}")

    # ---- derived queries ----

    def supports(self, x: StateRef, formula: Formula, sign: str = '+') -> bool:
        i = self.model.state_index(x)
        sets = self.truth_sets(formula)
        if sign == '+':
            return bool(sets.plus[i])
        elif sign == '-':
            return bool(sets.minus[i])
        else:
            raise ValueError(f"Unknown sign {sign!r}; expected '+' or '-'")

    def belnap_value(self, x: StateRef, formula: Formula) -> BelnapValue:
        i = self.model.state_index(x)
        sets = self.truth_sets(formula)
        return BelnapValue.from_bits(bool(sets.plus[i]), bool(sets.minus[i]))

    def valid(self, formula: Formula) -> bool:
        return bool(np.all(self.truth_sets(formula).plus))

    def supported_by_all(self, formulas: Iterable[Formula]) -> StateSet:
        """Intersection of the support sets; every state when ``formulas`` is empty"""
        result = np.ones(self.model.size, dtype=bool)
        for f in formulas:
            result &= self.truth_sets(f).plus
        return result


def relation_of(m: Model, program: Program, session: Optional[Evaluator] = None) -> Relation:
    return (session or Evaluator(m)).relation_of(program)


def truth_sets(m: Model, formula: Formula, session: Optional[Evaluator] = None) -> TruthSets:
    return (session or Evaluator(m)).truth_sets(formula)


def supports(m: Model, x: StateRef, formula: Formula, sign: str = '+') -> bool:
    """
    Whether state ``x`` verifies (sign '+') or falsifies (sign '-') ``formula``
    """
    return Evaluator(m).supports(x, formula, sign)


def belnap_value(m: Model, x: StateRef, formula: Formula) -> BelnapValue:
    return Evaluator(m).belnap_value(x, formula)


def belnap_table(m: Model, formula: Formula) -> List[Tuple[str, BelnapValue]]:
    """Value of ``formula`` at every state, in state order"""
    session = Evaluator(m)
    return [(name, session.belnap_value(i, formula)) for i, name in enumerate(m.states)]


def valid_in_model(m: Model, formula: Formula) -> bool:
    """True iff every state verifies ``formula``"""
    return Evaluator(m).valid(formula)


def entails_in_model(m: Model, premises: Iterable[Formula], formula: Formula) -> bool:
    """
    Local consequence in one model

    Args:
        m: Model
        premises: Finite set of premises
        formula: Conclusion

    Returns:
        True iff every state verifying all premises verifies ``formula``
    """
    session = Evaluator(m)
    common = session.supported_by_all(premises)
    return bool(np.all(~common | session.truth_sets(formula).plus))


def globally_entails_in_model(m: Model, premises: Iterable[Formula], formula: Formula) -> bool:
    """True unless every premise is valid in ``m`` while ``formula`` is not"""
    session = Evaluator(m)
    if not all(session.valid(p) for p in premises):
        return True
    return session.valid(formula)
