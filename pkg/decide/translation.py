"""
Sign-doubling translation into classical PDL.

Every atom p is split into two independent classical atoms, ``p+`` (p is verified)
and ``p-`` (p is falsified). A formula is translated into a pair of strong-negation
free formulas: one true exactly where the formula is verified, one true exactly where
it is falsified.
"""
from typing import Dict, Tuple

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
    subexpressions,
    top,
)

PLUS_SUFFIX = '+'
MINUS_SUFFIX = '-'


def plus_atom(name: str) -> Atom:
    return Atom(name + PLUS_SUFFIX)


def minus_atom(name: str) -> Atom:
    return Atom(name + MINUS_SUFFIX)


def split_doubled(name: str) -> Tuple[str, str]:
    """``'p+'`` -> ``('p', '+')``; raises ValueError for names that are not doubled atoms"""
    if len(name) < 2 or name[-1] not in (PLUS_SUFFIX, MINUS_SUFFIX):
        raise ValueError(f"Not a doubled atom name: {name!r}")
    return name[:-1], name[-1]


def is_classical(f: Formula) -> bool:
    """True if no strong negation occurs in ``f``, tests included"""
    return not any(isinstance(node, StrongNeg) for node in subexpressions(f))


class Translator:
    """Memoizing translator; one instance may be reused across formulas"""

    def __init__(self):
        self._pairs: Dict[Formula, Tuple[Formula, Formula]] = {}
        self._programs: Dict[Program, Program] = {}

    def formula(self, f: Formula) -> Tuple[Formula, Formula]:
        for node in subexpressions(f):
            if isinstance(node, Formula):
                if node not in self._pairs:
                    self._pairs[node] = self._translate_formula(node)
            elif node not in self._programs:
                self._programs[node] = self._translate_program(node)
        return self._pairs[f]

    def program(self, p: Program) -> Program:
        self.formula(Box(p, Bottom()))
        return self._programs[p]

    def _translate_program(self, p: Program) -> Program:
        tr = self._programs
        if isinstance(p, AtomicProg):
            return p
        if isinstance(p, Seq):
            return Seq(tr[p.first], tr[p.second])
        if isinstance(p, Choice):
            return Choice(tr[p.left], tr[p.right])
        if isinstance(p, Star):
            return Star(tr[p.body])
        if isinstance(p, Test):
            return Test(self._pairs[p.formula][0])
        raise TypeError(f"Unknown program node: {p!r}")

    def _translate_formula(self, f: Formula) -> Tuple[Formula, Formula]:
        tf = self._pairs
        if isinstance(f, Atom):
            return plus_atom(f.name), minus_atom(f.name)
        if isinstance(f, Bottom):
            return Bottom(), top()
        if isinstance(f, StrongNeg):
            t, fl = tf[f.body]
            return fl, t
        if isinstance(f, (And, Or, Implies)):
            (lt, lf), (rt, rf) = tf[f.left], tf[f.right]
            if isinstance(f, And):
                return And(lt, rt), Or(lf, rf)
            if isinstance(f, Or):
                return Or(lt, rt), And(lf, rf)
            return Implies(lt, rt), And(lt, rf)
        if isinstance(f, Box):
            t, fl = tf[f.body]
            prog = self._programs[f.program]
            return Box(prog, t), Diamond(prog, fl)
        if isinstance(f, Diamond):
            t, fl = tf[f.body]
            prog = self._programs[f.program]
            return Diamond(prog, t), Box(prog, fl)
        raise TypeError(f"Unknown formula node: {f!r}")


def translate(f: Formula) -> Tuple[Formula, Formula]:
    """
    Translate ``f`` into its verification and falsification conditions

    Returns:
        ``(t, f)``: classical formulas over doubled atoms such that a state verifies
        (falsifies) ``f`` iff the doubled model satisfies ``t`` (``f``) there
    """
    return Translator().formula(f)


def translate_program(p: Program) -> Program:
    return Translator().program(p)
