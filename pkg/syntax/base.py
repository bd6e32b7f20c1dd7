"""
Abstract syntax of formulas and programs.

Formulas and programs are mutually recursive (a test embeds a formula). All nodes are
frozen dataclasses: equality is structural and syntactic, nodes are hashable and
immutable. Negation, verum and the biconditional are not constructors; the helpers
below build their definitions.
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Set, Tuple, Union


class Formula:
    """Base class for formula nodes"""

    def __str__(self) -> str:
        from .printer import print_formula
        return print_formula(self)


class Program:
    """Base class for program nodes"""

    def __str__(self) -> str:
        from .printer import print_program
        return print_program(self)


Expression = Union[Formula, Program]


@dataclass(frozen=True, repr=False)
class SourceSpan:
    start: int
    end: int

    def __post_init__(self):
        if self.start > self.end:
            raise ValueError(f"Span start {self.start} exceeds end {self.end}")

    def __repr__(self) -> str:
        return f"SourceSpan({self.start}, {self.end})"


# ---- formulas ----

@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class StrongNeg(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Box(Formula):
    program: Program
    body: Formula


@dataclass(frozen=True)
class Diamond(Formula):
    program: Program
    body: Formula


# ---- programs ----

@dataclass(frozen=True)
class AtomicProg(Program):
    name: str


@dataclass(frozen=True)
class Seq(Program):
    first: Program
    second: Program


@dataclass(frozen=True)
class Choice(Program):
    left: Program
    right: Program


@dataclass(frozen=True)
class Star(Program):
    body: Program


@dataclass(frozen=True)
class Test(Program):
    formula: Formula


BINARY_FORMULAS = (And, Or, Implies)
MODALITIES = (Box, Diamond)


# ---- defined connectives ----

def neg(f: Formula) -> Formula:
    """Classical negation: ``f -> F``"""
    return Implies(f, Bottom())


def top() -> Formula:
    """Verum, defined as ``!F``"""
    return neg(Bottom())


def iff(f: Formula, g: Formula) -> Formula:
    return And(Implies(f, g), Implies(g, f))


def conj(items: Iterable[Formula]) -> Formula:
    """Left-nested conjunction; the empty conjunction is verum"""
    items = list(items)
    if not items:
        return top()
    result = items[0]
    for item in items[1:]:
        result = And(result, item)
    return result


def disj(items: Iterable[Formula]) -> Formula:
    """Left-nested disjunction; the empty disjunction is falsum"""
    items = list(items)
    if not items:
        return Bottom()
    result = items[0]
    for item in items[1:]:
        result = Or(result, item)
    return result


def choice(programs: Iterable[Program]) -> Program:
    programs = list(programs)
    if not programs:
        raise ValueError("choice() needs at least one program")
    result = programs[0]
    for prog in programs[1:]:
        result = Choice(result, prog)
    return result


# The four Belnapian values expressed in the object language

def only_true(f: Formula) -> Formula:
    return And(f, neg(StrongNeg(f)))


def only_false(f: Formula) -> Formula:
    return And(neg(f), StrongNeg(f))


def both(f: Formula) -> Formula:
    return And(f, StrongNeg(f))


def neither(f: Formula) -> Formula:
    return And(neg(f), neg(StrongNeg(f)))


# ---- traversal ----

def children(e: Expression) -> Tuple[Expression, ...]:
    """Immediate subexpressions in left-to-right order"""
    if isinstance(e, (Atom, Bottom, AtomicProg)):
        return ()
    if isinstance(e, StrongNeg):
        return (e.body,)
    if isinstance(e, BINARY_FORMULAS):
        return (e.left, e.right)
    if isinstance(e, MODALITIES):
        return (e.program, e.body)
    if isinstance(e, Seq):
        return (e.first, e.second)
    if isinstance(e, Choice):
        return (e.left, e.right)
    if isinstance(e, Star):
        return (e.body,)
    if isinstance(e, Test):
        return (e.formula,)
    raise TypeError(f"Not a formula or program node: {e!r}")


def _post_order(e: Expression) -> Iterator[Expression]:
    stack: List[Tuple[Expression, bool]] = [(e, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            yield node
            continue
        stack.append((node, True))
        for child in reversed(children(node)):
            stack.append((child, False))


def subexpressions(f: Expression) -> List[Expression]:
    """
    All subformulas and subprograms of ``f`` including ``f`` itself

    Each distinct subexpression appears once, at the position of its first
    occurrence in a left-to-right post-order walk.
    """
    seen: Set[Expression] = set()
    result = []
    for node in _post_order(f):
        if node not in seen:
            seen.add(node)
            result.append(node)
    return result


def size(f: Expression) -> int:
    """Number of nodes (symbol count) of the expression tree"""
    return sum(1 for _ in _post_order(f))


def atoms(f: Expression) -> List[str]:
    return sorted({n.name for n in _post_order(f) if isinstance(n, Atom)})


def atomic_programs(f: Expression) -> List[str]:
    return sorted({n.name for n in _post_order(f) if isinstance(n, AtomicProg)})
