"""
Printer for formulas and programs.

Output re-parses to the identical tree and uses the fewest parentheses the
precedence table allows. Defined connectives are printed through their definitions
(``!p`` prints as ``p -> F``).
"""
from .base import (
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

# formula precedence, loosest first; "<->" is never produced
IMP, DISJ, CONJ, UNARY = 2, 3, 4, 5
# program precedence
CHOICE, SEQ, STAR, PRIMARY = 1, 2, 3, 4


def _formula(f: Formula, required: int) -> str:
    if isinstance(f, Atom):
        text, level = f.name, UNARY
    elif isinstance(f, Bottom):
        text, level = "F", UNARY
    elif isinstance(f, StrongNeg):
        text, level = "~" + _formula(f.body, UNARY), UNARY
    elif isinstance(f, Box):
        text, level = f"[{_program(f.program, CHOICE)}]" + _formula(f.body, UNARY), UNARY
    elif isinstance(f, Diamond):
        text, level = f"<{_program(f.program, CHOICE)}>" + _formula(f.body, UNARY), UNARY
    elif isinstance(f, And):
        text, level = f"{_formula(f.left, CONJ)} & {_formula(f.right, UNARY)}", CONJ
    elif isinstance(f, Or):
        text, level = f"{_formula(f.left, DISJ)} | {_formula(f.right, CONJ)}", DISJ
    elif isinstance(f, Implies):
        # right-associative
        text, level = f"{_formula(f.left, DISJ)} -> {_formula(f.right, IMP)}", IMP
    else:
        raise TypeError(f"Not a formula: {f!r}")
    return f"({text})" if level < required else text


def _program(p: Program, required: int) -> str:
    if isinstance(p, AtomicProg):
        text, level = p.name, PRIMARY
    elif isinstance(p, Test):
        text, level = f"({_formula(p.formula, IMP)})?", PRIMARY
    elif isinstance(p, Star):
        text, level = _program(p.body, STAR) + "*", STAR
    elif isinstance(p, Seq):
        text, level = f"{_program(p.first, SEQ)};{_program(p.second, STAR)}", SEQ
    elif isinstance(p, Choice):
        text, level = f"{_program(p.left, CHOICE)}+{_program(p.right, SEQ)}", CHOICE
    else:
        raise TypeError(f"Not a program: {p!r}")
    return f"({text})" if level < required else text


def print_formula(f: Formula) -> str:
    return _formula(f, IMP)


def print_program(p: Program) -> str:
    return _program(p, CHOICE)
