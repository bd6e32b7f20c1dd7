from .base import (
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
    SourceSpan,
    Star,
    StrongNeg,
    Test,
    atomic_programs,
    atoms,
    both,
    children,
    choice,
    conj,
    disj,
    iff,
    neg,
    neither,
    only_false,
    only_true,
    size,
    subexpressions,
    top,
)
from .parser import FormulaParser, parse_formula, parse_program
from .printer import print_formula, print_program

__all__ = [
    'And', 'Atom', 'AtomicProg', 'Bottom', 'Box', 'Choice', 'Diamond', 'Expression',
    'Formula', 'Implies', 'Or', 'Program', 'Seq', 'SourceSpan', 'Star', 'StrongNeg', 'Test',
    'atomic_programs', 'atoms', 'both', 'children', 'choice', 'conj', 'disj', 'iff', 'neg',
    'neither', 'only_false', 'only_true', 'size', 'subexpressions', 'top',
    'FormulaParser', 'parse_formula', 'parse_program', 'print_formula', 'print_program',
]
