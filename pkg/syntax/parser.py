"""
Parser for the ASCII concrete syntax of formulas and programs.

The grammar is handed to lark's Earley parser: the program primaries ``(program)`` and
``(formula)?`` share a prefix of unbounded length, so an LALR table would conflict.
Defined connectives (``!``, ``T``, ``<->``) are expanded while the tree is built.
"""
from functools import lru_cache
from typing import Iterable, List

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from utils.errors import ParseError
from utils.logger import Logger
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
    SourceSpan,
    Star,
    StrongNeg,
    Test,
    iff,
    neg,
    top,
)

BPDL_GRAMMAR = r"""
    ?formula: imp
            | formula "<->" imp            -> iff

    ?imp: disj
        | disj "->" imp                    -> implies

    ?disj: conj
         | disj "|" conj                   -> or_

    ?conj: unary
         | conj "&" unary                  -> and_

    ?unary: "~" unary                      -> strong_neg
          | "!" unary                      -> neg
          | "[" program "]" unary          -> box
          | "<" program ">" unary          -> diamond
          | primary

    ?primary: NAME                         -> atom
            | "F"                          -> bottom
            | "T"                          -> top
            | "(" formula ")"

    ?program: seq
            | program "+" seq              -> choice

    ?seq: star
        | seq ";" star                     -> seq

    ?star: pprim
         | star "*"                        -> star

    ?pprim: NAME                           -> atomic_prog
          | "(" program ")"
          | "(" formula ")" "?"            -> test

    NAME: /[a-z][a-zA-Z0-9_]*/

    %import common.WS
    %ignore WS
"""


@v_args(inline=True)
class TreeToSyntax(Transformer):
    """Builds syntax nodes bottom-up from the lark parse tree"""

    def atom(self, name):
        return Atom(str(name))

    def bottom(self):
        return Bottom()

    def top(self):
        return top()

    def strong_neg(self, body):
        return StrongNeg(body)

    def neg(self, body):
        return neg(body)

    def and_(self, left, right):
        return And(left, right)

    def or_(self, left, right):
        return Or(left, right)

    def implies(self, left, right):
        return Implies(left, right)

    def iff(self, left, right):
        return iff(left, right)

    def box(self, program, body):
        return Box(program, body)

    def diamond(self, program, body):
        return Diamond(program, body)

    def atomic_prog(self, name):
        return AtomicProg(str(name))

    def seq(self, first, second):
        return Seq(first, second)

    def choice(self, left, right):
        return Choice(left, right)

    def star(self, body):
        return Star(body)

    def test(self, formula):
        return Test(formula)


class FormulaParser:
    """
    Parser for formulas and programs of the dynamic language.

    One instance holds the compiled grammar and can be shared: parsing keeps no state
    between calls.
    """

    def __init__(self):
        self.logger = Logger("parser")
        self._lark = Lark(BPDL_GRAMMAR, parser='earley', start=['formula', 'program'])
        self._transformer = TreeToSyntax()

    def parse_formula(self, text: str) -> Formula:
        """
        Parse a formula

        Args:
            text: Concrete syntax, e.g. ``"[a*](p -> [a]p)"``

        Returns:
            The formula tree with defined connectives expanded

        Raises:
            ParseError: On malformed input, with the offending span and expected tokens
        """
        return self._parse(text, 'formula')

    def parse_program(self, text: str) -> Program:
        """Parse a program, e.g. ``"(a+b)*"``; raises ParseError on malformed input"""
        return self._parse(text, 'program')

    def _parse(self, text: str, start: str):
        if not text.strip():
            raise ParseError(f"Empty {start}", SourceSpan(0, len(text)), [])
        try:
            tree = self._lark.parse(text, start=start)
            result = self._transformer.transform(tree)
        except UnexpectedInput as e:
            error = self._to_parse_error(e, text, start)
            self.logger.debug(f"Rejected {start} {text!r}: {error}")
            raise error from e
        except VisitError as e:
            raise ParseError(f"Malformed {start}: {e.orig_exc}", SourceSpan(0, len(text))) from e
        except RecursionError as e:
            self.logger.debug(f"Rejected {start} of length {len(text)}: nesting too deep")
            span = SourceSpan(0, len(text))
            raise ParseError(f"{start.capitalize()} is nested too deeply", span) from e
        self.logger.debug(f"Parsed {start} {text!r}")
        return result

    def _to_parse_error(self, e: UnexpectedInput, text: str, start: str) -> ParseError:
        if isinstance(e, UnexpectedEOF):
            end = len(text)
            return ParseError(f"Unexpected end of {start}", SourceSpan(end, end),
                              self._describe(e.expected))
        if isinstance(e, UnexpectedCharacters):
            pos = e.pos_in_stream
            return ParseError(f"Unexpected character {text[pos:pos + 1]!r} in {start}",
                              SourceSpan(pos, pos + 1), self._describe(e.allowed))
        pos = max(getattr(e, 'pos_in_stream', 0) or 0, 0)
        return ParseError(f"Invalid {start}", SourceSpan(pos, min(pos + 1, len(text))),
                          self._describe(getattr(e, 'expected', ()) or ()))

    def _describe(self, terminal_names: Iterable[str]) -> List[str]:
        described = []
        for name in terminal_names:
            if name == 'NAME':
                described.append('identifier')
                continue
            try:
                described.append(repr(self._lark.get_terminal(name).pattern.value))
            except KeyError:
                described.append(name)
        return described


@lru_cache(maxsize=1)
def default_parser() -> FormulaParser:
    return FormulaParser()


def parse_formula(text: str) -> Formula:
    return default_parser().parse_formula(text)


def parse_program(text: str) -> Program:
    return default_parser().parse_program(text)
