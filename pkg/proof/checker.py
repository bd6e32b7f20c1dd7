"""
Checker for Hilbert-style proofs.

A proof is a list of lines; each line carries a formula and its justification: an
axiom schema instance, modus ponens from two earlier lines, or necessitation of an
earlier line under a program.
"""
import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Union

from joblib import Parallel, delayed

from syntax.base import Box, Formula, Implies, Program
from syntax.parser import parse_formula, parse_program
from utils.errors import FormatError, MalformedJustification, ParseError
from utils.logger import Logger
from .schemata import Schema, default_schemata, match_schema

INVALID_STEP = 'invalid_step'


@dataclass(frozen=True)
class Axiom:
    schema_id: str

    def __str__(self) -> str:
        return f"axiom:{self.schema_id}"


@dataclass(frozen=True)
class MP:
    """Modus ponens: line ``minor`` is psi, line ``major`` is psi -> chi (1-based)"""
    minor: int
    major: int

    def __str__(self) -> str:
        return f"mp:{self.minor},{self.major}"


@dataclass(frozen=True)
class Nec:
    premise: int
    program: Program

    def __str__(self) -> str:
        return f"nec:{self.premise}:{self.program}"


Justification = Union[Axiom, MP, Nec]


@dataclass(frozen=True)
class ProofLine:
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class ProofDoc:
    lines: tuple
    name: str = ''

    @property
    def conclusion(self) -> Optional[Formula]:
        return self.lines[-1].formula if self.lines else None


@dataclass(frozen=True)
class CheckResult:
    """
    Args:
        accepted: Whether every line checks
        failed_line: 1-based number of the first failing line
        reason: Why that line fails
        kind: ``invalid_step`` for a rejected line, None when accepted
    """
    accepted: bool
    failed_line: Optional[int] = None
    reason: Optional[str] = None
    kind: Optional[str] = None

    def __str__(self) -> str:
        return "ACCEPTED" if self.accepted else f"REJECTED line {self.failed_line}: {self.reason}"


def _line_number(text: str, line: int) -> int:
    try:
        value = int(text)
    except ValueError:
        raise MalformedJustification(f"Line reference {text!r} is not a number", line) from None
    return value


def parse_rule(rule: str, line: int) -> Justification:
    """
    Parse a justification: ``axiom:<id>``, ``mp:<i>,<j>`` or ``nec:<i>:<program>``

    Raises:
        MalformedJustification: On an unknown rule, a bad index or an unparseable program
    """
    if not isinstance(rule, str):
        raise MalformedJustification(f"Rule must be a string, got {rule!r}", line)
    kind, _, rest = rule.partition(':')
    kind = kind.strip().lower()
    if kind == 'axiom':
        if not rest.strip():
            raise MalformedJustification("Missing schema id", line)
        return Axiom(rest.strip())
    if kind == 'mp':
        parts = rest.split(',')
        if len(parts) != 2:
            raise MalformedJustification(f"Modus ponens needs two line numbers, got {rest!r}", line)
        return MP(_line_number(parts[0].strip(), line), _line_number(parts[1].strip(), line))
    if kind == 'nec':
        premise, sep, program = rest.partition(':')
        if not sep:
            raise MalformedJustification(f"Necessitation needs a line and a program, got {rest!r}", line)
        try:
            prog = parse_program(program)
        except ParseError as e:
            raise MalformedJustification(f"Unparseable program: {e}", line) from e
        return Nec(_line_number(premise.strip(), line), prog)
    raise MalformedJustification(f"Unknown rule {rule!r}", line)


def load_proof(text: str, name: str = '') -> ProofDoc:
    """
    Parse a proof file

    Raises:
        FormatError: On malformed JSON, missing keys or unparseable formulas
        MalformedJustification: On malformed rule strings
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"Invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})") from e
    if not isinstance(data, dict) or not isinstance(data.get('lines'), list):
        raise FormatError("A proof file holds an object with a 'lines' list", 'lines')
    lines = []
    for n, entry in enumerate(data['lines'], start=1):
        if not isinstance(entry, dict) or 'formula' not in entry or 'rule' not in entry:
            raise FormatError("Each line needs 'formula' and 'rule'", f"lines[{n}]")
        try:
            formula = parse_formula(entry['formula'])
        except ParseError as e:
            raise FormatError(f"Unparseable formula: {e}", f"lines[{n}].formula") from e
        lines.append(ProofLine(formula, parse_rule(entry['rule'], n)))
    return ProofDoc(tuple(lines), name)


def _earlier(index: int, line: int) -> int:
    if not 1 <= index < line:
        raise MalformedJustification(f"Reference to line {index} is not an earlier line", line)
    return index - 1


def check_proof(doc: ProofDoc, schemata: Optional[Dict[str, Schema]] = None) -> CheckResult:
    """
    Check every line of ``doc``

    Returns:
        Acceptance, or the first line that does not follow with the reason

    Raises:
        MalformedJustification: On a reference to a line that is not earlier or an
            unknown schema id
    """
    logger = Logger("proof_checker")
    schemata = schemata if schemata is not None else default_schemata()
    lines = doc.lines
    for n, line in enumerate(lines, start=1):
        f, just = line.formula, line.justification
        reason = None
        if isinstance(just, Axiom):
            if just.schema_id not in schemata:
                raise MalformedJustification(f"Unknown schema {just.schema_id!r}", n)
            if match_schema(f, schemata[just.schema_id]) is None:
                reason = f"not an instance of {just.schema_id}"
        elif isinstance(just, MP):
            minor = lines[_earlier(just.minor, n)].formula
            major = lines[_earlier(just.major, n)].formula
            if not isinstance(major, Implies):
                reason = f"line {just.major} is not an implication"
            elif major.left != minor:
                reason = f"antecedent of line {just.major} differs from line {just.minor}"
            elif major.right != f:
                reason = f"consequent of line {just.major} differs from this line"
        elif isinstance(just, Nec):
            premise = lines[_earlier(just.premise, n)].formula
            if f != Box(just.program, premise):
                reason = f"expected [{just.program}] applied to line {just.premise}"
        else:
            raise MalformedJustification(f"Unknown justification {just!r}", n)

        if reason is not None:
            logger.info(f"Proof {doc.name or '<anonymous>'} rejected at line {n}: {reason}")
            return CheckResult(False, n, reason, INVALID_STEP)
    logger.debug(f"Proof {doc.name or '<anonymous>'} accepted ({len(lines)} lines)")
    return CheckResult(True)


def check_proofs(docs: Sequence[ProofDoc], n_jobs: int = 1) -> List[CheckResult]:
    """Check independent proofs, in parallel when ``n_jobs`` is not 1; results keep input order"""
    if n_jobs == 1 or len(docs) < 2:
        return [check_proof(doc) for doc in docs]
    return Parallel(n_jobs=n_jobs)(delayed(check_proof)(doc) for doc in docs)
