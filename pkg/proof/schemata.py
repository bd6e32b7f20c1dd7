"""
Axiom schemata and syntactic schema matching.

A schema is a formula whose atoms ``phi``, ``psi``, ``chi`` stand for arbitrary
formulas and whose atomic programs ``alpha``, ``beta`` stand for arbitrary programs.
The catalogue is read from configs/axioms.yaml.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Mapping, Optional

from configs.config import AXIOMS_FILE, load_yaml
from syntax.base import Atom, AtomicProg, Bottom, Expression, Formula, children
from syntax.parser import parse_formula
from utils.errors import FormatError
from utils.logger import Logger

Substitution = Dict[str, Expression]


@dataclass(frozen=True)
class Schema:
    id: str
    group: str
    pattern: Formula
    formula_vars: FrozenSet[str]
    program_vars: FrozenSet[str]

    def instantiate(self, substitution: Mapping[str, Expression]) -> Formula:
        return substitute(self.pattern, substitution, self.formula_vars, self.program_vars)


def substitute(e: Expression, substitution: Mapping[str, Expression],
               formula_vars: FrozenSet[str], program_vars: FrozenSet[str]) -> Expression:
    """Replace metavariables in ``e``; metavariables without a binding are kept"""
    if isinstance(e, Atom):
        return substitution.get(e.name, e) if e.name in formula_vars else e
    if isinstance(e, AtomicProg):
        return substitution.get(e.name, e) if e.name in program_vars else e
    if isinstance(e, Bottom):
        return e
    parts = [substitute(c, substitution, formula_vars, program_vars) for c in children(e)]
    return type(e)(*parts)


def _match(pattern: Expression, target: Expression, schema: Schema, binding: Substitution) -> bool:
    if isinstance(pattern, Atom) and pattern.name in schema.formula_vars:
        if not isinstance(target, Formula):
            return False
        bound = binding.setdefault(pattern.name, target)
        return bound == target
    if isinstance(pattern, AtomicProg) and pattern.name in schema.program_vars:
        if isinstance(target, Formula):
            return False
        bound = binding.setdefault(pattern.name, target)
        return bound == target
    if type(pattern) is not type(target):
        return False
    if isinstance(pattern, (Atom, AtomicProg)):
        return pattern.name == target.name
    return all(_match(p, t, schema, binding) for p, t in zip(children(pattern), children(target)))


def match_schema(f: Formula, schema: Schema) -> Optional[Substitution]:
    """
    Match ``f`` against ``schema``

    Returns:
        The substitution of formulas and programs for metavariables under which the
        pattern becomes exactly ``f``, or None
    """
    binding: Substitution = {}
    return binding if _match(schema.pattern, f, schema, binding) else None


def load_schemata(path: Optional[str] = None) -> Dict[str, Schema]:
    """
    Read a schema catalogue

    Args:
        path: YAML catalogue (default configs/axioms.yaml)

    Returns:
        Schema id -> Schema, in file order

    Raises:
        FormatError: On duplicate ids or patterns that do not parse
    """
    logger = Logger("schemata")
    data = load_yaml(path or AXIOMS_FILE)
    formula_vars = frozenset(data.get('formula_metavariables', ()))
    program_vars = frozenset(data.get('program_metavariables', ()))
    catalogue: Dict[str, Schema] = {}
    for entry in data.get('schemata', []):
        schema_id = entry['id']
        if schema_id in catalogue:
            logger.error(f"Duplicate schema id {schema_id}")
            raise FormatError("Duplicate schema id", schema_id)
        try:
            pattern = parse_formula(entry['pattern'])
        except ValueError as e:
            raise FormatError(f"Unparseable pattern: {e}", schema_id) from e
        catalogue[schema_id] = Schema(schema_id, entry.get('group', ''), pattern, formula_vars, program_vars)
    logger.debug(f"Loaded {len(catalogue)} schemata")
    return catalogue


@lru_cache(maxsize=1)
def default_schemata() -> Dict[str, Schema]:
    return load_schemata()


def schema(schema_id: str) -> Schema:
    return default_schemata()[schema_id]
