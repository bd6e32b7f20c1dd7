from .checker import (
    MP,
    Axiom,
    CheckResult,
    Justification,
    Nec,
    ProofDoc,
    ProofLine,
    check_proof,
    check_proofs,
    load_proof,
    parse_rule,
)
from .schemata import Schema, default_schemata, load_schemata, match_schema, schema, substitute

__all__ = [
    'MP', 'Axiom', 'CheckResult', 'Justification', 'Nec', 'ProofDoc', 'ProofLine',
    'check_proof', 'check_proofs', 'load_proof', 'parse_rule',
    'Schema', 'default_schemata', 'load_schemata', 'match_schema', 'schema', 'substitute',
]
