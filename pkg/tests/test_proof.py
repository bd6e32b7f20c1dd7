import json
from pathlib import Path

import pytest

from proof import (
    MP,
    Axiom,
    Nec,
    ProofDoc,
    ProofLine,
    check_proof,
    check_proofs,
    default_schemata,
    load_proof,
    load_schemata,
    match_schema,
    parse_rule,
    schema,
)
from semantics import Evaluator
from syntax import And, Box, Diamond, Formula, Implies, Or, parse_formula, parse_program
from tests.generators import instantiate, random_model
from utils import FormatError, MalformedJustification

P = parse_formula
PROOFS = sorted((Path(__file__).resolve().parents[1] / 'corpus' / 'proofs').glob('*.json'))


def _proof(*lines):
    return load_proof(json.dumps({"lines": [{"formula": f, "rule": r} for f, r in lines]}))


def _read(path: Path):
    return load_proof(path.read_text(encoding='utf-8'), name=path.name)


# ---- schemata ----

def test_catalogue():
    catalogue = default_schemata()
    assert len(catalogue) == 32
    assert list(catalogue)[:3] == ["CL1", "CL2", "CL3"]
    assert {s.group for s in catalogue.values()} == {"classical", "strong_negation", "modal", "pdl", "interaction"}


def test_match_examples():
    binding = match_schema(P("p -> ([a]q -> p)"), schema("CL1"))
    assert binding == {"phi": P("p"), "psi": P("[a]q")}
    assert match_schema(P("p -> (q -> q)"), schema("CL1")) is None

    binding = match_schema(P("[a;b*]p <-> [a][b*]p"), schema("PDL-SEQ"))
    assert binding["alpha"] == parse_program("a")
    assert binding["beta"] == parse_program("b*")
    # a formula metavariable never binds a program and vice versa
    assert match_schema(P("[(q)?]p <-> (q -> p)"), schema("PDL-TEST")) is not None
    assert match_schema(P("[a]p <-> (q -> p)"), schema("PDL-TEST")) is None


def test_instances_match_their_schema(rng):
    for s in default_schemata().values():
        for _ in range(10):
            f = instantiate(s, rng)
            assert match_schema(f, s) is not None, (s.id, f)


def test_duplicate_schema_ids_are_rejected(tmp_path):
    path = tmp_path / "axioms.yaml"
    path.write_text(
        "formula_metavariables: [phi]\n"
        "schemata:\n"
        "  - {id: A, pattern: \"phi -> phi\"}\n"
        "  - {id: A, pattern: \"phi | !phi\"}\n",
        encoding='utf-8',
    )
    with pytest.raises(FormatError):
        load_schemata(str(path))


def test_unparseable_pattern_is_rejected(tmp_path):
    path = tmp_path / "axioms.yaml"
    path.write_text("schemata:\n  - {id: A, pattern: \"phi ->\"}\n", encoding='utf-8')
    with pytest.raises(FormatError):
        load_schemata(str(path))


# ---- justifications ----

@pytest.mark.parametrize("rule, expected", [
    ("axiom:CL1", Axiom("CL1")),
    ("mp:1,2", MP(1, 2)),
    ("mp: 3 , 4", MP(3, 4)),
    ("nec:1:a", Nec(1, parse_program("a"))),
    ("nec:2:(a + b)*", Nec(2, parse_program("(a+b)*"))),
])
def test_parse_rule(rule, expected):
    assert parse_rule(rule, 1) == expected


@pytest.mark.parametrize("rule", ["axiom:", "mp:1", "mp:x,2", "nec:1", "nec:1:a;", "cut:1,2", 7])
def test_malformed_rules(rule):
    with pytest.raises(MalformedJustification) as info:
        parse_rule(rule, 3)
    assert info.value.line == 3


def test_rule_text_round_trips():
    for rule in ["axiom:K", "mp:1,2", "nec:1:a;b"]:
        assert str(parse_rule(rule, 1)) == rule


@pytest.mark.parametrize("text", [
    "not json",
    "[]",
    json.dumps({"lines": [{"formula": "p"}]}),
    json.dumps({"lines": [{"formula": "p ->", "rule": "axiom:CL1"}]}),
])
def test_malformed_proof_files(text):
    with pytest.raises(FormatError):
        load_proof(text)


# ---- checking ----

def test_single_axiom_line():
    result = check_proof(_proof(("p -> (q -> p)", "axiom:CL1")))
    assert result.accepted
    assert str(result) == "ACCEPTED"


def test_wrong_instance_is_rejected():
    result = check_proof(_proof(("p -> (q -> q)", "axiom:CL1")))
    assert not result.accepted
    assert result.failed_line == 1
    assert result.kind == 'invalid_step'
    assert str(result) == "REJECTED line 1: not an instance of CL1"


def test_necessitation():
    doc = _proof(("p -> (q -> p)", "axiom:CL1"), ("[a](p -> (q -> p))", "nec:1:a"))
    assert check_proof(doc).accepted
    doc = _proof(("p -> (q -> p)", "axiom:CL1"), ("[b](p -> (q -> p))", "nec:1:a"))
    result = check_proof(doc)
    assert (result.failed_line, result.reason) == (2, "expected [a] applied to line 1")


def test_modus_ponens_failures():
    base = [
        ("p -> (q -> p)", "axiom:CL1"),
        ("(p -> (q -> p)) -> (r -> (p -> (q -> p)))", "axiom:CL1"),
    ]
    assert check_proof(_proof(*base, ("r -> (p -> (q -> p))", "mp:1,2"))).accepted
    assert check_proof(_proof(*base, ("r -> p", "mp:1,2"))).reason == \
        "consequent of line 2 differs from this line"
    assert check_proof(_proof(*base, ("q", "mp:2,1"))).reason == \
        "antecedent of line 1 differs from line 2"
    doc = _proof(("(p & q) -> p", "axiom:CL3"), ("F -> p", "axiom:CL9"), ("p", "mp:1,1"))
    assert check_proof(doc).accepted is False
    assert check_proof(_proof(("p & p -> p", "axiom:CL3"), ("p", "mp:1,1"))).reason == \
        "antecedent of line 1 differs from line 1"


def test_mp_needs_an_implication():
    doc = ProofDoc((
        ProofLine(P("T <-> ~F"), Axiom("SN5")),
        ProofLine(P("p"), MP(1, 1)),
    ))
    assert check_proof(doc).reason == "line 1 is not an implication"


@pytest.mark.parametrize("lines", [
    [("p -> (q -> p)", "mp:1,1")],
    [("p -> (q -> p)", "axiom:CL1"), ("q", "mp:1,3")],
    [("p -> (q -> p)", "nec:0:a")],
    [("p -> (q -> p)", "axiom:NOPE")],
])
def test_bad_references_are_malformed(lines):
    with pytest.raises(MalformedJustification):
        check_proof(_proof(*lines))


@pytest.mark.parametrize("path", PROOFS, ids=lambda p: p.stem)
def test_corpus_proofs_are_accepted(path):
    assert check_proof(_read(path)).accepted


def test_corpus_uses_every_rule():
    used = set()
    for path in PROOFS:
        for line in _read(path).lines:
            j = line.justification
            used.add(j.schema_id if isinstance(j, Axiom) else type(j).__name__)
    assert used == set(default_schemata()) | {"MP", "Nec"}


def _mutations(f):
    """Formulas one connective away from ``f``: swapped binary connective or modality"""
    swaps = {And: (Or, Implies), Or: (And, Implies), Implies: (And, Or), Box: (Diamond,), Diamond: (Box,)}
    for other in swaps.get(type(f), ()):
        yield other(*_fields(f))
    for k, child in enumerate(_fields(f)):
        if isinstance(child, Formula):
            for mutated in _mutations(child):
                parts = list(_fields(f))
                parts[k] = mutated
                yield type(f)(*parts)


def _fields(f):
    return tuple(getattr(f, name) for name in f.__dataclass_fields__)


@pytest.mark.parametrize("path", PROOFS, ids=lambda p: p.stem)
def test_mutated_lines_are_rejected(path):
    doc = _read(path)
    for n, line in enumerate(doc.lines):
        for mutated in _mutations(line.formula):
            lines = list(doc.lines)
            lines[n] = ProofLine(mutated, line.justification)
            assert not check_proof(ProofDoc(tuple(lines), doc.name)).accepted, (path.name, n + 1, mutated)


@pytest.mark.parametrize("path", PROOFS, ids=lambda p: p.stem)
def test_accepted_conclusions_hold_in_random_models(path, rng):
    conclusion = _read(path).conclusion
    for _ in range(100):
        assert Evaluator(random_model(rng, 4, atoms=('p', 'q', 'r'))).valid(conclusion)


def test_batch_checking_keeps_order():
    docs = [_read(path) for path in PROOFS]
    docs.append(_proof(("p -> (q -> q)", "axiom:CL1")))
    results = check_proofs(docs, n_jobs=2)
    assert [r.accepted for r in results] == [True] * len(PROOFS) + [False]
    assert [r.accepted for r in check_proofs(docs)] == [r.accepted for r in results]
