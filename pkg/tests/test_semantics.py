import numpy as np
import pytest

from models import Model, compose, rtc
from proof import default_schemata
from semantics import (
    BelnapValue,
    Evaluator,
    belnap_table,
    belnap_value,
    entails_in_model,
    globally_entails_in_model,
    relation_of,
    supports,
    truth_sets,
    valid_in_model,
)
from syntax import Bottom, Star, both, iff, neither, only_false, only_true, parse_formula, parse_program
from tests.generators import instantiate, random_formula, random_model, random_program

P = parse_formula


def test_relation_of_examples():
    m = Model.from_sets(["s0", "s1"], relations={"a": [(0, 1)]}, plus={"p": [0]})
    assert relation_of(m, parse_program("a*")).tolist() == [[True, True], [False, True]]
    assert not relation_of(m, parse_program("a;a")).any()
    assert relation_of(m, parse_program("(p)?")).tolist() == [[True, False], [False, False]]


def test_star_is_rtc_and_seq_is_composition(rng):
    for _ in range(100):
        m = random_model(rng, 5)
        session = Evaluator(m)
        alpha, beta = random_program(rng, 2), random_program(rng, 2)
        r_alpha, r_beta = session.relation_of(alpha), session.relation_of(beta)
        star = session.relation_of(Star(alpha))
        assert np.array_equal(star, rtc(r_alpha))
        assert star.diagonal().all()
        assert np.array_equal(compose(star, star), star)
        n = m.size
        expected = np.zeros((n, n), dtype=bool)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    expected[i, k] |= r_alpha[i, j] and r_beta[j, k]
        assert np.array_equal(session.relation_of(parse_program(f"({alpha});({beta})")), expected)


def test_truth_sets_examples(both_model, footnote_model):
    sets = truth_sets(both_model, P("p"))
    assert sets.plus.tolist() == [True] and sets.minus.tolist() == [True]

    assert supports(footnote_model, "x", P("p -> q"), '+')
    assert not supports(footnote_model, "x", P("~p | q"), '+')

    m = Model.from_sets(["x", "y"], relations={"a": [(0, 1)]}, minus={"p": [1]})
    assert supports(m, "x", P("[a]p"), '-')


def test_falsum_and_strong_negation(rng):
    for _ in range(30):
        m = random_model(rng, 4)
        f = random_formula(rng, 3)
        for x in range(m.size):
            assert not supports(m, x, Bottom(), '+')
            assert supports(m, x, Bottom(), '-')
            assert supports(m, x, P("~F"), '+')
            assert supports(m, x, parse_formula(f"~({f})"), '+') == supports(m, x, f, '-')
            assert supports(m, x, parse_formula(f"~({f})"), '-') == supports(m, x, f, '+')


def test_unknown_sign_is_rejected(footnote_model):
    with pytest.raises(ValueError):
        supports(footnote_model, "x", P("p"), '*')


def test_belnap_values(both_model, footnote_model):
    assert belnap_value(footnote_model, "x", P("p")) == BelnapValue.NEITHER
    assert belnap_value(both_model, "x", P("p")) == BelnapValue.BOTH
    assert belnap_value(both_model, "x", Bottom()) == BelnapValue.FALSE_ONLY
    assert belnap_value(both_model, "x", P("p | !p")) == BelnapValue.BOTH
    assert str(BelnapValue.TRUE_ONLY) == "TrueOnly"


def test_belnap_value_agrees_with_characteristic_formulas(rng):
    characteristic = {
        BelnapValue.TRUE_ONLY: only_true,
        BelnapValue.FALSE_ONLY: only_false,
        BelnapValue.BOTH: both,
        BelnapValue.NEITHER: neither,
    }
    for _ in range(100):
        m = random_model(rng, 4)
        f = random_formula(rng, 3)
        x = int(rng.integers(m.size))
        value = belnap_value(m, x, f)
        for candidate, build in characteristic.items():
            assert supports(m, x, build(f), '+') == (candidate == value)


def test_belnap_table_lists_states_in_order():
    m = Model.from_sets(["s0", "s1"], plus={"p": [0]}, minus={"p": [0, 1]})
    assert belnap_table(m, P("p")) == [("s0", BelnapValue.BOTH), ("s1", BelnapValue.FALSE_ONLY)]


def test_validity_in_model(rng, footnote_model):
    assert not valid_in_model(footnote_model, P("p | ~p"))
    for _ in range(50):
        m = random_model(rng, 4)
        assert valid_in_model(m, P("p | !p"))
        assert valid_in_model(m, P("[a*]p -> (p & [a][a*]p)"))
        assert valid_in_model(m, P("(p & !p) -> F"))


def test_entailment_in_model(rng):
    for _ in range(100):
        m = random_model(rng, 3)
        f = random_formula(rng, 3)
        assert entails_in_model(m, [f], f)
        assert entails_in_model(m, [P("p"), P("p -> q")], P("q"))
        assert entails_in_model(m, [P("~(p -> q)")], P("p"))
        assert entails_in_model(m, [], f) == valid_in_model(m, f)


def test_deduction_theorem_per_model(rng):
    for _ in range(200):
        m = random_model(rng, 4)
        f, g = random_formula(rng, 3), random_formula(rng, 3)
        assert entails_in_model(m, [f], g) == valid_in_model(m, parse_formula(f"({f}) -> ({g})"))


def test_global_entailment_in_model():
    m = Model.from_sets(["x", "y"], relations={"a": [(0, 1)]}, plus={"p": [0, 1]})
    assert globally_entails_in_model(m, [P("p")], P("[a]p"))
    assert globally_entails_in_model(m, [P("q")], P("F"))
    assert not globally_entails_in_model(m, [], P("q"))


def test_every_schema_holds_in_random_models(rng):
    schemata = default_schemata()
    instances = [instantiate(s, rng, depth=2, program_depth=1)
                 for s in schemata.values() for _ in range(50)]
    for _ in range(100):
        session = Evaluator(random_model(rng, 4))
        for f in instances:
            assert session.valid(f), f


def test_iteration_laws(rng):
    for _ in range(100):
        m = random_model(rng, 5)
        alpha, f = random_program(rng, 2), random_formula(rng, 2)
        session = Evaluator(m)
        box_star = session.truth_sets(parse_formula(f"[({alpha})*]({f})"))
        dia_star = session.truth_sets(parse_formula(f"<({alpha})*>({f})"))
        assert np.array_equal(box_star.plus,
                              session.truth_sets(parse_formula(f"({f}) & [{alpha}][({alpha})*]({f})")).plus)
        assert np.array_equal(dia_star.plus,
                              session.truth_sets(parse_formula(f"({f}) | <{alpha}><({alpha})*>({f})")).plus)
        # induction and its dual as inclusions
        assert session.valid(parse_formula(f"(({f}) & [({alpha})*](({f}) -> [{alpha}]({f}))) -> [({alpha})*]({f})"))
        assert session.valid(parse_formula(f"<({alpha})*>({f}) -> (({f}) | <({alpha})*>(!({f}) & <{alpha}>({f})))"))


def test_lemma_schemata_hold_for_every_program_shape(rng):
    laws = [
        "[{a}+{b}]{f} <-> ([{a}]{f} & [{b}]{f})",
        "<{a}+{b}>{f} <-> (<{a}>{f} | <{b}>{f})",
        "[{a};{b}]{f} <-> [{a}][{b}]{f}",
        "<{a};{b}>{f} <-> <{a}><{b}>{f}",
        "[({g})?]{f} <-> (({g}) -> {f})",
        "<({g})?>{f} <-> (({g}) & {f})",
        "[({a})*]{f} <-> ({f} & [{a}][({a})*]{f})",
        "<({a})*>{f} <-> ({f} | <{a}><({a})*>{f})",
        "({f} & [({a})*]({f} -> [{a}]{f})) -> [({a})*]{f}",
        "<({a})*>{f} -> ({f} | <({a})*>(!{f} & <{a}>{f}))",
    ]
    for _ in range(50):
        m = random_model(rng, 4)
        session = Evaluator(m)
        parts = {
            'a': f"({random_program(rng, 2)})",
            'b': f"({random_program(rng, 2)})",
            'f': f"({random_formula(rng, 2)})",
            'g': str(random_formula(rng, 2)),
        }
        for law in laws:
            assert session.valid(parse_formula(law.format(**parts))), law


def test_replacement_fails_for_implication(rng, footnote_model):
    assert not valid_in_model(footnote_model, iff(P("p -> q"), P("~p | q")))
    for _ in range(100):
        assert valid_in_model(random_model(rng, 4), P("~(p -> q) <-> (p & ~q)"))


def test_session_memoizes_programs():
    m = Model.from_sets(["s0", "s1", "s2"], relations={"a": [(0, 1), (1, 2)]}, plus={"p": [2]})
    session = Evaluator(m)
    session.truth_sets(P("[(a;a)*]p & <(a;a)*>p & [(a;a)*][(a;a)*]p"))
    # a, a;a and (a;a)* are each computed once
    assert session.stats['relations'] == 3
    before = dict(session.stats)
    session.truth_sets(P("[(a;a)*]p"))
    assert session.stats == before
