import numpy as np
import pytest

from models import Model
from semantics import LEMMA_ITEMS, check_filtration_lemma, filtrate, fingerprint, fl_closure, truth_sets
from syntax import parse_formula
from tests.generators import random_formula, random_model
from utils import GuardExceeded

P = parse_formula


def test_twin_states_collapse(twin_model):
    filt = filtrate(twin_model, fl_closure(P("p")))
    # s0 falsifies p; s1 and s2 verify it
    assert filt.quotient.states == ("c0", "c1")
    assert filt.class_of == (0, 1, 1)
    assert filt.witness == (0, 1)
    assert filt.class_map() == {"s0": "c0", "s1": "c1", "s2": "c1"}
    assert filt.quotient.relation("a").tolist() == [[False, True], [False, False]]


def test_equal_fingerprints_give_one_state():
    m = Model.from_sets(["x", "y"], relations={"a": [(0, 1)]}, plus={"p": [0, 1]})
    filt = filtrate(m, fl_closure(P("p")))
    assert filt.quotient.size == 1
    assert filt.quotient.relation("a").tolist() == [[True]]
    assert filt.quotient.val_plus("p").tolist() == [True]


def test_distinguished_states_stay_apart(twin_model):
    filt = filtrate(twin_model, fl_closure(P("[a]p")))
    assert filt.quotient.size == 2
    m = Model.from_sets(["x", "y"], plus={"p": [0]}, minus={"p": [1]})
    assert filtrate(m, fl_closure(P("p"))).quotient.size == 2


def test_one_state_model_is_its_own_filtration(both_model):
    filt = filtrate(both_model, fl_closure(P("p & [a]p")))
    assert filt.quotient.size == 1
    assert check_filtration_lemma(both_model, P("p & [a]p")).ok


def test_lemma_holds_on_random_models(rng):
    checked = 0
    while checked < 500:
        phi = random_formula(rng, 3)
        T = fl_closure(phi)
        if len(T) > 8:
            continue
        m = random_model(rng, 5)
        report = check_filtration_lemma(m, phi, max_states=5)
        assert report.ok, (phi, m, report.violations)
        assert filtrate(m, T).quotient.size <= min(m.size, 4 ** len(T))
        checked += 1


def test_lemma_report_counts_every_item(twin_model):
    report = check_filtration_lemma(twin_model, P("[a]p & <a>~p"))
    assert set(report.checked) == set(LEMMA_ITEMS)
    assert all(report.checked[item] > 0 for item in LEMMA_ITEMS)
    assert report.failed_items() == []


def test_single_sign_identification_breaks_the_lemma(sign_twin_model):
    report = check_filtration_lemma(sign_twin_model, P("p"), both_signs=False)
    assert not report.ok
    assert 'vii' in report.failed_items()
    assert all(v.formula == P("p") for v in report.violations)
    assert check_filtration_lemma(sign_twin_model, P("p"), both_signs=True).ok


def test_lemma_checker_is_guarded():
    m = Model.from_sets([f"s{i}" for i in range(7)])
    with pytest.raises(GuardExceeded):
        check_filtration_lemma(m, P("p"))
    assert check_filtration_lemma(m, P("p"), max_states=7).ok


def test_filtration_is_idempotent(rng):
    for _ in range(100):
        m = random_model(rng, 5)
        T = fl_closure(random_formula(rng, 2))
        once = filtrate(m, T).quotient
        twice = filtrate(once, T)
        assert twice.quotient.size == once.size
        assert twice.class_of == tuple(range(once.size))
        for a in once.program_names():
            assert np.array_equal(twice.quotient.relation(a), once.relation(a))


def test_witness_has_the_class_fingerprint(rng):
    for _ in range(100):
        m = random_model(rng, 5)
        T = fl_closure(random_formula(rng, 2))
        filt = filtrate(m, T)
        for x in range(m.size):
            rep = filt.witness[filt.class_of[x]]
            assert rep <= x
            assert fingerprint(m, rep, T) == fingerprint(m, x, T)


def test_quotient_preserves_satisfaction_of_the_seed(rng):
    # a formula true somewhere stays true somewhere after filtration
    for _ in range(200):
        phi = random_formula(rng, 3)
        m = random_model(rng, 5)
        filt = filtrate(m, fl_closure(phi))
        before, after = truth_sets(m, phi), truth_sets(filt.quotient, phi)
        cls = np.asarray(filt.class_of)
        assert np.array_equal(before.plus, after.plus[cls])
        assert np.array_equal(before.minus, after.minus[cls])
