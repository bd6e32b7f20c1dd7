from .closure import ClosureSet, Fingerprint, closure_bits, fingerprint, fingerprint_key, fl_closure
from .evaluator import (
    BelnapValue,
    Evaluator,
    TruthSets,
    belnap_table,
    belnap_value,
    entails_in_model,
    globally_entails_in_model,
    relation_of,
    supports,
    truth_sets,
    valid_in_model,
)
from .filtration import (
    LEMMA_ITEMS,
    Filtration,
    FiltrationReport,
    Violation,
    check_filtration_lemma,
    filtrate,
)

__all__ = [
    'ClosureSet', 'Fingerprint', 'closure_bits', 'fingerprint', 'fingerprint_key', 'fl_closure',
    'BelnapValue', 'Evaluator', 'TruthSets', 'belnap_table', 'belnap_value', 'entails_in_model',
    'globally_entails_in_model', 'relation_of', 'supports', 'truth_sets', 'valid_in_model',
    'LEMMA_ITEMS', 'Filtration', 'FiltrationReport', 'Violation', 'check_filtration_lemma', 'filtrate',
]
