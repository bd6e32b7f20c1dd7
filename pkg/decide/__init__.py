from .classical import ClassicalEvaluator, classical_holds, doubled_model, fold_doubled
from .elimination import DEFAULT_TYPE_LIMIT, HintikkaType, TypeElimination, pdl_sat
from .procedures import countermodel, global_consequence, global_reduction, sat, valid
from .search import BatchEvaluator, bounded_countermodel_search
from .translation import is_classical, minus_atom, plus_atom, translate, translate_program
from .verdict import SAT, UNSAT, Verdict

__all__ = [
    'ClassicalEvaluator', 'classical_holds', 'doubled_model', 'fold_doubled',
    'DEFAULT_TYPE_LIMIT', 'HintikkaType', 'TypeElimination', 'pdl_sat',
    'countermodel', 'global_consequence', 'global_reduction', 'sat', 'valid',
    'BatchEvaluator', 'bounded_countermodel_search',
    'is_classical', 'minus_atom', 'plus_atom', 'translate', 'translate_program',
    'SAT', 'UNSAT', 'Verdict',
]
