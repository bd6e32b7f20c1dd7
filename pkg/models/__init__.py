from .kripke import Model, dump_model, load_model, model_from_dict, model_to_dict, restrict_reachable
from .relations import (
    compose,
    empty_relation,
    from_indices,
    from_pairs,
    identity,
    identity_on,
    image_exists,
    image_forall,
    pairs,
    rtc,
    union,
)

__all__ = [
    'Model', 'dump_model', 'load_model', 'model_from_dict', 'model_to_dict', 'restrict_reachable',
    'compose', 'empty_relation', 'from_indices', 'from_pairs', 'identity', 'identity_on',
    'image_exists', 'image_forall', 'pairs', 'rtc', 'union',
]
