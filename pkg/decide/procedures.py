"""
Satisfiability, validity and global consequence for four-valued formulas.
"""
from typing import Iterable

from semantics.evaluator import supports
from syntax.base import AtomicProg, Box, Formula, Implies, Star, atomic_programs, choice, conj, neg
from utils.errors import CertificateError
from utils.logger import Logger
from .classical import fold_doubled
from .elimination import DEFAULT_TYPE_LIMIT, pdl_sat
from .translation import translate
from .verdict import Verdict


def sat(phi: Formula, type_limit: int = DEFAULT_TYPE_LIMIT) -> Verdict:
    """
    Decide whether some state of some model verifies ``phi``

    The verification condition of ``phi`` is decided classically; a classical witness
    is folded back into a four-valued model and re-checked before it is returned.

    Raises:
        ResourceLimit: If the type table exceeds ``type_limit``
        CertificateError: If the folded witness does not verify ``phi``
    """
    logger = Logger("decide")
    t, _ = translate(phi)
    verdict = pdl_sat(t, type_limit)
    if not verdict.is_sat:
        logger.debug(f"UNSAT: {phi}")
        return verdict
    model = fold_doubled(verdict.witness)
    if not supports(model, verdict.state, phi, '+'):
        logger.error(f"Folded witness does not verify {phi}")
        raise CertificateError(f"Witness model does not verify {phi}")
    logger.debug(f"SAT: {phi} at {verdict.state} of a {model.size}-state model")
    return Verdict.sat(model, verdict.state)


def countermodel(phi: Formula, type_limit: int = DEFAULT_TYPE_LIMIT) -> Verdict:
    """SAT with a state that does not verify ``phi``, or UNSAT when ``phi`` is valid"""
    return sat(neg(phi), type_limit)


def valid(phi: Formula, type_limit: int = DEFAULT_TYPE_LIMIT) -> bool:
    """True iff every state of every model verifies ``phi``"""
    return not countermodel(phi, type_limit).is_sat


def global_reduction(premises: Iterable[Formula], phi: Formula) -> Formula:
    """
    Formula that is valid iff ``phi`` is a global consequence of ``premises``:
    ``[(a1 + ... + an)*](conjunction of premises) -> phi`` over the atomic programs
    occurring anywhere in the query, or the plain implication when there are none
    """
    premises = list(premises)
    body = conj(premises)
    names = sorted(set(atomic_programs(phi)).union(*(atomic_programs(p) for p in premises)))
    if not names:
        return Implies(body, phi)
    everywhere = Star(choice(AtomicProg(a) for a in names))
    return Implies(Box(everywhere, body), phi)


def global_consequence(premises: Iterable[Formula], phi: Formula,
                       type_limit: int = DEFAULT_TYPE_LIMIT) -> bool:
    """True iff ``phi`` is valid in every model in which all ``premises`` are valid"""
    return valid(global_reduction(premises, phi), type_limit)
