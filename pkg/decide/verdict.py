from dataclasses import dataclass
from typing import Optional

from models.kripke import Model

SAT = 'SAT'
UNSAT = 'UNSAT'


@dataclass(frozen=True, eq=False)
class Verdict:
    """
    Outcome of a satisfiability query

    Args:
        status: ``SAT`` or ``UNSAT``
        witness: For SAT, a model verifying the formula at ``state``
        state: Name of the witnessing state
    """
    status: str
    witness: Optional[Model] = None
    state: Optional[str] = None

    def __post_init__(self):
        if self.status not in (SAT, UNSAT):
            raise ValueError(f"Unknown verdict status: {self.status}")
        if (self.status == SAT) != (self.witness is not None and self.state is not None):
            raise ValueError("A SAT verdict carries a witness and a state; UNSAT carries neither")

    @classmethod
    def sat(cls, witness: Model, state: str) -> 'Verdict':
        return cls(SAT, witness, state)

    @classmethod
    def unsat(cls) -> 'Verdict':
        return cls(UNSAT)

    @property
    def is_sat(self) -> bool:
        return self.status == SAT

    def __repr__(self) -> str:
        if self.is_sat:
            return f"Verdict(SAT, state={self.state}, {self.witness!r})"
        return "Verdict(UNSAT)"
