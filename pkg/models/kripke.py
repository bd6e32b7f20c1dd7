"""
Finite standard models: a non-empty list of states, one relation per atomic program
and a pair of valuations (support V+ and anti-support V-) per atomic formula.
"""
import json
from dataclasses import dataclass
from types import MappingProxyType
from typing import Any, Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order

from utils.errors import FormatError
from utils.logger import Logger
from .relations import Relation, StateSet, empty_relation, frozen, from_indices, from_pairs

StateRef = Union[int, str]


@dataclass(frozen=True, eq=False)
class Model:
    """
    A finite standard model

    Args:
        states: State names; their order fixes the state indices
        relations: Atomic program name -> (n, n) boolean relation
        plus: Atomic formula name -> (n,) boolean support set V+
        minus: Atomic formula name -> (n,) boolean anti-support set V-

    Atomic programs and formulas that are not listed denote the empty relation and
    the empty support/anti-support sets.
    """
    states: Tuple[str, ...]
    relations: Mapping[str, Relation]
    plus: Mapping[str, StateSet]
    minus: Mapping[str, StateSet]

    def __post_init__(self):
        n = len(self.states)
        if n == 0:
            raise FormatError("A model needs at least one state", "states")
        if len(set(self.states)) != n:
            raise FormatError("Duplicate state names", "states")
        for name, rel in self.relations.items():
            if rel.shape != (n, n):
                raise FormatError(f"Relation has shape {rel.shape}, expected {(n, n)}", name)
        for table in (self.plus, self.minus):
            for name, s in table.items():
                if s.shape != (n,):
                    raise FormatError(f"Valuation has shape {s.shape}, expected {(n,)}", name)
        object.__setattr__(self, 'states', tuple(self.states))
        object.__setattr__(self, 'relations', MappingProxyType({k: frozen(v) for k, v in self.relations.items()}))
        object.__setattr__(self, 'plus', MappingProxyType({k: frozen(v) for k, v in self.plus.items()}))
        object.__setattr__(self, 'minus', MappingProxyType({k: frozen(v) for k, v in self.minus.items()}))

    @classmethod
    def from_sets(cls,
                  states: Sequence[str],
                  relations: Optional[Mapping[str, Iterable[Tuple[int, int]]]] = None,
                  plus: Optional[Mapping[str, Iterable[int]]] = None,
                  minus: Optional[Mapping[str, Iterable[int]]] = None) -> 'Model':
        """Build a model from index pairs and index sets"""
        n = len(states)
        relations = {a: [tuple(edge) for edge in edges] for a, edges in (relations or {}).items()}
        plus = {p: list(idx) for p, idx in (plus or {}).items()}
        minus = {p: list(idx) for p, idx in (minus or {}).items()}
        # numpy would wrap negative indices around to the last states
        indices = {a: [i for edge in edges for i in edge] for a, edges in relations.items()}
        for key, idx in [*indices.items(), *plus.items(), *minus.items()]:
            if any(i < 0 for i in idx):
                raise FormatError(f"Negative state index in {idx}", key)
        try:
            return cls(
                states=tuple(states),
                relations={a: from_pairs(n, edges) for a, edges in relations.items()},
                plus={p: from_indices(n, idx) for p, idx in plus.items()},
                minus={p: from_indices(n, idx) for p, idx in minus.items()},
            )
        except IndexError as e:
            raise FormatError(f"State index out of range: {e}") from e

    @property
    def size(self) -> int:
        return len(self.states)

    def state_index(self, x: StateRef) -> int:
        if isinstance(x, (int, np.integer)):
            if not 0 <= x < self.size:
                raise IndexError(f"State index {x} out of range for {self.size} states")
            return int(x)
        try:
            return self.states.index(x)
        except ValueError:
            raise KeyError(f"Unknown state: {x}") from None

    def relation(self, name: str) -> Relation:
        rel = self.relations.get(name)
        return rel if rel is not None else empty_relation(self.size)

    def val_plus(self, name: str) -> StateSet:
        s = self.plus.get(name)
        return s if s is not None else np.zeros(self.size, dtype=bool)

    def val_minus(self, name: str) -> StateSet:
        s = self.minus.get(name)
        return s if s is not None else np.zeros(self.size, dtype=bool)

    def atom_names(self):
        return sorted(set(self.plus) | set(self.minus))

    def program_names(self):
        return sorted(self.relations)

    def __repr__(self) -> str:
        return f"Model(states={list(self.states)}, programs={self.program_names()}, atoms={self.atom_names()})"


def _state_list(value: Any, index: Dict[str, int], key: str) -> list:
    if not isinstance(value, list):
        raise FormatError("Expected a list of state names", key)
    result = []
    for name in value:
        if name not in index:
            raise FormatError(f"Unknown state {name!r}", key)
        result.append(index[name])
    return result


def model_from_dict(data: Any) -> Model:
    """
    Decode and validate the JSON object form of a model

    Raises:
        FormatError: naming the offending key or state
    """
    logger = Logger("model_loader")
    if not isinstance(data, dict):
        raise FormatError("A model file must hold a JSON object")
    unknown = set(data) - {"states", "atoms", "programs"}
    if unknown:
        raise FormatError("Unknown top-level keys", ", ".join(sorted(unknown)))

    states = data.get("states")
    if not isinstance(states, list) or not all(isinstance(s, str) for s in states):
        raise FormatError("'states' must be a list of state names", "states")
    if not states:
        logger.error("Rejected model with empty state list")
        raise FormatError("'states' must not be empty", "states")
    index: Dict[str, int] = {}
    for name in states:
        if name in index:
            logger.error(f"Rejected model with duplicate state {name!r}")
            raise FormatError(f"Duplicate state name {name!r}", "states")
        index[name] = len(index)

    atoms = data.get("atoms", {})
    if not isinstance(atoms, dict):
        raise FormatError("'atoms' must be an object", "atoms")
    plus, minus = {}, {}
    for atom, entry in atoms.items():
        if not isinstance(entry, dict) or set(entry) - {"plus", "minus"}:
            raise FormatError("Atom entries take only 'plus' and 'minus'", f"atoms.{atom}")
        plus[atom] = _state_list(entry.get("plus", []), index, f"atoms.{atom}.plus")
        minus[atom] = _state_list(entry.get("minus", []), index, f"atoms.{atom}.minus")

    programs = data.get("programs", {})
    if not isinstance(programs, dict):
        raise FormatError("'programs' must be an object", "programs")
    relations = {}
    for prog, edges in programs.items():
        key = f"programs.{prog}"
        if not isinstance(edges, list):
            raise FormatError("Expected a list of [source, target] pairs", key)
        pairs_ = []
        for edge in edges:
            if not isinstance(edge, list) or len(edge) != 2:
                raise FormatError(f"Malformed edge {edge!r}", key)
            pairs_.append(tuple(_state_list(edge, index, key)))
        relations[prog] = pairs_

    model = Model.from_sets(states, relations, plus, minus)
    logger.debug(f"Loaded {model!r}")
    return model


def load_model(text: str) -> Model:
    """
    Parse a model file (JSON, UTF-8)

    Args:
        text: File contents

    Returns:
        A validated model

    Raises:
        FormatError: On malformed JSON, unknown state references, duplicate state
            names or an empty state list
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"Invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})") from e
    return model_from_dict(data)


def model_to_dict(m: Model) -> dict:
    names = m.states
    atoms = {}
    # atoms and programs denoting nothing are left out; loading restores them as empty
    for atom in m.atom_names():
        plus, minus = np.flatnonzero(m.val_plus(atom)), np.flatnonzero(m.val_minus(atom))
        if len(plus) or len(minus):
            atoms[atom] = {"plus": [names[i] for i in plus], "minus": [names[i] for i in minus]}
    programs = {}
    for prog in m.program_names():
        edges = [[names[i], names[j]] for i, j in zip(*np.nonzero(m.relation(prog)))]
        if edges:
            programs[prog] = edges
    return {"states": list(names), "atoms": atoms, "programs": programs}


def dump_model(m: Model) -> str:
    """Serialize to the model file format; state order is preserved, keys are sorted"""
    return json.dumps(model_to_dict(m), indent=2, sort_keys=True)


def restrict_reachable(m: Model, x: StateRef, progs: Iterable[str]) -> Model:
    """
    Submodel generated by ``x`` under the union of the named atomic programs

    Args:
        m: Source model
        x: Root state (name or index); always kept
        progs: Atomic program names whose edges are followed

    Returns:
        The model on the states reachable from ``x`` by the reflexive transitive
        closure of the union, with relations and valuations restricted to them
    """
    root = m.state_index(x)
    progs = sorted(set(progs))
    adjacency = np.zeros((m.size, m.size), dtype=bool)
    for a in progs:
        adjacency |= m.relation(a)
    order = breadth_first_order(csr_matrix(adjacency), root, directed=True, return_predecessors=False)
    keep = np.sort(np.asarray(order, dtype=int))
    Logger("model").debug(f"Restricting {m.size} states to {len(keep)} reachable from {m.states[root]}")
    return Model(
        states=tuple(m.states[i] for i in keep),
        relations={a: rel[np.ix_(keep, keep)] for a, rel in m.relations.items()},
        plus={p: s[keep] for p, s in m.plus.items()},
        minus={p: s[keep] for p, s in m.minus.items()},
    )
