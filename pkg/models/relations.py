"""
Relation algebra over a finite state space.

Unless otherwise stated, a relation is a square boolean numpy array of shape (n, n)
where ``r[i, j]`` means the pair (i, j) is in the relation, and a state set is a
boolean numpy array of shape (n,).
"""
from typing import Iterable, List, Tuple

import numpy as np

Relation = np.ndarray
StateSet = np.ndarray


def frozen(arr: np.ndarray) -> np.ndarray:
    """Return a read-only boolean copy"""
    out = np.array(arr, dtype=bool, copy=True)
    out.setflags(write=False)
    return out


def empty_relation(n: int) -> Relation:
    return np.zeros((n, n), dtype=bool)


def identity(n: int) -> Relation:
    return np.eye(n, dtype=bool)


def identity_on(s: StateSet) -> Relation:
    """Identity relation restricted to the states in ``s``"""
    return np.diag(np.asarray(s, dtype=bool))


def compose(r: Relation, q: Relation) -> Relation:
    """Relational composition: (i, k) such that r(i, j) and q(j, k) for some j"""
    return (r.astype(np.int64) @ q.astype(np.int64)) > 0


def union(r: Relation, q: Relation) -> Relation:
    return np.logical_or(r, q)


def rtc(r: Relation) -> Relation:
    """
    Reflexive transitive closure (Warshall's algorithm, vectorized per pivot)

    Exact; rtc(rtc(r)) == rtc(r).
    """
    n = r.shape[0]
    assert r.shape == (n, n)
    closure = np.logical_or(r, identity(n))
    for k in range(n):
        closure |= np.outer(closure[:, k], closure[k, :])
    return closure


def image_exists(r: Relation, s: StateSet) -> StateSet:
    """States with at least one r-successor in ``s``"""
    return np.any(r & s[np.newaxis, :], axis=1)


def image_forall(r: Relation, s: StateSet) -> StateSet:
    """States all of whose r-successors lie in ``s``"""
    return ~np.any(r & ~s[np.newaxis, :], axis=1)


def pairs(r: Relation) -> List[Tuple[int, int]]:
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(r))]


def from_pairs(n: int, edges: Iterable[Tuple[int, int]]) -> Relation:
    rel = empty_relation(n)
    for i, j in edges:
        rel[i, j] = True
    return rel


def from_indices(n: int, indices: Iterable[int]) -> StateSet:
    s = np.zeros(n, dtype=bool)
    for i in indices:
        s[i] = True
    return s
