"""Brute-force hitting-set oracle; ground truth for kernel correctness tests.

Deliberately naive: subsets are enumerated by size then lexicographically, so
witnesses and counterexamples are deterministic.  Not a competitive solver.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .hypergraph import Hypergraph


@dataclass(frozen=True)
class HittingSetAnswer:
    exists: bool
    witness: frozenset[int] | None = None


def min_hitting_set(h: Hypergraph, k: int) -> HittingSetAnswer:
    """Smallest hitting set of size at most ``k``, or a negative answer.

    The witness is the lexicographically least set of minimum size.  The
    search universe is restricted to vertices occurring in edges: a vertex
    outside every edge hits nothing, so dropping it never hurts a witness.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    universe = h.used_vertices()
    for size in range(min(k, len(universe)) + 1):
        for xs in itertools.combinations(universe, size):
            if h.is_hitting_set(xs):
                return HittingSetAnswer(True, frozenset(xs))
    return HittingSetAnswer(False, None)


def same_size_k_hitting_sets(h1: Hypergraph, h2: Hypergraph, k: int):
    """Check that two hypergraphs have identical size-``k`` hitting sets.

    Returns ``True`` on agreement, else the least counterexample set (by
    size, then lexicographically).  A set using vertices outside all edges
    hits exactly what its restriction hits, so the search is over vertices
    occurring in either edge set, plus the empty set.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    h1._require_same_universe(h2)
    universe = tuple(sorted(set(h1.used_vertices()) | set(h2.used_vertices())))
    for size in range(min(k, len(universe)) + 1):
        for xs in itertools.combinations(universe, size):
            if h1.is_hitting_set(xs) != h2.is_hitting_set(xs):
                return frozenset(xs)
    return True
