"""Sunflower detection, the k-cores operator, and the sequential kernel loop.

A sunflower with core C is a set of proper supersets of C (petals) whose
pairwise intersections all equal C; equivalently, the petal residuals ``p-C``
are nonempty and pairwise disjoint.  A k-core is the core of a sunflower with
more than k petals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .colorcoding import bucket_family, bucket_image
from .hypergraph import Edge, Hypergraph, canonical_edge


@dataclass(frozen=True)
class Sunflower:
    core: Edge
    petals: tuple[Edge, ...]


def verify_sunflower(s: Sunflower) -> bool:
    """Check the definition directly: proper supersets, pairwise meets equal the core."""
    if not s.petals:
        return False
    core = set(s.core)
    petal_sets = [set(p) for p in s.petals]
    if len(set(s.petals)) != len(s.petals):
        return False
    if not all(core < p for p in petal_sets):
        return False
    for i, p in enumerate(petal_sets):
        for q in petal_sets[i + 1 :]:
            if p & q != core:
                return False
    return True


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _has_disjoint(masks: list[int], count: int) -> Optional[list[int]]:
    """Indices of the lexicographically first ``count`` pairwise-disjoint masks."""

    chosen: list[int] = []

    def rec(start: int, used: int) -> bool:
        if len(chosen) == count:
            return True
        if count - len(chosen) > len(masks) - start:
            return False
        for i in range(start, len(masks)):
            if masks[i] & used:
                continue
            chosen.append(i)
            if rec(i + 1, used | masks[i]):
                return True
            chosen.pop()
        return False

    return chosen if rec(0, 0) else None


def find_sunflower(h: Hypergraph, core: Iterable[int], count: int) -> Optional[Sunflower]:
    """First sunflower in ``h`` with the given core and at least ``count`` petals.

    Petals are chosen among edges properly containing the core; the witness is
    the lexicographically least petal combination in canonical edge order.
    """
    if count < 1:
        raise ValueError("count must be positive")
    c = set(core)
    candidates = [e for e in h.edges if c < set(e)]
    if len(candidates) < count:
        return None
    residuals = [_mask(set(e) - c) for e in candidates]
    picked = _has_disjoint(residuals, count)
    if picked is None:
        return None
    return Sunflower(canonical_edge(c), tuple(candidates[i] for i in picked))


def k_cores(h: Hypergraph, k: int) -> Hypergraph:
    """All cores of sunflowers with more than ``k`` petals, by exact search."""
    if k < 1:
        raise ValueError("k must be positive")
    found = [c for c in h.refinement_candidates() if find_sunflower(h, c, k + 1)]
    return h.with_edges(found)


def k_cores_color_coded(h: Hypergraph, k: int) -> Hypergraph:
    """The k-cores operator driven by a coloring family instead of exact packing.

    For a candidate core C, a family coloring accepts iff each of k+1 colors
    is filled by the residual of some superset edge.  With all bucket-to-color
    assignments available, a multiplier admits an accepting assignment exactly
    when k+1 residual bucket images are pairwise disjoint, so the assignment
    stage is resolved by packing bucket images; the multiplier stage is
    iterated outright.  Bucket counts are sized so a collision-free multiplier
    exists for every true sunflower, which keeps the operator exactly equal to
    the search-based one.
    """
    if k < 1:
        raise ValueError("k must be positive")
    edges_as_sets = [set(e) for e in h.edges]
    found = []
    for c in h.refinement_candidates():
        cs = set(c)
        residuals = [e - cs for e in edges_as_sets if cs < e]
        if len(residuals) < k + 1:
            continue
        sizes = sorted((len(r) for r in residuals), reverse=True)
        support = min(h.vertex_count, sum(sizes[: k + 1]))
        p, buckets, multipliers = bucket_family(h.vertex_count, support)
        for a in multipliers:
            images = [bucket_image(r, a, p, buckets) for r in residuals]
            if _has_disjoint(images, k + 1) is not None:
                found.append(c)
                break
    return h.with_edges(found)


def _sequential_kernel_stats(h: Hypergraph, k: int) -> tuple[Hypergraph, int, int]:
    """Run the reduction loop, counting reduction steps and candidate tests."""
    if k < 1:
        raise ValueError("k must be positive")
    current = h
    steps = 0
    tests = 0
    while True:
        reduced = False
        for c in current.refinement_candidates():
            tests += 1
            s = find_sunflower(current, c, k + 1)
            if s is not None:
                remaining = set(current.edges) - set(s.petals)
                remaining.add(s.core)
                current = current.with_edges(remaining)
                steps += 1
                reduced = True
                break
        if not reduced:
            return current, steps, tests


def sequential_kernel(h: Hypergraph, k: int) -> Hypergraph:
    """Classic loop: repeatedly replace a sunflower of size k+1 by its core.

    Candidate cores are scanned in canonical order after every reduction, so
    the result is a deterministic function of the input even though the rule
    itself does not prescribe an order.  At the fixed point the edge count is
    bounded by ``k**d * d!``.
    """
    kernel, _, _ = _sequential_kernel_stats(h, k)
    return kernel
