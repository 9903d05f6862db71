"""Matryoshka chains, kernel assembly, and the three kernelization pipelines.

A matryoshka sequence for (H, k) is a chain M_0..M_d(H) with M_0 = H, layer
dimensions shrinking by one, the k-cores of each layer contained in the next,
and every size-k hitting set of H hitting every layer.  Any such chain yields
the kernel  K = (M_0 - M_1) + ... + (M_{d-1} - M_d) + M_d  (with "-" the
containment-removal operator), which has the same size-k hitting sets as H
and at most sum(k^i * i!) edges.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .hypergraph import Hypergraph
from .pseudo import pseudo_cores
from .sunflower import _sequential_kernel_stats, k_cores

ALGORITHMS = ("sequential", "cores", "pseudo")


def kernel_size_bound(k: int, d: int) -> int:
    return sum(k**i * math.factorial(i) for i in range(d + 1))


@dataclass(frozen=True)
class MatryoshkaSequence:
    base: Hypergraph
    k: int
    layers: tuple[Hypergraph, ...]


@dataclass(frozen=True)
class KernelReport:
    kernel: Hypergraph
    algorithm: str
    rounds: int
    work: int
    bound: int


def cores_chain(h: Hypergraph, k: int) -> MatryoshkaSequence:
    """Iterated k-cores: each layer is the cores of the previous one."""
    layers = [h]
    for _ in range(h.dimension()):
        layers.append(k_cores(layers[-1], k))
    return MatryoshkaSequence(h, k, tuple(layers))


def pseudo_chain(h: Hypergraph, k: int) -> MatryoshkaSequence:
    """Level-L pseudo-cores for L = 0..d(H), each computed directly from H.

    No layer consumes another, which is what lets all of them be evaluated
    in one parallel round.
    """
    layers = [pseudo_cores(h, k, level) for level in range(h.dimension() + 1)]
    return MatryoshkaSequence(h, k, tuple(layers))


def verify_matryoshka(seq: MatryoshkaSequence):
    """Check the four chain properties; True or (property_index, detail).

    The hitting-set property is verified exhaustively over all candidate sets
    of size at most k drawn from vertices occurring in the base's edges (a
    hitting set's restriction to those vertices hits exactly the same edges).
    """
    h, k = seq.base, seq.k
    d = h.dimension()
    if len(seq.layers) != d + 1:
        raise ValueError(f"expected {d + 1} layers, got {len(seq.layers)}")
    if seq.layers[0] != h:
        return 1, 0
    for i, layer in enumerate(seq.layers):
        if layer.dimension() > d - i:
            return 2, i
    for i in range(d):
        if not set(k_cores(seq.layers[i], k).edges) <= set(seq.layers[i + 1].edges):
            return 3, i
    universe = h.used_vertices()
    for size in range(min(k, len(universe)) + 1):
        for xs in itertools.combinations(universe, size):
            if not h.is_hitting_set(xs):
                continue
            for i, layer in enumerate(seq.layers):
                if not layer.is_hitting_set(xs):
                    return 4, (i, frozenset(xs))
    return True


def assemble_kernel(seq: MatryoshkaSequence) -> Hypergraph:
    """Fold the chain into the kernel; assumes the chain properties hold."""
    layers = seq.layers
    if len(layers) != seq.base.dimension() + 1:
        raise ValueError("chain has the wrong number of layers")
    kernel = layers[-1]
    for i in range(len(layers) - 1):
        kernel = kernel.union(layers[i].ominus(layers[i + 1]))
    return kernel


def kernelize(h: Hypergraph, k: int, algo: str, size_guard: bool = False) -> KernelReport:
    """Run one of the three kernelization pipelines and report metrics.

    rounds counts dependent parallel phases: reduction steps for the
    sequential loop, layers with edges left to process for the iterated
    cores, and always 1 for the pseudo chain.  work counts candidate cores
    tested.  With ``size_guard`` enabled, an input already within the size
    bound is returned unchanged (it is its own kernel).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if algo not in ALGORITHMS:
        raise ValueError(f"algo must be one of {ALGORITHMS}")
    bound = kernel_size_bound(k, h.dimension())
    if size_guard and len(h.edges) <= bound:
        return KernelReport(h, algo, 0, 0, bound)
    if algo == "sequential":
        kernel, steps, tests = _sequential_kernel_stats(h, k)
        return KernelReport(kernel, algo, steps, tests, bound)
    if algo == "cores":
        seq = cores_chain(h, k)
        rounds = sum(1 for layer in seq.layers[:-1] if layer.edges)
        work = sum(len(layer.refinement_candidates()) for layer in seq.layers[:-1])
        return KernelReport(assemble_kernel(seq), algo, rounds, work, bound)
    seq = pseudo_chain(h, k)
    work = h.dimension() * len(h.refinement_candidates())
    return KernelReport(assemble_kernel(seq), algo, 1, work, bound)
