"""Hitting-set kernelization: sunflower reduction, iterated core chains, and
single-round pseudo-core kernels, with brute-force oracles for verification."""

from .colorcoding import ColoringFamily, coloring_family, is_k_perfect
from .generators import gen_fig1, gen_random, gen_tree
from .hypergraph import Edge, Hypergraph, ParseError, parse, serialize
from .kernel import (
    KernelReport,
    MatryoshkaSequence,
    assemble_kernel,
    cores_chain,
    kernel_size_bound,
    kernelize,
    pseudo_chain,
    verify_matryoshka,
)
from .pseudo import (
    LeveledTree,
    PseudoSunflower,
    RestrictedColoringInstance,
    build_restricted_coloring_instance,
    divergence_depth,
    find_pseudo_sunflower,
    pseudo_cores,
    pseudo_cores_via_restricted_coloring,
    solve_restricted_coloring_color_coded,
    solve_restricted_coloring_exact,
    verify_pseudo_sunflower,
)
from .solver import HittingSetAnswer, min_hitting_set, same_size_k_hitting_sets
from .sunflower import (
    Sunflower,
    find_sunflower,
    k_cores,
    k_cores_color_coded,
    sequential_kernel,
    verify_sunflower,
)

__all__ = [
    "ColoringFamily",
    "Edge",
    "HittingSetAnswer",
    "Hypergraph",
    "KernelReport",
    "LeveledTree",
    "MatryoshkaSequence",
    "ParseError",
    "PseudoSunflower",
    "RestrictedColoringInstance",
    "Sunflower",
    "assemble_kernel",
    "build_restricted_coloring_instance",
    "coloring_family",
    "cores_chain",
    "divergence_depth",
    "find_pseudo_sunflower",
    "find_sunflower",
    "gen_fig1",
    "gen_random",
    "gen_tree",
    "is_k_perfect",
    "k_cores",
    "k_cores_color_coded",
    "kernel_size_bound",
    "kernelize",
    "min_hitting_set",
    "parse",
    "pseudo_chain",
    "pseudo_cores",
    "pseudo_cores_via_restricted_coloring",
    "same_size_k_hitting_sets",
    "sequential_kernel",
    "serialize",
    "solve_restricted_coloring_color_coded",
    "solve_restricted_coloring_exact",
    "verify_matryoshka",
    "verify_pseudo_sunflower",
    "verify_sunflower",
]
