"""Instance generators: the worked-example fixture, tree families, seeded random.

The random generator runs on an explicitly specified PRNG (splitmix64) so any
reimplementation can reproduce instances bit for bit from the seed.
"""

from __future__ import annotations

from .hypergraph import Hypergraph

_MASK64 = (1 << 64) - 1

_FIG1_NAMES = tuple("abcdefghijklmnopqrstuvw")
_FIG1_EDGES = (
    "abcfuvw",
    "abcgrstm",
    "abchopqle",
    "abdioru",
    "abdjpsv",
    "abdkqtw",
    "abel",
    "abem",
    "aben",
    "uvw",
)


def gen_fig1() -> Hypergraph:
    """The 23-vertex, 10-edge worked example.

    Its 2-cores are {a,b,c}, {a,b,d}, {a,b,e}; their single 2-core is {a,b},
    which is not a 2-core of the instance itself.
    """
    index = {name: i for i, name in enumerate(_FIG1_NAMES)}
    edges = [[index[ch] for ch in word] for word in _FIG1_EDGES]
    return Hypergraph.from_edges(len(_FIG1_NAMES), edges, _FIG1_NAMES)


def gen_tree(l: int, depth: int) -> Hypergraph:
    """Balanced (l+1)-ary tree of the given depth, one edge per root-to-leaf path.

    Vertices are numbered breadth-first (root 0), so the tree of depth d-1
    appears as the id-prefix of the tree of depth d.  Every edge has size
    depth+1 and there are (l+1)^depth edges.
    """
    if l < 1 or depth < 1:
        raise ValueError("l and depth must be positive")
    fanout = l + 1
    paths = [[0]]
    next_id = 1
    for _ in range(depth):
        grown = []
        for path in paths:
            for _ in range(fanout):
                grown.append(path + [next_id])
                next_id += 1
        paths = grown
    return Hypergraph.from_edges(next_id, paths)


def splitmix64(seed: int):
    """The splitmix64 stream: state += 0x9E3779B97F4A7C15, then two xor-shift
    multiplies (0xBF58476D1CE4E5B9, 0x94D049BB133111EB) and a final shift."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def gen_random(n: int, m: int, dmax: int, seed: int) -> Hypergraph:
    """Seeded random hypergraph: m edges of uniform size in [1, dmax].

    Each edge draws its size as ``1 + next % dmax`` and its vertices by a
    partial Fisher-Yates shuffle of 0..n-1 driven by the same stream.  A
    duplicate edge is redrawn up to 32 times, then its slot is dropped, so
    the result can have fewer than m edges but is a pure function of the
    parameters.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if m < 0:
        raise ValueError("m must be non-negative")
    if not 1 <= dmax <= n:
        raise ValueError("dmax must be in [1, n]")
    stream = splitmix64(seed)
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for _ in range(m):
        for _attempt in range(32):
            size = 1 + next(stream) % dmax
            pool = list(range(n))
            for j in range(size):
                swap = j + next(stream) % (n - j)
                pool[j], pool[swap] = pool[swap], pool[j]
            edge = tuple(sorted(pool[:size]))
            if edge not in seen:
                seen.add(edge)
                edges.append(edge)
                break
    return Hypergraph.from_edges(n, edges)
