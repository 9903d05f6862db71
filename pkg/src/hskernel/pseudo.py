"""Pseudo-sunflowers: leveled-tree witnesses, block-partition search, and the
restricted-coloring reformulation.

A pseudo-sunflower for a core C over the depth-L tree (every inner node has
k+1 children) assigns each leaf l a row of blocks S(l,0..L) such that
S(l,0)=C, the row unions to a hyperedge, the row blocks partition that edge
minus C into nonempty parts, and rows of leaves diverging at depth z have
disjoint level-z blocks.  The level-L pseudo-cores of a hypergraph are all
cores admitting such a witness; every layer is computable directly from the
input, which is what makes the chain evaluable in a single parallel round.

Search internals work on integer bitmasks over vertices.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .hypergraph import Edge, Hypergraph, canonical_edge


@dataclass(frozen=True)
class LeveledTree:
    """Rooted tree of depth ``depth`` whose inner nodes have k+1 children.

    Leaves are the sequences in {1..k+1}^depth; the length-i prefix of a leaf
    names its depth-i ancestor.
    """

    k: int
    depth: int

    def __post_init__(self):
        if self.k < 1 or self.depth < 1:
            raise ValueError("k and depth must be positive")

    @cached_property
    def leaves(self) -> tuple[tuple[int, ...], ...]:
        return tuple(itertools.product(range(1, self.k + 2), repeat=self.depth))


def divergence_depth(tree: LeveledTree, l: tuple[int, ...], m: tuple[int, ...]) -> int:
    """Least z >= 1 where the root paths of two distinct leaves differ."""
    if l == m:
        raise ValueError("divergence depth is undefined for equal leaves")
    for i, (a, b) in enumerate(zip(l, m)):
        if a != b:
            return i + 1
    raise ValueError("leaves of equal length must differ somewhere")


@dataclass
class PseudoSunflower:
    tree: LeveledTree
    core: Edge
    blocks: dict[tuple[tuple[int, ...], int], frozenset[int]]

    def row(self, leaf) -> tuple[frozenset[int], ...]:
        return tuple(self.blocks[(leaf, i)] for i in range(self.tree.depth + 1))

    def edge_of(self, leaf) -> Edge:
        union: set[int] = set()
        for part in self.row(leaf):
            union |= part
        return canonical_edge(union)


def verify_pseudo_sunflower(h: Hypergraph, s: PseudoSunflower):
    """Check the four defining properties against ``h``.

    Returns ``True`` or ``(property_index, witnessing_leaves)`` for the first
    violation, scanning properties in definition order and leaves canonically.
    """
    tree = s.tree
    depth = tree.depth
    leaves = tree.leaves
    core = frozenset(s.core)
    edge_family = set(h.edges)
    for leaf in leaves:
        if s.blocks[(leaf, 0)] != core:
            return 1, (leaf,)
    for leaf in leaves:
        if s.edge_of(leaf) not in edge_family:
            return 2, (leaf,)
    for leaf in leaves:
        row = s.row(leaf)
        for i in range(depth + 1):
            if i >= 1 and not row[i]:
                return 3, (leaf,)
            for j in range(i + 1, depth + 1):
                if row[i] & row[j]:
                    return 3, (leaf,)
    for a, la in enumerate(leaves):
        for lb in leaves[a + 1 :]:
            z = divergence_depth(tree, la, lb)
            if s.blocks[(la, z)] & s.blocks[(lb, z)]:
                return 4, (la, lb)
    return True


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _covers(small: tuple[int, ...], big: tuple[int, ...]) -> bool:
    return all(s | b == b for s, b in zip(small, big))


def _partition_order(blocks: tuple[int, ...]) -> tuple[int, ...]:
    # shallow blocks smallest first: the shallow levels carry the scarce
    # cross-subtree disjointness constraints
    return tuple(b.bit_count() for b in blocks[:-1])


def _ordered_partition_count(n: int, parts: int) -> int:
    # surjections onto labeled nonempty parts, by inclusion-exclusion
    total = 0
    for j in range(parts + 1):
        total += (-1) ** j * math.comb(parts, j) * (parts - j) ** n
    return total


def _v_placing_cap(k: int, level: int) -> int:
    """Max leaf rows of the depth-``level`` tree that can place one fixed vertex.

    At any node, sibling subtrees have pairwise disjoint unions at their
    divergence level, so the vertex enters at that level in at most one
    child; the other k children must place it strictly deeper.
    """
    cap = 1
    for height in range(2, level + 1):
        cap = (k + 1) ** (height - 1) + k * cap
    return cap


def _usable_rows(h: Hypergraph, core_set: set, level: int):
    """Edges a leaf row can use: proper supersets with residual >= level.

    Returns (edge_index, sorted residual) pairs in canonical order, or None
    when no edge qualifies.
    """
    usable = []
    for ei, e in enumerate(h.edges):
        residual = set(e) - core_set
        if core_set.issubset(e) and len(residual) >= level:
            usable.append((ei, tuple(sorted(residual))))
    return usable or None


def _counting_rules_reject(usable, k: int, level: int) -> bool:
    """Proved obstructions to hosting (k+1)^level leaf rows.

    Distinctness: rows of two leaves are never identical (they would share a
    nonempty block at their divergence level), so the leaves need pairwise
    distinct (edge, partition) choices.  Vertex capacity: at most cap rows
    can involve a fixed vertex (at each branching it enters the divergence
    level of at most one subtree), so edges avoiding the vertex must supply
    the rest.  Transversal: if m <= k vertices meet every usable residual,
    every row places one of them and the same branching argument caps the
    rows at m*(k+1)^(h-1) + (k+1-m)*N(h-1) < (k+1)^h.  At level 2 a single
    edge additionally hosts at most k+1 rows, since two rows of one bottom
    node jointly push the whole residual into that node's level-1 union and
    the tree has only k+1 bottom nodes.
    """
    kk = k + 1
    leaf_total = kk**level
    residual_masks = []
    for _, verts in usable:
        m = 0
        for v in verts:
            m |= 1 << v
        residual_masks.append(m)

    choice_counts = [_ordered_partition_count(len(verts), level) for _, verts in usable]
    if sum(choice_counts) < leaf_total:
        return True

    need = leaf_total - _v_placing_cap(k, level)
    union_mask = 0
    for m in residual_masks:
        union_mask |= m
    union_vertices = list(_bits(union_mask))
    for v in union_vertices:
        bit = 1 << v
        free_choices = sum(
            count for m, count in zip(residual_masks, choice_counts) if not bit & m
        )
        if free_choices < need:
            return True

    for m in range(2, k + 1):
        if m > len(union_vertices):
            break
        for subset in itertools.combinations(union_vertices, m):
            tmask = 0
            for v in subset:
                tmask |= 1 << v
            if all(tmask & rm for rm in residual_masks):
                return True

    if level == 2:
        for v in union_vertices:
            bit = 1 << v
            free_edges = sum(1 for m in residual_masks if not bit & m)
            if kk * free_edges < need:
                return True

    return False


def find_pseudo_sunflower(
    h: Hypergraph, core: Iterable[int], k: int, level: int
) -> Optional[PseudoSunflower]:
    """Exact search for a pseudo-sunflower with the given core.

    Proved counting rules reject most non-pseudo-cores outright; survivors
    get a depth-first search over leaves, each picking an edge properly
    containing the core and an ordered partition of the residual into
    ``level`` nonempty blocks, pruning on the disjointness properties.  Leaf
    positions rotate their edge order so sibling rows spread across edges,
    subtree solution streams are memoized per (depth, forbidden-masks,
    rotation) state, and branches dominated by an earlier fully explored one
    are skipped (every cross-subtree constraint is a disjointness
    constraint, so a solution with componentwise smaller level unions admits
    every completion a larger one does).  The result is a deterministic
    function of the input.
    """
    if k < 1 or level < 1:
        raise ValueError("k and level must be positive")
    cs = set(core)
    for v in cs:
        if not 0 <= v < h.vertex_count:
            raise ValueError(f"vertex {v} out of range")

    usable = _usable_rows(h, cs, level)
    if usable is None or _counting_rules_reject(usable, k, level):
        return None

    kk = k + 1
    L = level
    n_edges = len(usable)

    def leaf_stream(forb: tuple[int, ...], rot: int):
        # (edge, ordered partition) choices: edges in rotated canonical
        # order; per edge, partitions sorted shallow-blocks-smallest-first
        # (witnesses overwhelmingly keep the scarce shallow levels thin),
        # ties broken by the lexicographic assignment vector
        for off in range(n_edges):
            ei, verts = usable[(rot + off) % n_edges]
            nv = len(verts)
            blocks = [0] * L
            found: list[tuple[int, ...]] = []

            def rec(pos: int, empty: int):
                if nv - pos < empty:
                    return
                if pos == nv:
                    found.append(tuple(blocks))
                    return
                bit = 1 << verts[pos]
                for b in range(L):
                    if bit & forb[b]:
                        continue
                    was_empty = blocks[b] == 0
                    blocks[b] |= bit
                    rec(pos + 1, empty - was_empty)
                    blocks[b] ^= bit

            rec(0, L)
            found.sort(key=_partition_order)
            for bt in found:
                yield bt, (ei, bt)

    cache: dict = {}

    def node_solutions(t: int, forb: tuple[int, ...], rot: int):
        # node at depth t < L composing k+1 children; yields (unions over
        # levels 1..t, nested witness); partial compositions dominated by an
        # earlier fully explored one admit only already-covered completions
        explored: list[list[list]] = [[] for _ in range(kk)]

        def compose(i: int, sib: int, unions: tuple[int, ...], wits: tuple):
            if i == kk:
                yield unions, wits
                return
            for st in explored[i]:
                if st[2] and st[1] | sib == sib and _covers(st[0], unions):
                    return
            mine = [unions, sib, False]
            explored[i].append(mine)
            for cu, cw in solutions(t + 1, forb + (sib,), (rot * kk + i) % n_edges):
                if i == 0:
                    nu = cu[:t]
                else:
                    nu = tuple(unions[j] | cu[j] for j in range(t))
                yield from compose(i + 1, sib | cu[t], nu, wits + (cw,))
            mine[2] = True

        yield from compose(0, 0, (0,) * t, ())

    def solutions(t: int, forb: tuple[int, ...], rot: int):
        key = (t, forb, rot)
        entry = cache.get(key)
        if entry is None:
            raw = leaf_stream(forb, rot) if t == L else node_solutions(t, forb, rot)
            entry = [[], raw, False]
            cache[key] = entry

        def replay():
            items = entry[0]
            i = 0
            while True:
                while i < len(items):
                    yield items[i]
                    i += 1
                if entry[2]:
                    return
                while True:
                    try:
                        u, w = next(entry[1])
                    except StopIteration:
                        entry[2] = True
                        break
                    if any(_covers(prev, u) for prev, _ in items):
                        continue
                    items.append((u, w))
                    break

        return replay()

    try:
        _, wits = next(solutions(0, (), 0))
    except StopIteration:
        return None

    def flatten(w, depth: int):
        if depth == L:
            yield w
        else:
            for cw in w:
                yield from flatten(cw, depth + 1)

    tree = LeveledTree(k, L)
    blocks: dict[tuple[tuple[int, ...], int], frozenset[int]] = {}
    core_frozen = frozenset(cs)
    for leaf, (ei, bt) in zip(tree.leaves, flatten(wits, 0)):
        blocks[(leaf, 0)] = core_frozen
        for i in range(1, L + 1):
            blocks[(leaf, i)] = frozenset(_bits(bt[i - 1]))
    return PseudoSunflower(tree, canonical_edge(cs), blocks)


def pseudo_cores(h: Hypergraph, k: int, level: int) -> Hypergraph:
    """All level-``level`` pseudo-cores; level 0 is the hypergraph itself."""
    if k < 1:
        raise ValueError("k must be positive")
    if level < 0:
        raise ValueError("level must be non-negative")
    if level == 0:
        return h
    found = [
        c
        for c in h.refinement_candidates()
        if find_pseudo_sunflower(h, c, k, level) is not None
    ]
    return h.with_edges(found)


# -- restricted coloring -----------------------------------------------------


@dataclass(frozen=True, eq=False)
class RestrictedColoringInstance:
    """A hypergraph plus a partitioned conflict graph.

    Sought: a proper coloring ``c`` of the graph with hypergraph vertices as
    colors whose image on each partition block is a hyperedge.
    """

    hypergraph: Hypergraph
    vertices: tuple  # U, in canonical order
    conflicts: frozenset[frozenset]  # F, unordered pairs over U
    partition: tuple[tuple, ...]

    def __post_init__(self):
        seen: set = set()
        for block in self.partition:
            if not block:
                raise ValueError("partition blocks must be nonempty")
            for u in block:
                if u in seen:
                    raise ValueError("partition blocks must be disjoint")
                seen.add(u)
        if seen != set(self.vertices):
            raise ValueError("partition must cover the graph vertices")
        for pair in self.conflicts:
            if len(pair) != 2 or not pair <= seen:
                raise ValueError("conflicts must be irreflexive pairs over U")


def build_restricted_coloring_instance(
    h: Hypergraph, core: Iterable[int], k: int, level: int, copies: int | None = None
) -> RestrictedColoringInstance:
    """Instance whose solvability certifies that ``core`` is a level pseudo-core.

    Graph vertices are (leaf, level, copy) triples, ``dimension(h)`` copies
    per slot by default (one copy per potential block element; ``copies``
    may be lowered to the sufficient ``d - level + 1``).  Conflicts force
    within-row block disjointness and the divergence-level disjointness
    across leaves; the hypergraph is the residual restriction to supersets
    of the core.
    """
    if k < 1 or level < 1:
        raise ValueError("k and level must be positive")
    d = h.dimension()
    if d < 1:
        raise ValueError("hypergraph has no nonempty edges")
    if copies is None:
        copies = d
    if copies < 1:
        raise ValueError("copies must be positive")
    tree = LeveledTree(k, level)
    leaves = tree.leaves
    crange = range(1, copies + 1)
    lrange = range(1, level + 1)
    vertices = tuple((l, i, x) for l in leaves for i in lrange for x in crange)
    partition = tuple(tuple((l, i, x) for i in lrange for x in crange) for l in leaves)
    conflicts: set[frozenset] = set()
    for l in leaves:
        for i in lrange:
            for j in range(i + 1, level + 1):
                for x in crange:
                    for y in crange:
                        conflicts.add(frozenset(((l, i, x), (l, j, y))))
    for a, la in enumerate(leaves):
        for lb in leaves[a + 1 :]:
            z = divergence_depth(tree, la, lb)
            for x in crange:
                for y in crange:
                    conflicts.add(frozenset(((la, z, x), (lb, z, y))))
    return RestrictedColoringInstance(
        h.restrict_to_supersets(core), vertices, frozenset(conflicts), partition
    )


def _class_structure(inst: RestrictedColoringInstance):
    """Group interchangeable graph vertices: same block, same neighborhood.

    Equal-neighborhood vertices are never adjacent (a shared edge would make
    one of them its own neighbor), so colorings may be permuted within a
    class; only the class image matters.  Returns per-class member lists in
    canonical order, the block of each class, and class-level adjacency.
    """
    order = {u: i for i, u in enumerate(inst.vertices)}
    nb: dict = {u: set() for u in inst.vertices}
    for pair in inst.conflicts:
        a, b = sorted(pair, key=order.__getitem__)
        nb[a].add(b)
        nb[b].add(a)
    members: list[list] = []
    block_of_class: list[int] = []
    class_of: dict = {}
    for bi, block in enumerate(inst.partition):
        grouped: dict[frozenset, list] = {}
        for u in sorted(block, key=order.__getitem__):
            grouped.setdefault(frozenset(order[w] for w in nb[u]), []).append(u)
        for ms in sorted(grouped.values(), key=lambda ms: order[ms[0]]):
            for u in ms:
                class_of[u] = len(members)
            members.append(ms)
            block_of_class.append(bi)
    adjacency: list[set[int]] = [set() for _ in members]
    for pair in inst.conflicts:
        a, b = tuple(pair)
        ca, cb = class_of[a], class_of[b]
        adjacency[ca].add(cb)
        adjacency[cb].add(ca)
    return members, block_of_class, adjacency


def solve_restricted_coloring_exact(inst: RestrictedColoringInstance):
    """Backtracking solver: per block, choose a hyperedge and a surjection.

    Surjections are enumerated up to interchangeability of equal-neighborhood
    vertices: each class picks a nonempty image inside the block's edge, with
    adjacent classes forced to disjoint images and the images covering the
    edge.  Exhausted states are memoized on the images still visible to
    future blocks.  Returns the first coloring found (u -> vertex) or None.
    """
    members, block_of_class, adjacency = _class_structure(inst)
    nblocks = len(inst.partition)
    classes_per_block: list[list[int]] = [[] for _ in range(nblocks)]
    for ci, bi in enumerate(block_of_class):
        classes_per_block[bi].append(ci)

    # For the memo: at each block boundary, earlier classes grouped by which
    # future classes they constrain; equal groups with equal image unions
    # admit exactly the same completions.
    boundary_groups: list[list[list[int]]] = []
    for bi in range(nblocks):
        future = {
            ci for b in range(bi, nblocks) for ci in classes_per_block[b]
        }
        grouped: dict[frozenset, list[int]] = {}
        for ci in range(len(members)):
            if block_of_class[ci] >= bi:
                continue
            sig = frozenset(adjacency[ci] & future)
            if sig:
                grouped.setdefault(sig, []).append(ci)
        boundary_groups.append([grouped[s] for s in sorted(grouped, key=sorted)])

    edge_masks = []
    for e in inst.hypergraph.edges:
        m = 0
        for v in e:
            m |= 1 << v
        edge_masks.append((e, m))

    images = [0] * len(members)
    chosen_edges: list = [None] * nblocks
    dead: set = set()

    def state_key(bi: int):
        unions = []
        for group in boundary_groups[bi]:
            u = 0
            for ci in group:
                u |= images[ci]
            unions.append(u)
        return bi, tuple(unions)

    def assign_classes(bi: int, cids: list[int], pos: int, covered: int, edge_bits: list[int], emask: int):
        if pos == len(cids):
            return covered == emask and solve_block(bi + 1)
        ci = cids[pos]
        capacity = sum(len(members[c]) for c in cids[pos + 1 :])
        blocked = 0
        for other in adjacency[ci]:
            blocked |= images[other]
        cap = len(members[ci])
        # class images as subsets of the edge, smallest first (mask order
        # within a size); early classes claiming little leaves room for the
        # covering constraint and for adjacent classes in other blocks
        for code in sorted(range(1, 1 << len(edge_bits)), key=lambda c: (c.bit_count(), c)):
            if code.bit_count() > cap:
                continue
            img = 0
            for j, bit in enumerate(edge_bits):
                if code >> j & 1:
                    img |= bit
            if img & blocked:
                continue
            new_cov = covered | img
            if (emask & ~new_cov).bit_count() > capacity:
                continue
            images[ci] = img
            if assign_classes(bi, cids, pos + 1, new_cov, edge_bits, emask):
                return True
            images[ci] = 0
        return False

    def solve_block(bi: int) -> bool:
        if bi == nblocks:
            return True
        key = state_key(bi)
        if key in dead:
            return False
        cids = classes_per_block[bi]
        block_size = sum(len(members[ci]) for ci in cids)
        n_edges = len(edge_masks)
        # rotate the edge order per block so consecutive blocks spread over
        # different hyperedges instead of crowding the first one
        for off in range(n_edges):
            e, emask = edge_masks[(bi + off) % n_edges]
            if not 1 <= len(e) <= block_size:
                continue
            chosen_edges[bi] = e
            if assign_classes(bi, cids, 0, 0, [1 << v for v in e], emask):
                return True
        chosen_edges[bi] = None
        dead.add(key)
        return False

    if not solve_block(0):
        return None

    coloring: dict = {}
    for ci, ms in enumerate(members):
        verts = sorted(_bits(images[ci]))
        for idx, u in enumerate(ms):
            coloring[u] = verts[min(idx, len(verts) - 1)]
    _check_coloring(inst, coloring)
    return coloring


def _check_coloring(inst: RestrictedColoringInstance, coloring: dict) -> None:
    for pair in inst.conflicts:
        a, b = tuple(pair)
        if coloring[a] == coloring[b]:
            raise RuntimeError("solver produced an improper coloring")
    edge_family = set(inst.hypergraph.edges)
    for block in inst.partition:
        if canonical_edge(coloring[u] for u in block) not in edge_family:
            raise RuntimeError("solver produced a non-edge block image")


def solve_restricted_coloring_color_coded(inst: RestrictedColoringInstance):
    """Coloring-family-driven solver mirroring the reduction proof.

    Enumerates proper colorings of the conflict graph (up to renaming, i.e.
    as partitions into independent classes) and, per pattern, searches for a
    vertex labeling under which every block has a hyperedge labeled
    injectively with exactly the block's pattern colors; the final coloring
    is reconstructed through the unique-preimage argument.  Instances with
    more graph vertices than hypergraph vertices fall outside the labeling
    argument and are handed to the exact solver, whose enumeration is then
    bounded by the graph parameter alone.
    """
    U = inst.vertices
    if len(U) > inst.hypergraph.vertex_count:
        return solve_restricted_coloring_exact(inst)
    order = {u: i for i, u in enumerate(U)}
    nb: dict = {u: [] for u in U}
    for pair in inst.conflicts:
        a, b = tuple(pair)
        nb[a].append(b)
        nb[b].append(a)
    block_index = {u: bi for bi, block in enumerate(inst.partition) for u in block}
    n_u = len(U)
    edge_family = inst.hypergraph.edges

    assign = [0] * n_u

    def patterns(i: int, nclasses: int):
        # restricted-growth enumeration of proper colorings up to renaming
        if i == n_u:
            yield tuple(assign)
            return
        u = U[i]
        conflicting = {assign[order[w]] for w in nb[u] if order[w] < i}
        for cls in range(nclasses + 1):
            if cls in conflicting:
                continue
            assign[i] = cls
            yield from patterns(i + 1, max(nclasses, cls + 1))

    for pattern in patterns(0, 0):
        targets = []
        for block in inst.partition:
            targets.append(sorted({pattern[order[u]] for u in block}))
        candidate_edges = [
            [e for e in edge_family if len(e) == len(tgt)] for tgt in targets
        ]
        if any(not cand for cand in candidate_edges):
            continue
        chosen: list = [None] * len(inst.partition)

        def label_edge(e: Edge, tgt: list[int], labels: dict):
            # injective labelings of e onto tgt, consistent with prior labels
            def rec(pos: int, used: frozenset, acc: dict):
                if pos == len(e):
                    yield acc
                    return
                v = e[pos]
                if v in acc:
                    if acc[v] in tgt and acc[v] not in used:
                        yield from rec(pos + 1, used | {acc[v]}, acc)
                    return
                for lab in tgt:
                    if lab in used:
                        continue
                    nxt = dict(acc)
                    nxt[v] = lab
                    yield from rec(pos + 1, used | {lab}, nxt)

            yield from rec(0, frozenset(), labels)

        def search(bi: int, labels: dict):
            if bi == len(inst.partition):
                return labels
            for e in candidate_edges[bi]:
                for nxt in label_edge(e, targets[bi], labels):
                    chosen[bi] = e
                    res = search(bi + 1, nxt)
                    if res is not None:
                        return res
            chosen[bi] = None
            return None

        labels = search(0, {})
        if labels is None:
            continue
        coloring: dict = {}
        for u in U:
            bi = block_index[u]
            wanted = pattern[order[u]]
            coloring[u] = next(v for v in chosen[bi] if labels[v] == wanted)
        _check_coloring(inst, coloring)
        return coloring
    return None


def pseudo_cores_via_restricted_coloring(
    h: Hypergraph, k: int, level: int, copies: int | None = None
) -> Hypergraph:
    """The pseudo-cores operator computed through restricted coloring.

    Builds and solves the certifying instance per candidate core with the
    exact solver.  Candidates rejected by the counting obstructions are
    skipped outright: those are facts about pseudo-cores themselves, hence
    about instance solvability, independent of either solving route.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if level < 0:
        raise ValueError("level must be non-negative")
    if level == 0:
        return h
    if h.dimension() < 1:
        return h.with_edges([])
    found = []
    for c in h.refinement_candidates():
        usable = _usable_rows(h, set(c), level)
        if usable is None or _counting_rules_reject(usable, k, level):
            continue
        inst = build_restricted_coloring_instance(h, c, k, level, copies)
        if solve_restricted_coloring_exact(inst) is not None:
            found.append(c)
    return h.with_edges(found)
