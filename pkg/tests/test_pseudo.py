import pytest

from hskernel.generators import gen_random, gen_tree, splitmix64
from hskernel.hypergraph import Hypergraph
from hskernel.pseudo import (
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
from hskernel.sunflower import Sunflower, find_sunflower, k_cores

from conftest import edges_by_name, name_ids

# The worked pseudo-sunflower for core {a,b} over the depth-2 ternary tree:
# one row per leaf, columns are the blocks at levels 1 and 2.
FIG2_ROWS = [
    ("cf", "uvw"),
    ("cg", "rstm"),
    ("cho", "pqle"),
    ("di", "oru"),
    ("dj", "psv"),
    ("d", "kqtw"),
    ("e", "l"),
    ("e", "m"),
    ("e", "n"),
]


def fig2_table(fig1, rows=FIG2_ROWS):
    ids = name_ids(fig1)
    tree = LeveledTree(2, 2)
    core = frozenset({ids["a"], ids["b"]})
    blocks = {}
    for leaf, (b1, b2) in zip(tree.leaves, rows):
        blocks[(leaf, 0)] = core
        blocks[(leaf, 1)] = frozenset(ids[ch] for ch in b1)
        blocks[(leaf, 2)] = frozenset(ids[ch] for ch in b2)
    return PseudoSunflower(tree, tuple(sorted(core)), blocks)


class TestLeveledTree:
    def test_leaf_count(self):
        assert len(LeveledTree(2, 2).leaves) == 9
        assert len(LeveledTree(1, 3).leaves) == 8

    def test_divergence_examples(self):
        t = LeveledTree(2, 2)
        assert divergence_depth(t, (1, 1), (1, 2)) == 2
        assert divergence_depth(t, (1, 1), (3, 2)) == 1
        t1 = LeveledTree(3, 1)
        assert divergence_depth(t1, (1,), (4,)) == 1

    def test_equal_leaves_rejected(self):
        t = LeveledTree(2, 2)
        with pytest.raises(ValueError):
            divergence_depth(t, (1, 1), (1, 1))


class TestVerifyPseudoSunflower:
    def test_figure_table_accepted(self, fig1):
        assert verify_pseudo_sunflower(fig1, fig2_table(fig1)) is True

    def test_level_one_from_any_sunflower(self, fig1):
        ids = name_ids(fig1)
        s = find_sunflower(fig1, [ids["a"], ids["b"], ids["c"]], 3)
        assert s is not None
        tree = LeveledTree(2, 1)
        core = frozenset(s.core)
        blocks = {}
        for leaf, petal in zip(tree.leaves, s.petals):
            blocks[(leaf, 0)] = core
            blocks[(leaf, 1)] = frozenset(petal) - core
        assert verify_pseudo_sunflower(fig1, PseudoSunflower(tree, s.core, blocks)) is True

    def test_raw_block_swap_breaks_membership_first(self, fig1):
        # replacing one level-2 block by {r,s,t} also breaks the row-union
        # membership, which is the lower-numbered property
        rows = list(FIG2_ROWS)
        rows[0] = ("cf", "rst")
        result = verify_pseudo_sunflower(fig1, fig2_table(fig1, rows))
        assert result == (2, ((1, 1),))

    def test_divergence_collision_reported_as_property_four(self, fig1):
        # give leaf (1,1) the full row of its sibling: every per-row property
        # still holds but the two level-2 blocks collide at divergence 2
        rows = list(FIG2_ROWS)
        rows[0] = rows[1]
        result = verify_pseudo_sunflower(fig1, fig2_table(fig1, rows))
        assert result == (4, ((1, 1), (1, 2)))

    def test_core_mismatch_is_property_one(self, fig1):
        table = fig2_table(fig1)
        leaf = table.tree.leaves[0]
        table.blocks[(leaf, 0)] = frozenset({0})
        assert verify_pseudo_sunflower(fig1, table) == (1, (leaf,))

    def test_empty_block_is_property_three(self, fig1):
        rows = list(FIG2_ROWS)
        rows[8] = ("en", "")
        result = verify_pseudo_sunflower(fig1, fig2_table(fig1, rows))
        assert result == (3, ((3, 3),))


class TestFindPseudoSunflower:
    def test_fig1_ab_level2_present_and_valid(self, fig1):
        ids = name_ids(fig1)
        s = find_pseudo_sunflower(fig1, [ids["a"], ids["b"]], 2, 2)
        assert s is not None
        assert verify_pseudo_sunflower(fig1, s) is True

    def test_fig1_ab_level1_absent(self, fig1):
        ids = name_ids(fig1)
        assert find_pseudo_sunflower(fig1, [ids["a"], ids["b"]], 2, 1) is None

    def test_level_exceeding_residuals_absent(self, fig1):
        ids = name_ids(fig1)
        core = [ids["a"], ids["b"], ids["c"]]
        assert find_pseudo_sunflower(fig1, core, 2, 8) is None

    def test_parameters_validated(self, fig1):
        with pytest.raises(ValueError):
            find_pseudo_sunflower(fig1, [], 0, 1)
        with pytest.raises(ValueError):
            find_pseudo_sunflower(fig1, [], 1, 0)


class TestPseudoCores:
    def test_level_zero_is_identity(self, fig1):
        assert pseudo_cores(fig1, 2, 0) == fig1

    def test_level_one_equals_cores_fig1(self, fig1):
        assert pseudo_cores(fig1, 2, 1) == k_cores(fig1, 2)

    def test_level_two_contains_ab(self, fig1):
        assert frozenset("ab") in edges_by_name(pseudo_cores(fig1, 2, 2))

    @pytest.mark.parametrize("seed", range(30))
    def test_level_one_equals_cores_random(self, seed):
        stream = splitmix64(seed * 31 + 7)
        n = 4 + next(stream) % 9
        m = 1 + next(stream) % 8
        dmax = 1 + next(stream) % min(4, n)
        k = 1 + next(stream) % 3
        h = gen_random(n, m, dmax, seed)
        assert pseudo_cores(h, k, 1) == k_cores(h, k)


class TestRestrictedColoringInstance:
    def test_fig1_dimensions(self, fig1):
        ids = name_ids(fig1)
        inst = build_restricted_coloring_instance(fig1, [ids["a"], ids["b"]], 2, 2)
        assert len(inst.vertices) == 9 * 2 * 9
        assert len(inst.partition) == 9
        # conflicts within one leaf block: every level-1/level-2 copy pair
        leaf = LeveledTree(2, 2).leaves[0]
        within = [
            pair
            for pair in inst.conflicts
            if all(u[0] == leaf for u in pair)
        ]
        assert len(within) == 81

    def test_reduced_copy_count(self, fig1):
        ids = name_ids(fig1)
        d = fig1.dimension()
        inst = build_restricted_coloring_instance(
            fig1, [ids["a"], ids["b"]], 2, 2, copies=d - 2 + 1
        )
        assert len(inst.vertices) == 9 * 2 * (d - 1)
        assert solve_restricted_coloring_exact(inst) is not None

    def test_partition_must_cover(self):
        h = Hypergraph.from_edges(2, [[0]])
        with pytest.raises(ValueError):
            RestrictedColoringInstance(h, ("x", "y"), frozenset(), (("x",),))


def trivial_instance():
    # one block, no conflicts, single singleton edge: color everything alike
    h = Hypergraph.from_edges(3, [[1]])
    u = ("p", "q", "r")
    return RestrictedColoringInstance(h, u, frozenset(), (u,))


def oversized_block_instance():
    # the only edge is larger than the block, so no surjection exists
    h = Hypergraph.from_edges(4, [[0, 1, 2, 3]])
    return RestrictedColoringInstance(h, ("p", "q"), frozenset(), (("p", "q"),))


def random_instance(seed):
    stream = splitmix64(seed * 101 + 3)
    nv = 4 + next(stream) % 7  # |V| in 4..10
    h = gen_random(nv, 1 + next(stream) % 4, 1 + next(stream) % min(4, nv), seed)
    usize = 2 + next(stream) % 7  # |U| in 2..8
    u = tuple(f"u{i}" for i in range(usize))
    nblocks = 1 + next(stream) % min(3, usize)
    blocks = [[] for _ in range(nblocks)]
    for i, vertex in enumerate(u):
        blocks[i % nblocks].append(vertex)
    conflicts = set()
    for i in range(usize):
        for j in range(i + 1, usize):
            if next(stream) % 3 == 0:
                conflicts.add(frozenset((u[i], u[j])))
    return RestrictedColoringInstance(h, u, frozenset(conflicts), tuple(tuple(b) for b in blocks))


class TestRestrictedColoringSolvers:
    def test_trivial_instance_both_ways(self):
        inst = trivial_instance()
        exact = solve_restricted_coloring_exact(inst)
        assert exact == {"p": 1, "q": 1, "r": 1}
        assert solve_restricted_coloring_color_coded(inst) is not None

    def test_oversized_block_unsatisfiable(self):
        inst = oversized_block_instance()
        assert solve_restricted_coloring_exact(inst) is None
        assert solve_restricted_coloring_color_coded(inst) is None

    def test_theorem_instance_satisfiable_both_ways(self, fig1):
        ids = name_ids(fig1)
        inst = build_restricted_coloring_instance(fig1, [ids["a"], ids["b"]], 2, 2)
        assert solve_restricted_coloring_exact(inst) is not None
        # |U| exceeds |V|: the label-search argument does not apply and the
        # solver falls back to the direct check
        assert solve_restricted_coloring_color_coded(inst) is not None

    @pytest.mark.parametrize("seed", range(40))
    def test_solver_agreement_random(self, seed):
        inst = random_instance(seed)
        exact = solve_restricted_coloring_exact(inst)
        coded = solve_restricted_coloring_color_coded(inst)
        assert (exact is None) == (coded is None)

    def test_instance_satisfiable_iff_pseudo_core(self, fig1):
        ids = name_ids(fig1)
        for word, expected in [("ab", True), ("abc", True), ("abr", False), ("abs", False)]:
            core = [ids[ch] for ch in word]
            inst = build_restricted_coloring_instance(fig1, core, 2, 2)
            sat = solve_restricted_coloring_exact(inst) is not None
            found = find_pseudo_sunflower(fig1, core, 2, 2) is not None
            assert sat == found == expected


class TestPseudoCoresViaRestrictedColoring:
    def test_level_zero(self, fig1):
        assert pseudo_cores_via_restricted_coloring(fig1, 2, 0) == fig1

    def test_fig1_levels_match_direct_search(self, fig1):
        for level in (1, 2):
            assert pseudo_cores_via_restricted_coloring(fig1, 2, level) == pseudo_cores(
                fig1, 2, level
            )

    @pytest.mark.parametrize("seed", range(25))
    def test_random_sweep_matches(self, seed):
        stream = splitmix64(seed * 131 + 5)
        n = 4 + next(stream) % 7  # <= 10
        m = 1 + next(stream) % 6  # <= 6
        dmax = 1 + next(stream) % min(4, n)
        k = 1 + next(stream) % 2  # <= 2
        level = 1 + next(stream) % 3  # <= 3
        h = gen_random(n, m, dmax, seed)
        assert pseudo_cores_via_restricted_coloring(h, k, level) == pseudo_cores(h, k, level)


class TestChainContainment:
    # iterated cores embed into the pseudo-core layers (levels compose)
    @pytest.mark.parametrize("seed", range(10))
    def test_iterated_cores_inside_pseudo_layers(self, seed):
        h = gen_random(4 + seed % 7, 1 + seed % 6, 1 + seed % 3, seed)
        k = 1 + seed % 2
        layer = h
        for level in (1, 2, 3):
            layer = k_cores(layer, k)
            assert set(layer.edges) <= set(pseudo_cores(h, k, level).edges)

    def test_tree_pseudo_layers(self):
        t = gen_tree(2, 2)
        assert edges_by_name(pseudo_cores(t, 2, 2)) >= {frozenset(["v0"])}
