import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hskernel.hypergraph import Hypergraph, ParseError, parse, serialize

from conftest import edges_by_name, name_ids


def build(n, *edges, names=None):
    return Hypergraph.from_edges(n, edges, names)


@st.composite
def hypergraphs(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    m = draw(st.integers(min_value=0, max_value=6))
    edges = [
        draw(st.lists(st.integers(0, n - 1), max_size=4))
        for _ in range(m)
    ]
    return Hypergraph.from_edges(n, edges)


class TestConstruction:
    def test_duplicate_vertices_collapse(self):
        h = build(4, [1, 1, 2])
        assert h.edges == ((1, 2),)

    def test_duplicate_edges_collapse(self):
        h = build(4, [0, 1], [1, 0])
        assert h.edges == ((0, 1),)

    def test_empty_edge_is_representable(self):
        h = build(3, [])
        assert h.edges == ((),)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            build(2, [0, 2])


class TestDimension:
    def test_empty_edge_set(self):
        assert build(5).dimension() == 0

    def test_only_empty_edge(self):
        assert build(5, []).dimension() == 0

    def test_pair(self):
        assert build(3, [0, 1]).dimension() == 2

    def test_fig1(self, fig1):
        assert fig1.dimension() == 9


class TestHittingSet:
    def test_no_edges_hit_by_empty_set(self):
        assert build(4).is_hitting_set([]) is True

    def test_fig1_single_a_misses(self, fig1):
        ids = name_ids(fig1)
        assert fig1.is_hitting_set([ids["a"]]) is False

    def test_fig1_a_u_hits(self, fig1):
        ids = name_ids(fig1)
        assert fig1.is_hitting_set([ids["a"], ids["u"]]) is True

    def test_empty_edge_unhittable(self):
        h = build(3, [], [0])
        assert h.is_hitting_set([0, 1, 2]) is False

    def test_out_of_range_vertex(self):
        with pytest.raises(ValueError):
            build(3, [0]).is_hitting_set([5])

    @given(hypergraphs())
    @settings(max_examples=60, deadline=None)
    def test_full_universe_hits_iff_no_empty_edge(self, h):
        assert h.is_hitting_set(range(h.vertex_count)) == (() not in h.edges)


class TestOminus:
    def test_nothing_to_remove(self, fig1):
        assert fig1.ominus(fig1.with_edges([])) == fig1

    def test_empty_edge_removes_everything(self, fig1):
        assert fig1.ominus(fig1.with_edges([[]])).edges == ()

    def test_fig1_cores_leave_uvw(self, fig1):
        ids = name_ids(fig1)
        cores = fig1.with_edges(
            [[ids[c] for c in word] for word in ("abc", "abd", "abe")]
        )
        assert edges_by_name(fig1.ominus(cores)) == {frozenset("uvw")}

    def test_universe_mismatch(self, fig1):
        with pytest.raises(ValueError):
            fig1.ominus(build(3, [0]))

    @given(hypergraphs(), st.data())
    @settings(max_examples=60, deadline=None)
    def test_monotone(self, h, data):
        sub = data.draw(st.lists(st.sampled_from(h.edges), max_size=3)) if h.edges else []
        h2 = h.with_edges(sub)
        result = h.ominus(h2)
        assert set(result.edges) <= set(h.edges)
        assert result.dimension() <= h.dimension()


class TestUnion:
    def test_idempotent(self, fig1):
        assert fig1.union(fig1) == fig1

    def test_identity(self, fig1):
        assert fig1.union(fig1.with_edges([])) == fig1

    def test_distinct_singletons(self):
        a = build(3, [0])
        b = build(3, [1])
        assert a.union(b).edges == ((0,), (1,))

    @given(hypergraphs())
    @settings(max_examples=40, deadline=None)
    def test_dimension_is_max(self, h):
        other = h.with_edges(h.edges[: len(h.edges) // 2])
        assert h.union(other).dimension() == max(h.dimension(), other.dimension())


class TestRestrictToSupersets:
    def test_empty_core_is_identity(self, fig1):
        assert fig1.restrict_to_supersets([]) == fig1

    def test_fig1_ab_residuals(self, fig1):
        ids = name_ids(fig1)
        res = fig1.restrict_to_supersets([ids["a"], ids["b"]])
        expected = {
            frozenset(word)
            for word in ("cfuvw", "cgrstm", "chopqle", "dioru", "djpsv", "dkqtw", "el", "em", "en")
        }
        assert edges_by_name(res) == expected
        assert len(res.edges) == 9

    def test_no_superset(self):
        assert build(4, [1, 2]).restrict_to_supersets([3]).edges == ()


class TestTextFormat:
    def test_round_trip_fig1(self, fig1):
        assert parse(serialize(fig1)) == fig1

    def test_shrink_drops_unused(self):
        h = build(10, [1, 3])
        text = serialize(h, shrink=True)
        assert text.splitlines()[0] == "p hg 2 1"
        assert parse(text) == Hypergraph.from_edges(2, [[0, 1]], ["v1", "v3"])

    def test_empty_edge_line(self):
        h = parse("p hg 2 1\ne\n")
        assert h.edges == ((),)

    def test_comments_and_blanks(self):
        h = parse("# a comment\n\np hg 2 1\n# another\ne x y\n")
        assert len(h.edges) == 1

    @pytest.mark.parametrize(
        "text",
        [
            "e a b\n",  # edge before header
            "p hg 2\n",  # short header
            "p hg 2 2\ne a\n",  # edge count mismatch
            "p hg 1 1\ne a b\n",  # more names than vertices
            "q hg 1 0\n",  # unknown line
            "p hg 1 0\np hg 1 0\n",  # duplicate header
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse(text)

    @given(hypergraphs())
    @settings(max_examples=80, deadline=None)
    def test_round_trip(self, h):
        assert parse(serialize(h)) == h

    def test_aligned_with_remaps_by_name(self, fig1):
        shrunk = parse(serialize(fig1, shrink=True))
        assert shrunk.aligned_with(fig1) == fig1

    def test_aligned_with_unknown_name(self, fig1):
        foreign = Hypergraph.from_edges(1, [[0]], ["zz"])
        with pytest.raises(ValueError):
            foreign.aligned_with(fig1)


class TestRefinementCandidates:
    def test_includes_empty_and_full(self):
        h = build(3, [0, 1])
        assert h.refinement_candidates() == ((), (0,), (0, 1), (1,))

    def test_no_edges_no_candidates(self):
        assert build(3).refinement_candidates() == ()
