"""Hypergraph data model: canonical edge sets, set operators, text I/O.

Vertices are dense integers ``0..n-1``; an optional name table supplies
display tokens (``v<i>`` otherwise).  Edges are strictly sorted vertex
tuples, deduplicated and kept in lexicographic order, so structurally equal
hypergraphs serialize identically.  All values are immutable and every
operation is a pure function.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

Edge = tuple[int, ...]


class ParseError(ValueError):
    """Malformed hypergraph text."""


def canonical_edge(vertices: Iterable[int]) -> Edge:
    # duplicate vertices collapse silently; an edge is a set
    return tuple(sorted(set(vertices)))


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """A vertex universe plus a canonically ordered, deduplicated edge set.

    The empty hyperedge is representable (an empty tuple).  Equality compares
    the universe size and the edge family under display names, which makes
    ``parse(serialize(h)) == h`` hold even though parsing reassigns vertex
    ids in order of first appearance.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    names: tuple[str | None, ...] | None = None

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[Iterable[int]],
        names: Iterable[str | None] | None = None,
    ) -> "Hypergraph":
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        canon = sorted({canonical_edge(e) for e in edges})
        for e in canon:
            if e and (e[0] < 0 or e[-1] >= vertex_count):
                raise ValueError(f"edge {e} out of range for n={vertex_count}")
        name_tuple: tuple[str | None, ...] | None = None
        if names is not None:
            name_tuple = tuple(names)
            if len(name_tuple) != vertex_count:
                raise ValueError("name table length must equal vertex_count")
        return cls(vertex_count, tuple(canon), name_tuple)

    # -- identity ----------------------------------------------------------

    def display_name(self, v: int) -> str:
        if self.names is not None and self.names[v] is not None:
            return self.names[v]
        return f"v{v}"

    def display_names(self) -> tuple[str, ...]:
        return tuple(self.display_name(v) for v in range(self.vertex_count))

    def _named_edge_family(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(self.display_name(v) for v in e) for e in self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count
            and self._named_edge_family() == other._named_edge_family()
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self._named_edge_family()))

    def __repr__(self) -> str:
        shown = ", ".join(
            "{" + ",".join(self.display_name(v) for v in e) + "}" for e in self.edges[:8]
        )
        if len(self.edges) > 8:
            shown += ", ..."
        return f"Hypergraph(n={self.vertex_count}, m={len(self.edges)}, [{shown}])"

    # -- queries -----------------------------------------------------------

    def dimension(self) -> int:
        """Maximum edge cardinality; 0 for an empty edge set."""
        return max((len(e) for e in self.edges), default=0)

    def used_vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for e in self.edges for v in e}))

    def is_hitting_set(self, vertices: Iterable[int]) -> bool:
        """True iff every edge meets ``vertices``; false if the empty edge is present."""
        xs = set(vertices)
        for v in xs:
            if not 0 <= v < self.vertex_count:
                raise ValueError(f"vertex {v} out of range")
        return all(xs.intersection(e) for e in self.edges)

    def refinement_candidates(self) -> tuple[Edge, ...]:
        """All subsets of edges, deduplicated, in canonical order.

        These are exactly the candidate cores: a core is always a subset of
        each of its petals, hence of some edge.
        """
        subsets: set[Edge] = set()
        for e in self.edges:
            for r in range(len(e) + 1):
                subsets.update(itertools.combinations(e, r))
        return tuple(sorted(subsets))

    # -- operators ---------------------------------------------------------

    def with_edges(self, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Same universe, new edge set."""
        return Hypergraph.from_edges(self.vertex_count, edges, self.names)

    def _require_same_universe(self, other: "Hypergraph") -> None:
        if (
            self.vertex_count != other.vertex_count
            or self.display_names() != other.display_names()
        ):
            raise ValueError("hypergraphs live on different vertex universes")

    def ominus(self, other: "Hypergraph") -> "Hypergraph":
        """Keep the edges of ``self`` that contain no edge of ``other``."""
        self._require_same_universe(other)
        removers = [set(e) for e in other.edges]
        kept = [e for e in self.edges if not any(r.issubset(e) for r in removers)]
        return self.with_edges(kept)

    def union(self, other: "Hypergraph") -> "Hypergraph":
        self._require_same_universe(other)
        return self.with_edges(self.edges + other.edges)

    def restrict_to_supersets(self, core: Iterable[int]) -> "Hypergraph":
        """Residuals ``e - core`` of the edges containing ``core``."""
        c = set(core)
        for v in c:
            if not 0 <= v < self.vertex_count:
                raise ValueError(f"vertex {v} out of range")
        return self.with_edges(set(e) - c for e in self.edges if c.issubset(e))

    def aligned_with(self, reference: "Hypergraph") -> "Hypergraph":
        """Re-express this hypergraph over ``reference``'s universe by name.

        Lets a re-parsed (possibly shrunken) hypergraph be compared against
        the instance it was derived from.
        """
        lookup = {reference.display_name(v): v for v in range(reference.vertex_count)}
        remapped = []
        for e in self.edges:
            try:
                remapped.append([lookup[self.display_name(v)] for v in e])
            except KeyError as exc:
                raise ValueError(f"vertex name {exc.args[0]!r} unknown in reference") from None
        return reference.with_edges(remapped)


# -- text format -----------------------------------------------------------
#
# Line-based UTF-8:  '#' comment lines, a header `p hg <n> <m>`, then m lines
# `e <tok> <tok> ...` (an `e` line with no tokens is the empty edge).


def serialize(h: Hypergraph, shrink: bool = False) -> str:
    """Render in the text format; ``shrink`` drops vertices outside all edges."""
    if shrink:
        used = h.used_vertices()
        remap = {v: i for i, v in enumerate(used)}
        h = Hypergraph.from_edges(
            len(used),
            ([remap[v] for v in e] for e in h.edges),
            [h.display_name(v) for v in used],
        )
    tokens = h.display_names()
    if len(set(tokens)) != len(tokens):
        raise ValueError("duplicate display names; serialization would be ambiguous")
    lines = [f"p hg {h.vertex_count} {len(h.edges)}"]
    for e in h.edges:
        lines.append(" ".join(["e", *(tokens[v] for v in e)]).rstrip())
    return "\n".join(lines) + "\n"


def parse(text: str) -> Hypergraph:
    """Parse the text format; tokens are interned in order of first appearance."""
    header: tuple[int, int] | None = None
    edges: list[list[int]] = []
    ids: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if header is not None:
                raise ParseError(f"line {lineno}: duplicate header")
            if len(fields) != 4 or fields[1] != "hg":
                raise ParseError(f"line {lineno}: expected 'p hg <n> <m>'")
            try:
                header = (int(fields[2]), int(fields[3]))
            except ValueError:
                raise ParseError(f"line {lineno}: non-numeric header") from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError(f"line {lineno}: negative header values")
        elif fields[0] == "e":
            if header is None:
                raise ParseError(f"line {lineno}: edge before header")
            edge = []
            for tok in fields[1:]:
                if tok not in ids:
                    if len(ids) >= header[0]:
                        raise ParseError(f"line {lineno}: more names than vertices")
                    ids[tok] = len(ids)
                edge.append(ids[tok])
            edges.append(edge)
        else:
            raise ParseError(f"line {lineno}: unknown line type {fields[0]!r}")
    if header is None:
        raise ParseError("missing 'p hg' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header announced {m} edges, found {len(edges)}")
    names: list[str | None] = [None] * n
    for tok, v in ids.items():
        names[v] = tok
    # fill unseen slots with fresh default tokens so the table stays injective
    taken = set(ids)
    counter = 0
    for v in range(n):
        if names[v] is None:
            while f"v{counter}" in taken:
                counter += 1
            names[v] = f"v{counter}"
            taken.add(f"v{counter}")
    return Hypergraph.from_edges(n, edges, names)


def load(path: str) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(h: Hypergraph, path: str, shrink: bool = False) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(h, shrink=shrink))
