"""Labeled simplicial graphs, the defining data of Artin groups.

A :class:`LabeledGraph` is immutable. Its vertex order (the order of the
input file) is the canonical order used for every sorted output and for
all tie-breaking, so results are reproducible.

Vertex sets are plain tuples of names sorted in canonical order; use
:meth:`LabeledGraph.vertex_set` to validate and normalise user input.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Any, NamedTuple

from artin.errors import (
    DuplicateEdge,
    InvalidLabel,
    LoopEdge,
    MalformedInput,
    SubsetViolation,
    UnknownEndpoint,
    UnknownVertex,
)

VertexSet = tuple[str, ...]


class LabeledGraph:
    """Finite simplicial graph with integer edge labels ``m >= 2``.

    ``edges`` is an iterable of ``(u, v, m)`` triples. Non-adjacent pairs
    stand for ``m = infinity`` (no relation between the generators).
    """

    __slots__ = ("_vertices", "_index", "_nbrs", "_hash")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str, int]] = ()):
        verts = tuple(vertices)
        index: dict[str, int] = {}
        for v in verts:
            if not isinstance(v, str) or not v or any(c.isspace() for c in v):
                raise MalformedInput(f"invalid vertex name {v!r}")
            if v in index:
                raise MalformedInput(f"duplicate vertex {v!r}")
            index[v] = len(index)
        nbrs: dict[str, dict[str, int]] = {v: {} for v in verts}
        for u, v, m in edges:
            if u not in index:
                raise UnknownEndpoint(f"edge endpoint {u!r} is not a declared vertex")
            if v not in index:
                raise UnknownEndpoint(f"edge endpoint {v!r} is not a declared vertex")
            if u == v:
                raise LoopEdge(f"loop at {u!r}")
            if isinstance(m, bool) or not isinstance(m, int):
                raise InvalidLabel(f"label of {{{u},{v}}} must be an integer, got {m!r}")
            if m < 2:
                raise InvalidLabel(f"label of {{{u},{v}}} must be >= 2, got {m}")
            if v in nbrs[u]:
                raise DuplicateEdge(f"duplicate edge {{{u},{v}}}")
            nbrs[u][v] = m
            nbrs[v][u] = m
        self._vertices = verts
        self._index = index
        self._nbrs = nbrs
        self._hash = None

    # -- basic access -----------------------------------------------------

    @property
    def vertices(self) -> VertexSet:
        return self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def label(self, u: str, v: str) -> int | None:
        """Label of the edge ``{u, v}``, or ``None`` when not adjacent."""
        return self._nbrs[u].get(v)

    def adjacent(self, u: str, v: str) -> bool:
        return v in self._nbrs[u]

    def commute(self, u: str, v: str) -> bool:
        """True iff ``u`` and ``v`` are joined by an edge labeled 2."""
        return self._nbrs[u].get(v) == 2

    def neighbors(self, v: str) -> VertexSet:
        if v not in self._index:
            raise UnknownVertex(f"unknown vertex {v!r}")
        return self.sort(self._nbrs[v])

    def degree(self, v: str) -> int:
        return len(self._nbrs[v])

    def edges(self) -> list[tuple[str, str, int]]:
        """All edges as ``(u, v, m)`` with ``u`` before ``v``, sorted canonically."""
        out = []
        for u in self._vertices:
            iu = self._index[u]
            for v, m in self._nbrs[u].items():
                if self._index[v] > iu:
                    out.append((u, v, m))
        out.sort(key=lambda e: (self._index[e[0]], self._index[e[1]]))
        return out

    def num_edges(self) -> int:
        return sum(len(n) for n in self._nbrs.values()) // 2

    def labels(self) -> list[int]:
        return [m for _, _, m in self.edges()]

    # -- vertex sets ------------------------------------------------------

    def sort(self, vertices: Iterable[str]) -> VertexSet:
        """Return ``vertices`` as a duplicate-free tuple in canonical order."""
        return tuple(sorted(set(vertices), key=self._index.__getitem__))

    def vertex_set(self, vertices: Iterable[str]) -> VertexSet:
        """Validate that ``vertices`` is a subset of V and normalise it."""
        vs = set(vertices)
        missing = [v for v in vs if v not in self._index]
        if missing:
            raise SubsetViolation(f"not vertices of the graph: {', '.join(sorted(missing))}")
        return self.sort(vs)

    def induced(self, vertices: Iterable[str]) -> LabeledGraph:
        """Induced subgraph; vertices keep the parent's order."""
        keep = self.vertex_set(vertices)
        ks = set(keep)
        edges = [(u, v, m) for u, v, m in self.edges() if u in ks and v in ks]
        return LabeledGraph(keep, edges)

    def is_clique(self, vertices: Iterable[str]) -> bool:
        vs = list(vertices)
        return all(self.adjacent(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])

    def is_complete(self) -> bool:
        n = len(self._vertices)
        return self.num_edges() == n * (n - 1) // 2

    def rename(self, mapping: Mapping[str, str]) -> LabeledGraph:
        return LabeledGraph(
            [mapping[v] for v in self._vertices],
            [(mapping[u], mapping[v], m) for u, v, m in self.edges()],
        )

    # -- equality ----------------------------------------------------------

    def _key(self):
        return (self._vertices, tuple(self.edges()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self) -> str:
        es = ", ".join(f"{u}{v}{m}" for u, v, m in self.edges())
        return f"LabeledGraph({list(self._vertices)}, [{es}])"


# -- serialization -----------------------------------------------------------


def graph_to_dict(g: LabeledGraph) -> dict[str, Any]:
    return {
        "vertices": list(g.vertices),
        "edges": [{"u": u, "v": v, "m": m} for u, v, m in g.edges()],
    }


def emit_graph(g: LabeledGraph) -> str:
    """Canonical JSON text; edges sorted by (first endpoint, second endpoint)."""
    return json.dumps(graph_to_dict(g))


def graph_from_dict(doc: Any) -> LabeledGraph:
    if not isinstance(doc, dict) or set(doc) != {"vertices", "edges"}:
        raise MalformedInput('expected an object with exactly the keys "vertices" and "edges"')
    verts, edges = doc["vertices"], doc["edges"]
    if not isinstance(verts, list) or not isinstance(edges, list):
        raise MalformedInput('"vertices" and "edges" must be arrays')
    triples = []
    for e in edges:
        if not isinstance(e, dict) or set(e) != {"u", "v", "m"}:
            raise MalformedInput(f'edge entries need exactly the keys "u", "v", "m": {e!r}')
        if not isinstance(e["u"], str) or not isinstance(e["v"], str):
            raise MalformedInput(f"edge endpoints must be strings: {e!r}")
        triples.append((e["u"], e["v"], e["m"]))
    return LabeledGraph(verts, triples)


def parse_graph(text: str | bytes) -> LabeledGraph:
    """Parse and validate a graph JSON document."""
    try:
        doc = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from None
    return graph_from_dict(doc)


# -- neighborhoods and derived graphs ----------------------------------------


class Neighborhood(NamedTuple):
    link: VertexSet
    star: VertexSet
    link2: VertexSet


def neighborhoods(g: LabeledGraph, v: str) -> Neighborhood:
    link = g.neighbors(v)
    return Neighborhood(
        link=link,
        star=g.sort((*link, v)),
        link2=tuple(u for u in link if g.label(u, v) == 2),
    )


def common_link(g: LabeledGraph, s: Iterable[str]) -> VertexSet:
    """Vertices outside ``s`` adjacent to every vertex of ``s``."""
    ss = set(s)
    return tuple(v for v in g.vertices if v not in ss and all(g.adjacent(v, a) for a in ss))


def odd_subgraph(g: LabeledGraph) -> LabeledGraph:
    """Same vertices, only the odd-labeled edges."""
    return LabeledGraph(g.vertices, [e for e in g.edges() if e[2] % 2 == 1])


def components(g: LabeledGraph) -> list[VertexSet]:
    return components_of(g.vertices, lambda v: g._nbrs[v])


def components_of(order: Iterable[str], nbrs) -> list[VertexSet]:
    """Connected components of the graph on ``order`` with adjacency ``nbrs``.

    Each component is sorted by ``order``; components are listed by their
    first vertex.
    """
    order = list(order)
    pos = {v: i for i, v in enumerate(order)}
    seen: set[str] = set()
    out = []
    for v in order:
        if v in seen:
            continue
        seen.add(v)
        comp, stack = [v], [v]
        while stack:
            x = stack.pop()
            for y in nbrs(x):
                if y in pos and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comp.sort(key=pos.__getitem__)
        out.append(tuple(comp))
    return out


def commuting_complement(g: LabeledGraph) -> dict[str, VertexSet]:
    """Adjacency of the graph joining u, v unless they commute (label 2)."""
    return {
        u: tuple(v for v in g.vertices if v != u and g.label(u, v) != 2)
        for u in g.vertices
    }


def commuting_blocks(g: LabeledGraph) -> list[VertexSet]:
    """Components of the commuting complement: the finest partition of V
    into blocks that pairwise commute."""
    comp = commuting_complement(g)
    return components_of(g.vertices, comp.__getitem__)


@dataclass(frozen=True)
class Fig1Match:
    """Induced copy of the four-vertex obstruction: a, b each joined to v and
    w by label 2, v-w labeled m > 2, and a, b not adjacent."""

    a: str
    b: str
    v: str
    w: str

    def as_tuple(self) -> tuple[str, str, str, str]:
        return (self.a, self.b, self.v, self.w)


def find_fig1_subgraphs(g: LabeledGraph) -> list[Fig1Match]:
    """All induced Figure-1 patterns, each reported once with a < b, v < w."""
    idx = g.index
    out = []
    for v, w, m in g.edges():
        if m <= 2:
            continue
        both = [t for t in g.vertices if g.commute(t, v) and g.commute(t, w)]
        for i, a in enumerate(both):
            for b in both[i + 1:]:
                if not g.adjacent(a, b):
                    out.append(Fig1Match(a, b, v, w))
    out.sort(key=lambda p: tuple(idx(x) for x in p.as_tuple()))
    return out
