"""Graph-level verdicts: even, spherical, FC, coherent, irreducible."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from artin.chordal import is_chordal
from artin.coxeter import INFINITE, diagram_type
from artin.errors import InternalInconsistency, TooLarge
from artin.graph import LabeledGraph, VertexSet, commuting_blocks, find_fig1_subgraphs
from artin.oracles import MAX_COSINE_LABEL, cosine_matrix_pd


def is_even(g: LabeledGraph) -> bool:
    return all(m % 2 == 0 for m in g.labels())


def is_abelian(g: LabeledGraph) -> bool:
    """A_G is abelian iff every pair of generators is joined by a label-2 edge."""
    return g.is_complete() and all(m == 2 for m in g.labels())


@dataclass(frozen=True)
class SphericalVerdict:
    is_spherical: bool
    components: tuple[tuple[VertexSet, str], ...]
    pd_crosscheck: bool | None = None

    def to_dict(self) -> dict:
        return {
            "spherical": self.is_spherical,
            "components": [{"vertices": list(vs), "type": t} for vs, t in self.components],
            "pd_crosscheck": self.pd_crosscheck,
        }


def spherical_type(g: LabeledGraph, crosscheck: bool = True) -> SphericalVerdict:
    """Decide finiteness of the Coxeter group by matching diagram components.

    The diagram components are the blocks of the commuting complement. When
    ``crosscheck`` is set (and labels are within the cosine cap) the
    numeric positive-definiteness oracle must agree.
    """
    comps = tuple((b, diagram_type(g, b)) for b in commuting_blocks(g))
    spherical = all(t != INFINITE for _, t in comps)
    pd = None
    if crosscheck and all(m <= MAX_COSINE_LABEL for m in g.labels()):
        try:
            pd = cosine_matrix_pd(g)
        except TooLarge:  # pragma: no cover - guarded above
            pd = None
        if pd != spherical:
            raise InternalInconsistency(
                f"catalog says spherical={spherical} but cosine form says {pd} for {g!r}"
            )
    return SphericalVerdict(spherical, comps, pd)


def maximal_cliques(g: LabeledGraph) -> list[VertexSet]:
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from((u, v) for u, v, _ in g.edges())
    cliques = [g.sort(c) for c in nx.find_cliques(nxg)]
    cliques.sort(key=lambda c: [g.index(v) for v in c])
    return cliques


def is_fc(g: LabeledGraph) -> bool:
    """Every complete subgraph spans a spherical Artin group.

    Standard parabolic subgroups of finite Coxeter groups are finite, so
    the maximal cliques suffice.
    """
    return all(spherical_type(g.induced(c), crosscheck=False).is_spherical for c in maximal_cliques(g))


def triangles(g: LabeledGraph) -> list[tuple[str, str, str]]:
    out = []
    for u, v, _ in g.edges():
        for w in g.neighbors(v):
            if g.index(w) > g.index(v) and g.adjacent(u, w):
                out.append((u, v, w))
    out.sort(key=lambda t: tuple(g.index(x) for x in t))
    return out


def is_even_fc(g: LabeledGraph) -> bool:
    """Even, and every triangle has at least two edges labeled 2."""
    if not is_even(g):
        return False
    for t in triangles(g):
        if sum(g.label(x, y) == 2 for x, y in combinations(t, 2)) < 2:
            return False
    return True


# -- coherence ------------------------------------------------------------------


@dataclass(frozen=True)
class InducedCycle:
    cycle: VertexSet
    condition: str = field(default="i", init=False)

    def describe(self) -> str:
        return f"not chordal: induced cycle ({','.join(self.cycle)})"

    def to_dict(self) -> dict:
        return {"condition": "i", "kind": "not_chordal", "witness": list(self.cycle)}


@dataclass(frozen=True)
class BadClique:
    clique: VertexSet
    condition: str = field(default="ii", init=False)

    def describe(self) -> str:
        return f"complete subgraph ({','.join(self.clique)}) has more than one label other than 2"

    def to_dict(self) -> dict:
        return {"condition": "ii", "kind": "bad_clique", "witness": list(self.clique)}


@dataclass(frozen=True)
class Fig1Pattern:
    pattern: tuple[str, str, str, str]
    condition: str = field(default="iii", init=False)

    def describe(self) -> str:
        return f"Figure-1 pattern ({','.join(self.pattern)})"

    def to_dict(self) -> dict:
        return {"condition": "iii", "kind": "fig1_pattern", "witness": list(self.pattern)}


@dataclass(frozen=True)
class CoherenceVerdict:
    coherent: bool
    failing_condition: InducedCycle | BadClique | Fig1Pattern | None = None

    def describe(self) -> str:
        if self.coherent:
            return "coherent"
        return f"incoherent: {self.failing_condition.describe()}"

    def to_dict(self) -> dict:
        fc = self.failing_condition
        return {"coherent": self.coherent, "failing_condition": fc.to_dict() if fc else None}


def bad_cliques(g: LabeledGraph) -> list[VertexSet]:
    """Complete subgraphs on 3 or 4 vertices with more than one label != 2.

    Triangles come first, then K4s; a K4 whose two non-2 edges are disjoint
    passes every triangle test, so K4s are scanned explicitly.
    """
    out = []
    tris = triangles(g)
    for t in tris:
        if sum(g.label(x, y) != 2 for x, y in combinations(t, 2)) > 1:
            out.append(t)
    for u, v, w in tris:
        for x in g.neighbors(w):
            if g.index(x) > g.index(w) and g.adjacent(u, x) and g.adjacent(v, x):
                q = (u, v, w, x)
                if sum(g.label(a, b) != 2 for a, b in combinations(q, 2)) > 1:
                    out.append(q)
    return out


def coherence(g: LabeledGraph) -> CoherenceVerdict:
    """Coherence via the three graph conditions, checked in order."""
    chordal, cert = is_chordal(g)
    if not chordal:
        return CoherenceVerdict(False, InducedCycle(cert.cycle))
    bad = bad_cliques(g)
    if bad:
        return CoherenceVerdict(False, BadClique(bad[0]))
    pats = find_fig1_subgraphs(g)
    if pats:
        return CoherenceVerdict(False, Fig1Pattern(pats[0].as_tuple()))
    return CoherenceVerdict(True)


def derived_subgroup_free(g: LabeledGraph) -> bool:
    """The derived subgroup is free (or trivial) exactly when A_G is coherent.

    When A_G is abelian the derived subgroup is trivial; see
    :func:`derived_subgroup`.
    """
    return coherence(g).coherent


@dataclass(frozen=True)
class DerivedSubgroupVerdict:
    free: bool
    trivial: bool

    def to_dict(self) -> dict:
        return {"free": self.free, "trivial": self.trivial}


def derived_subgroup(g: LabeledGraph) -> DerivedSubgroupVerdict:
    return DerivedSubgroupVerdict(derived_subgroup_free(g), is_abelian(g))


def irreducible_factors(g: LabeledGraph) -> list[VertexSet]:
    """Blocks of the finest direct-product decomposition into standard parabolics."""
    return commuting_blocks(g)


def is_irreducible(g: LabeledGraph) -> bool:
    return len(irreducible_factors(g)) <= 1
