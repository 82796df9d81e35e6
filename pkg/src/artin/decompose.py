"""Constructive splittings of Artin groups.

Coherent Artin groups over non-complete graphs split as amalgams
``A_G1 *_{A_D} A_G2`` over a free abelian ``A_D`` (``D`` complete, all
labels 2); complete coherent graphs give a dihedral group times a free
abelian group. The kernel of the action on the Bass-Serre tree of such a
splitting is the free abelian direct factor computed by
:func:`bass_serre_kernel`.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations
from typing import Union

import networkx as nx

from artin.chordal import CliqueSplit, find_clique_separator, is_valid_split
from artin.classifier import coherence
from artin.errors import (
    DeltaNotFreeAbelian,
    DominatingVertex,
    InternalInconsistency,
    InvalidSplit,
    NoSuitableSplit,
    NotCoherent,
    RefinementImpossible,
)
from artin.graph import LabeledGraph, VertexSet, components_of, graph_to_dict, neighborhoods

# -- decomposition trees ---------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    vertices: VertexSet

    @property
    def support(self) -> VertexSet:
        return self.vertices


@dataclass(frozen=True)
class Amalgam:
    left: "Tree"
    right: "Tree"
    over: VertexSet

    @property
    def support(self) -> VertexSet:
        seen = dict.fromkeys(self.left.support)
        seen.update(dict.fromkeys(self.right.support))
        return tuple(seen)


@dataclass(frozen=True)
class DirectProduct:
    factors: tuple["Tree", ...]

    @property
    def support(self) -> VertexSet:
        return tuple(v for f in self.factors for v in f.support)


@dataclass(frozen=True)
class Semidirect:
    """``<actor> ⋉ A_base``; ``base`` is the centralizer graph L."""

    actor: str
    base: LabeledGraph

    @property
    def support(self) -> VertexSet:
        return (self.actor,)


Tree = Union[Leaf, Amalgam, DirectProduct, Semidirect]


def tree_to_dict(t: Tree, g: LabeledGraph | None = None) -> dict:
    if isinstance(t, Leaf):
        d = {"kind": "leaf", "vertices": list(t.vertices)}
        if g is not None:
            d["group"] = _leaf_group(g, t.vertices)
        return d
    if isinstance(t, Amalgam):
        return {
            "kind": "amalgam",
            "over": list(t.over),
            "left": tree_to_dict(t.left, g),
            "right": tree_to_dict(t.right, g),
        }
    if isinstance(t, DirectProduct):
        return {"kind": "product", "factors": [tree_to_dict(f, g) for f in t.factors]}
    return {"kind": "semidirect", "actor": t.actor, "base": graph_to_dict(t.base)}


def _leaf_group(g: LabeledGraph, vs: VertexSet) -> str:
    """Isomorphism type of a complete leaf with at most one label other than 2."""
    if not g.is_clique(vs):
        return "artin"
    non2 = _non2_edges(g, vs)
    free = len(vs) - 2 * len(non2)
    parts = [f"dihedral({g.label(u, v)})" for u, v in non2]
    if free:
        parts.append("Z" if free == 1 else f"Z^{free}")
    return " x ".join(parts) if len(non2) <= 1 else "artin"


def render_tree(t: Tree) -> str:
    """Text form: ``A{x,c} *_{A{c}} A{c,y}``; products join with `` x ``."""
    if isinstance(t, Leaf):
        return f"A{{{','.join(t.vertices)}}}"
    if isinstance(t, Amalgam):
        op = f" *_{{A{{{','.join(t.over)}}}}} " if t.over else " * "
        return _wrap(t.left) + op + _wrap(t.right)
    if isinstance(t, DirectProduct):
        if not t.factors:
            return "1"
        return " x ".join(_wrap(f) for f in t.factors)
    return f"<{t.actor}> |x L"


def _wrap(t: Tree) -> str:
    s = render_tree(t)
    return s if isinstance(t, Leaf) else f"({s})"


def iter_amalgams(t: Tree):
    """Every amalgam node, outermost first."""
    if isinstance(t, Amalgam):
        yield t
        yield from iter_amalgams(t.left)
        yield from iter_amalgams(t.right)
    elif isinstance(t, DirectProduct):
        for f in t.factors:
            yield from iter_amalgams(f)


def iter_leaves(t: Tree):
    if isinstance(t, Leaf):
        yield t
    elif isinstance(t, Amalgam):
        yield from iter_leaves(t.left)
        yield from iter_leaves(t.right)
    elif isinstance(t, DirectProduct):
        for f in t.factors:
            yield from iter_leaves(f)


# -- coherent decomposition -----------------------------------------------------


def _non2_edges(g: LabeledGraph, vs: Iterable[str]) -> list[tuple[str, str]]:
    vs = list(vs)
    return [(u, v) for u, v in combinations(vs, 2) if g.label(u, v) not in (None, 2)]


def _is_free_abelian(g: LabeledGraph, vs: Iterable[str]) -> bool:
    vs = list(vs)
    return all(g.commute(u, v) for u, v in combinations(vs, 2))


def _complete_factorization(g: LabeledGraph) -> Tree:
    non2 = _non2_edges(g, g.vertices)
    if len(non2) > 1:
        raise NotCoherent(coherence(g))
    factors: list[Tree] = []
    used: set[str] = set()
    if non2:
        factors.append(Leaf(g.sort(non2[0])))
        used.update(non2[0])
    factors.extend(Leaf((v,)) for v in g.vertices if v not in used)
    factors.sort(key=lambda f: g.index(f.vertices[0]))
    return factors[0] if len(factors) == 1 else DirectProduct(tuple(factors))


def coherent_decomposition(g: LabeledGraph) -> Tree:
    """Full decomposition tree of a coherent Artin group.

    Complete graphs factor as a product of at most one dihedral leaf and
    cyclic leaves; otherwise the graph is split along a clique separator,
    refined until the amalgamated subgroup is free abelian, and both sides
    are decomposed recursively (coherence is inherited by subgraphs) until
    every piece is complete. Complete pieces below the root are kept as
    single leaves; their group is recorded in the JSON form.
    """
    verdict = coherence(g)
    if not verdict.coherent:
        raise NotCoherent(verdict)
    return _decompose(g)


def _decompose(g: LabeledGraph, top: bool = True) -> Tree:
    # complete pieces below the root stay whole leaves
    split = find_clique_separator(g)
    if split is None:
        if len(g) == 0:
            return DirectProduct(())
        return _complete_factorization(g) if top else Leaf(g.vertices)
    s = refine_split(g, split.g1, split.g2, split.delta)
    return Amalgam(_decompose(g.induced(s.g1), False), _decompose(g.induced(s.g2), False), s.delta)


def top_split(g: LabeledGraph) -> CliqueSplit | None:
    """The outermost free-abelian split used by :func:`coherent_decomposition`."""
    split = find_clique_separator(g)
    if split is None:
        return None
    return refine_split(g, split.g1, split.g2, split.delta)


def refine_split(g: LabeledGraph, g1, g2, delta) -> CliqueSplit:
    """Turn a clique split into one whose intersection has all labels 2.

    ``delta`` may carry one edge ``{v, w}`` with a label other than 2 (v the
    canonically earlier endpoint). Configurations are tried in the order
    (v, g2), (w, g2), (v, g1), (w, g1). For endpoint ``x`` with partner
    ``y`` on side ``g_i``: if ``x`` has no neighbour in ``g_i - delta`` then
    ``x`` leaves ``g_i``; otherwise a component ``C`` of ``g_i - delta``
    meeting the link of ``x`` but avoiding that of ``y`` becomes its own side
    ``C + (delta - y)``. Failure of every configuration means the graph
    contains a Figure-1 pattern, so :class:`RefinementImpossible` is raised.
    """
    g1, g2, delta = g.vertex_set(g1), g.vertex_set(g2), g.vertex_set(delta)
    if not is_valid_split(g, g1, g2, delta) or not g.is_clique(delta):
        raise InvalidSplit("(g1, g2, delta) is not a proper clique split")
    non2 = _non2_edges(g, delta)
    if not non2:
        return CliqueSplit(g1, g2, delta)
    if len(non2) > 1:
        raise RefinementImpossible(
            f"delta ({','.join(delta)}) carries {len(non2)} labels other than 2"
        )
    v, w = non2[0]
    sides = [g1, g2]
    ds = set(delta)
    for x, y, i in ((v, w, 1), (w, v, 1), (v, w, 0), (w, v, 0)):
        side = sides[i]
        outside = [t for t in side if t not in ds]
        if not any(g.adjacent(x, t) for t in outside):
            new = list(sides)
            new[i] = tuple(t for t in side if t != x)
            return _checked(g, new[0], new[1], tuple(t for t in delta if t != x))
        for comp in components_of(outside, g.neighbors):
            if not any(g.adjacent(x, t) for t in comp):
                continue
            if any(g.adjacent(y, t) for t in comp):
                continue
            cs = set(comp)
            other = sides[1 - i]
            rest = g.sort((*other, *(t for t in side if t not in cs)))
            own = g.sort((*comp, *(t for t in delta if t != y)))
            new = [rest, rest]
            new[i] = own
            return _checked(g, new[0], new[1], tuple(t for t in delta if t != y))
    raise RefinementImpossible(
        f"no refinement removes the edge {{{v},{w}}} from delta; the graph is incoherent"
    )


def _checked(g: LabeledGraph, g1, g2, delta) -> CliqueSplit:
    g1, g2, delta = g.sort(g1), g.sort(g2), g.sort(delta)
    if not is_valid_split(g, g1, g2, delta) or not _is_free_abelian(g, delta):
        raise InternalInconsistency(f"refinement produced an invalid split {g1} / {g2} / {delta}")
    return CliqueSplit(g1, g2, delta)


# -- Bass-Serre kernel and normal subgroups --------------------------------------


@dataclass(frozen=True)
class KernelResult:
    """``A_G = A_S x A_complement`` with ``A_S`` free abelian."""

    S: VertexSet
    complement: VertexSet
    is_direct_factor: bool = True

    def to_dict(self) -> dict:
        return {
            "S": list(self.S),
            "complement": list(self.complement),
            "is_direct_factor": self.is_direct_factor,
        }


def bass_serre_kernel(g: LabeledGraph, g1, g2, delta) -> KernelResult:
    """Kernel of the action on the Bass-Serre tree of ``A_g1 *_{A_delta} A_g2``.

    It is ``A_S`` for ``S`` the vertices of ``delta`` joined by label 2 to
    every vertex outside ``delta``.
    """
    g1, g2, delta = g.vertex_set(g1), g.vertex_set(g2), g.vertex_set(delta)
    if not is_valid_split(g, g1, g2, delta):
        raise InvalidSplit("(g1, g2, delta) is not a splitting along proper subgraphs")
    if not _is_free_abelian(g, delta):
        raise DeltaNotFreeAbelian(f"A_delta is not free abelian for delta = ({','.join(delta)})")
    ds = set(delta)
    outside = [w for w in g.vertices if w not in ds]
    s = tuple(d for d in delta if all(g.commute(d, w) for w in outside))
    for a in s:
        if not all(g.commute(a, b) for b in g.vertices if b != a):
            raise InternalInconsistency(f"kernel vertex {a} is not a free abelian direct factor")
    ss = set(s)
    return KernelResult(s, tuple(v for v in g.vertices if v not in ss))


def find_free_abelian_split(g: LabeledGraph) -> CliqueSplit | None:
    """Some proper splitting over an all-2 clique, searched smallest clique first.

    Used for graphs that are not coherent; exponential in the clique number.
    """
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from((u, v) for u, v, m in g.edges() if m == 2)
    cands = [()] + [g.sort(c) for c in nx.enumerate_all_cliques(nxg)]
    cands.sort(key=lambda c: (len(c), [g.index(v) for v in c]))
    for delta in cands:
        ds = set(delta)
        rest = [v for v in g.vertices if v not in ds]
        comps = components_of(rest, g.neighbors)
        if len(comps) < 2:
            continue
        first = set(comps[0])
        return CliqueSplit(
            g1=tuple(v for v in g.vertices if v not in first),
            g2=g.sort((*comps[0], *delta)),
            delta=delta,
        )
    return None


@dataclass(frozen=True)
class NormalSubgroupReport:
    split: CliqueSplit
    kernel: KernelResult
    source: str

    @property
    def branches(self) -> list[str]:
        out = ["A_G / N is virtually abelian"]
        if self.kernel.S:
            s = ",".join(self.kernel.S)
            c = ",".join(self.kernel.complement)
            out.append(f"N <= A{{{s}}} with A_G = A{{{s}}} x A{{{c}}}")
        return out

    def to_dict(self) -> dict:
        return {
            "split": {
                "g1": list(self.split.g1),
                "g2": list(self.split.g2),
                "delta": list(self.split.delta),
            },
            "source": self.source,
            "kernel": self.kernel.to_dict(),
            "branches": self.branches,
            "direct_factor_branch_possible": bool(self.kernel.S),
        }


def normal_subgroup_report(g: LabeledGraph, split: CliqueSplit | None = None) -> NormalSubgroupReport:
    """Instantiate the dichotomy for a non-trivial finitely generated normal
    subgroup N of an amalgam over a free abelian standard parabolic: either
    the quotient is virtually abelian, or N lies in the kernel ``A_S`` and
    ``A_S`` is a free abelian direct factor. When ``S`` is empty only the
    first branch can occur."""
    source = "user"
    if split is None:
        if coherence(g).coherent:
            split, source = top_split(g), "coherent_decomposition"
        else:
            split, source = find_free_abelian_split(g), "search"
        if split is None:
            raise NoSuitableSplit(
                "no splitting along proper subgraphs over a free abelian subgroup"
            )
    kernel = bass_serre_kernel(g, split.g1, split.g2, split.delta)
    return NormalSubgroupReport(split, kernel, source)


# -- vertex splittings -----------------------------------------------------------


@dataclass(frozen=True)
class VertexSplit:
    """``A_G = A_left *_{A_over} A_right`` with left = V - w, right = st(w), over = lk(w)."""

    vertex: str
    left: VertexSet
    right: VertexSet
    over: VertexSet

    def text(self) -> str:
        j = ",".join
        return f"A{{{j(self.left)}}} *_{{A{{{j(self.over)}}}}} A{{{j(self.right)}}}"

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "left": list(self.left),
            "right": list(self.right),
            "over": list(self.over),
            "text": self.text(),
        }


def vertex_split(g: LabeledGraph, w: str) -> VertexSplit:
    nb = neighborhoods(g, w)
    if len(nb.star) == len(g):
        raise DominatingVertex(f"{w} is adjacent to every other vertex; A_G = A_st({w})")
    return VertexSplit(w, tuple(v for v in g.vertices if v != w), nb.star, nb.link)
