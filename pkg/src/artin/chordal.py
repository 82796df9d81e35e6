"""Chordality via lexicographic BFS, and single clique-separator splits."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from artin.errors import NotChordal
from artin.graph import LabeledGraph, VertexSet, components_of


@dataclass(frozen=True)
class ChordalityCertificate:
    """Either a perfect elimination ordering or an induced cycle of length >= 4."""

    chordal: bool
    ordering: VertexSet = ()
    cycle: VertexSet = ()

    def verify(self, g: LabeledGraph) -> bool:
        if self.chordal:
            return verify_peo(g, self.ordering)
        return verify_induced_cycle(g, self.cycle)


def lex_bfs(g: LabeledGraph) -> list[str]:
    """Lexicographic BFS visiting order; ties go to the canonically first vertex."""
    n = len(g)
    labels: dict[str, list[int]] = {v: [] for v in g.vertices}
    order: list[str] = []
    visited: set[str] = set()
    remaining = list(g.vertices)
    for step in range(n):
        best = remaining[0]
        for v in remaining[1:]:
            if labels[v] > labels[best]:
                best = v
        remaining.remove(best)
        order.append(best)
        visited.add(best)
        for u in g.neighbors(best):
            if u not in visited:
                labels[u].append(n - step)
    return order


def verify_peo(g: LabeledGraph, ordering) -> bool:
    """Each vertex's later neighbours must form a clique."""
    order = list(ordering)
    if sorted(order, key=g.index) != list(g.vertices):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        if not g.is_clique(later):
            return False
    return True


def verify_induced_cycle(g: LabeledGraph, cycle) -> bool:
    cyc = list(cycle)
    k = len(cyc)
    if k < 4 or len(set(cyc)) != k or any(v not in g for v in cyc):
        return False
    for i, u in enumerate(cyc):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.adjacent(u, cyc[j]) != consecutive:
                return False
    return True


def _find_induced_cycle(g: LabeledGraph) -> VertexSet:
    # v on an induced cycle with cycle-neighbours x, y: the rest of the cycle
    # avoids N[v], so a shortest x-y path outside N[v] closes an induced cycle.
    for v in g.vertices:
        nb = g.neighbors(v)
        blocked = set(nb) | {v}
        for i, x in enumerate(nb):
            for y in nb[i + 1:]:
                if g.adjacent(x, y):
                    continue
                path = _shortest_path(g, x, y, blocked - {x, y})
                if path is not None:
                    return (v, *path)
    raise AssertionError("non-chordal graph without an induced cycle")


def _shortest_path(g: LabeledGraph, src: str, dst: str, blocked: set[str]):
    prev = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            path = []
            while x is not None:
                path.append(x)
                x = prev[x]
            return path[::-1]
        for y in g.neighbors(x):
            if y not in prev and y not in blocked:
                prev[y] = x
                queue.append(y)
    return None


def is_chordal(g: LabeledGraph) -> tuple[bool, ChordalityCertificate]:
    """Decide chordality, returning a certificate that re-verifies against ``g``.

    The reverse of a lexicographic BFS order is a perfect elimination
    ordering exactly when the graph is chordal.
    """
    peo = tuple(reversed(lex_bfs(g)))
    if verify_peo(g, peo):
        return True, ChordalityCertificate(True, ordering=peo)
    return False, ChordalityCertificate(False, cycle=_find_induced_cycle(g))


@dataclass(frozen=True)
class CliqueSplit:
    """``V = g1 ∪ g2`` with ``delta = g1 ∩ g2`` a clique and no edges
    between ``g1 - delta`` and ``g2 - delta``."""

    g1: VertexSet
    g2: VertexSet
    delta: VertexSet


def find_clique_separator(g: LabeledGraph) -> CliqueSplit | None:
    """Split a chordal graph along a clique, or return ``None`` when it is
    complete (not splittable).

    Uses the smallest non-adjacent pair ``(u, x)`` and the neighbourhood of
    the component of ``x`` in ``G - N[u]``, which is a minimal separator and
    hence a clique in a chordal graph.
    """
    chordal, cert = is_chordal(g)
    if not chordal:
        raise NotChordal(cert.cycle)
    if len(g) < 2 or g.is_complete():
        return None
    verts = g.vertices
    u = x = None
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            if not g.adjacent(a, b):
                u, x = a, b
                break
        if u is not None:
            break
    closed = set(g.neighbors(u)) | {u}
    rest = [v for v in verts if v not in closed]
    comp = next(c for c in components_of(rest, g.neighbors) if x in c)
    cs = set(comp)
    sep = g.sort(y for c in comp for y in g.neighbors(c) if y not in cs)
    return CliqueSplit(
        g1=tuple(v for v in verts if v not in cs),
        g2=g.sort((*comp, *sep)),
        delta=sep,
    )


def is_valid_split(g: LabeledGraph, g1, g2, delta, *, proper: bool = True) -> bool:
    """Check the amalgam conditions for ``(g1, g2, delta)`` (clique-ness not included)."""
    s1, s2, sd = set(g1), set(g2), set(delta)
    if s1 | s2 != set(g.vertices) or s1 & s2 != sd:
        return False
    if proper and (s1 == set(g.vertices) or s2 == set(g.vertices)):
        return False
    return not any(g.adjacent(a, b) for a in s1 - sd for b in s2 - sd)
