"""Structural recognition of connected finite-type Coxeter diagrams."""

from __future__ import annotations

from artin.graph import LabeledGraph, VertexSet

INFINITE = "infinite"


def diagram_type(g: LabeledGraph, block: VertexSet) -> str:
    """Finite type tag of the Coxeter diagram on ``block``, or ``"infinite"``.

    ``block`` must be connected in the diagram (pairs that do not commute).
    A non-adjacent pair is an infinite label, so the block is infinite
    unless it is complete in ``g``.
    """
    n = len(block)
    if n == 1:
        return "A1"
    if not g.is_clique(block):
        return INFINITE
    edges = [
        (u, v, g.label(u, v))
        for i, u in enumerate(block)
        for v in block[i + 1:]
        if g.label(u, v) > 2
    ]
    if n == 2:
        return f"I2({edges[0][2]})"
    # a connected diagram is a tree exactly when it has n - 1 edges
    if len(edges) != n - 1 or any(m > 5 for _, _, m in edges):
        return INFINITE
    deg = {v: 0 for v in block}
    for u, v, _ in edges:
        deg[u] += 1
        deg[v] += 1
    heavy = [(u, v, m) for u, v, m in edges if m > 3]
    branch = [v for v in block if deg[v] >= 3]
    if not heavy:
        if not branch:
            return f"A{n}"
        if len(branch) > 1 or deg[branch[0]] > 3:
            return INFINITE
        arms = sorted(_arm_lengths(edges, branch[0]))
        if arms[0] == 1 and arms[1] == 1:
            return f"D{n}"
        if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
            return f"E{n}"
        return INFINITE
    if branch or len(heavy) > 1:
        return INFINITE
    u, v, m = heavy[0]
    at_end = deg[u] == 1 or deg[v] == 1
    if m == 4:
        if at_end:
            return f"B{n}"
        return "F4" if n == 4 else INFINITE
    if at_end and n in (3, 4):
        return f"H{n}"
    return INFINITE


def _arm_lengths(edges, centre: str) -> list[int]:
    adj: dict[str, list[str]] = {}
    for u, v, _ in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    lengths = []
    for start in adj[centre]:
        prev, cur, length = centre, start, 1
        while len(adj[cur]) == 2:
            prev, cur = cur, next(x for x in adj[cur] if x != prev)
            length += 1
        lengths.append(length)
    return lengths
