"""Abelianization of Artin groups and the odd-component restriction test."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from artin.errors import InternalInconsistency
from artin.graph import LabeledGraph, components, odd_subgraph
from artin.oracles import IntegerMatrix, smith_normal_form


@dataclass(frozen=True)
class AbelianizationMap:
    """``A_G / [A_G, A_G]`` is free abelian of rank ``rank``; ``class_of``
    sends each generator to its basis index."""

    rank: int
    class_of: dict[str, int]

    def to_dict(self) -> dict:
        return {"rank": self.rank, "classes": dict(self.class_of)}


def relation_matrix(g: LabeledGraph) -> IntegerMatrix:
    """One row ``e_v - e_u`` per odd edge; even edges abelianize to nothing."""
    n = len(g)
    rows = []
    for u, v, m in g.edges():
        if m % 2:
            row = [0] * n
            row[g.index(u)] = -1
            row[g.index(v)] = 1
            rows.append(row)
    return IntegerMatrix.from_rows(rows, ncols=n)


def abelianization(g: LabeledGraph, verify: bool = False) -> AbelianizationMap:
    """Generators in the same component of the odd subgraph become equal.

    With ``verify`` the rank is re-derived from the Smith normal form of
    the relation matrix, which must show a torsion-free cokernel.
    """
    comps = components(odd_subgraph(g))
    class_of = {v: i for i, comp in enumerate(comps) for v in comp}
    result = AbelianizationMap(len(comps), {v: class_of[v] for v in g.vertices})
    if verify:
        snf = smith_normal_form(relation_matrix(g))
        if snf.free_rank != result.rank or any(d != 1 for d in snf.divisors):
            raise InternalInconsistency(
                f"abelianization rank {result.rank} disagrees with Smith form {snf}"
            )
    return result


def parabolic_commutator_witness(g: LabeledGraph, omega: Iterable[str]) -> tuple[str, str] | None:
    """Two vertices of ``omega`` that are odd-connected in ``g`` but not in
    ``g|omega``, or ``None`` when the odd components restrict correctly."""
    om = g.vertex_set(omega)
    whole = abelianization(g).class_of
    local = abelianization(g.induced(om)).class_of
    first: dict[int, str] = {}
    for v in om:
        c = whole[v]
        if c in first and local[first[c]] != local[v]:
            return (first[c], v)
        first.setdefault(c, v)
    return None


def parabolic_commutator_check(g: LabeledGraph, omega: Iterable[str]) -> bool:
    """True iff the odd components of ``g|omega`` are the traces on ``omega``
    of the odd components of ``g``; this guarantees
    ``[A_omega, A_omega] = A_omega ∩ [A_G, A_G]``."""
    return parabolic_commutator_witness(g, omega) is None
