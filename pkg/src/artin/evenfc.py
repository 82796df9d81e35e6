"""Centralizers, normalizers and acylindricity reports for even FC-type.

Everything here works with standard parabolic subgroups only. Verdicts
that are containments are reported as bounds.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from artin.classifier import irreducible_factors, is_even_fc
from artin.errors import EmptySubset, InternalInconsistency, NotEvenFC, UnknownVertex, VerticesAdjacent
from artin.graph import LabeledGraph, VertexSet, commuting_blocks, common_link, graph_to_dict
from artin.words import GeneratorWord


def _require_even_fc(g: LabeledGraph) -> None:
    if not is_even_fc(g):
        raise NotEvenFC("requires even FC-type (all labels even, every triangle with two labels 2)")


def delta(g: LabeledGraph, x: str, y: str | None = None) -> GeneratorWord:
    """Garside element: ``x`` for a single vertex, ``(y x)^k`` for an edge
    ``{x, y}`` labeled ``2k``."""
    if y is None:
        return GeneratorWord.of(x)
    return GeneratorWord.of(y, x) ** (g.label(x, y) // 2)


def z_word(a: str, w: str, k: int) -> GeneratorWord:
    """``z_{a,w} = a^(1-k) (w a)^k a^-1``, i.e. ``w^(a^(k-1)) ... w^a w``."""
    return GeneratorWord.of((a, 1 - k)) * GeneratorWord.of(w, a) ** k * GeneratorWord.of((a, -1))


def z_factored(a: str, w: str, k: int) -> str:
    return f"{a}^{1 - k} ({w} {a})^{k} {a}^-1"


@dataclass(frozen=True)
class CentralizerStructure:
    """``C(a) = <a> ⋉ L`` where L is the Artin group on ``L_graph``.

    ``names`` maps each vertex of lk(a) to its L vertex: itself when the
    edge to ``a`` is labeled 2, ``z_{a,w}`` otherwise. ``words`` gives
    each L vertex as a word in the original generators.
    """

    actor: str
    generators: tuple[GeneratorWord, ...]
    L_graph: LabeledGraph
    names: dict[str, str]
    words: dict[str, GeneratorWord]
    half_labels: dict[str, int] = field(default_factory=dict)

    def semidirect_relators(self) -> list[tuple[GeneratorWord, GeneratorWord]]:
        """Relators of ``A_st(a) = <a> ⋉ M`` after the Tietze moves adding
        ``w_i = w^(a^i)`` and ``z_{a,w}``; letters are M's generator names."""
        a = GeneratorWord.of(self.actor)
        conj = lambda x: x.conjugate(a)  # noqa: E731
        rels: list[tuple[GeneratorWord, GeneratorWord]] = []
        for w, name in self.names.items():
            if name == w:
                rels.append((conj(GeneratorWord.of(w)), GeneratorWord.of(w)))
                continue
            k = self.half_labels[w]
            ws = [GeneratorWord.of(w if i == 0 else f"{w}_{i}") for i in range(k - 1)]
            for i in range(k - 2):
                rels.append((conj(ws[i]), ws[i + 1]))
            tail = GeneratorWord.of(name)
            for x in ws:
                tail = tail * x.inverse()
            rels.append((conj(ws[-1]), tail))
            rels.append((conj(GeneratorWord.of(name)), GeneratorWord.of(name)))
        return rels

    def to_dict(self) -> dict:
        return {
            "actor": self.actor,
            "generators": [str(x) for x in self.generators],
            "generator_words": [x.to_json() for x in self.generators],
            "L_graph": graph_to_dict(self.L_graph),
            "names": dict(self.names),
            "z_words": {
                n: {"word": str(self.words[n]), "factored": z_factored(self.actor, w, self.half_labels[w])}
                for w, n in self.names.items()
                if n != w
            },
        }


def _fresh(g: LabeledGraph, name: str, taken: set[str]) -> str:
    while name in g or name in taken:
        name += "'"
    return name


def vertex_centralizer(g: LabeledGraph, a: str) -> CentralizerStructure:
    """Generators and the L graph of the centralizer of a standard generator.

    ``C(a)`` is generated by ``a``, the link vertices commuting with ``a``
    and ``z_{a,w}`` for each ``w`` joined to ``a`` by a label ``2k > 2``.
    L is a copy of the induced link of ``a`` with each such ``w`` renamed.
    """
    _require_even_fc(g)
    if a not in g:
        raise UnknownVertex(f"unknown vertex {a!r}")
    link = g.neighbors(a)
    names: dict[str, str] = {}
    words: dict[str, GeneratorWord] = {}
    halves: dict[str, int] = {}
    gens = [GeneratorWord.of(a)]
    taken: set[str] = set()
    for w in link:
        m = g.label(a, w)
        if m == 2:
            names[w] = w
            words[w] = GeneratorWord.of(w)
        else:
            k = m // 2
            name = _fresh(g, f"z_{{{a},{w}}}", taken)
            taken.add(name)
            names[w], words[name], halves[w] = name, z_word(a, w, k), k
        gens.append(words[names[w]])
    sub = g.induced(link)
    lg = LabeledGraph([names[w] for w in link], [(names[u], names[v], m) for u, v, m in sub.edges()])
    return CentralizerStructure(a, tuple(gens), lg, names, words, halves)


def pair_centralizer_bound(g: LabeledGraph, a: str, b: str) -> VertexSet:
    """``T`` with ``C(a) ∩ C(b) <= A_T``: vertices commuting with both."""
    _require_even_fc(g)
    for x in (a, b):
        if x not in g:
            raise UnknownVertex(f"unknown vertex {x!r}")
    if a == b or g.adjacent(a, b):
        raise VerticesAdjacent(f"{a} and {b} must be distinct and non-adjacent")
    return tuple(v for v in g.vertices if g.commute(v, a) and g.commute(v, b))


def parabolic_centralizer_generators(g: LabeledGraph, s: Iterable[str]) -> list[GeneratorWord]:
    """Elementary ribbons generating the centralizer of ``A_S``.

    Type 1: ``Δ_X`` for every spherical irreducible factor ``X`` of S.
    Type 2: ``Δ_X Δ_{X-t}^-1`` for each ``t`` outside S whose irreducible
    component ``X`` in ``S + t`` is spherical; for ``X = {t, s}`` this is
    ``(s t)^k s^-1``. In even FC-type a spherical component has at most
    two vertices, so ``Δ_X`` is ``x`` or ``(y x)^k``.
    """
    _require_even_fc(g)
    s = g.vertex_set(s)
    if not s:
        raise EmptySubset("S must be nonempty")
    out = []
    for x in commuting_blocks(g.induced(s)):
        if len(x) == 1:
            out.append(delta(g, x[0]))
        elif len(x) == 2 and g.adjacent(*x):
            out.append(delta(g, *x))
    ss = set(s)
    for t in g.vertices:
        if t in ss:
            continue
        comp = next(c for c in commuting_blocks(g.induced((*s, t))) if t in c)
        if len(comp) == 1:
            out.append(GeneratorWord.of(t))
        elif len(comp) == 2 and g.adjacent(*comp):
            (o,) = [x for x in comp if x != t]
            out.append(GeneratorWord.of(o, t) ** (g.label(t, o) // 2) * GeneratorWord.of((o, -1)))
    return out


# -- normalizers -------------------------------------------------------------------


@dataclass(frozen=True)
class NormalizerVerdict:
    """``case`` is ``"equal"`` (N(A_S) = A_S), ``"product_bound"``
    (N(A_S) <= A_T1 x A_T2) or ``"semidirect_bound"`` (N(A_S) <= L x A_S)."""

    case: str
    S: VertexSet
    T1: VertexSet = ()
    T2: VertexSet = ()
    Z: VertexSet = ()
    removed_vertices: VertexSet = ()
    L_graph: LabeledGraph | None = None
    actor: str | None = None

    def describe(self) -> str:
        s = ",".join(self.S)
        if self.case == "equal":
            return f"N(A{{{s}}}) = A{{{s}}}"
        if self.case == "product_bound":
            return f"N(A{{{s}}}) <= A{{{','.join(self.T1)}}} x A{{{','.join(self.T2)}}}"
        return f"N(A{{{s}}}) <= L x A{{{s}}} with L from C({self.actor})"

    def to_dict(self) -> dict:
        d = {
            "case": self.case,
            "S": list(self.S),
            "removed_vertices": list(self.removed_vertices),
            "statement": self.describe(),
        }
        if self.case == "product_bound":
            d.update(T1=list(self.T1), T2=list(self.T2), Z=list(self.Z))
        if self.case == "semidirect_bound":
            d.update(actor=self.actor, L_graph=graph_to_dict(self.L_graph))
        return d


def normalizer_classify(g: LabeledGraph, s: Iterable[str]) -> NormalizerVerdict:
    """Classify the normalizer of a standard parabolic ``A_S``.

    Follows the case analysis: an empty common link gives equality; a
    single vertex or free abelian ``A_S`` is bounded by ``L x A_S`` using
    the centralizer of the first vertex of S; otherwise link vertices that
    do not affect the normalizer are removed in canonical order and the
    remaining link splits off as a direct factor.
    """
    _require_even_fc(g)
    s = g.vertex_set(s)
    if not s:
        raise EmptySubset("S must be nonempty")
    if not common_link(g, s):
        return NormalizerVerdict("equal", s)
    free_abelian = all(g.commute(x, y) for i, x in enumerate(s) for y in s[i + 1:])
    if len(s) == 1 or free_abelian:
        c = vertex_centralizer(g, s[0])
        return NormalizerVerdict("semidirect_bound", s, L_graph=c.L_graph, actor=s[0])

    ambient = list(g.vertices)
    removed: list[str] = []
    while True:
        h = g.induced(ambient)
        victim = next(
            (
                v
                for v in common_link(h, s)
                if any(
                    h.label(v, a) > 2 and any(b != a and not h.commute(a, b) for b in s)
                    for a in s
                )
            ),
            None,
        )
        if victim is None:
            break
        ambient.remove(victim)
        removed.append(victim)
    h = g.induced(ambient)
    lk = common_link(h, s)
    z = tuple(a for a in s if any(h.label(a, w) > 2 for w in lk))
    for a in z:
        if not all(h.commute(a, b) for b in s if b != a):
            raise InternalInconsistency(f"{a} in Z is not central in A_S")
    if not lk:
        return NormalizerVerdict("equal", s, removed_vertices=tuple(removed))
    t1 = tuple(a for a in s if a not in z)
    if not t1:
        raise InternalInconsistency("S - Z is empty although A_S is not free abelian")
    t2 = g.sort((*z, *lk))
    return NormalizerVerdict("product_bound", s, T1=t1, T2=t2, Z=z, removed_vertices=tuple(removed))


# -- acylindrical hyperbolicity ---------------------------------------------------------


@dataclass(frozen=True)
class FactorReport:
    vertices: VertexSet
    kind: str
    summary: str
    data: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "kind": self.kind, "summary": self.summary, "data": self.data}


@dataclass(frozen=True)
class AcylReport:
    target: VertexSet
    factors: tuple[FactorReport, ...]
    overall: str

    def to_dict(self) -> dict:
        return {
            "target": list(self.target),
            "factors": [f.to_dict() for f in self.factors],
            "overall": self.overall,
        }


def _factor_report(h: LabeledGraph, block: VertexSet) -> FactorReport:
    if len(block) == 1:
        return FactorReport(block, "single_vertex", "infinite cyclic (virtually cyclic; not acylindrically hyperbolic)")
    if len(block) == 2 and h.adjacent(*block):
        a, b = block
        k = h.label(a, b) // 2
        centre = GeneratorWord.of(a, b) ** k
        return FactorReport(
            block,
            "dihedral",
            f"infinite center <{centre}>; quotient by center is Z * Z_{k}",
            {
                "label": 2 * k,
                "center_generator": str(centre),
                "c": f"{a} {b}",
                "relator": f"c^{k} {b} = {b} c^{k}",
                "quotient_by_center": f"Z * Z_{k}",
                "finite_index_subgroup": f"<c^{k}> x F with F the normal closure of {b} (free)",
            },
        )
    return FactorReport(
        block,
        "acylindrically_hyperbolic",
        "irreducible even FC-type, not a single vertex, not dihedral: acylindrically hyperbolic",
    )


def acyl_report(g: LabeledGraph, t: Iterable[str] | None = None) -> AcylReport:
    """Describe acylindrical hyperbolicity factor by factor, for ``A_G`` or a
    standard parabolic ``A_T``."""
    _require_even_fc(g)
    target = g.vertices if t is None else g.vertex_set(t)
    h = g.induced(target)
    factors = tuple(_factor_report(h, b) for b in irreducible_factors(h))
    if not factors:
        overall = "trivial group"
    elif all(f.kind == "single_vertex" for f in factors):
        overall = "free abelian; no acylindrically hyperbolic factor"
    elif len(factors) > 1:
        overall = "reducible: commuting normal subgroups obstruction (direct product of the factors)"
    else:
        overall = factors[0].summary
    return AcylReport(target, factors, overall)
