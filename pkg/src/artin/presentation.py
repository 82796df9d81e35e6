"""Group presentations as text and JSON."""

from __future__ import annotations

import re
from dataclasses import dataclass

from artin.decompose import Amalgam, DirectProduct, Leaf, Semidirect, Tree, render_tree, tree_to_dict
from artin.errors import MalformedInput
from artin.evenfc import CentralizerStructure
from artin.graph import LabeledGraph
from artin.words import GeneratorWord, alternating


@dataclass(frozen=True)
class GroupPresentation:
    """Artin presentation: one alternating relation per edge, plus optional
    extra relations (pairs of words) and Coxeter involution relations."""

    generators: tuple[str, ...]
    relations: tuple[tuple[str, str, int], ...]
    extra_relations: tuple[tuple[GeneratorWord, GeneratorWord], ...] = ()
    coxeter: bool = False

    @classmethod
    def of_graph(cls, g: LabeledGraph, coxeter: bool = False) -> GroupPresentation:
        return cls(g.vertices, tuple(g.edges()), coxeter=coxeter)

    def relation_words(self) -> list[tuple[GeneratorWord, GeneratorWord]]:
        out = [(alternating(u, v, m), alternating(v, u, m)) for u, v, m in self.relations]
        out.extend(self.extra_relations)
        return out

    def text(self) -> str:
        rels = [f"{_letters(u, v, m)} = {_letters(v, u, m)}" for u, v, m in self.relations]
        rels += [f"{lhs} = {rhs}" for lhs, rhs in self.extra_relations]
        if self.coxeter:
            rels += [f"{x}^2 = 1" for x in self.generators]
        gens = ", ".join(self.generators)
        return f"< {gens} | {', '.join(rels)} >" if rels else f"< {gens} >"

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "relations": [{"u": u, "v": v, "m": m} for u, v, m in self.relations],
            "extra_relations": [[a.to_json(), b.to_json()] for a, b in self.extra_relations],
            "coxeter": self.coxeter,
            "text": self.text(),
        }


def _letters(u: str, v: str, m: int) -> str:
    return " ".join((u, v)[i % 2] for i in range(m))


_PRESENTATION = re.compile(r"^\s*<\s*(?P<gens>[^|>]*?)\s*(?:\|\s*(?P<rels>.*?))?\s*>\s*$", re.S)


def parse_presentation(text: str) -> LabeledGraph:
    """Recover the defining graph from the text form of an Artin presentation.

    Each relation must be a pair of alternating positive words of the same
    length ``m`` on two generators; Coxeter relations ``x^2 = 1`` are ignored.
    """
    m = _PRESENTATION.match(text)
    if m is None:
        raise MalformedInput("not a presentation of the form < gens | rels >")
    gens = [x.strip() for x in m.group("gens").split(",") if x.strip()]
    edges = []
    rels = m.group("rels") or ""
    for rel in filter(None, (r.strip() for r in rels.split(","))):
        lhs, sep, rhs = rel.partition("=")
        if not sep:
            raise MalformedInput(f"relation without '=': {rel!r}")
        left, right = lhs.split(), rhs.split()
        if right == ["1"] and len(left) == 1 and left[0].endswith("^2"):
            continue
        if len(left) != len(right) or len(left) < 2:
            raise MalformedInput(f"not an Artin relation: {rel!r}")
        u, v = left[0], left[1]
        n = len(left)
        if left != _letters(u, v, n).split() or right != _letters(v, u, n).split():
            raise MalformedInput(f"not an alternating relation: {rel!r}")
        edges.append((u, v, n))
    return LabeledGraph(gens, edges)


def tree_presentation(t: Tree, g: LabeledGraph, coxeter: bool = False) -> dict:
    """Text and JSON for a decomposition tree, with a presentation per leaf."""
    leaves = {}

    def walk(node):
        if isinstance(node, Leaf):
            leaves[",".join(node.vertices)] = GroupPresentation.of_graph(g.induced(node.vertices), coxeter)
        elif isinstance(node, Amalgam):
            walk(node.left)
            walk(node.right)
        elif isinstance(node, DirectProduct):
            for f in node.factors:
                walk(f)

    walk(t)
    return {
        "text": render_tree(t),
        "tree": tree_to_dict(t, g),
        "leaves": {k: p.text() for k, p in leaves.items()},
    }


def centralizer_presentation(c: CentralizerStructure) -> GroupPresentation:
    """``<a> |x L``: L's Artin relations plus the conjugation action of ``a``."""
    base = GroupPresentation.of_graph(c.L_graph)
    extra_gens = [f"{w}_{i}" for w, n in c.names.items() if n != w for i in range(1, c.half_labels[w] - 1)]
    plain = [w for w, n in c.names.items() if n != w]
    gens = (c.actor, *c.L_graph.vertices, *plain, *extra_gens)
    return GroupPresentation(gens, base.relations, tuple(c.semidirect_relators()))


def emit_presentation(obj, coxeter: bool = False) -> tuple[str, dict]:
    """Render a graph, a decomposition tree or a centralizer structure.

    Trees need their graph: pass ``(tree, graph)``.
    """
    if isinstance(obj, LabeledGraph):
        p = GroupPresentation.of_graph(obj, coxeter)
        return p.text(), p.to_dict()
    if isinstance(obj, CentralizerStructure):
        p = centralizer_presentation(obj)
        lines = [f"<{obj.actor}> |x L", f"L = {GroupPresentation.of_graph(obj.L_graph).text()}"]
        lines += [f"{lhs} = {rhs}" for lhs, rhs in obj.semidirect_relators()]
        d = p.to_dict()
        d["structure"] = obj.to_dict()
        return "\n".join(lines), d
    if isinstance(obj, tuple) and len(obj) == 2:
        tree, g = obj
        d = tree_presentation(tree, g, coxeter)
        lines = [d["text"]] + [f"A{{{k}}} = {v}" for k, v in d["leaves"].items()]
        return "\n".join(lines), d
    if isinstance(obj, Semidirect):
        return render_tree(obj), tree_to_dict(obj)
    raise TypeError(f"cannot present {type(obj).__name__}")


__all__ = [
    "GroupPresentation",
    "centralizer_presentation",
    "emit_presentation",
    "parse_presentation",
    "tree_presentation",
]
