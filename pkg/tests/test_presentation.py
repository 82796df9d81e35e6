import pytest
from hypothesis import given

from artin.decompose import coherent_decomposition
from artin.errors import MalformedInput
from artin.evenfc import vertex_centralizer
from artin.presentation import GroupPresentation, emit_presentation, parse_presentation
from conftest import graph
from test_graph import graphs


def test_dihedral():
    text, d = emit_presentation(graph("ab4"))
    assert text == "< a, b | a b a b = b a b a >"
    assert d["relations"] == [{"u": "a", "v": "b", "m": 4}]


def test_coxeter():
    text, _ = emit_presentation(graph("ab4"), coxeter=True)
    assert text == "< a, b | a b a b = b a b a, a^2 = 1, b^2 = 1 >"


def test_no_relations():
    assert emit_presentation(graph("ab2", "abc"))[0] == "< a, b, c | a b = b a >"
    assert GroupPresentation(("a",), ()).text() == "< a >"


def test_tree(load):
    g = load("path_xcy")
    text, d = emit_presentation((coherent_decomposition(g), g))
    assert text.splitlines()[0] == "A{x,c} *_{A{c}} A{c,y}"
    assert d["leaves"]["x,c"] == "< x, c | x c = c x >"


def test_centralizer():
    c = vertex_centralizer(graph("av2 aw6 vw2"), "a")
    text, d = emit_presentation(c)
    lines = text.splitlines()
    assert lines[0] == "<a> |x L"
    assert "a^-1 w_1 a = z_{a,w} w^-1 w_1^-1" in lines
    assert set(d["generators"]) >= {"a", "v", "z_{a,w}", "w", "w_1"}


def test_relations_are_alternating():
    p = GroupPresentation.of_graph(graph("ab5 bc2"))
    for (lhs, rhs), (u, v, m) in zip(p.relation_words(), p.relations):
        letters = [x for x, _ in lhs.letters()]
        assert len(letters) == m and letters[0] == u
        assert all(letters[i] != letters[i + 1] for i in range(m - 1))
        assert set(letters) <= set(p.generators)


@given(graphs(max_n=6))
def test_roundtrip(g):
    for cox in (False, True):
        assert parse_presentation(emit_presentation(g, coxeter=cox)[0]) == g


@pytest.mark.parametrize("text", ["a, b | a b = b a", "< a, b | a b a = b a >", "< a, b | a b b a = b a a b >", "< a | a >"])
def test_parse_rejects(text):
    with pytest.raises(MalformedInput):
        parse_presentation(text)
