import pytest
from hypothesis import given

from artin.chordal import find_clique_separator, is_chordal, is_valid_split, lex_bfs, verify_peo
from artin.errors import NotChordal
from artin.graph import LabeledGraph
from artin.oracles import brute_chordal
from conftest import graph
from enumeration import is_chordal_shape, labeled_classes
from test_graph import graphs


def test_four_cycle(load):
    ok, cert = is_chordal(load("c4"))
    assert not ok and len(cert.cycle) == 4 and cert.verify(load("c4"))


def test_tree_is_chordal(load):
    ok, cert = is_chordal(load("path33"))
    assert ok and cert.verify(load("path33"))


def test_fig1_chordal(load):
    g = load("fig1")
    ok, cert = is_chordal(g)
    assert ok and verify_peo(g, cert.ordering)
    # a or b can be eliminated first: both are simplicial
    assert verify_peo(g, ["a", "b", "v", "w"])


def test_long_cycle_certificate():
    g = graph("ab2 bc2 cd2 de2 ea2 ac3")
    ok, cert = is_chordal(g)
    assert not ok and cert.verify(g) and len(cert.cycle) == 4


def test_lex_bfs_is_permutation():
    g = graph("ab2 bc2 cd2")
    assert sorted(lex_bfs(g)) == sorted(g.vertices)


@given(graphs(max_n=7, labels=(2, 3)))
def test_agrees_with_brute_force(g):
    ok, cert = is_chordal(g)
    assert ok == brute_chordal(g)
    assert cert.verify(g)


def test_agrees_exhaustively_up_to_six():
    for g in labeled_classes(6, (2,)):
        ok, cert = is_chordal(g)
        assert ok == brute_chordal(g) and cert.verify(g)


class TestSeparator:
    def test_path(self):
        s = find_clique_separator(graph("xc2 cy2"))
        assert (s.g1, s.g2, s.delta) == (("x", "c"), ("c", "y"), ("c",))

    def test_path33(self, load):
        assert find_clique_separator(load("path33")).delta == ("v",)

    def test_complete(self):
        assert find_clique_separator(graph("ab2 bc3 ac2")) is None
        assert find_clique_separator(LabeledGraph("a")) is None

    def test_disconnected(self):
        s = find_clique_separator(LabeledGraph("ab"))
        assert s.delta == () and is_valid_split(LabeledGraph("ab"), s.g1, s.g2, s.delta)

    def test_not_chordal(self, load):
        with pytest.raises(NotChordal) as info:
            find_clique_separator(load("c4"))
        assert len(info.value.cycle) == 4

    def test_valid_on_all_chordal_shapes(self):
        for g in labeled_classes(6, (2,), shape_filter=is_chordal_shape):
            s = find_clique_separator(g)
            if s is None:
                assert g.is_complete() or len(g) < 2
                continue
            assert g.is_clique(s.delta)
            assert is_valid_split(g, s.g1, s.g2, s.delta)
