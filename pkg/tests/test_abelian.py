from hypothesis import given

from artin.abelian import abelianization, parabolic_commutator_check, parabolic_commutator_witness, relation_matrix
from artin.errors import SubsetViolation
from artin.graph import odd_subgraph
from artin.oracles import smith_normal_form
from conftest import graph
from enumeration import labeled_classes
from test_graph import graphs

import pytest


def test_even_graph_full_rank(load):
    a = abelianization(load("c4_4242"), verify=True)
    assert a.rank == 4 and len(set(a.class_of.values())) == 4


def test_path33_rank_one(load):
    g = load("path33")
    assert abelianization(g, verify=True).rank == 1
    assert smith_normal_form(relation_matrix(g)).free_rank == 1


def test_triangle_233():
    assert abelianization(graph("ab2 bc3 ac3"), verify=True).to_dict() == {"rank": 1, "classes": {"a": 0, "b": 0, "c": 0}}


def test_matches_smith_form_exhaustively():
    # both sides only see the odd edges, so every odd subgraph on <= 6 vertices suffices
    for g in labeled_classes(6, (3,)):
        abelianization(g, verify=True)
    for g in labeled_classes(4, (2, 3, 4, 5)):
        abelianization(g, verify=True)


@given(graphs(max_n=6))
def test_only_odd_edges_matter(g):
    odd = odd_subgraph(g)
    assert abelianization(g) == abelianization(odd)
    assert relation_matrix(g) == relation_matrix(odd)


@given(graphs(max_n=6))
def test_renaming_invariance(g):
    ren = g.rename({v: v + "'" for v in g.vertices})
    assert abelianization(ren).rank == abelianization(g).rank


class TestParabolic:
    def test_even_always_true(self, load):
        g = load("c4_4242")
        assert all(parabolic_commutator_check(g, s) for s in (["a"], ["a", "c"], ["b", "c", "d"]))

    def test_path33_ends(self, load):
        g = load("path33")
        assert not parabolic_commutator_check(g, ["u", "w"])
        assert parabolic_commutator_witness(g, ["u", "w"]) == ("u", "w")

    def test_whole_graph(self, load):
        g = load("path33")
        assert parabolic_commutator_check(g, g.vertices)

    def test_subset_violation(self, load):
        with pytest.raises(SubsetViolation):
            parabolic_commutator_check(load("path33"), ["u", "q"])
