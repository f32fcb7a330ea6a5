import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from matchkit import families as fam
from matchkit.corpus import (
    add_parallel_edges,
    bisubdivide,
    canonical_form,
    connected_graphs,
    matching_covered_graphs,
    multigraph_perturbations,
    random_relabel,
    simple_corpus,
    two_edge_cut_graphs,
)
from matchkit.graph import are_isomorphic, build_graph, underlying_simple
from matchkit.matching import is_matching_covered

from oracles import brute_matching_covered, nx_isomorphic, to_nx_simple

# OEIS A001349: connected graphs on n unlabelled vertices
CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@pytest.mark.parametrize("n", sorted(CONNECTED))
def test_connected_counts(n):
    assert len(connected_graphs(n)) == CONNECTED[n]


def test_connected_count_order_8(corpus8):
    # corpus8 already paid for order 8; recount through the cache
    assert len(connected_graphs(8)) == 11117
    assert len(corpus8) == 3144


def test_order_6_against_networkx_atlas():
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == 6 and nx.is_connected(h)]
    ours = connected_graphs(6)
    assert len(atlas) == len(ours)
    keys = {canonical_form(build_graph(6, list(h.edges()))) for h in atlas}
    assert keys == {canonical_form(g) for g in ours}


def test_matching_covered_counts():
    assert [len(matching_covered_graphs(n)) for n in (2, 4, 6)] == [1, 2, 24]
    assert matching_covered_graphs(5) == []


def test_matching_covered_against_brute_force():
    for g in connected_graphs(6):
        assert is_matching_covered(g) == brute_matching_covered(g)


def test_simple_corpus_orders():
    orders = {g.n for g in simple_corpus(6)}
    assert orders == {2, 4, 6}


@given(st.integers(4, 7).flatmap(lambda n: st.tuples(st.just(n), st.randoms(use_true_random=False))))
def test_canonical_form_relabel_invariant(data):
    n, rnd = data
    g = rnd.choice(connected_graphs(n))
    assert canonical_form(random_relabel(g, rnd)) == canonical_form(g)


def test_canonical_form_separates_non_isomorphic():
    rng = random.Random(4)
    graphs = connected_graphs(7)
    for _ in range(300):
        g, h = rng.sample(graphs, 2)
        assert canonical_form(g) != canonical_form(h)
        assert not nx.is_isomorphic(to_nx_simple(g), to_nx_simple(h))


def test_canonical_form_on_named_regular_graphs():
    # regular graphs stress the refinement; compare with networkx on pairs
    pairs = [(fam.cube(), fam.norine_thomas("moebius_ladder", 8)),
             (fam.c6bar(), fam.k33()),
             (fam.petersen(), fam.norine_thomas("prism", 10))]
    for g, h in pairs:
        assert (canonical_form(g) == canonical_form(h)) == nx_isomorphic(underlying_simple(g), underlying_simple(h))
    rng = random.Random(1)
    p = fam.petersen()
    assert canonical_form(random_relabel(p, rng)) == canonical_form(p)


def test_bisubdivide_shape():
    g = bisubdivide(fam.complete_graph(4), 2, times=2)
    assert (g.n, g.m) == (8, 10)
    assert sorted(g.degrees()) == [2, 2, 2, 2, 3, 3, 3, 3]


@given(st.sampled_from(["K4", "C6bar", "K33", "Murty", "W5"]), st.randoms(use_true_random=False))
def test_bisubdivision_keeps_matching_covered(name, rnd):
    from conftest import NAMED

    g = NAMED[name]
    h = bisubdivide(g, rnd.randrange(g.m), rnd.randint(1, 2))
    assert is_matching_covered(h)


def test_perturbations_are_seeded():
    bases = [fam.odd_wheel(2), fam.k33()]
    a = multigraph_perturbations(bases, 20, seed=3)
    b = multigraph_perturbations(bases, 20, seed=3)
    assert a == b
    for g in a:
        assert not g.is_simple()
        assert any(are_isomorphic(underlying_simple(g), x) for x in bases)


def test_add_parallel_edges_keeps_underlying_graph():
    rng = random.Random(0)
    g = fam.cube()
    h = add_parallel_edges(g, rng, 4)
    assert h.m == g.m + 4 and underlying_simple(h) == underlying_simple(g)


def test_two_edge_cut_graphs_small():
    k5e = fam.complete_graph(5).delete_edges([0])
    out = list(two_edge_cut_graphs([k5e]))
    assert out
    for g in out:
        assert g.n == 10 and min(g.degrees()) >= 3 and is_matching_covered(g)
