"""Split decomposition, graph-labelled trees, and the weighted criterion."""

from __future__ import annotations

import random

import pytest

from conftest import bw3_graph, domino_graph, house_graph, random_connected_graph
from filoops.chords import interlace_graph, parse_unframed
from filoops.errors import MalformedGLT
from filoops.forms import is_gaussian
from filoops.glt import (
    GraphLabelledTree,
    accessibility_graph,
    all_splits,
    compute_weights,
    cunningham,
    find_split,
    gaussian_via_glt,
    glt_canonical_form,
    glt_from_json,
    glt_to_dot,
    glt_to_json,
    is_degenerate,
    is_prime,
    random_glt,
    reduce_glt,
    trivial_glt,
)
from filoops.graphs import (
    SimpleGraph,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)


def same_labelled_graph(A: SimpleGraph, B: SimpleGraph) -> bool:
    return sorted(A.labels) == sorted(B.labels) and sorted(A.edges()) == sorted(B.edges())


def test_split_predicates():
    assert is_degenerate(complete_graph("abcd"))
    assert is_degenerate(star_graph("c", "xyz"))
    assert is_prime(cycle_graph("abcde"))
    assert is_prime(cycle_graph("abcdef"))
    assert is_prime(bw3_graph())
    assert not is_prime(path_graph("abcd"))
    assert not is_prime(complete_graph("abcd"))
    assert find_split(path_graph("abcd")) is not None
    assert find_split(cycle_graph("abcde")) is None


def test_all_splits_of_path():
    found = all_splits(path_graph("abcd"))
    assert found
    for s in found:
        assert len(s.v0) >= 2 and len(s.v1) >= 2


def test_trivial_glt_accessibility():
    G = house_graph()
    T = trivial_glt(G)
    assert same_labelled_graph(accessibility_graph(T), G)


def test_cunningham_round_trip_fixed_graphs():
    for G in (house_graph(), domino_graph(), bw3_graph(), cycle_graph("abcdef"),
              complete_graph("abcde"), star_graph("c", "uvwx"), path_graph("abcdefg")):
        T = cunningham(G)
        assert same_labelled_graph(accessibility_graph(T), G)
        assert sorted(T.leaves) == sorted(G.labels)


def test_cunningham_round_trip_random(rng):
    for _ in range(60):
        G = random_connected_graph(rng, rng.randint(1, 8))
        T = cunningham(G)
        assert same_labelled_graph(accessibility_graph(T), G)


def test_cunningham_output_is_reduced(rng):
    for _ in range(40):
        G = random_connected_graph(rng, rng.randint(1, 8))
        T = cunningham(G)
        R = reduce_glt(T)
        assert len(R.nodes) == len(T.nodes)


def test_prime_graph_decomposes_to_single_node():
    T = cunningham(bw3_graph())
    assert len(T.nodes) == 1


def test_canonical_form_invariant_under_relabelling(rng):
    for _ in range(30):
        G = random_connected_graph(rng, rng.randint(1, 7))
        perm = list(G.labels)
        rng.shuffle(perm)
        phi = dict(zip(G.labels, perm))
        H = G.relabel(phi)
        key_g = glt_canonical_form(cunningham(G))
        key_h = glt_canonical_form(cunningham(H))
        assert key_g == key_h
        if all(phi[v] == v for v in G.labels):
            assert glt_canonical_form(cunningham(G), labelled=True) == \
                glt_canonical_form(cunningham(H), labelled=True)


def test_gaussian_via_glt_matches_direct(rng):
    for _ in range(80):
        G = random_connected_graph(rng, rng.randint(1, 7))
        assert gaussian_via_glt(cunningham(G)) == is_gaussian(G)


def test_compute_weights_cover_nodes():
    T = cunningham(domino_graph())
    W = compute_weights(T)
    assert set(W) == set(T.nodes)
    for x in T.nodes:
        assert set(W[x]) == set(T.factors[x].labels)


def test_worked_example_factor_shapes():
    word = "AbCdEfBaGeDhIcFgHi"
    G = interlace_graph(parse_unframed(word.lower()))
    T = cunningham(G)
    shapes = {
        x: (T.factors[x].n, sorted(T.factors[x].labels)) for x in T.nodes
    }
    assert shapes == {
        0: (3, ["!1", "a", "b"]),
        1: (6, ["!2", "!3", "!5", "c", "f", "g"]),
        2: (3, ["!6", "d", "e"]),
        3: (3, ["!4", "h", "i"]),
    }


def test_json_round_trip(rng):
    for _ in range(20):
        G = random_connected_graph(rng, rng.randint(1, 7))
        T = cunningham(G)
        back = glt_from_json(glt_to_json(T))
        assert same_labelled_graph(accessibility_graph(back), G)
        assert glt_canonical_form(back) == glt_canonical_form(T)


def test_json_has_interface_keys():
    import json

    T = cunningham(house_graph())
    data = json.loads(glt_to_json(T))
    assert set(data) >= {"nodes", "edges", "leaves", "root"}
    assert sorted(tuple(e) for e in data["edges"]) == T.internal_edges()


def test_dot_output_mentions_every_leaf():
    T = cunningham(house_graph())
    text = glt_to_dot(T)
    assert text.startswith("graph ")
    for leaf in T.leaves:
        assert f'"{leaf}"' in text


def test_malformed_trees_rejected():
    G = complete_graph("ab")
    with pytest.raises(MalformedGLT):
        GraphLabelledTree({}, {})
    with pytest.raises(MalformedGLT):
        GraphLabelledTree({0: G}, {0: {"a": "x", "b": 0}})
    with pytest.raises(MalformedGLT):
        GraphLabelledTree({0: G}, {0: {"a": "x", "b": "x"}})


def test_random_glt_accessibility_connected(rng):
    for _ in range(20):
        T = random_glt(rng.randint(1, 8), rng)
        G = accessibility_graph(T)
        assert sorted(G.labels) == sorted(T.leaves)
        T2 = cunningham(G)
        assert same_labelled_graph(accessibility_graph(T2), G)
