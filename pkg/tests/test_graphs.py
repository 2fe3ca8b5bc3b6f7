"""SimpleGraph structure, isomorphism machinery, and the serializers."""

from __future__ import annotations

import random

import pytest

from conftest import bw3_graph, house_graph, random_connected_graph
from filoops.graphs import (
    SimpleGraph,
    all_graphs,
    are_isomorphic,
    canonical_key,
    complete_graph,
    connected_graphs,
    cycle_graph,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    is_clique,
    is_star,
    isomorphisms,
    path_graph,
    star_graph,
)


def test_constructors():
    K4 = complete_graph("abcd")
    assert K4.edge_count() == 6 and is_clique(K4)
    S = star_graph("c", "xyz")
    assert S.edge_count() == 3 and is_star(S)
    C5 = cycle_graph("abcde")
    assert C5.edge_count() == 5
    assert all(C5.degree(v) == 2 for v in C5.labels)
    P4 = path_graph("abcd")
    assert P4.edge_count() == 3
    assert sorted(P4.neighbors("b")) == ["a", "c"]


def test_basic_accessors():
    G = house_graph()
    assert G.n == 5
    assert G.has_edge("b", "e") and not G.has_edge("a", "c")
    assert G.degree("b") == 3
    assert len(G.components()) == 1


def test_delete_and_add_vertex():
    G = house_graph()
    H = G.delete_vertex("a")
    assert H.n == 4 and "a" not in H.labels
    assert H.has_edge("b", "e")
    J = H.add_vertex("z", ["b", "c"])
    assert J.has_edge("z", "b") and J.has_edge("z", "c")


def test_canonical_key_is_isomorphism_invariant():
    rng = random.Random(3)
    for _ in range(40):
        G = random_connected_graph(rng, rng.randint(1, 6))
        perm = list(G.labels)
        rng.shuffle(perm)
        H = G.relabel(dict(zip(G.labels, perm)))
        assert canonical_key(G) == canonical_key(H)


def test_isomorphisms_of_cycle():
    C5 = cycle_graph("abcde")
    maps = list(isomorphisms(C5, cycle_graph("vwxyz")))
    assert len(maps) == 10
    for phi in maps:
        for a, b in C5.edges():
            assert phi[a] != phi[b]


def test_are_isomorphic():
    assert are_isomorphic(path_graph("abcd"), path_graph("wxyz"))
    assert not are_isomorphic(path_graph("abcd"), star_graph("w", "xyz"))


def test_graph_counts():
    assert [len(all_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
    assert [len(connected_graphs(n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]


def test_local_complement_involution():
    rng = random.Random(23)
    for _ in range(30):
        G = random_connected_graph(rng, rng.randint(2, 7))
        v = rng.choice(G.labels)
        assert G.local_complement(v).local_complement(v).adjacency_key() == G.adjacency_key()


def test_json_round_trip():
    G = bw3_graph()
    back, weights = graph_from_json(graph_to_json(G))
    assert weights is None
    assert back.labels == G.labels
    assert back.adjacency_key() == G.adjacency_key()


def test_json_round_trip_with_weights():
    G = house_graph()
    w = {v: i % 2 for i, v in enumerate(G.labels)}
    back, weights = graph_from_json(graph_to_json(G, weights=w))
    assert weights == w


def test_dot_output_shape():
    text = graph_to_dot(house_graph())
    assert text.startswith("graph ")
    assert text.endswith("}\n")
    assert '"b" -- "e"' in text


def test_json_rejects_garbage():
    with pytest.raises((ValueError, KeyError)):
        graph_from_json("{}")
