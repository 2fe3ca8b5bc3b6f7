"""Realization of interlace graphs as chord diagrams and spheriloops."""

from __future__ import annotations

import pytest

from conftest import bw3_graph, house_graph, random_connected_graph
from filoops.chords import canonical_form, interlace_graph, parse_unframed, to_line
from filoops.errors import NotBicolourable, NotGaussian, NotPrime
from filoops.graphs import (
    are_isomorphic,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from filoops.realize import (
    degenerate_realizations,
    enumerate_realizations,
    enumerate_spheriloops,
    is_circle_graph,
    min_genus_framings,
    realize_degenerate,
    realize_prime,
)
from filoops.ribbon import genus


def test_realize_degenerate_clique_and_star():
    K = complete_graph("abcd")
    D = realize_degenerate(K)
    assert are_isomorphic(interlace_graph(D), K)
    S = star_graph("c", "uvw")
    D = realize_degenerate(S)
    assert are_isomorphic(interlace_graph(D), S)


def test_degenerate_realizations_counts():
    # (n-1)!/2 clique words, k!/2 star words
    assert len(degenerate_realizations(complete_graph("abcd"))) == 3
    assert len(degenerate_realizations(star_graph("c", "uvw"))) == 3


def test_realize_prime_cycle():
    C5 = cycle_graph("abcde")
    D = realize_prime(C5, certify=True)
    assert D is not None
    assert to_line(D) == "adecdbcabe"
    assert are_isomorphic(interlace_graph(D), C5)


def test_realize_prime_rejects_non_prime():
    with pytest.raises(NotPrime):
        realize_prime(complete_graph("abcd"))
    with pytest.raises(NotPrime):
        realize_prime(cycle_graph("abcd"))


def test_realize_prime_non_circle_gives_none():
    G = bw3_graph()
    assert realize_prime(G) is None
    assert not is_circle_graph(G)


def test_enumerate_realizations_k4():
    R = enumerate_realizations(complete_graph("abcd"))
    words = sorted(to_line(D) for D in R.results)
    assert words == ["abcdabcd", "abdcabdc", "acbdacbd"]


def test_enumerate_realizations_interlace_match(rng):
    for _ in range(25):
        G = random_connected_graph(rng, rng.randint(1, 6))
        if not is_circle_graph(G):
            continue
        R = enumerate_realizations(G)
        assert R.results
        for D in R.results:
            got = interlace_graph(D)
            assert sorted(got.labels) == sorted(G.labels)
            assert sorted(got.edges()) == sorted(G.edges())


def test_enumerate_realizations_distinct_classes():
    R = enumerate_realizations(house_graph())
    keys = [canonical_form(D, reversal=True, relabel=False) for D in R.results]
    assert len(keys) == len(set(keys))


def test_is_circle_graph_small_positives(rng):
    # interlace graphs of diagrams are circle graphs by construction
    from filoops.chords import random_diagram

    for _ in range(20):
        D = random_diagram(rng.randint(1, 5), rng, framed=False)
        assert is_circle_graph(interlace_graph(D))


def test_enumerate_spheriloops_square():
    C4 = cycle_graph("abcd")
    words = sorted(to_line(D) for D in enumerate_spheriloops(C4))
    assert words == ["BdaCDbcA", "bDAcdBCa"]
    for D in enumerate_spheriloops(C4):
        assert genus(D) == 0
        assert are_isomorphic(interlace_graph(D), C4)


def test_enumerate_spheriloops_rejects_non_gaussian():
    with pytest.raises(NotGaussian):
        enumerate_spheriloops(complete_graph("ab"))
    with pytest.raises(NotGaussian):
        enumerate_spheriloops(path_graph("abc"))


def test_min_genus_framings_parity_guard():
    with pytest.raises(NotBicolourable):
        min_genus_framings(parse_unframed("abab"))
    best = min_genus_framings(parse_unframed("aabb"))
    assert best and all(g == 0 for _, g in best)
    for F, g in best:
        assert genus(F) == g
