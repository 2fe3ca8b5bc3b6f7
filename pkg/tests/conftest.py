"""Shared graph fixtures and the seeded random-graph helper."""

from __future__ import annotations

import random

import pytest

from filoops.graphs import SimpleGraph


def random_connected_graph(rng: random.Random, n: int, p: float = 0.4) -> SimpleGraph:
    """Edge-probability model, retried until connected."""
    labels = [f"v{i}" for i in range(n)]
    while True:
        edges = [
            (a, b)
            for i, a in enumerate(labels)
            for b in labels[i + 1 :]
            if rng.random() < p
        ]
        G = SimpleGraph.from_edges(labels, edges)
        if len(G.components()) == 1:
            return G


def house_graph() -> SimpleGraph:
    return SimpleGraph.from_edges(
        "abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"), ("b", "e")]
    )


def gem_graph() -> SimpleGraph:
    return SimpleGraph.from_edges(
        "abcde",
        [("a", "b"), ("b", "c"), ("c", "d"),
         ("e", "a"), ("e", "b"), ("e", "c"), ("e", "d")],
    )


def domino_graph() -> SimpleGraph:
    return SimpleGraph.from_edges(
        "abcdef",
        [("a", "b"), ("b", "c"), ("d", "e"), ("e", "f"),
         ("a", "d"), ("b", "e"), ("c", "f")],
    )


def bw3_graph() -> SimpleGraph:
    """Odd wheel variant: 6-cycle with a hub joined to alternate rim vertices.
    Prime, and not a circle graph."""
    rim = [f"v{i}" for i in range(1, 7)]
    edges = [(rim[i], rim[(i + 1) % 6]) for i in range(6)]
    edges += [("w", "v1"), ("w", "v3"), ("w", "v5")]
    return SimpleGraph.from_edges(rim + ["w"], edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(2026)
