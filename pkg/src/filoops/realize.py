"""Realizing graphs as chord diagrams.

A graph is a circle graph when it is the interlace graph of some chord
diagram.  Degenerate graphs (cliques and stars) have explicit
realizations; prime graphs are realized by a verified backtracking
search and are rigid: at most one diagram up to rotation and reversal.
A general connected graph is realized by composing factor realizations
along its split decomposition tree, with four gluing choices per
internal edge, which yields every diagram with the prescribed interlace
graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .chords import MUTATIONS, ChordDiagram, canonical_form, interlace_graph
from .errors import NotCircleGraph, NotDegenerate, NotGaussian, NotPrime
from .forms import genus0_framings, is_gaussian, min_genus
from .glt import GraphLabelledTree, cunningham, glf_decompose, is_degenerate, is_prime
from .graphs import SimpleGraph, canonical_key, is_clique, is_star, star_center
from .ribbon import bicolouring_to_framing, genus


# -- degenerate graphs ---------------------------------------------------------


def realize_degenerate(G: SimpleGraph, root: Optional[str] = None) -> ChordDiagram:
    """The chord diagram of a clique or a star.

    A clique on a_1 .. a_n gives the word a_1 .. a_n a_1 .. a_n (all
    chords pairwise interlaced); a star with centre c and leaves
    l_1 .. l_k gives c l_1 .. l_k c l_k .. l_1 (the centre interlaces
    every leaf, the leaves are nested).  When a root is given it is
    listed first among its peers and marked on the result.
    """
    if root is not None and root not in G.index:
        raise NotDegenerate(f"root {root!r} is not a vertex")
    if is_clique(G):
        order = sorted(G.labels)
        if root is not None:
            order.remove(root)
            order.insert(0, root)
        word = tuple(order) + tuple(order)
    elif is_star(G):
        c = star_center(G)
        leaves = sorted(v for v in G.labels if v != c)
        if root is not None and root != c:
            leaves.remove(root)
            leaves.insert(0, root)
        word = (c, *leaves, c, *reversed(leaves))
    else:
        raise NotDegenerate("not a clique and not a star")
    D = ChordDiagram(word, None, root)
    assert interlace_graph(D).same_graph(G)
    return D


# -- prime graphs by backtracking search ---------------------------------------


def _search_realizations(G: SimpleGraph) -> Iterator[ChordDiagram]:
    """All double occurrence words with interlace graph G, as linear words
    pinned to start with a fixed vertex (so each circular diagram shows up
    a bounded number of times, not once per rotation).  Chords are placed
    one vertex at a time and every partial interlacement is checked, so a
    wrong branch dies as early as possible."""
    if G.n == 0:
        yield ChordDiagram(())
        return
    order = sorted(G.labels, key=lambda v: (-G.degree(v), v))
    seq = [order[0]]
    placed = {order[0]}
    while len(seq) < G.n:
        # prefer vertices with many already placed neighbours: more pruning
        rest = sorted(
            (u for u in G.labels if u not in placed),
            key=lambda u: (-sum(1 for w in G.neighbors(u) if w in placed), u),
        )
        seq.append(rest[0])
        placed.add(rest[0])
    first = seq[0]

    def rec(word: Tuple[str, ...], k: int) -> Iterator[Tuple[str, ...]]:
        if k == len(seq):
            yield word
            return
        v = seq[k]
        m = len(word)
        pos: Dict[str, List[int]] = {}
        for i, x in enumerate(word):
            pos.setdefault(x, []).append(i)
        for i in range(1, m + 1):
            for j in range(i, m + 1):
                ok = True
                for u, (p, q) in ((u, ps) for u, ps in pos.items()):
                    # occurrences of u in the new word, relative to v's
                    # occurrences at slots i and j+1 after both insertions
                    a = p + (1 if p >= i else 0) + (1 if p >= j else 0)
                    b = q + (1 if q >= i else 0) + (1 if q >= j else 0)
                    inside = (i < a <= j) + (i < b <= j)
                    if (inside == 1) != G.has_edge(u, v):
                        ok = False
                        break
                if ok:
                    yield from rec(word[:i] + (v,) + word[i:j] + (v,) + word[j:], k + 1)

    for w in rec((first, first), 1):
        yield ChordDiagram(w)


def realize_prime(G: SimpleGraph, certify: bool = False) -> Optional[ChordDiagram]:
    """A chord diagram with interlace graph G, or None when none exists.

    Prime graphs are rigid: when a realization exists it is unique up to
    rotation and reversal.  With certify=True the search is exhausted and
    that uniqueness is checked rather than assumed.
    """
    if not is_prime(G):
        raise NotPrime("realize_prime needs a prime graph")
    it = _search_realizations(G)
    first = next(it, None)
    if first is None:
        return None
    if certify:
        classes = {canonical_form(first, reversal=True, relabel=False)}
        for D in it:
            classes.add(canonical_form(D, reversal=True, relabel=False))
        if len(classes) != 1:
            raise NotPrime(
                f"graph admits {len(classes)} inequivalent realizations; it cannot be prime"
            )
    assert interlace_graph(first).same_graph(G)
    return first


def degenerate_realizations(G: SimpleGraph) -> List[ChordDiagram]:
    """Every labelled realization of a clique or star, up to rotation and
    reversal.  Unlike prime graphs these are not rigid: each ordering of
    the interchangeable vertices gives its own diagram, (n-1)!/2 of them
    for a clique on n > 2 vertices and k!/2 for a star with k > 1 leaves."""
    seen: Dict[str, ChordDiagram] = {}
    if is_clique(G):
        labels = sorted(G.labels)
        first, rest = labels[0], labels[1:]
        for perm in itertools.permutations(rest):
            D = ChordDiagram((first, *perm, first, *perm))
            seen.setdefault(canonical_form(D, reversal=True, relabel=False), D)
    elif is_star(G):
        c = star_center(G)
        leaves = sorted(v for v in G.labels if v != c)
        for perm in itertools.permutations(leaves):
            D = ChordDiagram((c, *perm, c, *reversed(perm)))
            seen.setdefault(canonical_form(D, reversal=True, relabel=False), D)
    else:
        raise NotDegenerate("not a clique and not a star")
    return [seen[k] for k in sorted(seen)]


def _factor_realizations(g: SimpleGraph) -> List[ChordDiagram]:
    if is_degenerate(g):
        return degenerate_realizations(g)
    if is_prime(g):
        D = realize_prime(g)
        if D is None:
            raise NotCircleGraph(f"prime factor on {sorted(g.labels)} is not a circle graph")
        return [D]
    raise NotPrime("factors of a reduced tree are prime or degenerate")


# -- composition along the split tree -------------------------------------------


def _arc_pair(word: Sequence[str], x: str) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    p = word.index(x)
    q = word.index(x, p + 1)
    return tuple(word[p + 1 : q]), tuple(word[q + 1 :]) + tuple(word[:p])


def _compose_words(
    host: Sequence[str], u: str, guest: Sequence[str], w: str, g: str
) -> Tuple[str, ...]:
    """Replace chord u of the host by the guest with chord w removed: the
    guest arcs X, Y at w land in the host arcs at u, glued per the choice
    g from MUTATIONS (swap the arcs, reverse them both, or both)."""
    U, V = _arc_pair(host, u)
    X, Y = _arc_pair(guest, w)
    if g in ("reverse-second-interval", "reverse-both"):
        X, Y = Y, X
    if g in ("reverse-first-interval", "reverse-both"):
        X, Y = X[::-1], Y[::-1]
    return X + U + Y + V


def _tree_edge_order(T: GraphLabelledTree) -> Tuple[int, List[Tuple[int, int, str, str]]]:
    """The tree edges as (parent, child, parent marker, child marker) in a
    traversal order where every parent is merged before its edge is used."""
    start = min(T.factors)
    seen = {start}
    stack = [start]
    out: List[Tuple[int, int, str, str]] = []
    while stack:
        x = stack.pop()
        for u, t in sorted(T.rho[x].items()):
            if isinstance(t, int) and t not in seen:
                w = next(v for v, s in T.rho[t].items() if s == x)
                out.append((x, t, u, w))
                seen.add(t)
                stack.append(t)
    return start, out


@dataclass
class RealizationSet:
    """Every chord diagram whose interlace graph is the requested graph,
    together with how each was produced: the split tree, one realization
    per factor, and for each result a witness assignment of one gluing
    choice per internal tree edge."""

    base_glt: GraphLabelledTree
    factor_diagrams: Dict[int, ChordDiagram]
    choices: List[Dict[Tuple[int, int], str]]
    results: List[ChordDiagram]


def enumerate_realizations(G: SimpleGraph) -> RealizationSet:
    """All chord diagrams with interlace graph G, up to rotation and
    reversal, for a connected G.

    Decompose, realize every factor, then glue the factor diagrams along
    the tree in all ways: each internal edge contributes at most four
    inequivalent gluings, so a tree with k nodes yields at most 4^(k-1)
    words before deduplication.  Raises NotCircleGraph when some prime
    factor has no realization.
    """
    G.require_connected()
    T = cunningham(G)
    options = {x: _factor_realizations(T.factors[x]) for x in T.nodes}
    order = T.nodes
    start, edges = _tree_edge_order(T)
    best: Dict[str, Tuple[ChordDiagram, Dict[Tuple[int, int], str]]] = {}
    for combo in itertools.product(*(options[x] for x in order)):
        factors = dict(zip(order, combo))
        for assignment in itertools.product(MUTATIONS, repeat=len(edges)):
            word = factors[start].slots
            for (x, y, u, w), g in zip(edges, assignment):
                word = _compose_words(word, u, factors[y].slots, w, g)
            D = ChordDiagram(word)
            key = canonical_form(D, reversal=True, relabel=False)
            if key not in best:
                assert interlace_graph(D).same_graph(G)
                best[key] = (D, {(x, y): g for (x, y, _, _), g in zip(edges, assignment)})
    keys = sorted(best)
    return RealizationSet(
        T,
        {x: options[x][0] for x in order},
        [best[k][1] for k in keys],
        [best[k][0] for k in keys],
    )


_CIRCLE_CACHE: Dict[str, bool] = {}


def is_circle_graph(G: SimpleGraph) -> bool:
    """Whether G is the interlace graph of some chord diagram.

    True exactly when every prime factor of every connected component
    admits a realization; degenerate factors always do.
    """
    for T in glf_decompose(G):
        for x in T.nodes:
            g = T.factors[x]
            if is_prime(g):
                key = canonical_key(g)
                if key not in _CIRCLE_CACHE:
                    _CIRCLE_CACHE[key] = realize_prime(g) is not None
                if not _CIRCLE_CACHE[key]:
                    return False
    return True


# -- spheriloops -----------------------------------------------------------------


def enumerate_spheriloops(G: SimpleGraph) -> List[ChordDiagram]:
    """All genus zero framed diagrams whose interlace graph is the given
    connected Gaussian circle graph: every realization carries exactly
    two genus zero framings, mirror images of one another."""
    G.require_connected()
    if not is_gaussian(G):
        raise NotGaussian("the graph fails the planarity conditions")
    out: List[ChordDiagram] = []
    for D in enumerate_realizations(G).results:
        out.extend(genus0_framings(D))
    return out


def min_genus_framings(C: ChordDiagram) -> List[Tuple[ChordDiagram, int]]:
    """Every framing of C of minimal genus, with that genus.

    Works by minimising the rank of the bilinear form over all
    bicolourings and integrating each minimiser back to its two framings;
    requires every chord to interlace evenly (raises NotBicolourable)."""
    base = C.unframed()
    if base.n == 0:
        empty = ChordDiagram((), ())
        assert genus(empty) == 0
        return [(empty, 0)]
    G = interlace_graph(base)
    g, chis = min_genus(G)
    out: Dict[Tuple[int, ...], ChordDiagram] = {}
    for chi in chis:
        for D in bicolouring_to_framing(base, chi):
            assert D.framing is not None
            out.setdefault(tuple(D.framing), D)
    framed = [out[k] for k in sorted(out)]
    for D in framed:
        assert genus(D) == g
    return [(D, g) for D in framed]
