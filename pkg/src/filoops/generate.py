"""Grammar generating every connected Gaussian graph exactly once.

The generators are prime or degenerate graphs carrying a weighting mod 2
that satisfies the weighted evenness and cocycle conditions (CL2).  Two
weighted trees can be grafted along a pair of leaves when the weight of
each control vertex matches the weighted degree of the opposite control;
the trees whose remaining leaves all hang on control vertices of odd
weight and even weighted degree have Gaussian accessibility graphs.

Grafts are refused when they would leave a factor with fewer than three
vertices or create a fusable tree edge, so every tree built here stays
reduced and no graph is reached through two different derivations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .chords import canonical_form
from .errors import NotCL2
from .forms import check_CL2, is_gaussian, solve_CL2, weighted_en1
from .glt import (
    GraphLabelledTree,
    accessibility_graph,
    fusable_edge,
    glt_canonical_form,
    graft,
    graft_offset,
    is_degenerate,
    is_prime,
    trivial_glt,
)
from .graphs import SimpleGraph, canonical_key, connected_graphs
from .realize import enumerate_spheriloops, is_circle_graph

__all__ = [
    "WeightedGLT",
    "Atom",
    "Molecule",
    "GenerationStats",
    "cl2_weightings",
    "atoms",
    "bond",
    "molecule",
    "generate_gaussian",
    "generation_report",
    "brute_force_gaussian",
    "construct_gaussian_from_CL2",
    "tabulate_spheriloops",
]

Weighting = Dict[str, int]


@dataclass
class WeightedGLT:
    """A graph-labelled tree with a weight mod 2 on every factor vertex."""

    tree: GraphLabelledTree
    weights: Dict[int, Weighting]

    def canonical(self) -> str:
        return glt_canonical_form(self.tree, weights=self.weights)


@dataclass
class Atom:
    """A prime or degenerate graph with one CL2 weighting, seen as a
    single-node weighted tree."""

    graph: SimpleGraph
    weighting: Weighting
    glt: WeightedGLT


@dataclass
class Molecule:
    """A weighted tree assembled by grafts; gaussian records whether every
    leaf control has odd weight and even weighted degree."""

    glt: WeightedGLT
    gaussian: bool


@dataclass
class GenerationStats:
    atom_count: int
    tree_count: int
    molecule_count: int
    collisions: int


def cl2_weightings(G: SimpleGraph) -> List[Weighting]:
    """All weightings mod 2 satisfying the weighted evenness and cocycle
    conditions: the affine set spanned by one particular solution and the
    kernel basis."""
    sol = solve_CL2(G)
    if sol is None:
        return []
    particular, basis = sol
    out: List[Weighting] = []
    seen = set()
    for mask in range(1 << len(basis)):
        w = dict(particular)
        for i, b in enumerate(basis):
            if mask >> i & 1:
                for v in G.labels:
                    w[v] = (w[v] + b[v]) % 2
        key = tuple(w[v] for v in G.labels)
        if key not in seen:
            seen.add(key)
            out.append(w)
    return out


def atoms(max_vertices: int, chordiagraphs: bool = False) -> List[Atom]:
    """Every prime or degenerate connected graph up to isomorphism with at
    most max_vertices vertices, paired with each of its CL2 weightings.
    With chordiagraphs=True, keep only circle graphs."""
    out: List[Atom] = []
    for n in range(1, max_vertices + 1):
        for G in connected_graphs(n):
            if not (is_degenerate(G) or is_prime(G)):
                continue
            if chordiagraphs and not is_circle_graph(G):
                continue
            for w in cl2_weightings(G):
                out.append(Atom(G, w, WeightedGLT(trivial_glt(G), {0: dict(w)})))
    return out


def _weighted_degree(W: WeightedGLT, x: int, u: str) -> int:
    """Sum mod 2 of the weights of u's neighbours inside its factor."""
    G = W.tree.factors[x]
    return sum(W.weights[x][q] for q in G.neighbors(u)) % 2


def _gaussian_leaves(W: WeightedGLT) -> bool:
    for f in W.tree.leaves:
        x, u = W.tree.leaf_node(f)
        if W.weights[x][u] % 2 == 0:
            return False
        if _weighted_degree(W, x, u):
            return False
    return True


def molecule(W: WeightedGLT) -> Molecule:
    return Molecule(W, _gaussian_leaves(W))


def bond(A: WeightedGLT, fa: str, B: WeightedGLT, fb: str) -> Optional[Molecule]:
    """Graft two weighted trees along the leaves fa, fb when the weight of
    each control vertex equals the weighted degree of the opposite one,
    or None when the rule does not apply."""
    xa, ua = A.tree.leaf_node(fa)
    xb, ub = B.tree.leaf_node(fb)
    Ga = A.tree.factors[xa]
    Gb = B.tree.factors[xb]
    if Ga.n < 3 or Gb.n < 3:
        return None
    if fusable_edge(Ga, ua, Gb, ub):
        return None
    if A.weights[xa][ua] % 2 != _weighted_degree(B, xb, ub):
        return None
    if B.weights[xb][ub] % 2 != _weighted_degree(A, xa, ua):
        return None
    off = graft_offset(A.tree, B.tree)
    T = graft(A.tree, fa, B.tree, fb)
    weights = {x: dict(w) for x, w in A.weights.items()}
    weights.update({x + off: dict(w) for x, w in B.weights.items()})
    return molecule(WeightedGLT(T, weights))


def _fresh_copy(atom: Atom, start: int) -> WeightedGLT:
    """The atom's single-node tree with vertices renamed v<start>, ... so
    its leaf labels are disjoint from any tree using lower indices."""
    mapping = {v: f"v{start + i}" for i, v in enumerate(atom.graph.labels)}
    G = atom.graph.relabel(mapping)
    w = {mapping[v]: atom.weighting[v] for v in atom.graph.labels}
    return WeightedGLT(trivial_glt(G), {0: w})


def generation_report(
    n: int, chordiagraphs: bool = False
) -> Tuple[List[SimpleGraph], GenerationStats]:
    """Close the atoms under grafting up to n leaves, keep the trees whose
    leaves all satisfy the odd-weight/even-degree conditions, and return
    their accessibility graphs (one per isomorphism class) together with
    counters; collisions counts graphs reached by two distinct trees."""
    if n < 1:
        raise ValueError("need at least one vertex")
    atom_list = atoms(n, chordiagraphs)
    pool: Dict[str, Tuple[WeightedGLT, int]] = {}
    queue: List[Tuple[WeightedGLT, int]] = []
    for a in atom_list:
        W = _fresh_copy(a, 0)
        key = W.canonical()
        if key not in pool:
            pool[key] = (W, a.graph.n)
            queue.append((W, a.graph.n))
    bondable = [a for a in atom_list if a.graph.n >= 3]
    i = 0
    while i < len(queue):
        T, hi = queue[i]
        i += 1
        room = n - len(T.tree.leaves)
        for a in bondable:
            if a.graph.n - 2 > room:
                continue
            B = _fresh_copy(a, hi)
            fb_candidates = B.tree.leaves
            for fa in T.tree.leaves:
                for fb in fb_candidates:
                    m = bond(T, fa, B, fb)
                    if m is None:
                        continue
                    key = m.glt.canonical()
                    if key in pool:
                        continue
                    pool[key] = (m.glt, hi + a.graph.n)
                    queue.append((m.glt, hi + a.graph.n))
    stats = GenerationStats(len(atom_list), len(pool), 0, 0)
    produced: Dict[Tuple[int, Tuple[int, ...]], SimpleGraph] = {}
    for key in sorted(pool):
        W, _ = pool[key]
        if not _gaussian_leaves(W):
            continue
        stats.molecule_count += 1
        G = accessibility_graph(W.tree)
        gk = canonical_key(G)
        if gk in produced:
            stats.collisions += 1
            continue
        produced[gk] = G
    graphs = [produced[k] for k in sorted(produced)]
    return graphs, stats


def generate_gaussian(n: int, chordiagraphs: bool = False) -> List[SimpleGraph]:
    """All connected Gaussian graphs with at most n vertices, one per
    isomorphism class (restricted to circle graphs when chordiagraphs)."""
    graphs, _ = generation_report(n, chordiagraphs)
    return graphs


def brute_force_gaussian(n: int) -> List[SimpleGraph]:
    """Enumerate connected graphs up to isomorphism with at most n vertices
    and keep the Gaussian ones."""
    out = []
    for k in range(1, n + 1):
        for G in connected_graphs(k):
            if is_gaussian(G):
                out.append(G)
    return out


def _twin_labels(v: str, used: set) -> Tuple[str, str]:
    suffix = ""
    while f"{v}{suffix}0" in used or f"{v}{suffix}1" in used:
        suffix += "'"
    return f"{v}{suffix}0", f"{v}{suffix}1"


def construct_gaussian_from_CL2(G0: SimpleGraph, W: Mapping[str, int]) -> SimpleGraph:
    """Grow a Gaussian graph out of a CL2-weighted graph: every vertex of
    even weight is replaced by a pair of twins joined to every copy of its
    old neighbours, the twins being adjacent exactly when the total weight
    of those neighbours is odd.  Odd-weight vertices are kept as they are,
    so a Gaussian graph with the all-ones weighting comes back unchanged.

    A kept vertex ends up with the parity of its weighted degree, so the
    weighting must also satisfy the weighted evenness condition at its
    odd vertices; NotCL2 reports both kinds of rejection."""
    weights = {v: W[v] % 2 for v in G0.labels}
    if not check_CL2(G0, weights):
        raise NotCL2(f"the weighting {weights} fails the weighted conditions")
    if not weighted_en1(G0, weights, integer=True):
        raise NotCL2(
            "an odd-weight vertex has neighbour weights of odd total, "
            "which would leave it with odd degree in the output"
        )
    used = set(G0.labels)
    copies: Dict[str, Tuple[str, ...]] = {}
    labels: List[str] = []
    for v in G0.labels:
        if weights[v]:
            copies[v] = (v,)
        else:
            twins = _twin_labels(v, used)
            used.update(twins)
            copies[v] = twins
        labels.extend(copies[v])
    edges: List[Tuple[str, str]] = []
    for a, b in G0.edges():
        for p in copies[a]:
            for q in copies[b]:
                edges.append((p, q))
    for v in G0.labels:
        if not weights[v]:
            if sum(weights[q] for q in G0.neighbors(v)) % 2:
                edges.append(copies[v])
    out = SimpleGraph.from_edges(tuple(labels), edges)
    assert is_gaussian(out)
    return out


def tabulate_spheriloops(n_max: int) -> Dict[int, int]:
    """Count spheriloop classes by crossing number: generate the connected
    Gaussian circle graphs, realize each as framed diagrams of genus zero,
    and count them up to rotation, reversal, relabelling and frame swap."""
    graphs, _ = generation_report(n_max, chordiagraphs=True)
    counts: Dict[int, int] = {k: 0 for k in range(1, n_max + 1)}
    for G in graphs:
        classes = set()
        for D in enumerate_spheriloops(G):
            classes.add(canonical_form(D, reversal=True, frame_swap=True, relabel=True))
        counts[G.n] += len(classes)
    return counts
