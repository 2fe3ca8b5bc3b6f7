"""Bilinear forms over GF(2) attached to a graph, and the conditions they cut out.

The central object is the symmetric form R = E + E^2 where E is the adjacency
matrix: R(x,y) counts the edge plus the common neighbours of x and y, mod 2.
Three conditions on R characterise the interlace graphs of spherical chord
diagrams ("Gaussian" graphs):

  EN1  every vertex has even degree (R vanishes on the diagonal),
  EN2  R vanishes on non-adjacent pairs,
  RC   the restriction of R to edges is the coboundary of a vertex potential.

This module also provides the weighted variants used by tree factorisations
(CL2 and CL12 weightings), relative versions of the three conditions, genus
minimisation over bicolourings, and the enumeration of genus zero framings
of a chord diagram.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import gf2
from .chords import ChordDiagram, fresh_label, interlace_graph
from .errors import NotBicolourable, NotGaussian
from .graphs import SimpleGraph
from .ribbon import bicolouring_to_framing, genus

__all__ = [
    "rosenstiehl",
    "rosenstiehl_value",
    "rosenstiehl_cocycle",
    "colour_form",
    "bicolour_cocycle",
    "laplacian_form",
    "weighted_rosenstiehl",
    "check_EN1",
    "check_EN2",
    "check_RC",
    "is_gaussian",
    "en1_at",
    "en1_on",
    "en2_at",
    "en2_on",
    "en2_on_pairs",
    "rc_at",
    "rc_relative",
    "rc_relative_smoothing",
    "relative_conditions",
    "gf2_rank",
    "min_genus",
    "min_genus_coboundary",
    "genus0_framings",
    "solve_CL2",
    "check_CL2",
    "weighted_en1",
    "check_CL12",
    "toric_sum",
    "komposition_graph",
    "local_complement",
    "complement_on",
    "smoothing_graph",
]


# -- the Rosenstiehl form --------------------------------------------------------


def _cr_bit(G: SimpleGraph, i: int, j: int) -> int:
    """R(i,j) = E(i,j) + |N(i) & N(j)| mod 2 (diagonal: degree parity)."""
    e = (G.rows[i] >> j) & 1 if i != j else 0
    return e ^ ((G.rows[i] & G.rows[j]).bit_count() & 1)


def rosenstiehl(G: SimpleGraph) -> Tuple[Tuple[str, ...], Tuple[int, ...]]:
    """The form R = E + E^2 as bitset rows over G.labels.

    Entry (x,y) is E(x,y) + |N(x) n N(y)| mod 2; the diagonal entry at x
    is the parity of deg(x), so it vanishes exactly when EN1 holds at x.
    """
    n = G.n
    rows = []
    for i in range(n):
        row = 0
        for j in range(n):
            if _cr_bit(G, i, j):
                row |= 1 << j
        rows.append(row)
    return G.labels, tuple(rows)


def rosenstiehl_value(G: SimpleGraph, x: str, y: str) -> int:
    """R(x,y) mod 2 for a single pair of vertices."""
    return _cr_bit(G, G.index[x], G.index[y])


def rosenstiehl_cocycle(G: SimpleGraph) -> Tuple[Tuple[str, ...], Tuple[int, ...]]:
    """The restriction of R to edges: entries on non-adjacent pairs and on
    the diagonal are dropped.  This is the 1-cochain whose exactness is
    condition RC."""
    labels, rows = rosenstiehl(G)
    masked = tuple(r & G.rows[i] for i, r in enumerate(rows))
    return labels, masked


def colour_form(
    labels: Sequence[str], chi: Dict[str, int]
) -> Tuple[Tuple[str, ...], Tuple[int, ...]]:
    """The full rank <= 2 form [chi(x) != chi(y)] of a vertex 2-colouring."""
    labels = tuple(labels)
    bits = 0
    for i, v in enumerate(labels):
        if chi[v] & 1:
            bits |= 1 << i
    mask = (1 << len(labels)) - 1
    rows = tuple((mask ^ bits) & ~(1 << i) if (bits >> i) & 1 else bits & ~(1 << i) for i in range(len(labels)))
    return labels, rows


def bicolour_cocycle(G: SimpleGraph, chi: Dict[str, int]) -> Tuple[Tuple[str, ...], Tuple[int, ...]]:
    """The coboundary of a 2-colouring, supported on edges: entry (x,y) is
    E(x,y) * [chi(x) != chi(y)]."""
    bits = 0
    for i, v in enumerate(G.labels):
        if chi[v] & 1:
            bits |= 1 << i
    mask = (1 << G.n) - 1
    rows = tuple(
        G.rows[i] & ((mask ^ bits) if (bits >> i) & 1 else bits) for i in range(G.n)
    )
    return G.labels, rows


def laplacian_form(G: SimpleGraph) -> Tuple[Tuple[str, ...], Tuple[Tuple[int, ...], ...]]:
    """An integer form congruent to R mod 2 on graphs with all degrees even.

    Off the diagonal the entry is E(x,y)*(1 - deg(x) - deg(y)) + |N(x) n N(y)|
    and the diagonal entry at x is deg(x)^2.  On graphs with a vertex of odd
    degree the mod 2 reduction can differ from R on edges joining two odd
    degree vertices.
    """
    n = G.n
    degs = [G.rows[i].bit_count() for i in range(n)]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(degs[i] * degs[i])
            else:
                e = (G.rows[i] >> j) & 1
                common = (G.rows[i] & G.rows[j]).bit_count()
                row.append(e * (1 - degs[i] - degs[j]) + common)
        out.append(tuple(row))
    return G.labels, tuple(out)


def weighted_rosenstiehl(
    G: SimpleGraph, weights: Dict[str, int]
) -> Tuple[Tuple[str, ...], Tuple[Tuple[int, ...], ...]]:
    """The integer form R_W = E + E W E: entry (x,y) is
    E(x,y) + sum of weights over N(x) n N(y)."""
    n = G.n
    w = [weights.get(v, 0) for v in G.labels]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            e = (G.rows[i] >> j) & 1 if i != j else 0
            common = G.rows[i] & G.rows[j]
            total = 0
            k = 0
            while common:
                if common & 1:
                    total += w[k]
                common >>= 1
                k += 1
            row.append(e + total)
        out.append(tuple(row))
    return G.labels, tuple(out)


# -- the three conditions --------------------------------------------------------


def check_EN1(G: SimpleGraph) -> bool:
    """All degrees even."""
    return all(r.bit_count() % 2 == 0 for r in G.rows)


def check_EN2(G: SimpleGraph) -> bool:
    """R vanishes on every non-adjacent pair of distinct vertices."""
    for i in range(G.n):
        for j in range(i + 1, G.n):
            if not (G.rows[i] >> j) & 1 and _cr_bit(G, i, j):
                return False
    return True


def _potential(
    G: SimpleGraph, value: Optional[Callable[[int, int], int]] = None
) -> Optional[List[int]]:
    """Integrate an edge cochain to a vertex potential, or None if the
    integral around some cycle is 1.  The cochain defaults to R on edges.
    One potential per component, rooted at its smallest vertex."""
    if value is None:
        value = lambda i, j: _cr_bit(G, i, j)
    n = G.n
    p = [0] * n
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        while queue:
            i = queue.pop()
            row = G.rows[i]
            j = 0
            while row:
                if row & 1:
                    if not seen[j]:
                        seen[j] = True
                        p[j] = p[i] ^ (value(i, j) & 1)
                        queue.append(j)
                j += 1
                row >>= 1
    for i in range(n):
        row = G.rows[i] >> (i + 1)
        j = i + 1
        while row:
            if row & 1 and (p[i] ^ p[j]) != (value(i, j) & 1):
                return None
            row >>= 1
            j += 1
    return p


def check_RC(G: SimpleGraph) -> bool:
    """The restriction of R to edges is a coboundary (its integral along
    every cycle vanishes)."""
    return _potential(G) is not None


def is_gaussian(G: SimpleGraph) -> bool:
    """EN1, EN2 and RC together."""
    return check_EN1(G) and check_EN2(G) and check_RC(G)


# -- relative versions -----------------------------------------------------------


def en1_at(G: SimpleGraph, v: str) -> bool:
    """R(v,v) = 0, i.e. deg(v) is even."""
    return G.degree(v) % 2 == 0


def en1_on(G: SimpleGraph, vertices: Iterable[str]) -> bool:
    return all(en1_at(G, v) for v in vertices)


def en2_at(G: SimpleGraph, v: str) -> bool:
    """R(v,x) = 0 for every x != v not adjacent to v."""
    i = G.index[v]
    for j in range(G.n):
        if j != i and not (G.rows[i] >> j) & 1 and _cr_bit(G, i, j):
            return False
    return True


def en2_on(G: SimpleGraph, vertices: Iterable[str]) -> bool:
    """EN2 at every vertex of the set: R vanishes on each non-adjacent
    pair with at least one end in the set.  (Pairs with both ends outside
    the set are unconstrained; for a prescribed set of pairs use
    en2_on_pairs.)"""
    return all(en2_at(G, v) for v in set(vertices))


def en2_on_pairs(G: SimpleGraph, pairs: Iterable[Tuple[str, str]]) -> bool:
    """R vanishes on every listed non-adjacent pair of distinct vertices."""
    for x, y in pairs:
        if x == y:
            continue
        a, b = G.index[x], G.index[y]
        if not (G.rows[a] >> b) & 1 and _cr_bit(G, a, b):
            return False
    return True


def rc_at(G: SimpleGraph, v: str) -> bool:
    """For every edge (x,y) inside N(v): R(x,y) = R(v,x) + R(v,y)."""
    i = G.index[v]
    nbrs = [j for j in range(G.n) if (G.rows[i] >> j) & 1]
    for a, b in combinations(nbrs, 2):
        if (G.rows[a] >> b) & 1:
            if _cr_bit(G, a, b) != _cr_bit(G, i, a) ^ _cr_bit(G, i, b):
                return False
    return True


def rc_relative(G: SimpleGraph, vertices: Iterable[str]) -> bool:
    """The integral of R vanishes along every closed edge path, and along
    every edge path joining two vertices of the given set on which R
    vanishes.  Strictly stronger than RC (take the empty set for RC)."""
    p = _potential(G)
    if p is None:
        return False
    comps = G.components()
    comp_of = {v: k for k, comp in enumerate(comps) for v in comp}
    idx = sorted(set(G.index[v] for v in vertices))
    for a, b in combinations(idx, 2):
        x, y = G.labels[a], G.labels[b]
        if comp_of[x] != comp_of[y]:
            continue
        if _cr_bit(G, a, b) == 0 and p[a] != p[b]:
            return False
    return True


def rc_relative_smoothing(G: SimpleGraph, v: str) -> bool:
    """Relative form of RC tied to the smoothing H = (G*v) - v.

    The integral of H's form must vanish along every closed edge path of H
    and along every edge path of H whose endpoints lie in N_G(v), are not
    adjacent in H, and carry form bit 0 in the original graph G.  Gaussian
    graphs satisfy this at every vertex; the weaker statement gated by H's
    own form bits fails on some 7 vertex graphs.
    """
    H = smoothing_graph(G, v)
    p = _potential(H)
    if p is None:
        return False
    comps = H.components()
    comp_of = {x: k for k, comp in enumerate(comps) for x in comp}
    for x, y in combinations(sorted(G.neighbors(v)), 2):
        if comp_of[x] != comp_of[y] or H.has_edge(x, y):
            continue
        if _cr_bit(G, G.index[x], G.index[y]) == 0 and p[H.index[x]] != p[H.index[y]]:
            return False
    return True


def relative_conditions(
    G: SimpleGraph, condition: str, where: Union[str, Iterable[str]]
) -> bool:
    """Dispatch EN1, EN2 or RC at a vertex or relative to a vertex set."""
    single = isinstance(where, str)
    table = {
        ("EN1", True): en1_at,
        ("EN1", False): en1_on,
        ("EN2", True): en2_at,
        ("EN2", False): en2_on,
        ("RC", True): rc_at,
        ("RC", False): rc_relative,
    }
    try:
        fn = table[(condition.upper(), single)]
    except KeyError:
        raise ValueError(f"unknown condition {condition!r}")
    return fn(G, where)


# -- genus minimisation over bicolourings ------------------------------------------


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of a bitset matrix over GF(2)."""
    return gf2.rank(rows)


def _chi_masked_rows(G: SimpleGraph, chi_bits: int) -> List[int]:
    """Rows of the edge supported coboundary of the colouring chi_bits."""
    mask = (1 << G.n) - 1
    return [
        G.rows[i] & ((mask ^ chi_bits) if (chi_bits >> i) & 1 else chi_bits)
        for i in range(G.n)
    ]


def _minimise_rank_over_colourings(
    G: SimpleGraph, base: Sequence[int]
) -> Tuple[int, List[Dict[str, int]]]:
    n = G.n
    if n == 0:
        return 0, [{}]
    best = None
    arg: List[Dict[str, int]] = []
    for half in range(1 << (n - 1)):
        chi_bits = half << 1
        rows = [base[i] ^ d for i, d in enumerate(_chi_masked_rows(G, chi_bits))]
        r = gf2.rank(rows)
        if best is None or r < best:
            best = r
            arg = []
        if r == best:
            arg.append({v: (chi_bits >> i) & 1 for i, v in enumerate(G.labels)})
    assert best is not None and best % 2 == 0
    return best, arg


def min_genus(G: SimpleGraph) -> Tuple[int, List[Dict[str, int]]]:
    """Minimum over all bicolourings chi of rank(R + d chi)/2, where d chi
    is the edge supported coboundary of chi.

    This equals the minimum genus over the bicolourable framings of any
    chord diagram whose interlace graph is G.  Requires EN1 (all degrees
    even); raises NotBicolourable otherwise.  Returns the genus and every
    minimising colouring with the first vertex coloured 0 (colourings come
    in pairs under the global swap, one representative each).
    """
    if not check_EN1(G):
        raise NotBicolourable("a vertex has odd degree")
    _, base = rosenstiehl(G)
    best, arg = _minimise_rank_over_colourings(G, base)
    return best // 2, arg


def min_genus_coboundary(G: SimpleGraph) -> Tuple[int, List[Dict[str, int]]]:
    """Same minimisation with R restricted to edges before adding d chi.

    When EN2 holds the entries of R off the edges vanish, so this agrees
    with min_genus; without EN2 the two can differ.
    """
    if not check_EN1(G):
        raise NotBicolourable("a vertex has odd degree")
    _, base = rosenstiehl_cocycle(G)
    best, arg = _minimise_rank_over_colourings(G, base)
    return best // 2, arg


# -- genus zero framings -----------------------------------------------------------


def genus0_framings(C: ChordDiagram) -> List[ChordDiagram]:
    """All framings of the chords of C with genus zero.

    There are none unless the interlace graph is Gaussian (raises
    NotGaussian), and exactly 2**b0 of them when it is, where b0 counts
    the connected components of the interlace graph.
    """
    G = interlace_graph(C)
    if not is_gaussian(G):
        raise NotGaussian(f"interlace graph of {C!s} is not Gaussian")
    p = _potential(G)
    assert p is not None
    comps = G.components()
    out: Dict[Tuple[int, ...], ChordDiagram] = {}
    for flips in range(1 << len(comps)):
        flip_of = {}
        for k, comp in enumerate(comps):
            for v in comp:
                flip_of[v] = (flips >> k) & 1
        chi = {v: p[G.index[v]] ^ flip_of[v] for v in G.labels}
        for D in bicolouring_to_framing(C, chi):
            assert D.framing is not None
            out.setdefault(tuple(D.framing), D)
    framed = [out[key] for key in sorted(out)]
    for D in framed:
        assert genus(D) == 0
    return framed


# -- CL2 weightings ----------------------------------------------------------------


def _fundamental_cycles(G: SimpleGraph) -> List[List[Tuple[int, int]]]:
    """Edge lists of the fundamental cycles of a breadth first spanning
    forest: one cycle per co-tree edge."""
    n = G.n
    parent: Dict[int, int] = {}
    depth = [0] * n
    seen = [False] * n
    tree_edges = set()
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        head = 0
        while head < len(queue):
            i = queue[head]
            head += 1
            row = G.rows[i]
            j = 0
            while row:
                if row & 1 and not seen[j]:
                    seen[j] = True
                    parent[j] = i
                    depth[j] = depth[i] + 1
                    tree_edges.add((min(i, j), max(i, j)))
                    queue.append(j)
                j += 1
                row >>= 1
    cycles = []
    for i in range(n):
        row = G.rows[i] >> (i + 1)
        j = i + 1
        while row:
            if row & 1 and (i, j) not in tree_edges:
                path: List[Tuple[int, int]] = [(i, j)]
                a, b = i, j
                while a != b:
                    if depth[a] >= depth[b]:
                        path.append((a, parent[a]))
                        a = parent[a]
                    else:
                        path.append((b, parent[b]))
                        b = parent[b]
                cycles.append(path)
            row >>= 1
            j += 1
    return cycles


def solve_CL2(
    G: SimpleGraph,
) -> Optional[Tuple[Dict[str, int], List[Dict[str, int]]]]:
    """The affine set of mod 2 weightings W satisfying the weighted EN2 and
    RC conditions for R_W = E + E W E.

    EN2 contributes one linear equation per non-adjacent pair (the weight
    of the common neighbourhood vanishes); RC contributes one equation per
    fundamental cycle (the weights of the common neighbourhoods along the
    cycle sum to its length).  Returns (particular solution, basis of the
    solution space of the homogeneous system), or None when no weighting
    exists.
    """
    n = G.n
    rows: List[int] = []
    rhs: List[int] = []
    for i in range(n):
        for j in range(i + 1, n):
            if not (G.rows[i] >> j) & 1:
                rows.append(G.rows[i] & G.rows[j])
                rhs.append(0)
    for cycle in _fundamental_cycles(G):
        coeff = 0
        for a, b in cycle:
            coeff ^= G.rows[a] & G.rows[b]
        rows.append(coeff)
        rhs.append(len(cycle) & 1)
    solved = gf2.solve_affine(rows, rhs, n)
    if solved is None:
        return None
    particular, basis = solved
    to_dict = lambda bits: {v: (bits >> i) & 1 for i, v in enumerate(G.labels)}
    return to_dict(particular), [to_dict(b) for b in basis]


def check_CL2(G: SimpleGraph, weights: Dict[str, int]) -> bool:
    """Whether a weighting satisfies the mod 2 weighted EN2 and RC
    conditions."""
    n = G.n
    w_bits = 0
    for i, v in enumerate(G.labels):
        if weights.get(v, 0) & 1:
            w_bits |= 1 << i
    crw = lambda i, j: (((G.rows[i] >> j) & 1) ^ ((G.rows[i] & G.rows[j] & w_bits).bit_count() & 1))
    for i in range(n):
        for j in range(i + 1, n):
            if not (G.rows[i] >> j) & 1 and crw(i, j):
                return False
    return _potential(G, crw) is not None


def weighted_en1(
    G: SimpleGraph, weights: Dict[str, int], *, integer: bool = True
) -> bool:
    """The weighted EN1 condition: W(x) = 1 forces R_W(x,x) = W(N(x)) to be
    even.  The guard W(x) = 1 is read over the integers by default; with
    integer=False it is read mod 2 (any odd weight triggers the check).

    With the all-one weighting this is the plain EN1 condition (every
    degree even).
    """
    for v in G.labels:
        w = weights.get(v, 0)
        hit = (w == 1) if integer else (w % 2 == 1)
        if hit:
            total = sum(weights.get(u, 0) for u in G.neighbors(v))
            if total % 2:
                return False
    return True


def check_CL12(
    G: SimpleGraph, weights: Dict[str, int], *, integer_en1: bool = True
) -> bool:
    """CL2 plus the weighted EN1 condition (integer guard by default)."""
    return check_CL2(G, weights) and weighted_en1(G, weights, integer=integer_en1)


# -- compositions of graphs ---------------------------------------------------------


def toric_sum(
    A: SimpleGraph, roots_a: Iterable[str], B: SimpleGraph, roots_b: Iterable[str]
) -> SimpleGraph:
    """Disjoint union of A and B with a complete join between the two
    marked vertex sets.  Labels must not collide."""
    ra = set(roots_a)
    rb = set(roots_b)
    if set(A.labels) & set(B.labels):
        raise ValueError("vertex labels collide")
    edges = A.edges() + B.edges() + [(a, b) for a in sorted(ra) for b in sorted(rb)]
    return SimpleGraph.from_edges(A.labels + B.labels, edges)


def komposition_graph(
    A: SimpleGraph, a: str, B: SimpleGraph, b: str, fresh: Optional[str] = None
) -> SimpleGraph:
    """The graph counterpart of the komposition of chord diagrams: delete
    the roots a and b, join their neighbourhoods completely, and add a new
    root adjacent to the union of both neighbourhoods."""
    na = [v for v in A.neighbors(a)]
    nb = [v for v in B.neighbors(b)]
    core = toric_sum(A.delete_vertex(a), na, B.delete_vertex(b), nb)
    if fresh is None:
        fresh = fresh_label(core.labels)
    return core.add_vertex(fresh, na + nb)


# -- re-exported graph operations ----------------------------------------------------


def local_complement(G: SimpleGraph, v: str) -> SimpleGraph:
    """G * v: complement the adjacency inside the neighbourhood of v."""
    return G.local_complement(v)


def complement_on(G: SimpleGraph, subset: Iterable[str]) -> SimpleGraph:
    """Complement the adjacency inside a vertex subset."""
    return G.complement_on(subset)


def smoothing_graph(G: SimpleGraph, v: str) -> SimpleGraph:
    """(G * v) with v deleted."""
    return G.smoothing(v)
