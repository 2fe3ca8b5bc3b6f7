"""Simple graphs on labelled vertices with GF(2) bitset adjacency rows.

The graph is immutable: every operation returns a new SimpleGraph.
Vertex labels are strings; rows[i] holds the neighbourhood of labels[i]
as a bitset over vertex indices.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import Disconnected

__all__ = [
    "SimpleGraph",
    "complete_graph",
    "star_graph",
    "cycle_graph",
    "path_graph",
    "is_clique",
    "is_star",
    "star_center",
    "canonical_key",
    "are_isomorphic",
    "isomorphisms",
    "all_graphs",
    "connected_graphs",
    "graph_to_json",
    "graph_from_json",
    "graph_to_dot",
]


@dataclass(frozen=True)
class SimpleGraph:
    labels: Tuple[str, ...]
    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("duplicate vertex labels")
        if len(self.rows) != n:
            raise ValueError("row count does not match label count")
        for i, row in enumerate(self.rows):
            if row >> n:
                raise ValueError("adjacency row exceeds vertex range")
            if row & (1 << i):
                raise ValueError("loops are not allowed")
        for i in range(n):
            for j in range(i + 1, n):
                if bool(self.rows[i] & (1 << j)) != bool(self.rows[j] & (1 << i)):
                    raise ValueError("adjacency is not symmetric")

    # -- construction -------------------------------------------------

    @staticmethod
    def from_edges(labels: Sequence[str], edges: Iterable[Tuple[str, str]]) -> "SimpleGraph":
        labels = tuple(labels)
        index = {v: i for i, v in enumerate(labels)}
        rows = [0] * len(labels)
        for a, b in edges:
            i, j = index[a], index[b]
            if i == j:
                raise ValueError(f"loop at {a!r}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return SimpleGraph(labels, tuple(rows))

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def index(self) -> Dict[str, int]:
        return {v: i for i, v in enumerate(self.labels)}

    def has_edge(self, a: str, b: str) -> bool:
        return bool(self.rows[self.index[a]] & (1 << self.index[b]))

    def degree(self, a: str) -> int:
        return self.rows[self.index[a]].bit_count()

    def neighbors(self, a: str) -> Tuple[str, ...]:
        row = self.rows[self.index[a]]
        return tuple(v for j, v in enumerate(self.labels) if row & (1 << j))

    def edges(self) -> List[Tuple[str, str]]:
        out = []
        for i in range(self.n):
            row = self.rows[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    out.append((self.labels[i], self.labels[j]))
                row >>= 1
                j += 1
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    # -- derived graphs -------------------------------------------------

    def relabel(self, mapping: Dict[str, str]) -> "SimpleGraph":
        return SimpleGraph(tuple(mapping.get(v, v) for v in self.labels), self.rows)

    def induced(self, keep: Iterable[str]) -> "SimpleGraph":
        keep_set = set(keep)
        idx = [i for i, v in enumerate(self.labels) if v in keep_set]
        labels = tuple(self.labels[i] for i in idx)
        rows = []
        for i in idx:
            row = 0
            for new_j, j in enumerate(idx):
                if self.rows[i] & (1 << j):
                    row |= 1 << new_j
            rows.append(row)
        return SimpleGraph(labels, tuple(rows))

    def delete_vertex(self, v: str) -> "SimpleGraph":
        return self.induced(u for u in self.labels if u != v)

    def add_vertex(self, v: str, nbrs: Iterable[str]) -> "SimpleGraph":
        if v in self.index:
            raise ValueError(f"vertex {v!r} already present")
        nbr_bits = 0
        for u in nbrs:
            nbr_bits |= 1 << self.index[u]
        n = self.n
        rows = [self.rows[i] | ((nbr_bits >> i & 1) << n) for i in range(n)]
        rows.append(nbr_bits)
        return SimpleGraph(self.labels + (v,), tuple(rows))

    def complement_on(self, subset: Iterable[str]) -> "SimpleGraph":
        """Complement the adjacency inside subset, leave the rest alone."""
        bits = 0
        for v in subset:
            bits |= 1 << self.index[v]
        rows = list(self.rows)
        for i in range(self.n):
            if bits & (1 << i):
                rows[i] ^= bits & ~(1 << i)
        return SimpleGraph(self.labels, tuple(rows))

    def local_complement(self, v: str) -> "SimpleGraph":
        """G * v: complement the neighbourhood of v."""
        return self.complement_on(self.neighbors(v))

    def smoothing(self, v: str) -> "SimpleGraph":
        """(G * v) with v deleted."""
        return self.local_complement(v).delete_vertex(v)

    # -- connectivity ----------------------------------------------------

    def components(self) -> List[FrozenSet[str]]:
        seen = 0
        out: List[FrozenSet[str]] = []
        for i in range(self.n):
            if seen & (1 << i):
                continue
            comp = 1 << i
            frontier = comp
            while frontier:
                nxt = 0
                j = 0
                f = frontier
                while f:
                    if f & 1:
                        nxt |= self.rows[j]
                    f >>= 1
                    j += 1
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            out.append(frozenset(v for j, v in enumerate(self.labels) if comp & (1 << j)))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def require_connected(self) -> None:
        if not self.is_connected():
            raise Disconnected(f"graph on {self.labels} is not connected")

    # -- equality up to labels ---------------------------------------------

    def adjacency_key(self) -> Tuple[Tuple[str, str], ...]:
        return tuple(sorted(tuple(sorted(e)) for e in self.edges()))

    def same_graph(self, other: "SimpleGraph") -> bool:
        """Equality as labelled graphs, ignoring vertex order."""
        return set(self.labels) == set(other.labels) and self.adjacency_key() == other.adjacency_key()


# -- constructors ------------------------------------------------------------


def _default_labels(n: int, prefix: str = "v") -> Tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(n))


def complete_graph(labels: Sequence[str]) -> SimpleGraph:
    labels = tuple(labels)
    n = len(labels)
    full = (1 << n) - 1
    return SimpleGraph(labels, tuple(full & ~(1 << i) for i in range(n)))


def star_graph(center: str, extremities: Sequence[str]) -> SimpleGraph:
    labels = (center,) + tuple(extremities)
    n = len(labels)
    rows = [((1 << n) - 1) ^ 1] + [1] * (n - 1)
    return SimpleGraph(labels, tuple(rows))


def cycle_graph(labels: Sequence[str]) -> SimpleGraph:
    labels = tuple(labels)
    n = len(labels)
    return SimpleGraph.from_edges(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


def path_graph(labels: Sequence[str]) -> SimpleGraph:
    labels = tuple(labels)
    return SimpleGraph.from_edges(labels, [(labels[i], labels[i + 1]) for i in range(len(labels) - 1)])


# -- cliques and stars --------------------------------------------------------


def is_clique(g: SimpleGraph) -> bool:
    full = (1 << g.n) - 1
    return all(g.rows[i] == full ^ (1 << i) for i in range(g.n))


def star_center(g: SimpleGraph) -> Optional[str]:
    """The center of a star, or None if g is not a star.

    A star has one vertex adjacent to all others and no other edges.
    Graphs on fewer than 3 vertices are stars only when connected; the
    center of K2 is ambiguous and resolved to the first label.
    """
    n = g.n
    if n == 1:
        return g.labels[0]
    if n == 2:
        return g.labels[0] if g.rows[0] else None
    for i in range(n):
        if g.rows[i] == ((1 << n) - 1) ^ (1 << i):
            others = [g.rows[j] == (1 << i) for j in range(n) if j != i]
            if all(others):
                return g.labels[i]
    return None


def is_star(g: SimpleGraph) -> bool:
    return star_center(g) is not None


# -- canonical forms and isomorphism -----------------------------------------


def _perm_key(rows: Sequence[int], perm: Sequence[int]) -> Tuple[int, ...]:
    """Upper-triangle adjacency read off in the order given by perm."""
    n = len(perm)
    out = []
    for a in range(n):
        ra = rows[perm[a]]
        for b in range(a + 1, n):
            out.append(1 if ra & (1 << perm[b]) else 0)
    return tuple(out)


def canonical_key(g: SimpleGraph) -> Tuple[int, Tuple[int, ...]]:
    """Isomorphism-invariant key: minimal adjacency string over all
    vertex orderings compatible with a degree refinement.

    Backtracking with prefix pruning; intended for small graphs.
    """
    n = g.n
    if n == 0:
        return (0, ())
    rows = g.rows
    degs = [r.bit_count() for r in rows]
    best: List[Optional[Tuple[int, ...]]] = [None]

    # Vertices of smaller (degree, ...) invariant come first to cut the
    # search; orderings must respect nothing, so all starts are tried,
    # grouped by invariant class for pruning only.
    def extend(perm: List[int], used: int, prefix: List[int]) -> None:
        if len(perm) == n:
            key = tuple(prefix)
            if best[0] is None or key < best[0]:
                best[0] = key
            return
        a = len(perm)
        candidates = [v for v in range(n) if not used & (1 << v)]
        # For a minimal string, try vertices producing smaller new bits first.
        scored = []
        for v in candidates:
            new_bits = tuple(1 if rows[v] & (1 << perm[b]) else 0 for b in range(a))
            scored.append((new_bits, degs[v], v))
        scored.sort()
        for new_bits, _, v in scored:
            # prefix comparison against current best
            cand = list(prefix)
            for b in range(a):
                cand.append(1 if rows[v] & (1 << perm[b]) else 0)
            if best[0] is not None:
                cut = len(cand)
                if tuple(cand) > best[0][:cut]:
                    continue
            perm.append(v)
            extend(perm, used | (1 << v), cand)
            perm.pop()

    extend([], 0, [])
    assert best[0] is not None
    return (n, best[0])


def isomorphisms(g: SimpleGraph, h: SimpleGraph) -> Iterator[Dict[str, str]]:
    """All isomorphisms g -> h as label maps (backtracking)."""
    n = g.n
    if n != h.n or g.edge_count() != h.edge_count():
        return
    gdeg = sorted(r.bit_count() for r in g.rows)
    hdeg = sorted(r.bit_count() for r in h.rows)
    if gdeg != hdeg:
        return
    himg: List[int] = []

    def place(i: int, used: int) -> Iterator[Dict[str, str]]:
        if i == n:
            yield {g.labels[a]: h.labels[himg[a]] for a in range(n)}
            return
        for j in range(n):
            if used & (1 << j):
                continue
            if g.rows[i].bit_count() != h.rows[j].bit_count():
                continue
            ok = True
            for a in range(i):
                if bool(g.rows[i] & (1 << a)) != bool(h.rows[j] & (1 << himg[a])):
                    ok = False
                    break
            if ok:
                himg.append(j)
                yield from place(i + 1, used | (1 << j))
                himg.pop()

    yield from place(0, 0)


def are_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    return next(isomorphisms(g, h), None) is not None


# -- enumeration up to isomorphism --------------------------------------------


def all_graphs(n: int) -> List[SimpleGraph]:
    """All graphs on n vertices, one per isomorphism class."""
    if n == 0:
        return [SimpleGraph((), ())]
    smaller = all_graphs(n - 1)
    labels = _default_labels(n)
    seen = {}
    for g in smaller:
        base = g.relabel({v: labels[i] for i, v in enumerate(g.labels)})
        for bits in range(1 << (n - 1)):
            nbrs = [labels[i] for i in range(n - 1) if bits & (1 << i)]
            cand = base.add_vertex(labels[n - 1], nbrs)
            key = canonical_key(cand)
            if key not in seen:
                seen[key] = cand
    return list(seen.values())


def connected_graphs(n: int) -> List[SimpleGraph]:
    return [g for g in all_graphs(n) if g.is_connected()]


# -- serialization -------------------------------------------------------------


def graph_to_json(g: SimpleGraph, weights: Optional[Dict[str, int]] = None) -> str:
    payload = {
        "n": g.n,
        "labels": list(g.labels),
        "edges": sorted([g.index[a], g.index[b]] for a, b in map(sorted, g.edges())),
    }
    if weights is not None:
        payload["weights"] = {v: weights[v] for v in g.labels}
    return json.dumps(payload)


def graph_from_json(text: str) -> Tuple[SimpleGraph, Optional[Dict[str, int]]]:
    payload = json.loads(text)
    labels = [str(v) for v in payload.get("labels", [f"v{i}" for i in range(payload["n"])])]
    if len(labels) != payload["n"]:
        raise ValueError("label count does not match n")
    g = SimpleGraph.from_edges(labels, [(labels[i], labels[j]) for i, j in payload["edges"]])
    weights = payload.get("weights")
    if weights is not None:
        weights = {str(k): int(v) for k, v in weights.items()}
    return g, weights


def graph_to_dot(
    g: SimpleGraph,
    weights: Optional[Dict[str, int]] = None,
    colours: Optional[Dict[str, int]] = None,
    name: str = "G",
) -> str:
    lines = [f"graph {name} {{"]
    for v in g.labels:
        attrs = []
        label = v
        if weights is not None:
            label = f"{v} [{weights[v]}]"
        attrs.append(f'label="{label}"')
        if colours is not None:
            attrs.append('style=filled')
            attrs.append(f'fillcolor="{"gray25" if colours[v] else "white"}"')
            if colours[v]:
                attrs.append('fontcolor="white"')
        lines.append(f'  "{v}" [{", ".join(attrs)}];')
    for a, b in sorted(map(tuple, map(sorted, g.edges()))):
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
