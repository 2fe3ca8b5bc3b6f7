"""Faces, genus, intersection form, and bicolourings of framed diagrams.

Two independent face computations are provided.  boundary_components
walks the circle and jumps across each chord met, keeping direction at
an infinity occurrence and reversing at a zero occurrence; its tokens
are (slot, direction) states.  ribbon_faces builds the 4-valent ribbon
graph (one vertex per chord, one edge per circle arc) and takes orbits
of rotation-followed-by-edge-flip on the 4n darts.  Both count the same
faces; the pair cross-validates the traversal rule.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple, Union

from .chords import ChordDiagram, interlace_graph
from .errors import FramingError, NotBicolourable, ParityError
from .graphs import SimpleGraph

__all__ = [
    "boundary_components",
    "ribbon_faces",
    "face_count",
    "genus",
    "is_bicolourable",
    "bicolourings",
    "framing_to_bicolouring",
    "bicolouring_to_framing",
    "intersection_form",
]

State = Tuple[int, int]  # (slot index, direction +1/-1)
Dart = Tuple[str, int]  # ("out"/"in", slot index)


def _mates(C: ChordDiagram) -> Dict[int, int]:
    mate: Dict[int, int] = {}
    for x in set(C.slots):
        p, q = C.positions(x)
        mate[p] = q
        mate[q] = p
    return mate


def boundary_components(C: ChordDiagram) -> List[Tuple[State, ...]]:
    """Faces by the word rule.  From state (i, d) move to the adjacent
    slot j = i+d, jump to j's mate, and keep the direction if slot j is
    an infinity occurrence, reverse it otherwise.  The empty diagram has
    two (tokenless) faces."""
    C.require_framed()
    m = len(C.slots)
    if m == 0:
        return [(), ()]
    assert C.framing is not None
    mate = _mates(C)
    faces: List[Tuple[State, ...]] = []
    seen: set = set()
    for i0 in range(m):
        for d0 in (1, -1):
            if (i0, d0) in seen:
                continue
            face: List[State] = []
            state: State = (i0, d0)
            while state not in seen:
                seen.add(state)
                face.append(state)
                i, d = state
                j = (i + d) % m
                nd = d if C.framing[j] == 1 else -d
                state = (mate[j], nd)
            faces.append(tuple(face))
    return faces


def ribbon_faces(C: ChordDiagram) -> List[Tuple[Dart, ...]]:
    """Faces from the ribbon graph: vertices are chords, edges are the 2n
    circle arcs, and the rotation at a chord with infinity slot p and
    zero slot q is the 4-cycle out_p, out_q, in_p, in_q."""
    C.require_framed()
    m = len(C.slots)
    if m == 0:
        return [(), ()]
    assert C.framing is not None
    sigma: Dict[Dart, Dart] = {}
    for x in set(C.slots):
        p, q = C.positions(x)
        if C.framing[q] == 1:
            p, q = q, p
        cyc: List[Dart] = [("out", p), ("out", q), ("in", p), ("in", q)]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            sigma[a] = b

    def alpha(d: Dart) -> Dart:
        kind, i = d
        return ("in", (i + 1) % m) if kind == "out" else ("out", (i - 1) % m)

    faces: List[Tuple[Dart, ...]] = []
    seen: set = set()
    for start in sigma:
        if start in seen:
            continue
        face: List[Dart] = []
        d = start
        while d not in seen:
            seen.add(d)
            face.append(d)
            d = sigma[alpha(d)]
        faces.append(tuple(face))
    return faces


def face_count(C: ChordDiagram) -> int:
    return len(boundary_components(C))


def genus(C: ChordDiagram) -> int:
    """g = (2 - f + n)/2 from the face count."""
    f = face_count(C)
    t = 2 - f + C.n
    if t % 2 or t < 0:
        raise ParityError(f"impossible Euler count: f={f}, n={C.n}")
    return t // 2


# -- bicolourings ---------------------------------------------------------------


def _require_even_degrees(G: SimpleGraph) -> None:
    odd = [v for v in G.labels if G.degree(v) % 2]
    if odd:
        raise NotBicolourable(f"vertices of odd interlace degree: {odd}")


def is_bicolourable(obj: Union[ChordDiagram, SimpleGraph]) -> bool:
    G = interlace_graph(obj) if isinstance(obj, ChordDiagram) else obj
    return all(G.degree(v) % 2 == 0 for v in G.labels)


def framing_to_bicolouring(C: ChordDiagram) -> Tuple[Dict[str, int], Dict[str, int]]:
    """Differentiate the framing into the two chord colourings under the
    rule that consecutive slots carry the same framing value exactly when
    their chords have different colours.  Requires even interlace degrees
    (which make the slot parities of each chord differ, so the per-slot
    colour is well defined per chord)."""
    C.require_framed()
    assert C.framing is not None
    _require_even_degrees(interlace_graph(C))
    chi: Dict[str, int] = {}
    phi = C.framing
    for i, x in enumerate(C.slots):
        c = (i + phi[0] + phi[i]) & 1
        if x in chi:
            if chi[x] != c:
                raise ParityError(f"inconsistent colour at chord {x!r}")
        else:
            chi[x] = c
    return chi, {x: 1 - c for x, c in chi.items()}


bicolourings = framing_to_bicolouring


def bicolouring_to_framing(
    C: ChordDiagram, chi: Dict[str, int]
) -> Tuple[ChordDiagram, ChordDiagram]:
    """Integrate a chord colouring into the two framings inducing it; the
    two differ by global frame inversion."""
    _require_even_degrees(interlace_graph(C))
    m = len(C.slots)
    if m and set(chi.keys()) != set(C.slots):
        raise NotBicolourable("colouring does not cover the chords")
    out = []
    c0 = chi[C.slots[0]] if m else 0
    for phi0 in (0, 1):
        phi = tuple((phi0 + i + c0 + chi[C.slots[i]]) & 1 for i in range(m))
        out.append(ChordDiagram(C.slots, phi, C.root))
    return out[0], out[1]


# -- intersection form -----------------------------------------------------------


def intersection_form(C: ChordDiagram) -> Tuple[Tuple[str, ...], Tuple[int, ...]]:
    """The symmetric GF(2) pairing on chords: I(x,y) adds to the
    interlacement E(x,y) the number of chords with one occurrence in the
    open arc from x's infinity slot to x's zero slot and the mate in the
    corresponding open arc of y.  Diagonal entries are 0.  Returns the
    chord labels (sorted) and bitset rows over that order."""
    C.require_framed()
    assert C.framing is not None
    labels = C.chords
    m = len(C.slots)
    mate = _mates(C)
    arc: Dict[str, set] = {}
    for x in labels:
        p, q = C.positions(x)
        if C.framing[q] == 1:
            p, q = q, p
        inside = set()
        i = (p + 1) % m
        while i != q:
            inside.add(i)
            i = (i + 1) % m
        arc[x] = inside
    G = interlace_graph(C)
    k = len(labels)
    rows = [0] * k
    for a in range(k):
        for b in range(a + 1, k):
            x, y = labels[a], labels[b]
            crossings = sum(1 for s in arc[x] if mate[s] in arc[y])
            if (int(G.has_edge(x, y)) + crossings) & 1:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return labels, tuple(rows)
