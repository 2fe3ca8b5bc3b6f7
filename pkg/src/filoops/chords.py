"""Chord diagrams as cyclic double-occurrence words, with framings.

A diagram stores one linear representative of its cyclic word; equality
up to rotation (and optional relabelling, orientation reversal, frame
inversion) goes through canonical_form/equivalent.

Framing encoding: per slot, 1 marks the infinity occurrence of the
chord and 0 the zero occurrence; in word format uppercase = 1 and
lowercase = 0.  A valid framing gives the two occurrences of every
chord different values.
"""

from __future__ import annotations

import string
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import ArityError, FramingError, IntervalError, LetterCountError, RootError
from .graphs import SimpleGraph

__all__ = [
    "ChordDiagram",
    "FramedChordDiagram",
    "parse_word",
    "parse_unframed",
    "parse_line",
    "to_line",
    "fresh_label",
    "interlace_graph",
    "canonical_form",
    "equivalent",
    "spheric_sum",
    "plumbing",
    "komposition",
    "smoothing",
    "local_complement_diagram",
    "MUTATIONS",
    "mutate",
    "mutation_orbit",
    "insert_diagram",
    "merge_insert",
    "compose_diagrams",
    "all_pairings",
    "all_unframed_diagrams",
    "all_framings",
    "random_diagram",
]


Arc = Tuple[Tuple[str, int], ...]  # sequence of (label, framing value)


@dataclass(frozen=True)
class ChordDiagram:
    """A cyclic double-occurrence word, optionally framed and rooted.

    slots holds the chord label at each position; framing (if present)
    holds the per-slot marking, 1 for infinity and 0 for zero; root
    optionally designates a chord for the rooted operations.
    """

    slots: Tuple[str, ...] = ()
    framing: Optional[Tuple[int, ...]] = None
    root: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "slots", tuple(self.slots))
        if self.framing is not None:
            object.__setattr__(self, "framing", tuple(self.framing))
        counts = Counter(self.slots)
        bad = {x: c for x, c in counts.items() if c != 2}
        if bad:
            raise LetterCountError(f"chords must occur exactly twice, got {bad}")
        if self.framing is not None:
            if len(self.framing) != len(self.slots):
                raise FramingError("framing length does not match word length")
            if any(v not in (0, 1) for v in self.framing):
                raise FramingError("framing values must be 0 or 1")
            per_chord: Dict[str, int] = Counter()
            for x, v in zip(self.slots, self.framing):
                per_chord[x] += v
            wrong = {x: s for x, s in per_chord.items() if s != 1}
            if wrong:
                raise FramingError(
                    f"each chord needs one infinity and one zero occurrence, got {wrong}"
                )
        if self.root is not None and self.root not in counts:
            raise RootError(f"root {self.root!r} is not a chord of the diagram")

    # -- basics ---------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.slots) // 2

    @property
    def chords(self) -> Tuple[str, ...]:
        return tuple(sorted(set(self.slots)))

    @property
    def is_framed(self) -> bool:
        return self.framing is not None

    def require_framed(self) -> None:
        if self.framing is None:
            raise FramingError("operation requires a framed diagram")

    def positions(self, x: str) -> Tuple[int, int]:
        p = self.slots.index(x)
        q = self.slots.index(x, p + 1)
        return p, q

    def frame_of(self, i: int) -> int:
        assert self.framing is not None
        return self.framing[i]

    # -- elementary transformations ---------------------------------------

    def rotate(self, k: int) -> "ChordDiagram":
        m = len(self.slots)
        if m == 0:
            return self
        k %= m
        fr = None if self.framing is None else self.framing[k:] + self.framing[:k]
        return ChordDiagram(self.slots[k:] + self.slots[:k], fr, self.root)

    def reverse(self) -> "ChordDiagram":
        fr = None if self.framing is None else self.framing[::-1]
        return ChordDiagram(self.slots[::-1], fr, self.root)

    def swap_frames(self) -> "ChordDiagram":
        self.require_framed()
        assert self.framing is not None
        return ChordDiagram(self.slots, tuple(1 - v for v in self.framing), self.root)

    def relabel(self, mapping: Mapping[str, str]) -> "ChordDiagram":
        slots = tuple(mapping.get(x, x) for x in self.slots)
        root = None if self.root is None else mapping.get(self.root, self.root)
        return ChordDiagram(slots, self.framing, root)

    def with_root(self, x: Optional[str]) -> "ChordDiagram":
        return ChordDiagram(self.slots, self.framing, x)

    def unframed(self) -> "ChordDiagram":
        return ChordDiagram(self.slots, None, self.root)

    def with_framing(self, framing: Sequence[int]) -> "ChordDiagram":
        return ChordDiagram(self.slots, tuple(framing), self.root)

    # -- text form ---------------------------------------------------------

    def to_word(self) -> str:
        """Compact word, one letter per slot; uppercase marks infinity."""
        out = []
        for i, x in enumerate(self.slots):
            if len(x) != 1 or not x.isalpha():
                raise ValueError(f"word format needs single-letter chords, got {x!r}")
            if self.framing is None:
                out.append(x.lower())
            else:
                out.append(x.upper() if self.framing[i] else x.lower())
        return "".join(out)

    def __str__(self) -> str:
        try:
            return self.to_word()
        except ValueError:
            marks = self.framing or (0,) * len(self.slots)
            return " ".join(f"{x}^" if v else x for x, v in zip(self.slots, marks))


FramedChordDiagram = ChordDiagram


# -- parsing -------------------------------------------------------------------


def parse_word(text: str) -> ChordDiagram:
    """Parse a framed word; case encodes the framing."""
    text = text.strip()
    if not all(c.isalpha() for c in text):
        raise LetterCountError(f"word must consist of letters, got {text!r}")
    slots = tuple(c.lower() for c in text)
    framing = tuple(1 if c.isupper() else 0 for c in text)
    return ChordDiagram(slots, framing)


def parse_unframed(text: str) -> ChordDiagram:
    """Parse a word ignoring case; result carries no framing."""
    text = text.strip()
    if not all(c.isalpha() for c in text):
        raise LetterCountError(f"word must consist of letters, got {text!r}")
    return ChordDiagram(tuple(c.lower() for c in text))


def parse_line(text: str, framed: Optional[bool] = None) -> ChordDiagram:
    """Parse one line of word format: a word plus an optional root=X tail.

    With framed=None the case of the word decides: any uppercase letter
    means the line carries a framing, an all-lowercase word is unframed.
    """
    root: Optional[str] = None
    words: List[str] = []
    for tok in text.split():
        if tok.startswith("root="):
            root = tok[len("root=") :]
        else:
            words.append(tok)
    if len(words) != 1:
        raise LetterCountError(f"expected one word per line, got {text!r}")
    if framed is None:
        framed = any(c.isupper() for c in words[0])
    C = parse_word(words[0]) if framed else parse_unframed(words[0])
    if root is not None:
        C = C.with_root(root.lower())
    return C


def to_line(C: ChordDiagram) -> str:
    """One line of word format, with the root spelled out when present."""
    word = C.to_word()
    return f"{word} root={C.root}" if C.root is not None else word


def fresh_label(used: Iterable[str]) -> str:
    used_set = set(used)
    for c in string.ascii_lowercase:
        if c not in used_set:
            return c
    i = 0
    while f"x{i}" in used_set:
        i += 1
    return f"x{i}"


# -- interlacement -------------------------------------------------------------


def interlace_graph(C: ChordDiagram) -> SimpleGraph:
    """Graph on the chords; edges join pairs whose occurrences alternate."""
    labels = C.chords
    edges = []
    for i, x in enumerate(labels):
        p, q = C.positions(x)
        for y in labels[i + 1 :]:
            between = sum(1 for k in range(p + 1, q) if C.slots[k] == y)
            if between == 1:
                edges.append((x, y))
    return SimpleGraph.from_edges(labels, edges)


# -- canonical forms -----------------------------------------------------------


def _encode(slots: Sequence[str], framing: Optional[Sequence[int]]) -> str:
    """Relabel chords by first occurrence and encode as a word."""
    names: Dict[str, str] = {}
    letters = string.ascii_lowercase
    out = []
    for i, x in enumerate(slots):
        if x not in names:
            if len(names) >= len(letters):
                raise ValueError("canonical word form supports at most 26 chords")
            names[x] = letters[len(names)]
        c = names[x]
        if framing is not None and framing[i]:
            c = c.upper()
        out.append(c)
    return "".join(out)


def _variants(C: ChordDiagram, reversal: bool, frame_swap: bool) -> Iterator[ChordDiagram]:
    seeds = [C]
    if reversal:
        seeds.append(C.reverse())
    if frame_swap and C.is_framed:
        seeds.extend([d.swap_frames() for d in seeds])
    for d in seeds:
        for k in range(max(1, len(d.slots))):
            yield d.rotate(k)


def canonical_form(
    C: ChordDiagram,
    reversal: bool = False,
    frame_swap: bool = False,
    relabel: bool = True,
) -> str:
    """Minimal word over rotations (and optional global reversal and
    frame inversion), with chords renamed by first occurrence unless
    relabel is False.  Equal diagrams give equal strings."""
    best: Optional[str] = None
    for d in _variants(C, reversal, frame_swap):
        if relabel:
            w = _encode(d.slots, d.framing)
        else:
            w = "|".join(
                f"{x}^" if d.framing is not None and d.framing[i] else x
                for i, x in enumerate(d.slots)
            )
        if best is None or w < best:
            best = w
    assert best is not None or len(C.slots) == 0
    return best or ""


def equivalent(
    A: ChordDiagram,
    B: ChordDiagram,
    reversal: bool = False,
    frame_swap: bool = False,
    relabel: bool = True,
) -> bool:
    if A.is_framed != B.is_framed:
        return False
    return canonical_form(A, reversal, frame_swap, relabel) == canonical_form(
        B, reversal, frame_swap, relabel
    )


# -- arcs at a root -------------------------------------------------------------


def _arcs_at(C: ChordDiagram, x: str) -> Tuple[Arc, Arc]:
    """The two arcs (as (label, frame) sequences) between the occurrences
    of x: first the arc following the infinity occurrence (or the first
    occurrence when unframed), then the complementary arc."""
    if x not in set(C.slots):
        raise RootError(f"{x!r} is not a chord of the diagram")
    p, q = C.positions(x)
    if C.framing is not None and C.framing[q] == 1:
        p, q = q, p
    m = len(C.slots)
    fr = C.framing or (0,) * m

    def arc(a: int, b: int) -> Arc:
        out = []
        i = (a + 1) % m
        while i != b:
            out.append((C.slots[i], fr[i]))
            i = (i + 1) % m
        return tuple(out)

    return arc(p, q), arc(q, p)


def _build(arcs: Sequence[Arc], framed: bool, root: Optional[str] = None) -> ChordDiagram:
    slots: List[str] = []
    framing: List[int] = []
    for a in arcs:
        for x, v in a:
            slots.append(x)
            framing.append(v)
    return ChordDiagram(tuple(slots), tuple(framing) if framed else None, root)


def _rev(a: Arc) -> Arc:
    return tuple(reversed(a))


def _get_root(C: ChordDiagram) -> str:
    if C.root is None:
        raise RootError("diagram has no designated root chord")
    return C.root


def _disjoint(A: ChordDiagram, B: ChordDiagram) -> ChordDiagram:
    """Relabel B's chords away from A's on collision."""
    used = set(A.slots) | set(B.slots)
    mapping = {}
    for x in sorted(set(B.slots)):
        if x in set(A.slots):
            y = fresh_label(used)
            mapping[x] = y
            used.add(y)
    return B.relabel(mapping) if mapping else B


# -- diagram operations ----------------------------------------------------------


def spheric_sum(A: ChordDiagram, B: ChordDiagram) -> ChordDiagram:
    """Concatenate the linear representatives; interlace graph is the
    disjoint union.  B is relabelled on label collision."""
    B = _disjoint(A, B)
    framed = A.is_framed and B.is_framed
    fa = A.framing if framed else None
    fb = B.framing if framed else None
    framing = None if not framed else tuple(fa) + tuple(fb)  # type: ignore[arg-type]
    return ChordDiagram(A.slots + B.slots, framing, A.root)


def plumbing(A: ChordDiagram, B: ChordDiagram) -> ChordDiagram:
    """Join two rooted framed diagrams a∞Ua₀V and b∞Xb₀Y into UX⁻¹V⁻¹Y;
    both roots are consumed.  Framing values travel with their slots."""
    A.require_framed()
    B.require_framed()
    B = _disjoint(A, B)
    U, V = _arcs_at(A, _get_root(A))
    X, Y = _arcs_at(B, _get_root(B))
    return _build([U, _rev(X), _rev(V), Y], framed=True)


def komposition(A: ChordDiagram, B: ChordDiagram) -> ChordDiagram:
    """Join two rooted framed diagrams into c∞UXc₀VY with a fresh root c."""
    A.require_framed()
    B.require_framed()
    B = _disjoint(A, B)
    U, V = _arcs_at(A, _get_root(A))
    X, Y = _arcs_at(B, _get_root(B))
    c = fresh_label(set(A.slots) | set(B.slots))
    arcs = [((c, 1),), U, X, ((c, 0),), V, Y]
    return _build(arcs, framed=True, root=c)


def smoothing(C: ChordDiagram, a: str) -> ChordDiagram:
    """Erase chord a, joining its arcs as UV⁻¹ (the plumbing of C rooted
    at a with a single-chord diagram).  The interlace graph of the result
    is the graph smoothing (G*a) minus a."""
    U, V = _arcs_at(C, a)
    return _build([U, _rev(V)], framed=C.is_framed, root=C.root if C.root != a else None)


def local_complement_diagram(C: ChordDiagram, c: str) -> ChordDiagram:
    """Reverse one arc between the occurrences of c (cAcB to cAcB⁻¹); the
    interlace graph of the result is the local complement at c.  The two
    arc choices differ by a global reversal of the diagram."""
    if c not in set(C.slots):
        raise RootError(f"{c!r} is not a chord of the diagram")
    p, q = C.positions(c)
    if C.framing is not None and C.framing[q] == 1:
        p, q = q, p
    m = len(C.slots)
    fr = C.framing or (0,) * m
    first = ((c, fr[p]),)
    second = ((c, fr[q]),)
    A: Arc = tuple((C.slots[i % m], fr[i % m]) for i in range(p + 1, p + 1 + (q - p) % m - 1))
    B: Arc = tuple((C.slots[i % m], fr[i % m]) for i in range(q + 1, q + 1 + (p - q) % m - 1))
    return _build([first, A, second, _rev(B)], framed=C.is_framed, root=C.root)


MUTATIONS = (
    "identity",
    "reverse-first-interval",
    "reverse-second-interval",
    "reverse-both",
)


def _interval_pair_of(C: ChordDiagram, chords: Iterable[str]) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Locate the slots of a chord subset as at most two intervals of the
    stored word (the caller rotates an unmarked slot to position 0 first,
    so no run wraps around), returned as half-open index pairs."""
    marked = set(chords)
    m = len(C.slots)
    hits = [i for i in range(m) if C.slots[i] in marked]
    if not hits:
        return (0, 0), (0, 0)
    runs: List[Tuple[int, int]] = []
    start = hits[0]
    prev = hits[0]
    for i in hits[1:]:
        if i != prev + 1:
            runs.append((start, prev + 1))
            start = i
        prev = i
    runs.append((start, prev + 1))
    if len(runs) > 2:
        raise IntervalError(f"chords {sorted(marked)} occupy more than two arcs")
    if len(runs) == 1:
        runs.append((runs[0][1], runs[0][1]))
    return runs[0], runs[1]


def mutate(
    C: ChordDiagram,
    split: Union[Tuple[Tuple[int, int], Tuple[int, int]], Iterable[str]],
    g: str,
) -> ChordDiagram:
    """Apply a rectangle-group symmetry to the sub-diagram occupying two
    arcs X and Y of the word (given as two half-open index intervals on
    the stored representative, or as a chord subset).

    Convention for the four elements acting on the pair (X, Y):
    identity (X, Y); reverse-first-interval (X⁻¹, Y⁻¹);
    reverse-second-interval (Y, X); reverse-both (Y⁻¹, X⁻¹).
    Each choice leaves the interlace graph unchanged."""
    if g not in MUTATIONS:
        raise ValueError(f"unknown mutation element {g!r}")
    if not (
        isinstance(split, tuple)
        and len(split) == 2
        and all(isinstance(p, tuple) and len(p) == 2 and all(isinstance(v, int) for v in p) for p in split)
    ):
        chords = list(split)  # type: ignore[arg-type]
        pivot = _first_slot_outside(C, chords)
        rotated = C.rotate(pivot)
        a, b = _interval_pair_of(rotated, chords)
        return mutate(rotated, (a, b), g).rotate(-pivot)
    (x0, x1), (y0, y1) = split  # type: ignore[misc]
    m = len(C.slots)
    if not (0 <= x0 <= x1 <= y0 <= y1 <= m):
        raise IntervalError("intervals must be disjoint, ordered, and in range")
    inside = Counter(C.slots[x0:x1] + C.slots[y0:y1])
    if any(c == 1 for c in inside.values()):
        raise IntervalError("interval pair is not closed under chord mates")
    fr = C.framing or (0,) * m
    X = tuple((C.slots[i], fr[i]) for i in range(x0, x1))
    Y = tuple((C.slots[i], fr[i]) for i in range(y0, y1))
    if g == "identity":
        first, second = X, Y
    elif g == "reverse-first-interval":
        first, second = _rev(X), _rev(Y)
    elif g == "reverse-second-interval":
        first, second = Y, X
    else:
        first, second = _rev(Y), _rev(X)
    A = tuple((C.slots[i], fr[i]) for i in range(0, x0))
    B = tuple((C.slots[i], fr[i]) for i in range(x1, y0))
    E = tuple((C.slots[i], fr[i]) for i in range(y1, m))
    return _build([A, first, B, second, E], framed=C.is_framed, root=C.root)


def _first_slot_outside(C: ChordDiagram, chords: Iterable[str]) -> int:
    marked = set(chords)
    for i, x in enumerate(C.slots):
        if x not in marked:
            return i
    return 0


def mutation_orbit(C: ChordDiagram, split: Union[Tuple, Iterable[str]], *_ignored) -> List[ChordDiagram]:
    return [mutate(C, split, g) for g in MUTATIONS]


# -- composition ------------------------------------------------------------------


def insert_diagram(host: ChordDiagram, f: str, guest: ChordDiagram) -> ChordDiagram:
    """Substitute the rooted guest r∞Xr₀Y for the chord f of the host
    f∞Uf₀V, consuming both f and the guest's root: the result is XUYV.
    On the interlace graphs this joins the open neighbourhoods of f and
    of the guest root by a complete bipartite graph and deletes both."""
    host.require_framed()
    guest.require_framed()
    guest = _disjoint(host, guest)
    U, V = _arcs_at(host, f)
    X, Y = _arcs_at(guest, _get_root(guest))
    root = host.root if host.root != f else None
    return _build([X, U, Y, V], framed=True, root=root)


def merge_insert(host: ChordDiagram, f: str, guest: ChordDiagram) -> ChordDiagram:
    """Substitute the rooted guest for the chord f of the host, keeping
    the guest's root as the merged chord: f∞Uf₀V with r∞Xr₀Y becomes
    r∞XUr₀YV.  The merged chord takes over f's interlacements."""
    host.require_framed()
    guest.require_framed()
    guest = _disjoint(host, guest)
    r = _get_root(guest)
    U, V = _arcs_at(host, f)
    X, Y = _arcs_at(guest, r)
    arcs = [((r, 1),), X, U, ((r, 0),), Y, V]
    root = host.root if host.root != f else None
    return _build(arcs, framed=True, root=root)


def compose_diagrams(
    C0: ChordDiagram,
    parts: Union[Mapping[str, ChordDiagram], Sequence[ChordDiagram]],
) -> ChordDiagram:
    """Insert one rooted framed diagram inside each non-root chord of the
    rooted framed diagram C0 (merge_insert per chord).  A single-chord
    part leaves its host chord unchanged up to renaming, so a full tuple
    of single-chord parts reproduces C0."""
    C0.require_framed()
    r0 = _get_root(C0)
    targets = []
    seen = set()
    for x in C0.slots:
        if x != r0 and x not in seen:
            targets.append(x)
            seen.add(x)
    if isinstance(parts, Mapping):
        if set(parts.keys()) != set(targets):
            raise ArityError(
                f"parts keyed by {sorted(parts.keys())} but non-root chords are {sorted(targets)}"
            )
        assigned = [(x, parts[x]) for x in targets]
    else:
        if len(parts) != len(targets):
            raise ArityError(f"{len(targets)} non-root chords but {len(parts)} parts")
        assigned = list(zip(targets, parts))
    result = C0
    for x, part in assigned:
        part.require_framed()
        _get_root(part)
        result = merge_insert(result, x, part)
    return result


# -- enumeration and sampling --------------------------------------------------------


def all_pairings(points: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """Perfect matchings of range(points), points even."""
    if points % 2:
        raise ValueError("odd number of points")

    def rec(rest: Tuple[int, ...]) -> Iterator[Tuple[Tuple[int, int], ...]]:
        if not rest:
            yield ()
            return
        a = rest[0]
        for i in range(1, len(rest)):
            b = rest[i]
            remaining = rest[1:i] + rest[i + 1 :]
            for tail in rec(remaining):
                yield ((a, b),) + tail

    yield from rec(tuple(range(points)))


def all_unframed_diagrams(n: int) -> Iterator[ChordDiagram]:
    """One unframed diagram per pairing of 2n circle points; this covers
    every diagram with n chords up to relabelling (rotations included
    redundantly)."""
    letters = string.ascii_lowercase
    if n > len(letters):
        raise ValueError("supports at most 26 chords")
    for pairing in all_pairings(2 * n):
        slots: List[Optional[str]] = [None] * (2 * n)
        for idx, (a, b) in enumerate(sorted(pairing)):
            slots[a] = letters[idx]
            slots[b] = letters[idx]
        yield ChordDiagram(tuple(slots))  # type: ignore[arg-type]


def all_framings(C: ChordDiagram) -> Iterator[ChordDiagram]:
    """All 2^n framings of the underlying diagram."""
    chords = C.chords
    for bits in range(1 << len(chords)):
        values = {x: (bits >> i) & 1 for i, x in enumerate(chords)}
        framing = []
        seen: Dict[str, int] = {}
        for i, x in enumerate(C.slots):
            if x not in seen:
                framing.append(values[x])
                seen[x] = i
            else:
                framing.append(1 - values[x])
        yield ChordDiagram(C.slots, tuple(framing), C.root)


def random_diagram(n: int, rng, framed: bool = True) -> ChordDiagram:
    letters = string.ascii_lowercase
    if n > len(letters):
        raise ValueError("supports at most 26 chords")
    slots = [letters[i] for i in range(n)] * 2
    rng.shuffle(slots)
    framing = None
    if framed:
        framing_list = []
        seen = set()
        choice = {letters[i]: rng.randint(0, 1) for i in range(n)}
        for x in slots:
            if x in seen:
                framing_list.append(1 - choice[x])
            else:
                framing_list.append(choice[x])
                seen.add(x)
        framing = tuple(framing_list)
    return ChordDiagram(tuple(slots), framing)
