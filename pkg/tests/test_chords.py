"""Words, framings, diagram symmetries, and the diagram operations."""

from __future__ import annotations

import random

import pytest

from filoops.chords import (
    ChordDiagram,
    all_framings,
    all_pairings,
    all_unframed_diagrams,
    canonical_form,
    equivalent,
    interlace_graph,
    komposition,
    local_complement_diagram,
    mutation_orbit,
    parse_line,
    parse_unframed,
    parse_word,
    plumbing,
    random_diagram,
    smoothing,
    spheric_sum,
    to_line,
)
from filoops.errors import FramingError, LetterCountError, RootError
from filoops.graphs import SimpleGraph, are_isomorphic


def test_parse_word_round_trip():
    for word in ("Aa", "AbaB", "aBAb", "AbCaBc", "AbCdEfBaGeDhIcFgHi"):
        C = parse_word(word)
        assert C.to_word() == word
        assert C.is_framed


def test_parse_unframed_round_trip():
    for word in ("aa", "abab", "abcabc", "abcdabcd"):
        C = parse_unframed(word)
        assert C.to_word() == word
        assert not C.is_framed


def test_parse_rejects_bad_words():
    with pytest.raises(LetterCountError):
        parse_unframed("aba")
    with pytest.raises(LetterCountError):
        parse_unframed("abca")
    with pytest.raises(FramingError):
        parse_word("AabB".replace("B", "b"))  # chord b twice lowercase
    with pytest.raises(FramingError):
        parse_word("AaBB")


def test_parse_line_detects_framing_and_root():
    framed = parse_line("AbaB")
    assert framed.is_framed
    plain = parse_line("abab")
    assert not plain.is_framed
    rooted = parse_line("abab root=b")
    assert rooted.root == "b"
    assert to_line(rooted) == "abab root=b"
    with pytest.raises(LetterCountError):
        parse_line("abab abab")


def test_rotate_reverse_preserve_class():
    C = parse_word("AbCaBc")
    for k in range(6):
        assert canonical_form(C.rotate(k)) == canonical_form(C)
    assert canonical_form(C.reverse(), reversal=True) == canonical_form(C, reversal=True)


def test_swap_frames_involution():
    C = parse_word("AbaB")
    assert C.swap_frames().swap_frames() == C
    assert C.swap_frames().to_word() == "aBAb"


def test_relabel_and_with_root():
    C = parse_unframed("abab").relabel({"a": "x", "b": "y"})
    assert C.to_word() == "xyxy"
    with pytest.raises(RootError):
        C.with_root("a")
    assert C.with_root("x").root == "x"


def test_interlace_graph_small_words():
    assert interlace_graph(parse_unframed("abab")).edges() == [("a", "b")]
    T = interlace_graph(parse_unframed("abcabc"))
    assert sorted(T.edges()) == [("a", "b"), ("a", "c"), ("b", "c")]
    assert interlace_graph(parse_unframed("aabb")).edges() == []


def test_equivalent_under_rotation_and_reversal():
    A = parse_unframed("abcabc")
    B = parse_unframed("abcabc").rotate(2)
    assert equivalent(A, B)
    assert equivalent(A, A.reverse(), reversal=True)


def test_all_pairings_counts():
    for n, count in zip(range(1, 5), (1, 3, 15, 105)):
        assert sum(1 for _ in all_pairings(2 * n)) == count


def test_all_unframed_diagrams_counts():
    for n, count in zip(range(1, 5), (1, 3, 15, 105)):
        diagrams = list(all_unframed_diagrams(n))
        assert len(diagrams) == count
        assert all(D.n == n and not D.is_framed for D in diagrams)


def test_all_framings_counts():
    C = parse_unframed("abcabc")
    framings = list(all_framings(C))
    assert len(framings) == 8
    assert len({F.to_word() for F in framings}) == 8
    assert all(F.is_framed for F in framings)


def test_spheric_sum_is_disjoint_union():
    A = parse_word("AbaB")
    B = parse_word("Aa")
    S = spheric_sum(A, B)
    assert S.n == 3
    GS = interlace_graph(S)
    assert len(GS.edges()) == 1


def test_plumbing_consumes_roots():
    A = parse_word("AbaB").with_root("a")
    B = parse_word("CdcD").with_root("c")
    P = plumbing(A, B)
    assert set(P.chords) == {"b", "d"}
    assert interlace_graph(P).edges() == [("b", "d")]


def test_komposition_adds_fresh_root():
    A = parse_word("AbaB").with_root("a")
    B = parse_word("CdcD").with_root("c")
    K = komposition(A, B)
    assert K.n == 3
    assert K.root is not None and K.root not in {"a", "b", "c", "d"}
    G = interlace_graph(K)
    assert G.degree(K.root) == 2


def test_smoothing_removes_chord():
    C = parse_unframed("abcabc")
    S = smoothing(C, "b")
    assert set(S.chords) == {"a", "c"}
    assert canonical_form(S) == "aabb"


def test_local_complement_diagram_matches_graph():
    C = parse_unframed("abcabc")
    D = local_complement_diagram(C, "a")
    G = interlace_graph(C).local_complement("a")
    assert are_isomorphic(interlace_graph(D), G)


def test_mutation_orbit_preserves_interlace():
    C = parse_unframed("abcabc")
    orbit = mutation_orbit(C, ["a", "b"])
    assert 1 <= len(orbit) <= 4
    for D in orbit:
        assert interlace_graph(D).adjacency_key() == interlace_graph(C).adjacency_key()


def test_random_diagram_shape():
    rng = random.Random(7)
    for n in (1, 4, 8):
        D = random_diagram(n, rng)
        assert D.n == n and D.is_framed
        U = random_diagram(n, rng, framed=False)
        assert U.n == n and not U.is_framed


def test_canonical_form_is_class_invariant():
    rng = random.Random(11)
    for _ in range(50):
        D = random_diagram(rng.randint(1, 6), rng)
        key = canonical_form(D, reversal=True, frame_swap=True)
        moved = D.rotate(rng.randrange(2 * D.n)).reverse().swap_frames()
        assert canonical_form(moved, reversal=True, frame_swap=True) == key
