"""Face traversal, genus, bicolourings, and the intersection form."""

from __future__ import annotations

import random

import pytest

from filoops.chords import all_framings, interlace_graph, parse_word, random_diagram
from filoops.errors import FramingError, NotBicolourable
from filoops.forms import gf2_rank
from filoops.ribbon import (
    boundary_components,
    bicolouring_to_framing,
    face_count,
    framing_to_bicolouring,
    genus,
    intersection_form,
    is_bicolourable,
    ribbon_faces,
)


def test_known_face_counts_and_genus():
    for word, f, g in (("Aa", 3, 0), ("AbaB", 2, 1), ("AbCaBc", 5, 0), ("aAbB", 4, 0)):
        C = parse_word(word)
        assert face_count(C) == f
        assert genus(C) == g


def test_empty_diagram_has_two_faces():
    from filoops.chords import ChordDiagram

    empty = ChordDiagram((), (), None)
    assert face_count(empty) == 2
    assert genus(empty) == 0


def test_face_count_requires_framing():
    from filoops.chords import parse_unframed

    with pytest.raises(FramingError):
        face_count(parse_unframed("abab"))


def test_two_face_computations_agree():
    rng = random.Random(5)
    for _ in range(200):
        C = random_diagram(rng.randint(1, 7), rng)
        assert len(ribbon_faces(C)) == len(boundary_components(C))


def test_genus_invariant_under_symmetries():
    rng = random.Random(9)
    for _ in range(100):
        C = random_diagram(rng.randint(1, 6), rng)
        g = genus(C)
        assert genus(C.rotate(3)) == g
        assert genus(C.reverse()) == g
        assert genus(C.swap_frames()) == g


def test_intersection_form_rank_is_twice_genus_when_bicolourable():
    rng = random.Random(13)
    checked = 0
    for _ in range(300):
        C = random_diagram(rng.randint(1, 6), rng)
        if not is_bicolourable(C):
            continue
        labels, rows = intersection_form(C)
        assert gf2_rank(rows) == 2 * genus(C)
        checked += 1
    assert checked > 20


def test_bicolouring_round_trip():
    rng = random.Random(17)
    done = 0
    for _ in range(300):
        C = random_diagram(rng.randint(1, 6), rng)
        if not is_bicolourable(C):
            continue
        chi, other = framing_to_bicolouring(C)
        first, second = bicolouring_to_framing(C.unframed(), chi)
        assert C.to_word() in (first.to_word(), second.to_word())
        assert first.swap_frames() == second
        done += 1
    assert done > 20


def test_not_bicolourable_raises():
    C = parse_word("AbaB")
    assert not is_bicolourable(C)
    assert not is_bicolourable(interlace_graph(C))
    with pytest.raises(NotBicolourable):
        framing_to_bicolouring(C)


def test_all_framings_of_a_chord_have_genus_zero():
    for F in all_framings(parse_word("Aa").unframed()):
        assert genus(F) == 0
