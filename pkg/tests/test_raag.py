from __future__ import annotations

import random

import pytest

from artinkit.graph import P4, LabeledGraph, path_graph
from artinkit.raag import (
    RaagGroup,
    commutes,
    p4_conjugate_vertex,
    p4_star_embedding,
    raag_canonical_form,
    raag_is_trivial,
)
from artinkit.words import Alphabet, free_inverse
from oracles import raag_trivial_words, zero_exponent_words

P4_ADJ = {(1, 2), (2, 3), (3, 4)}


def random_graph(rng, n):
    edges = {(i, j): 2 for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5}
    return LabeledGraph(Alphabet(tuple("abcde"[:n])), edges)


def random_word(rng, n, length):
    return tuple(rng.choice([1, -1]) * rng.randrange(1, n + 1) for _ in range(length))


def test_examples():
    assert raag_canonical_form(P4, (2, 1)) == (1, 2)
    assert raag_canonical_form(P4, (3, 1)) == (3, 1)
    assert raag_is_trivial(P4, (1, 2, -1, -2))
    assert not raag_is_trivial(P4, (1, 3, -1, -3))
    assert raag_canonical_form(P4, (1, 2, -1)) == (2,)


def test_rejects_non_right_angled():
    with pytest.raises(ValueError):
        RaagGroup(path_graph("ab", label=3))


def test_relation_invariance_random():
    rng = random.Random(10)
    for _ in range(1000):
        n = rng.randrange(1, 6)
        g = random_graph(rng, n)
        w = random_word(rng, n, rng.randrange(16))
        nf = raag_canonical_form(g, w)
        assert raag_canonical_form(g, nf) == nf
        # insert v v^-1
        pos = rng.randrange(len(w) + 1)
        v = random_word(rng, n, 1)[0]
        assert raag_canonical_form(g, w[:pos] + (v, -v) + w[pos:]) == nf
        # swap adjacent commuting letters
        masks = g.commute_masks()
        swaps = [i for i in range(len(w) - 1) if masks[abs(w[i]) - 1] >> (abs(w[i + 1]) - 1) & 1]
        if swaps:
            i = rng.choice(swaps)
            assert raag_canonical_form(g, w[:i] + (w[i + 1], w[i]) + w[i + 2:]) == nf


def test_single_letter_commutation_matches_edges():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randrange(2, 6)
        g = random_graph(rng, n)
        for i in range(n):
            for j in range(n):
                expect = i == j or g.label(i, j) == 2
                assert commutes(g, (i + 1,), (j + 1,)) == expect


def test_trivial_words_exhaustive_to_length_8():
    oracle = raag_trivial_words(4, P4_ADJ, 8)
    for length in range(0, 9, 2):
        for w in zero_exponent_words(4, length):
            assert raag_is_trivial(P4, w) == (w in oracle), w
    # a nonzero exponent sum survives abelianisation, so those words are nontrivial
    rng = random.Random(12)
    for _ in range(2000):
        w = random_word(rng, 4, rng.randrange(1, 9))
        sums = [sum(1 if x > 0 else -1 for x in w if abs(x) == v) for v in range(1, 5)]
        if any(sums):
            assert not raag_is_trivial(P4, w)


def test_catalog_small_values():
    assert p4_conjugate_vertex(0) == (1, 3, -1)
    assert p4_conjugate_vertex(1) == (2,)
    assert p4_conjugate_vertex(2) == (3,)
    assert p4_conjugate_vertex(3) == (4, 2, -4)
    assert p4_conjugate_vertex(-1) == (1, 4, 2, -4, -1)


def test_catalog_path_property():
    for m in range(-4, 10):
        for n in range(m + 1, 10):
            assert commutes(P4, p4_conjugate_vertex(m), p4_conjugate_vertex(n)) == (n - m == 1)


def test_catalog_entries_nontrivial_and_distinct():
    forms = {raag_canonical_form(P4, p4_conjugate_vertex(k)) for k in range(-4, 10)}
    assert len(forms) == 14 and () not in forms


def test_star_embedding_pattern():
    emb = p4_star_embedding()
    gs = [emb[f"g{i}"] for i in range(1, 5)]
    for i in range(4):
        for j in range(i + 1, 4):
            assert commutes(P4, gs[i], gs[j]) == (j == i + 1)
    for u in ("x", "y", "z"):
        for v in list(emb):
            if u != v:
                assert not commutes(P4, emb[u], emb[v])
    # x y^-1 lands on a c a^-1 c^-1
    assert raag_canonical_form(P4, emb["x"] + free_inverse(emb["y"])) == raag_canonical_form(P4, (1, 3, -1, -3))
