from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinkit.words import (
    Alphabet,
    Factor,
    FreeProductElement,
    commutator,
    fp_inverse,
    fp_multiply,
    fp_reduce,
    free_inverse,
    free_reduce,
    power,
    split_syllables,
)
from oracles import naive_free_reduce

letters = st.integers(min_value=-3, max_value=3).filter(bool)
words = st.lists(letters, max_size=30).map(tuple)
AB = Alphabet(("a", "b", "c"))


def test_parse_and_format():
    assert AB.parse("a b^-1 c") == (1, -2, 3)
    assert AB.parse("a·b^-1*c") == (1, -2, 3)
    assert AB.parse(["a", "c^-1"]) == (1, -3)
    assert AB.parse("eps") == ()
    assert AB.format((1, -2)) == "a b^-1"
    assert AB.format(()) == "eps"


def test_alphabet_rejects_bad_names():
    with pytest.raises(ValueError):
        Alphabet(("a", "a"))
    with pytest.raises(ValueError):
        Alphabet(("a^2",))
    with pytest.raises(ValueError):
        AB.parse("q")
    with pytest.raises(ValueError):
        AB.check((4,))


def test_free_reduce_examples():
    assert free_reduce((1, 2, -2, -1)) == ()
    assert free_reduce((1, -2, 2, 3)) == (1, 3)
    assert free_reduce((1, 1, -1)) == (1,)
    assert free_reduce(()) == ()


def test_power_and_commutator():
    assert power((1, 2), 2) == (1, 2, 1, 2)
    assert power((1, 2), -1) == (-2, -1)
    assert commutator((1,), (2,)) == (1, 2, -1, -2)


@settings(max_examples=300)
@given(words)
def test_free_reduce_matches_naive_scan(w):
    assert free_reduce(w) == naive_free_reduce(w)


@settings(max_examples=300)
@given(words)
def test_free_reduce_idempotent_and_inverse(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert free_reduce(w + free_inverse(w)) == ()


def _fp(w):
    return fp_reduce(split_syllables(w, 1), free_reduce, free_reduce)


def test_fp_reduce_merges_and_drops():
    e = fp_reduce([(Factor.LEFT, (1,)), (Factor.RIGHT, (2, -2)), (Factor.LEFT, (-1,)), (Factor.RIGHT, (3,))],
                  free_reduce, free_reduce)
    assert e.syllables == ((Factor.RIGHT, (3,)),)
    with pytest.raises(ValueError):
        FreeProductElement(((Factor.LEFT, (1,)), (Factor.LEFT, (1,))))
    with pytest.raises(ValueError):
        FreeProductElement(((Factor.LEFT, ()),))


@settings(max_examples=300)
@given(words)
def test_fp_output_invariants(w):
    e = _fp(w)
    for i, (tag, s) in enumerate(e.syllables):
        assert s
        assert i == 0 or e.syllables[i - 1][0] != tag
    # G * H with both factors free is free on the union of letters
    assert e.word() == free_reduce(w)


@settings(max_examples=200)
@given(words, words, words)
def test_fp_multiply_associative_with_identity(u, v, w):
    U, V, W = _fp(u), _fp(v), _fp(w)
    mul = lambda p, q: fp_multiply(p, q, free_reduce, free_reduce)  # noqa: E731
    assert mul(mul(U, V), W) == mul(U, mul(V, W))
    one = FreeProductElement()
    assert mul(one, U) == U == mul(U, one)
    assert mul(U, fp_inverse(U)).is_identity
