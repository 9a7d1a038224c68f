"""Braid groups: Garside left normal form, permutation projection, and the
embedding of A(P4) into B4.

Braid words are tuples of signed integers, ``i`` for ``σ_i`` and ``-i`` for its
inverse. A left normal form is ``Δ^k A_1 ... A_r`` where each ``A_j`` is a
permutation braid other than ``1`` and ``Δ``, stored in 0-based one-line
notation, and every pair ``(A_j, A_{j+1})`` is left-weighted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .words import Word, commutator, free_inverse

Perm = tuple[int, ...]


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: Word = ()

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("braid groups need at least 2 strands")
        letters = tuple(self.letters)
        for x in letters:
            if not isinstance(x, int) or x == 0 or abs(x) >= self.n:
                raise ValueError(f"σ index {x!r} out of range for B_{self.n}")
        object.__setattr__(self, "letters", letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.n != self.n:
            raise ValueError("strand counts differ")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, free_inverse(self.letters))

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class GarsideNormalForm:
    n: int
    infimum: int
    factors: tuple[Perm, ...]

    @property
    def is_identity(self) -> bool:
        return self.infimum == 0 and not self.factors

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def supremum(self) -> int:
        return self.infimum + len(self.factors)

    def word(self) -> Word:
        """A braid word representing this normal form."""
        delta = permutation_braid_word(tuple(range(self.n - 1, -1, -1)))
        head = delta * self.infimum if self.infimum >= 0 else free_inverse(delta) * -self.infimum
        return head + tuple(x for f in self.factors for x in permutation_braid_word(f))


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{1..n}`` given by its images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("not a permutation of 1..n")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other``: apply ``other`` first."""
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    @property
    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            k = self(start)
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) if cyc else "()"


def permutation_braid_word(perm: Perm) -> Word:
    """A positive reduced word for the permutation braid of ``perm`` (0-based)."""
    p = list(perm)
    out: list[int] = []
    while True:
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                out.append(i + 1)
                break
        else:
            break
    return tuple(reversed(out))


def _letters(w: BraidWord | tuple[int, Sequence[int]]) -> tuple[int, Word]:
    if isinstance(w, BraidWord):
        return w.n, w.letters
    n, letters = w
    b = BraidWord(n, tuple(letters))
    return b.n, b.letters


def garside_normal_form(w: BraidWord) -> GarsideNormalForm:
    n, letters = _letters(w)
    inf, factors = kernels.garside_extend(n, 0, (), letters)
    return GarsideNormalForm(n, inf, factors)


def braid_is_trivial(w: BraidWord) -> bool:
    return garside_normal_form(w).is_identity


def braid_equal(u: BraidWord, v: BraidWord) -> bool:
    return garside_normal_form(u) == garside_normal_form(v)


def permutation_of(w: BraidWord) -> Permutation:
    """Image of ``w`` in ``S_n`` under ``σ_i ↦ (i, i+1)``."""
    n, letters = _letters(w)
    images = list(range(1, n + 1))
    # right-multiplying by a transposition swaps positions i, i+1
    for x in letters:
        i = abs(x) - 1
        images[i], images[i + 1] = images[i + 1], images[i]
    return Permutation(tuple(images))


def is_pure(w: BraidWord) -> bool:
    return permutation_of(w).is_identity


class BraidGroup:
    """``B_n`` as a kernel for search: elements are keyed by their normal form."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("braid groups need at least 2 strands")
        self.n = n
        self.identity = (0, ())

    def check(self, word) -> Word:
        return BraidWord(self.n, tuple(word)).letters

    def normal_form(self, word) -> tuple[int, tuple[Perm, ...]]:
        return kernels.garside_extend(self.n, 0, (), self.check(word))

    def multiply(self, nf, word):
        return kernels.garside_extend(self.n, nf[0], nf[1], self.check(word))

    def as_word(self, nf) -> Word:
        return GarsideNormalForm(self.n, nf[0], nf[1]).word()

    def is_trivial(self, word) -> bool:
        return self.normal_form(word) == self.identity


DROMS_IMAGES: dict[str, Word] = {
    "a": (2, 2),
    "b": (2, 3, 2, 2, 3, 2),
    "c": (3, 3),
    "d": (1, 1),
}


def droms_embed(word: Sequence[int]) -> BraidWord:
    """Image in ``B4`` of a word over ``a, b, c, d`` (letters ``±1..±4``).

    ``a ↦ σ2²``, ``b ↦ (σ2 σ3 σ2)²``, ``c ↦ σ3²``, ``d ↦ σ1²``; the four
    images generate a copy of A(P4).
    """
    blocks = [DROMS_IMAGES[k] for k in "abcd"]
    out: list[int] = []
    for x in word:
        if not isinstance(x, int) or x == 0 or abs(x) > 4:
            raise ValueError(f"letter {x!r} is not a P4 vertex")
        block = blocks[abs(x) - 1]
        out.extend(block if x > 0 else free_inverse(block))
    return BraidWord(4, tuple(out))


def gamma0() -> BraidWord:
    """``σ2² σ3² σ2^-2 σ3^-2``, the image of ``a c a^-1 c^-1``."""
    return BraidWord(4, (2, 2, 3, 3, -2, -2, -3, -3))


def droms_commutation_table() -> dict[tuple[str, str], bool]:
    """Whether each pair of Droms generators commutes in ``B4``."""
    names = "abcd"
    out = {}
    for i, u in enumerate(names):
        for v in names[i + 1:]:
            w = commutator(DROMS_IMAGES[u], DROMS_IMAGES[v])
            out[(u, v)] = braid_is_trivial(BraidWord(4, w))
    return out
