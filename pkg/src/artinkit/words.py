"""Words over generator alphabets, free reduction and free products.

A word is a tuple of nonzero signed integers: letter ``+k`` is the ``k``-th
generator of its alphabet (1-based) and ``-k`` is its formal inverse. The empty
tuple is the identity. Names only enter when parsing or printing, through an
:class:`Alphabet`.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import kernels

Word = tuple[int, ...]
Canonicalizer = Callable[[Word], Word]

_SPLIT = re.compile(r"[\s*·.,]+")


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if any(not isinstance(s, str) or not s for s in self.symbols):
            raise ValueError("generator names must be nonempty strings")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("generator names must be distinct")
        for s in self.symbols:
            if s == "eps" or "^" in s or _SPLIT.search(s):
                raise ValueError(f"reserved characters in generator name {s!r}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, name: object) -> bool:
        return name in self.symbols

    def letter(self, token: str) -> int:
        """Parse a single letter such as ``"a"`` or ``"a^-1"``."""
        name, sign = token, 1
        if token.endswith("^-1"):
            name, sign = token[:-3], -1
        elif token.endswith("^1"):
            name = token[:-2]
        try:
            return sign * (self.symbols.index(name) + 1)
        except ValueError:
            raise ValueError(f"unknown generator {name!r}") from None

    def name(self, letter: int) -> str:
        s = self.symbols[abs(letter) - 1]
        return s if letter > 0 else s + "^-1"

    def parse(self, text: str | Sequence[str]) -> Word:
        """Parse a word given as ``"a b a^-1"`` (or ``*``/``·`` separated) or a token list."""
        if isinstance(text, str):
            tokens = [t for t in _SPLIT.split(text.strip()) if t]
            if tokens in (["eps"], ["1"]):
                return ()
        else:
            tokens = list(text)
        return tuple(self.letter(t) for t in tokens)

    def tokens(self, word: Word) -> list[str]:
        return [self.name(x) for x in word]

    def format(self, word: Word) -> str:
        return " ".join(self.tokens(word)) if word else "eps"

    def check(self, word: Iterable[int]) -> Word:
        word = tuple(word)
        n = len(self.symbols)
        for x in word:
            if not isinstance(x, int) or x == 0 or abs(x) > n:
                raise ValueError(f"letter {x!r} is not valid over {n} generators")
        return word


def free_reduce(word: Sequence[int]) -> Word:
    """Cancel adjacent ``x x^-1`` pairs until none remain."""
    return kernels.free_reduce(word)


def free_inverse(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def power(word: Sequence[int], k: int) -> Word:
    if k < 0:
        return tuple(free_inverse(word)) * -k
    return tuple(word) * k


def commutator(u: Sequence[int], v: Sequence[int]) -> Word:
    """``u v u^-1 v^-1``."""
    return tuple(u) + tuple(v) + free_inverse(u) + free_inverse(v)


class Factor(enum.IntEnum):
    LEFT = 0
    RIGHT = 1


Syllable = tuple[Factor, Word]


@dataclass(frozen=True)
class FreeProductElement:
    """An element of ``G * H`` in syllable normal form.

    Adjacent syllables alternate between factors and none is trivial; words
    inside syllables are in their factor's canonical form.
    """

    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self) -> None:
        for i, (tag, w) in enumerate(self.syllables):
            if not w:
                raise ValueError("identity syllable in normal form")
            if i and self.syllables[i - 1][0] == tag:
                raise ValueError("adjacent syllables from the same factor")

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def word(self) -> Word:
        return tuple(x for _, w in self.syllables for x in w)

    def __len__(self) -> int:
        return len(self.syllables)


def fp_reduce(
    syllables: Iterable[tuple[Factor, Sequence[int]]],
    left: Canonicalizer,
    right: Canonicalizer,
) -> FreeProductElement:
    """Normal form of a product of syllables in ``G * H``.

    ``left`` and ``right`` map a word of the corresponding factor to its
    canonical form, which must be ``()`` exactly for the identity.
    """
    canon = (left, right)
    stack: list[Syllable] = []
    for tag, w in syllables:
        tag = Factor(tag)
        w = canon[tag](tuple(w))
        if not w:
            continue
        if stack and stack[-1][0] == tag:
            merged = canon[tag](stack[-1][1] + w)
            if merged:
                stack[-1] = (tag, merged)
            else:
                stack.pop()
        else:
            stack.append((tag, w))
    return FreeProductElement(tuple(stack))


def fp_multiply(
    u: FreeProductElement,
    v: FreeProductElement,
    left: Canonicalizer,
    right: Canonicalizer,
) -> FreeProductElement:
    return fp_reduce(u.syllables + v.syllables, left, right)


def fp_inverse(u: FreeProductElement) -> FreeProductElement:
    return FreeProductElement(tuple((tag, free_inverse(w)) for tag, w in reversed(u.syllables)))


def split_syllables(word: Sequence[int], left_rank: int) -> list[tuple[Factor, Word]]:
    """Cut a word over a combined alphabet into maximal single-factor runs.

    Letters ``±1..±left_rank`` belong to the left factor, all others to the
    right factor; letter values are kept as they are.
    """
    out: list[tuple[Factor, list[int]]] = []
    for x in word:
        tag = Factor.LEFT if abs(x) <= left_rank else Factor.RIGHT
        if out and out[-1][0] == tag:
            out[-1][1].append(x)
        else:
            out.append((tag, [x]))
    return [(tag, tuple(w)) for tag, w in out]
