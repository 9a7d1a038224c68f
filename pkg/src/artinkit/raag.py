"""Word problem in right-angled Artin groups and the A(P4) vertex catalog.

Canonical forms are computed in two passes: letters cancel against an inverse
reachable through commuting letters, then the reduced word is rewritten as the
lexicographically least word in its commutation class, with letters ordered
``a < a^-1 < b < b^-1 < ...`` by vertex order.
"""

from __future__ import annotations

from functools import lru_cache

from . import kernels
from .graph import P4, LabeledGraph
from .words import Word, commutator, free_inverse


class RaagGroup:
    """The right-angled Artin group of a graph, with cached commutation masks."""

    def __init__(self, graph: LabeledGraph):
        if not graph.is_right_angled:
            raise ValueError("graph has an edge label other than 2")
        self.graph = graph
        self.masks = graph.commute_masks()
        self.identity: Word = ()

    def check(self, word) -> Word:
        return self.graph.vertices.check(word)

    def normal_form(self, word) -> Word:
        return kernels.raag_normal_form(self.check(word), self.masks)

    def multiply(self, nf: Word, word) -> Word:
        return kernels.raag_normal_form(nf + self.check(word), self.masks)

    def as_word(self, nf: Word) -> Word:
        return nf

    def is_trivial(self, word) -> bool:
        return not self.normal_form(word)

    def equal(self, u, v) -> bool:
        return self.normal_form(u) == self.normal_form(v)

    def commutes(self, u, v) -> bool:
        return self.is_trivial(commutator(u, v))


@lru_cache(maxsize=64)
def raag_group(graph: LabeledGraph) -> RaagGroup:
    return RaagGroup(graph)


def raag_canonical_form(graph: LabeledGraph, word) -> Word:
    return raag_group(graph).normal_form(word)


def raag_is_trivial(graph: LabeledGraph, word) -> bool:
    return raag_group(graph).is_trivial(word)


def commutes(graph: LabeledGraph, u, v) -> bool:
    return raag_group(graph).commutes(u, v)


# A(P4) = <a, b, c, d | ab = ba, bc = cb, cd = dc>
A, B, C, D = 1, 2, 3, 4


def _alternating(first: int, second: int, length: int) -> Word:
    return tuple(first if k % 2 == 0 else second for k in range(length))


def p4_conjugate_vertex(n: int) -> Word:
    """The ``n``-th vertex of a bi-infinite path of conjugates in A(P4).

    ``x_0 = a c a^-1``, ``x_1 = b``, ``x_2 = c``, ``x_3 = d b d^-1``; consecutive
    entries commute and no others do. Further out the path continues by
    conjugating ``b`` or ``c`` with alternating words in ``d, a`` (to the
    right) or ``a, d`` (to the left).
    """
    if n >= 2:
        prefix = _alternating(D, A, n - 2)
        core = C if n % 2 == 0 else B
    else:
        m = 1 - n
        prefix = _alternating(A, D, m)
        core = B if m % 2 == 0 else C
    return prefix + (core,) + free_inverse(prefix)


def p4_star_embedding() -> dict[str, Word]:
    """Images of ``x, y, z, g1..g4`` realising ``A(P4) * F3`` inside ``A(P4)``.

    ``x, y, z`` go to path vertices 0, 2, -2 (pairwise non-adjacent, so they
    span a free group) and ``g1..g4`` to vertices 4..7, a copy of ``P4`` lying
    beyond ``d b d^-1``.
    """
    images = {
        "x": p4_conjugate_vertex(0),
        "y": p4_conjugate_vertex(2),
        "z": p4_conjugate_vertex(-2),
    }
    for i in range(1, 5):
        images[f"g{i}"] = p4_conjugate_vertex(3 + i)
    return images


P4_GROUP = RaagGroup(P4)
