"""Labeled defining graphs of Artin groups."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .words import Alphabet


@dataclass(frozen=True)
class LabeledGraph:
    """A finite simplicial graph whose edges carry integer labels ``>= 2``.

    An edge labeled ``m`` between ``u`` and ``v`` stands for the Artin relation
    ``uvu... = vuv...`` with ``m`` letters on each side; a missing edge means no
    relation. Edges are stored by 0-based vertex index with ``i < j``.
    """

    vertices: Alphabet
    edges: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not isinstance(self.vertices, Alphabet):
            object.__setattr__(self, "vertices", Alphabet(tuple(self.vertices)))
        n = len(self.vertices)
        clean: dict[tuple[int, int], int] = {}
        for (i, j), m in dict(self.edges).items():
            if i == j:
                raise ValueError("loops are not allowed")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) references a missing vertex")
            if isinstance(m, bool) or not isinstance(m, int) or m < 2:
                raise ValueError(f"edge label {m!r} must be an integer >= 2")
            key = (min(i, j), max(i, j))
            if key in clean:
                raise ValueError("parallel edges are not allowed")
            clean[key] = m
        object.__setattr__(self, "edges", dict(sorted(clean.items())))

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str, int]]) -> LabeledGraph:
        alpha = Alphabet(tuple(vertices))
        idx = {v: i for i, v in enumerate(alpha.symbols)}
        table: dict[tuple[int, int], int] = {}
        for u, v, m in edges:
            if u not in idx or v not in idx:
                raise ValueError(f"edge ({u}, {v}) references a missing vertex")
            key = (min(idx[u], idx[v]), max(idx[u], idx[v]))
            if key in table:
                raise ValueError(f"parallel edge between {u} and {v}")
            table[key] = m
        return cls(alpha, table)

    def __hash__(self) -> int:
        return hash((self.vertices, tuple(self.edges.items())))

    def __len__(self) -> int:
        return len(self.vertices)

    def label(self, i: int, j: int) -> int | None:
        return self.edges.get((min(i, j), max(i, j)))

    def name(self, i: int) -> str:
        return self.vertices.symbols[i]

    @property
    def is_right_angled(self) -> bool:
        return all(m == 2 for m in self.edges.values())

    def commute_masks(self) -> tuple[int, ...]:
        """Bitmask of label-2 neighbours for each vertex (the RAAG commutation table)."""
        masks = [0] * len(self)
        for (i, j), m in self.edges.items():
            if m == 2:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
        return tuple(masks)

    def induced(self, subset: Iterable[int]) -> LabeledGraph:
        keep = sorted(set(subset))
        pos = {v: k for k, v in enumerate(keep)}
        edges = {
            (pos[i], pos[j]): m for (i, j), m in self.edges.items() if i in pos and j in pos
        }
        return LabeledGraph(Alphabet(tuple(self.name(v) for v in keep)), edges)

    def edge_list(self) -> list[tuple[str, str, int]]:
        return [(self.name(i), self.name(j), m) for (i, j), m in self.edges.items()]


def path_graph(names: Iterable[str], label: int = 2) -> LabeledGraph:
    names = tuple(names)
    return LabeledGraph(Alphabet(names), {(i, i + 1): label for i in range(len(names) - 1)})


P4 = path_graph(("a", "b", "c", "d"))
