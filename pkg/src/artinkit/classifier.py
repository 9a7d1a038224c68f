"""Decidability verdicts for membership problems in Artin groups.

A defining graph is "clean" when it has none of the forbidden induced
subgraphs below; exactly then are submonoid membership, rational subset
membership, fixed-target submonoid membership and subsemigroup intersection
decidable. Squares additionally make the identity, group and subgroup
membership problems undecidable; for the other patterns those three remain
open.

Patterns, all induced:

* ``Square-plain``: a 4-cycle of label-2 edges, no diagonals;
* ``Square-one-diagonal``: the same with one diagonal labeled ``p > 2``;
* ``Square-two-diagonals``: both diagonals present, labeled ``p, q > 2``;
* ``Triangle``: three edges with at most one label equal to 2 (labels sorted);
* ``Path4-all-2``: an induced path on four vertices, all labels 2;
* ``Path3``: an induced path on three vertices, at most one label equal to 2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations

from .graph import LabeledGraph
from .words import Alphabet


class Pattern(str, enum.Enum):
    SQUARE_PLAIN = "Square-plain"
    SQUARE_ONE_DIAGONAL = "Square-one-diagonal"
    SQUARE_TWO_DIAGONALS = "Square-two-diagonals"
    TRIANGLE = "Triangle"
    PATH4 = "Path4-all-2"
    PATH3 = "Path3"

    @property
    def is_square(self) -> bool:
        return self.value.startswith("Square")


class Status(str, enum.Enum):
    DECIDABLE = "decidable"
    UNDECIDABLE = "undecidable"
    OPEN = "open"


class Problem(str, enum.Enum):
    SUBMONOID = "submonoid membership"
    RATIONAL = "rational subset membership"
    FIXED_TARGET = "fixed-target submonoid membership"
    INTERSECTION = "semigroup intersection"
    IDENTITY = "identity problem"
    GROUP = "group problem"
    SUBGROUP = "subgroup membership"


MEMBERSHIP_PROBLEMS = (Problem.SUBMONOID, Problem.RATIONAL, Problem.FIXED_TARGET, Problem.INTERSECTION)
SUBGROUP_PROBLEMS = (Problem.IDENTITY, Problem.GROUP, Problem.SUBGROUP)


@dataclass(frozen=True)
class ForbiddenWitness:
    pattern: Pattern
    vertices: tuple[int, ...]
    labels: tuple[int, ...]

    def names(self, graph: LabeledGraph) -> tuple[str, ...]:
        return tuple(graph.name(v) for v in self.vertices)

    def describe(self, graph: LabeledGraph | None = None) -> str:
        labels = ",".join(map(str, self.labels))
        head = f"{self.pattern.value}({labels})" if labels else self.pattern.value
        if graph is None:
            return head
        return f"{head} on {' '.join(self.names(graph))}"


def _square(g: LabeledGraph, quad: tuple[int, ...]) -> ForbiddenWitness | None:
    a, b, c, d = quad
    # the three ways to split four vertices into a pair of diagonals
    for cycle in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
        sides = [g.label(cycle[k], cycle[(k + 1) % 4]) for k in range(4)]
        if sides != [2, 2, 2, 2]:
            continue
        diags = [g.label(cycle[0], cycle[2]), g.label(cycle[1], cycle[3])]
        if any(m == 2 for m in diags):
            return None
        present = sorted(m for m in diags if m is not None)
        pattern = (Pattern.SQUARE_PLAIN, Pattern.SQUARE_ONE_DIAGONAL, Pattern.SQUARE_TWO_DIAGONALS)[len(present)]
        return ForbiddenWitness(pattern, _rotate_cycle(cycle), tuple(present))
    return None


def _rotate_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    k = cycle.index(min(cycle))
    rot = cycle[k:] + cycle[:k]
    if rot[3] < rot[1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def _orient_path(path: tuple[int, ...]) -> tuple[int, ...]:
    return path if path[0] < path[-1] else tuple(reversed(path))


def _path4(g: LabeledGraph, quad: tuple[int, ...]) -> ForbiddenWitness | None:
    pairs = list(combinations(quad, 2))
    edges = [(u, v) for u, v in pairs if g.label(u, v) is not None]
    if len(edges) != 3 or any(g.label(u, v) != 2 for u, v in edges):
        return None
    deg = {v: 0 for v in quad}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    if sorted(deg.values()) != [1, 1, 2, 2]:
        return None
    # three edges with degrees 1,1,2,2 on four vertices form a path
    start = min(v for v in quad if deg[v] == 1)
    path = [start]
    while len(path) < 4:
        nxt = next(
            w for w in quad if w not in path and g.label(path[-1], w) is not None
        )
        path.append(nxt)
    return ForbiddenWitness(Pattern.PATH4, _orient_path(tuple(path)), (2, 2, 2))


def _triple(g: LabeledGraph, tri: tuple[int, ...]) -> ForbiddenWitness | None:
    a, b, c = tri
    labels = {(a, b): g.label(a, b), (a, c): g.label(a, c), (b, c): g.label(b, c)}
    present = [k for k, m in labels.items() if m is not None]
    if len(present) == 3:
        ms = tuple(sorted(labels.values()))
        if ms[1] > 2:
            return ForbiddenWitness(Pattern.TRIANGLE, tri, ms)
        return None
    if len(present) == 2:
        (missing,) = [k for k, m in labels.items() if m is None]
        middle = next(v for v in tri if v not in missing)
        path = _orient_path((missing[0], middle, missing[1]))
        ms = (g.label(path[0], path[1]), g.label(path[1], path[2]))
        if sum(m == 2 for m in ms) <= 1:
            return ForbiddenWitness(Pattern.PATH3, path, ms)
    return None


def find_forbidden(g: LabeledGraph) -> list[ForbiddenWitness]:
    """Every realisation of a forbidden pattern, ordered by vertex tuple."""
    found = []
    n = len(g)
    for tri in combinations(range(n), 3):
        w = _triple(g, tri)
        if w is not None:
            found.append(w)
    for quad in combinations(range(n), 4):
        for check in (_square, _path4):
            w = check(g, quad)
            if w is not None:
                found.append(w)
    found.sort(key=lambda w: (w.vertices, list(Pattern).index(w.pattern)))
    return found


@dataclass(frozen=True)
class TorusKnot:
    p: int
    q: int

    def __str__(self) -> str:
        return f"<x, y | x^{self.p} = y^{self.q}> (torus knot group T({self.p},{self.q}))"


@dataclass(frozen=True)
class BaumslagSolitar:
    m: int
    n: int

    def __str__(self) -> str:
        return f"BS({self.m},{self.n})"


def dihedral_structure(m: int) -> TorusKnot | BaumslagSolitar:
    """The rank-two Artin group with edge label ``m``, up to isomorphism.

    Odd ``m = 2k+1`` gives ``<x, y | x^2 = y^(2k+1)>``; even ``m = 2k`` gives
    ``BS(k, k)``.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 2:
        raise ValueError("edge labels are integers >= 2")
    k, r = divmod(m, 2)
    return TorusKnot(2, m) if r else BaumslagSolitar(k, k)


@dataclass(frozen=True)
class Verdict:
    statuses: dict[Problem, Status]
    witness: ForbiddenWitness | None = None
    witnesses: tuple[ForbiddenWitness, ...] = ()
    justification: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        member = {self.statuses[p] for p in MEMBERSHIP_PROBLEMS}
        if len(member) != 1:
            raise ValueError("the four membership statuses must agree")
        undecidable = any(s is Status.UNDECIDABLE for s in self.statuses.values())
        if undecidable != (self.witness is not None):
            raise ValueError("a witness accompanies exactly the undecidable verdicts")

    @property
    def decidable(self) -> bool:
        return self.statuses[Problem.SUBMONOID] is Status.DECIDABLE

    def by_status(self, status: Status) -> list[Problem]:
        return [p for p in Problem if self.statuses[p] is status]


def _structure_notes(g: LabeledGraph) -> list[str]:
    n = len(g)
    if n == 0:
        return ["trivial group"]
    if n == 1:
        return ["A(Γ) ≅ Z"]
    if n == 2:
        m = g.label(0, 1)
        if m is None:
            return ["A(Γ) ≅ F2 (free product Z * Z)"]
        return [f"dihedral Artin group with label {m}: A(Γ) ≅ {dihedral_structure(m)}"]
    return []


def classify(g: LabeledGraph) -> Verdict:
    witnesses = find_forbidden(g)
    squares = [w for w in witnesses if w.pattern.is_square]
    if not witnesses:
        statuses = {p: Status.DECIDABLE for p in Problem}
        notes = [
            "no forbidden induced subgraph: A(Γ) is subgroup separable and lies in A(S), "
            "the class built from rank <= 2 Artin groups by free products and direct "
            "products with Z, so rational subset membership is decidable",
        ]
        notes += _structure_notes(g)
        return Verdict(statuses, None, (), tuple(notes))
    if squares:
        statuses = {p: Status.UNDECIDABLE for p in Problem}
        lead = squares[0]
        notes = [
            f"{lead.describe(g)}: A(Γ) contains A(C4) ≅ F2 x F2, which has a fixed "
            "finitely generated subgroup with undecidable membership and undecidable "
            "identity problem",
        ]
    else:
        statuses = {p: Status.UNDECIDABLE for p in MEMBERSHIP_PROBLEMS}
        statuses.update({p: Status.OPEN for p in SUBGROUP_PROBLEMS})
        lead = witnesses[0]
        notes = [
            f"{lead.describe(g)}: A(Γ) contains A(P4), so the four membership "
            "problems are undecidable; identity, group and subgroup membership "
            "are not settled by this pattern",
        ]
    return Verdict(statuses, lead, tuple(witnesses), tuple(notes))


def braid_graph(n: int) -> LabeledGraph:
    """Defining graph of ``B_n``: ``σ_1..σ_(n-1)``, label 3 between neighbours, 2 otherwise."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise ValueError("braid groups need n >= 2")
    names = tuple(f"s{i}" for i in range(1, n))
    edges = {}
    for i, j in combinations(range(n - 1), 2):
        edges[(i, j)] = 3 if j == i + 1 else 2
    return LabeledGraph(Alphabet(names), edges)


def classify_braid_group(n: int) -> Verdict:
    """Verdict for ``B_n``; the pure braid group ``PB_n`` gets the same answers."""
    v = classify(braid_graph(n))
    note = (
        f"the same statuses hold for the pure braid group PB_{n}"
        + (" (the witness braid σ2²σ3²σ2^-2σ3^-2 is pure)" if n == 4 else "")
    )
    return Verdict(v.statuses, v.witness, v.witnesses, v.justification + (note,))
