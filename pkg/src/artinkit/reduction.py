"""Compile rational-subset questions into fixed-target submonoid instances.

For an automaton over the generators of ``G`` with initial state ``q0`` and
single final state ``qf``, every state gets a word over a free group
``F = <x, y, z>``: ``q0 -> x``, ``qf -> y`` and the others
``z^i x z^-i``. Each transition ``p -σ-> q`` becomes ``p~ σ q~^-1`` in
``G * F``. The identity lies in the rational subset exactly when ``x y^-1``
lies in the submonoid generated by these elements.

The instance can then be pushed into ``A(P4)`` (free factors go to conjugates
of path vertices) and on into ``B4``, where the target becomes
``σ2² σ3² σ2^-2 σ3^-2``.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field, replace
from typing import Sequence

from .automata import EPS, Nfa, NormalizedNfa
from .braid import BraidGroup, droms_embed
from .graph import P4
from .raag import P4_GROUP, p4_star_embedding
from .words import (
    Alphabet,
    Factor,
    FreeProductElement,
    Word,
    fp_reduce,
    free_inverse,
    free_reduce,
    split_syllables,
)

FREE_NAMES = ("x", "y", "z")
DEFAULT_MAX_STATES = 1_000_000


class WitnessError(ValueError):
    """A claimed witness does not multiply out to the target."""


class SearchLimitExceeded(RuntimeError):
    """Bounded search would store more canonical forms than allowed."""


class Kind(str, enum.Enum):
    FIXED_TARGET = "fixed-target-submonoid"
    INTERSECTION = "semigroup-intersection"


def _trivial_canon(word: Word) -> Word:
    return ()


class FreeProductGroup:
    """``G * F3`` where ``G`` is trivial, free on its letters, or ``A(P4)``.

    Letters ``±1..±k`` are ``G``'s generators; ``±(k+1)..±(k+3)`` are ``x, y, z``.
    Elements are keyed by the concatenation of their normal-form syllables.
    """

    def __init__(self, group: str, rank: int):
        if group == "p4" and rank != 4:
            raise ValueError("A(P4) has exactly four generators")
        if group not in ("trivial", "free", "p4"):
            raise ValueError(f"unsupported group {group!r}")
        self.group = group
        self.rank = rank
        self.identity: Word = ()
        self.left = {"trivial": _trivial_canon, "free": free_reduce, "p4": P4_GROUP.normal_form}[group]

    def element(self, word: Sequence[int]) -> FreeProductElement:
        return fp_reduce(split_syllables(word, self.rank), self.left, free_reduce)

    def normal_form(self, word: Sequence[int]) -> Word:
        if self.group == "free":
            return free_reduce(word)
        if self.group == "trivial":
            return free_reduce([x for x in word if abs(x) > self.rank])
        return self.element(word).word()

    def multiply(self, nf: Word, word: Sequence[int]) -> Word:
        return self.normal_form(nf + tuple(word))

    def as_word(self, nf: Word) -> Word:
        return nf


@dataclass(frozen=True)
class Ambient:
    """Where an instance lives: ``G * F3`` ("product"), ``A(P4)`` or ``B4``."""

    tag: str
    alphabet: Alphabet | None = None
    group: str | None = None
    strands: int = 4

    def __post_init__(self) -> None:
        if self.tag == "product":
            if self.group not in ("trivial", "free", "p4") or self.alphabet is None:
                raise ValueError("product ambient needs a group and an alphabet")
            if self.alphabet.symbols[-3:] != FREE_NAMES:
                raise ValueError("product alphabet must end with x, y, z")
        elif self.tag == "p4":
            if self.alphabet is None:
                object.__setattr__(self, "alphabet", P4.vertices)
            if self.alphabet != P4.vertices:
                raise ValueError("A(P4) words use the alphabet a, b, c, d")
        elif self.tag == "b4":
            if self.strands != 4:
                raise ValueError("only B4 is supported")
        else:
            raise ValueError(f"unknown ambient tag {self.tag!r}")

    @property
    def rank(self) -> int:
        """Number of generators of ``G`` in a product ambient."""
        return len(self.alphabet) - 3

    def kernel(self):
        if self.tag == "product":
            return FreeProductGroup(self.group, self.rank)
        if self.tag == "p4":
            return P4_GROUP
        return BraidGroup(self.strands)

    def check(self, word: Sequence[int]) -> Word:
        if self.tag == "b4":
            return BraidGroup(self.strands).check(word)
        return self.alphabet.check(word)

    def describe(self) -> str:
        if self.tag == "product":
            g = {"trivial": "1", "free": f"F{self.rank}", "p4": "A(P4)"}[self.group]
            return f"{g} * F3"
        return {"p4": "A(P4)", "b4": "B4"}[self.tag]


def product_ambient(group: str, g_alphabet: Alphabet) -> Ambient:
    clash = set(g_alphabet.symbols) & set(FREE_NAMES)
    if clash:
        raise ValueError(f"generator names {sorted(clash)} collide with x, y, z")
    return Ambient("product", Alphabet(g_alphabet.symbols + FREE_NAMES), group)


P4_AMBIENT = Ambient("p4")
B4_AMBIENT = Ambient("b4")


@dataclass(frozen=True)
class ReductionInstance:
    ambient: Ambient
    generators: tuple[Word, ...]
    target: Word
    kind: Kind = Kind.FIXED_TARGET
    witness: tuple[int, ...] | None = None
    power: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.ambient.check(g) for g in self.generators))
        object.__setattr__(self, "target", self.ambient.check(self.target))
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.witness is not None:
            object.__setattr__(self, "witness", tuple(self.witness))
            self.verify_witness()

    def product(self, indices: Sequence[int]) -> Word:
        out: list[int] = []
        for i in indices:
            if not 0 <= i < len(self.generators):
                raise WitnessError(f"witness index {i} out of range")
            out.extend(self.generators[i])
        return tuple(out)

    def verify_witness(self) -> None:
        if self.kind is Kind.INTERSECTION and not self.witness:
            raise WitnessError("a semigroup witness needs at least one generator")
        if self.power < 1:
            raise WitnessError("power must be positive")
        g = self.ambient.kernel()
        target = self.target * (self.power if self.kind is Kind.INTERSECTION else 1)
        if g.normal_form(self.product(self.witness)) != g.normal_form(target):
            raise WitnessError("witness product differs from the target")


def _free_letters(rank: int) -> tuple[int, int, int]:
    return rank + 1, rank + 2, rank + 3


def state_encoding(a: NormalizedNfa) -> dict[str, Word]:
    """``q0 -> x``, final ``-> y``, other states ``-> z^i x z^-i`` in declaration order."""
    x, y, z = _free_letters(len(a.alphabet))
    enc: dict[str, Word] = {a.initial: (x,), a.final: (y,)}
    i = 0
    for q in a.states:
        if q in enc:
            continue
        i += 1
        enc[q] = (z,) * i + (x,) + (-z,) * i
    return enc


def _require_normalized(a: Nfa) -> NormalizedNfa:
    if isinstance(a, NormalizedNfa):
        return a
    raise TypeError("automaton must be normalized first (see automata.normalize)")


def build_delta(a: NormalizedNfa, group: str = "free") -> ReductionInstance:
    """One generator ``p~ σ q~^-1`` per transition, in transition order; target ``x y^-1``."""
    a = _require_normalized(a)
    ambient = product_ambient(group, a.alphabet)
    enc = state_encoding(a)
    gens = []
    for p, sigma, q in a.transitions:
        mid = () if sigma == EPS else (sigma,)
        gens.append(free_reduce(enc[p] + mid + free_inverse(enc[q])))
    x, y, _ = _free_letters(len(a.alphabet))
    return ReductionInstance(ambient, tuple(gens), (x, -y))


def extract_witness(a: NormalizedNfa, path: Sequence[int], group: str = "free") -> tuple[int, ...]:
    """Turn an accepting path with ``G``-trivial label into a witness for ``x y^-1``.

    The witness is the path's transition sequence; its product in ``G * F3``
    is checked to reduce to exactly ``x y^-1``.
    """
    a = _require_normalized(a)
    path = tuple(path)
    if not a.is_accepting_path(path):
        raise WitnessError("not an accepting path")
    inst = build_delta(a, group)
    g = inst.ambient.kernel()
    got = g.element(inst.product(path))
    want = FreeProductElement(((Factor.RIGHT, inst.target),))
    if got != want:
        raise WitnessError("path label is not trivial in G")
    return path


def compile_automaton(
    a: NormalizedNfa, group: str = "free", path: Sequence[int] | None = None
) -> ReductionInstance:
    inst = build_delta(a, group)
    if path is None:
        return inst
    return replace(inst, witness=extract_witness(a, path, group))


def _require(inst: ReductionInstance, tag: str) -> None:
    if inst.ambient.tag != tag:
        raise ValueError(f"expected an instance in {tag!r}, got {inst.ambient.describe()}")


def instantiate_in_p4(inst: ReductionInstance) -> ReductionInstance:
    """Rewrite an ``A(P4) * F3`` instance inside ``A(P4)``.

    ``x, y, z`` map to ``a c a^-1``, ``c`` and a conjugate of ``c`` two path
    steps to the left; ``g1..g4`` to a copy of ``P4`` further right. An
    instance over the trivial group is accepted too, its ``G`` letters mapping
    to the identity.
    """
    _require(inst, "product")
    if inst.ambient.group not in ("p4", "trivial"):
        raise ValueError("only A(P4) or trivial G can be instantiated in A(P4)")
    k = inst.ambient.rank
    emb = p4_star_embedding()
    if inst.ambient.group == "p4":
        images = [emb[f"g{i}"] for i in range(1, 5)]
    else:
        images = [()] * k
    images += [emb["x"], emb["y"], emb["z"]]

    def rewrite(w: Word) -> Word:
        out: list[int] = []
        for letter in w:
            img = images[abs(letter) - 1]
            out.extend(img if letter > 0 else free_inverse(img))
        return P4_GROUP.normal_form(out)

    return ReductionInstance(
        P4_AMBIENT,
        tuple(rewrite(g) for g in inst.generators),
        rewrite(inst.target),
        inst.kind,
        inst.witness,
        inst.power,
    )


def compile_to_b4(inst: ReductionInstance) -> ReductionInstance:
    """Push an ``A(P4)`` instance into ``B4`` through the Droms embedding."""
    _require(inst, "p4")
    return ReductionInstance(
        B4_AMBIENT,
        tuple(droms_embed(g).letters for g in inst.generators),
        droms_embed(inst.target).letters,
        inst.kind,
        inst.witness,
        inst.power,
    )


def make_intersection_instance(inst: ReductionInstance) -> ReductionInstance:
    """Same generators and target, asking whether ``Sgp(target)`` meets ``Sgp(Δ)``.

    For compiled instances the answer agrees with the submonoid question since
    ``x y^-1`` is not the identity. An empty witness is dropped.
    """
    if inst.kind is not Kind.FIXED_TARGET:
        raise ValueError("instance is already a semigroup-intersection instance")
    return replace(inst, kind=Kind.INTERSECTION, witness=inst.witness or None, power=1)


@dataclass(frozen=True)
class Found:
    witness: tuple[int, ...]
    power: int = 1

    @property
    def depth(self) -> int:
        return len(self.witness)


@dataclass(frozen=True)
class NotFoundWithin:
    depth: int


def max_states_from_env() -> int:
    raw = os.environ.get("ARTINKIT_MAX_STATES")
    if not raw:
        return DEFAULT_MAX_STATES
    value = int(raw)
    if value < 1:
        raise ValueError("ARTINKIT_MAX_STATES must be positive")
    return value


@dataclass
class _Layers:
    """Distinct products of exactly ``j`` generators for ``j <= half``."""

    group: object
    gens: tuple[Word, ...]
    half: int
    max_states: int
    layers: list[list] = field(default_factory=list)
    sets: list[set] = field(default_factory=list)
    inverses: list[list[Word]] = field(default_factory=list)

    def build(self) -> None:
        g = self.group
        cur = [g.identity]
        total = 1
        self.layers.append(cur)
        for _ in range(self.half):
            seen: dict = {}
            for e in cur:
                for w in self.gens:
                    nf = g.multiply(e, w)
                    if nf not in seen:
                        seen[nf] = None
                        total += 1
                        if total > self.max_states:
                            raise SearchLimitExceeded(
                                f"more than {self.max_states} canonical forms"
                            )
            cur = list(seen)
            self.layers.append(cur)
        self.sets = [set(layer) for layer in self.layers]
        self.inverses = [[free_inverse(g.as_word(e)) for e in layer] for layer in self.layers]

    def contains(self, nf, m: int, memo: dict) -> bool:
        """Is ``nf`` a product of exactly ``m`` generators?"""
        if m <= self.half:
            return nf in self.sets[m]
        key = (nf, m)
        if key not in memo:
            g = self.group
            top = self.sets[self.half]
            memo[key] = any(g.multiply(nf, q) in top for q in self.inverses[m - self.half])
        return memo[key]


def bounded_member(
    inst: ReductionInstance, depth: int = 8, max_states: int | None = None
) -> Found | NotFoundWithin:
    """Look for the target among products of at most ``depth`` generators.

    The answer matches a breadth-first search deduplicated by canonical form:
    the shortest witness, and among those the lexicographically least index
    sequence. Products of up to ``ceil(depth/2)`` generators are tabulated and
    longer products are split as ``P·Q``, testing ``target·Q^-1`` against the
    table. For the intersection kind the target may be any power
    ``target^M`` with ``1 <= M <= depth`` and the empty product is excluded.
    ``NotFoundWithin`` says nothing about longer products.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    max_states = max_states_from_env() if max_states is None else max_states
    g = inst.ambient.kernel()
    gens = inst.generators
    layers = _Layers(g, gens, (depth + 1) // 2, max_states)
    layers.build()
    memo: dict = {}
    inv_gens = [free_inverse(w) for w in gens]

    def witness_for(target_word: Word, length: int) -> tuple[int, ...]:
        rest = g.normal_form(target_word)
        chosen: list[int] = []
        for step in range(length):
            for i in range(len(gens)):
                remaining = g.multiply(g.normal_form(inv_gens[i]), g.as_word(rest))
                if layers.contains(remaining, length - step - 1, memo):
                    chosen.append(i)
                    rest = remaining
                    break
            else:  # pragma: no cover - contains() said a continuation exists
                raise AssertionError("lost the witness during reconstruction")
        return tuple(chosen)

    if inst.kind is Kind.FIXED_TARGET:
        targets = [(1, inst.target)]
        start = 0
    else:
        targets = [(m, inst.target * m) for m in range(1, depth + 1)]
        start = 1
    target_nfs = [(m, w, g.normal_form(w)) for m, w in targets]
    for length in range(start, depth + 1):
        best: Found | None = None
        for m, w, nf in target_nfs:
            if layers.contains(nf, length, memo):
                cand = Found(witness_for(w, length), m)
                if best is None or cand.witness < best.witness:
                    best = cand
        if best is not None:
            replace(inst, witness=best.witness, power=best.power)  # re-verifies
            return best
    return NotFoundWithin(depth)
