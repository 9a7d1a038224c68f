"""Finite automata over group alphabets and rational subsets of free groups.

Transition labels are signed letters over the automaton's :class:`Alphabet`
or ``0`` for an ε-transition. Membership in the image of a regular language in
the free group is decided by Benois saturation: ε-edges are added across
every ``x`` / ``x^-1`` detour until nothing changes, after which a freely
reduced word lies in the image exactly when the saturated automaton accepts it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .words import Alphabet, Word, free_inverse, free_reduce

EPS = 0

Transition = tuple[str, int, str]


@dataclass(frozen=True)
class Nfa:
    alphabet: Alphabet
    states: tuple[str, ...]
    transitions: tuple[Transition, ...]
    initial: str
    finals: tuple[str, ...]

    def __post_init__(self) -> None:
        for name in ("states", "transitions", "finals"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        object.__setattr__(self, "transitions", tuple(tuple(t) for t in self.transitions))
        known = set(self.states)
        if len(known) != len(self.states):
            raise ValueError("duplicate state names")
        if self.initial not in known:
            raise ValueError(f"initial state {self.initial!r} is not declared")
        for q in self.finals:
            if q not in known:
                raise ValueError(f"final state {q!r} is not declared")
        if len(set(self.finals)) != len(self.finals):
            raise ValueError("duplicate final states")
        k = len(self.alphabet)
        for p, x, q in self.transitions:
            if p not in known or q not in known:
                raise ValueError(f"transition ({p}, {q}) uses an undeclared state")
            if not isinstance(x, int) or abs(x) > k:
                raise ValueError(f"transition label {x!r} is not a letter or ε")
        if len(set(self.transitions)) != len(self.transitions):
            raise ValueError("duplicate transitions")

    @property
    def index(self) -> dict[str, int]:
        return {q: i for i, q in enumerate(self.states)}

    def describe(self, t: int) -> str:
        p, x, q = self.transitions[t]
        label = "eps" if x == EPS else self.alphabet.name(x)
        return f"{p} -{label}-> {q}"

    def path_word(self, path: Sequence[int]) -> Word:
        return tuple(self.transitions[t][1] for t in path if self.transitions[t][1] != EPS)

    def is_accepting_path(self, path: Sequence[int]) -> bool:
        state = self.initial
        for t in path:
            if not 0 <= t < len(self.transitions):
                return False
            p, _, q = self.transitions[t]
            if p != state:
                return False
            state = q
        return state in self.finals

    def accepts(self, word: Sequence[int]) -> bool:
        """Literal acceptance of ``word`` as a string (no group reduction)."""
        return self.find_path(word) is not None

    def find_path(self, word: Sequence[int]) -> list[int] | None:
        """Shortest accepting path (transition indices) spelling ``word`` literally."""
        word = tuple(word)
        start = (self.initial, 0)
        parent: dict[tuple[str, int], tuple[tuple[str, int], int] | None] = {start: None}
        out: dict[str, list[int]] = {q: [] for q in self.states}
        for t, (p, _, _) in enumerate(self.transitions):
            out[p].append(t)
        finals = set(self.finals)
        queue = deque([start])
        while queue:
            node = queue.popleft()
            q, pos = node
            if pos == len(word) and q in finals:
                path = []
                while parent[node] is not None:
                    node, t = parent[node]
                    path.append(t)
                return path[::-1]
            for t in out[q]:
                _, x, r = self.transitions[t]
                if x == EPS:
                    nxt = (r, pos)
                elif pos < len(word) and word[pos] == x:
                    nxt = (r, pos + 1)
                else:
                    continue
                if nxt not in parent:
                    parent[nxt] = (node, t)
                    queue.append(nxt)
        return None


@dataclass(frozen=True)
class NormalizedNfa(Nfa):
    """An automaton with exactly one final state, distinct from the initial one."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if len(self.finals) != 1:
            raise ValueError("a normalized automaton has exactly one final state")
        if self.finals[0] == self.initial:
            raise ValueError("initial and final state must differ")

    @property
    def final(self) -> str:
        return self.finals[0]


def _fresh(names: Iterable[str], base: str) -> str:
    taken = set(names)
    if base not in taken:
        return base
    k = 1
    while f"{base}_{k}" in taken:
        k += 1
    return f"{base}_{k}"


def normalize(a: Nfa) -> NormalizedNfa:
    """Add a fresh sole final state reached by ε from every former final."""
    qf = _fresh(a.states, "qf")
    transitions = a.transitions + tuple((q, EPS, qf) for q in a.finals)
    return NormalizedNfa(a.alphabet, a.states + (qf,), transitions, a.initial, (qf,))


def prepend_word(a: Nfa, word: Sequence[int]) -> Nfa:
    """An automaton for ``word · L(a)``, reading ``word`` before ``a`` starts."""
    word = a.alphabet.check(word)
    names = list(a.states)
    chain = []
    for _ in range(len(word) + 1):
        q = _fresh(names, "pre")
        names.append(q)
        chain.append(q)
    extra = [(chain[i], word[i], chain[i + 1]) for i in range(len(word))]
    extra.append((chain[-1], EPS, a.initial))
    return Nfa(a.alphabet, tuple(names), a.transitions + tuple(extra), chain[0], a.finals)


@dataclass
class Saturation:
    """An automaton closed under Benois ε-shortcuts, with the reason for each.

    Edge ``i < len(nfa.transitions)`` is original transition ``i``. An added
    ε-edge ``p -> q`` records ``(e1, mid, e2)``: letter edge ``e1`` from ``p``,
    an ε-path ``mid``, and inverse-letter edge ``e2`` ending at ``q``.
    """

    nfa: Nfa
    edges: list[tuple[int, int, int]] = field(default_factory=list)
    reasons: list[tuple[int, tuple[int, ...], int] | None] = field(default_factory=list)
    rounds: int = 0
    _closure: list[dict[int, int | None]] = field(default_factory=list, repr=False)

    @property
    def added(self) -> int:
        return len(self.edges) - len(self.nfa.transitions)

    def _compute_closure(self) -> None:
        nq = len(self.nfa.states)
        eps_out: list[list[int]] = [[] for _ in range(nq)]
        for e, (p, x, _) in enumerate(self.edges):
            if x == EPS:
                eps_out[p].append(e)
        closure = []
        for s in range(nq):
            parent: dict[int, int | None] = {s: None}
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for e in eps_out[u]:
                    v = self.edges[e][2]
                    if v not in parent:
                        parent[v] = e
                        queue.append(v)
            closure.append(parent)
        self._closure = closure

    def eps_path(self, src: int, dst: int) -> tuple[int, ...]:
        parent = self._closure[src]
        path = []
        node = dst
        while parent[node] is not None:
            e = parent[node]
            path.append(e)
            node = self.edges[e][0]
        return tuple(reversed(path))

    def closure(self, states: Iterable[int]) -> set[int]:
        out: set[int] = set()
        for s in states:
            out.update(self._closure[s])
        return out

    def step(self, states: set[int], letter: int) -> set[int]:
        nxt = {q for (p, x, q) in self.edges if x == letter and p in states}
        return self.closure(nxt)

    def accepts(self, reduced: Sequence[int]) -> bool:
        idx = self.nfa.index
        cur = self.closure([idx[self.nfa.initial]])
        for x in reduced:
            cur = self.step(cur, x)
            if not cur:
                return False
        return any(idx[f] in cur for f in self.nfa.finals)

    def expand(self, e: int, memo: dict[int, tuple[int, ...]] | None = None) -> tuple[int, ...]:
        """Original transitions along a path realising edge ``e``."""
        memo = {} if memo is None else memo
        stack = [e]
        while stack:
            top = stack[-1]
            if top in memo:
                stack.pop()
                continue
            reason = self.reasons[top]
            if reason is None:
                memo[top] = (top,)
                stack.pop()
                continue
            e1, mid, e2 = reason
            parts = (e1, *mid, e2)
            pending = [p for p in parts if p not in memo]
            if pending:
                stack.extend(pending)
                continue
            memo[top] = tuple(t for p in parts for t in memo[p])
            stack.pop()
        return memo[e]


def saturate(a: Nfa) -> Saturation:
    idx = a.index
    sat = Saturation(a)
    for p, x, q in a.transitions:
        sat.edges.append((idx[p], x, idx[q]))
        sat.reasons.append(None)
    letter_out: list[dict[int, list[int]]] = [dict() for _ in a.states]
    letter_edges = []
    for e, (p, x, _) in enumerate(sat.edges):
        if x != EPS:
            letter_out[p].setdefault(x, []).append(e)
            letter_edges.append(e)
    while True:
        sat._compute_closure()
        new: dict[tuple[int, int], tuple[int, tuple[int, ...], int]] = {}
        for e1 in letter_edges:
            p1, x, r1 = sat.edges[e1]
            reach = sat._closure[p1]
            for r2 in sat._closure[r1]:
                for e2 in letter_out[r2].get(-x, ()):
                    q2 = sat.edges[e2][2]
                    if q2 in reach or (p1, q2) in new:
                        continue
                    new[(p1, q2)] = (e1, sat.eps_path(r1, r2), e2)
        if not new:
            return sat
        sat.rounds += 1
        for (p, q), reason in new.items():
            sat.edges.append((p, EPS, q))
            sat.reasons.append(reason)


def benois_member(a: Nfa, word: Sequence[int]) -> bool:
    """Whether ``word`` equals, in the free group, some word accepted by ``a``."""
    u = free_reduce(a.alphabet.check(word))
    return saturate(a).accepts(u)


def contains_identity(a: Nfa) -> bool:
    return benois_member(a, ())


def identity_witness_path(a: Nfa) -> list[int] | None:
    """An accepting path of ``a`` whose label freely reduces to the empty word.

    Returns transition indices, or ``None`` if the identity is not in the
    rational subset.
    """
    sat = saturate(a)
    idx = a.index
    start = idx[a.initial]
    reach = sat._closure[start]
    for f in a.finals:
        if idx[f] in reach:
            memo: dict[int, tuple[int, ...]] = {}
            path: list[int] = []
            for e in sat.eps_path(start, idx[f]):
                path.extend(sat.expand(e, memo))
            return path
    return None


def member_witness_path(a: Nfa, word: Sequence[int]) -> list[int] | None:
    """An accepting path of ``a`` whose label equals ``word`` in the free group."""
    u = free_reduce(a.alphabet.check(word))
    b = prepend_word(a, free_inverse(u))
    path = identity_witness_path(b)
    if path is None:
        return None
    return [t for t in path if t < len(a.transitions)]
