"""Pure-Python versions of the hot word kernels.

Letters are nonzero signed integers: ``+k`` is generator ``k`` (1-based) and
``-k`` its inverse. The compiled module ``_speedups`` exports the same three
functions with identical semantics; ``artinkit.kernels`` picks one at import.
"""

from __future__ import annotations

from typing import Sequence


def free_reduce(letters: Sequence[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def raag_normal_form(letters: Sequence[int], commute: Sequence[int]) -> tuple[int, ...]:
    """Reduce a word in a right-angled Artin group and return its lex-least form.

    ``commute[i]`` is a bitmask of the 0-based vertices adjacent to vertex ``i``.
    Letters are ordered ``a < a^-1 < b < b^-1 < ...``.
    """
    # Cancellation: a new letter cancels against the last occurrence of its
    # generator provided everything after that occurrence commutes with it.
    out: list[int] = []
    for x in letters:
        g = abs(x) - 1
        mask = commute[g]
        j = len(out) - 1
        while j >= 0:
            y = out[j]
            h = abs(y) - 1
            if h == g:
                break
            if not (mask >> h) & 1:
                j = -1
                break
            j -= 1
        if j >= 0 and out[j] == -x:
            del out[j]
        else:
            out.append(x)

    # Lexicographic normal form: repeatedly emit the least letter that can be
    # commuted to the front of what remains.
    rest = out
    result: list[int] = []
    while rest:
        best = -1
        best_key = None
        blocked = 0
        for i, y in enumerate(rest):
            h = abs(y) - 1
            if not (blocked >> h) & 1:
                key = 2 * h + (y < 0)
                if best_key is None or key < best_key:
                    best, best_key = i, key
            # letters behind y must commute past it to reach the front
            blocked |= ~commute[h] | (1 << h)
            if blocked == -1:
                break
        result.append(rest.pop(best))
    return tuple(result)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[j] for j in q)


def _left_weight(a: list[int], b: list[int]) -> None:
    """Make the pair of simple braids ``(a, b)`` left-weighted, in place.

    Permutations are 0-based one-line tuples; ``a`` right-multiplied by the
    transposition ``s_i`` swaps positions ``i, i+1``, while ``s_i`` acting on
    the left of ``b`` swaps the values ``i, i+1``.
    """
    n = len(a)
    binv = [0] * n
    for pos, val in enumerate(b):
        binv[val] = pos
    moved = True
    while moved:
        moved = False
        for i in range(n - 1):
            if binv[i] > binv[i + 1] and a[i] < a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                pi, pj = binv[i], binv[i + 1]
                b[pi], b[pj] = i + 1, i
                binv[i], binv[i + 1] = pj, pi
                moved = True


def garside_extend(
    n: int,
    infimum: int,
    factors: Sequence[tuple[int, ...]],
    letters: Sequence[int],
) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Right-multiply a left normal form by a braid word.

    The input ``(infimum, factors)`` must already be a left normal form in
    ``B_n`` (``(0, ())`` is the identity). Letters are ``±i`` for ``σ_i``.
    """
    w0 = tuple(range(n - 1, -1, -1))
    ident = tuple(range(n))
    fs = [list(f) for f in factors]
    for x in letters:
        i = abs(x) - 1
        if x > 0:
            simple = list(ident)
            simple[i], simple[i + 1] = simple[i + 1], simple[i]
        else:
            # σ_i^-1 = Δ^-1 (Δ σ_i^-1); moving Δ^-1 left conjugates each factor
            infimum -= 1
            fs = [[n - 1 - f[n - 1 - j] for j in range(n)] for f in fs]
            simple = list(w0)
            simple[i], simple[i + 1] = simple[i + 1], simple[i]
        fs.append(simple)
        j = len(fs) - 2
        while j >= 0:
            before = fs[j][:]
            _left_weight(fs[j], fs[j + 1])
            if fs[j] == before:
                break
            j -= 1
        while fs and tuple(fs[0]) == w0:
            infimum += 1
            fs.pop(0)
        while fs and tuple(fs[-1]) == ident:
            fs.pop()
    return infimum, tuple(tuple(f) for f in fs)
