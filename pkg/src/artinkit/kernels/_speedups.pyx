# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the word kernels in ``_pure``; same contracts."""

from libc.stdlib cimport malloc, free, abs as cabs
from libc.string cimport memcpy, memcmp

DEF MAXN = 32


def free_reduce(letters):
    cdef Py_ssize_t n = len(letters)
    if n == 0:
        return ()
    cdef long *stack = <long *> malloc(n * sizeof(long))
    cdef Py_ssize_t top = 0, i
    cdef long x
    try:
        for item in letters:
            x = item
            if top and stack[top - 1] == -x:
                top -= 1
            else:
                stack[top] = x
                top += 1
        return tuple([stack[i] for i in range(top)])
    finally:
        free(stack)


def raag_normal_form(letters, commute):
    cdef Py_ssize_t n = len(letters)
    cdef Py_ssize_t nv = len(commute)
    if n == 0:
        return ()
    if nv > 62:
        raise ValueError("compiled RAAG kernel supports at most 62 vertices")
    cdef long long *masks = <long long *> malloc(nv * sizeof(long long))
    cdef long *out = <long *> malloc(n * sizeof(long))
    cdef long *res = <long *> malloc(n * sizeof(long))
    cdef Py_ssize_t m = 0, i, j, k, best, r
    cdef long x, y, g, h, key, best_key
    cdef long long mask, blocked, full
    try:
        for i in range(nv):
            masks[i] = commute[i]
        full = (1LL << nv) - 1 if nv < 63 else -1
        for item in letters:
            x = item
            g = cabs(x) - 1
            if g < 0 or g >= nv:
                raise ValueError("letter out of range")
            mask = masks[g]
            j = m - 1
            while j >= 0:
                h = cabs(out[j]) - 1
                if h == g:
                    break
                if not ((mask >> h) & 1):
                    j = -1
                    break
                j -= 1
            if j >= 0 and out[j] == -x:
                for k in range(j, m - 1):
                    out[k] = out[k + 1]
                m -= 1
            else:
                out[m] = x
                m += 1
        r = 0
        while m > 0:
            best = -1
            best_key = 0
            blocked = 0
            for i in range(m):
                y = out[i]
                h = cabs(y) - 1
                if not ((blocked >> h) & 1):
                    key = 2 * h + (1 if y < 0 else 0)
                    if best < 0 or key < best_key:
                        best = i
                        best_key = key
                blocked |= (~masks[h] | (1LL << h)) & full
                if blocked == full:
                    break
            res[r] = out[best]
            r += 1
            for k in range(best, m - 1):
                out[k] = out[k + 1]
            m -= 1
        return tuple([res[i] for i in range(r)])
    finally:
        free(masks)
        free(out)
        free(res)


cdef void _left_weight(int *a, int *b, int n) nogil:
    cdef int binv[MAXN]
    cdef int i, pi, pj, t
    cdef bint moved = True
    for i in range(n):
        binv[b[i]] = i
    while moved:
        moved = False
        for i in range(n - 1):
            if binv[i] > binv[i + 1] and a[i] < a[i + 1]:
                t = a[i]
                a[i] = a[i + 1]
                a[i + 1] = t
                pi = binv[i]
                pj = binv[i + 1]
                b[pi] = i + 1
                b[pj] = i
                binv[i] = pj
                binv[i + 1] = pi
                moved = True


def garside_extend(int n, long infimum, factors, letters):
    if n < 2 or n > MAXN:
        raise ValueError("strand count out of range for compiled kernel")
    cdef Py_ssize_t cap = len(factors) + len(letters) + 1
    cdef int *fs = <int *> malloc(cap * n * sizeof(int))
    cdef int before[MAXN]
    cdef int tmp[MAXN]
    cdef Py_ssize_t r = 0, j, k, start
    cdef int i, q
    cdef long x
    cdef bint is_w0, is_id
    try:
        for f in factors:
            for q in range(n):
                fs[r * n + q] = f[q]
            r += 1
        for item in letters:
            x = item
            i = cabs(x) - 1
            if i < 0 or i >= n - 1:
                raise ValueError("braid letter out of range")
            if x > 0:
                for q in range(n):
                    fs[r * n + q] = q
                fs[r * n + i] = i + 1
                fs[r * n + i + 1] = i
            else:
                infimum -= 1
                for k in range(r):
                    for q in range(n):
                        tmp[q] = n - 1 - fs[k * n + n - 1 - q]
                    memcpy(&fs[k * n], tmp, n * sizeof(int))
                for q in range(n):
                    fs[r * n + q] = n - 1 - q
                fs[r * n + i] = n - 2 - i
                fs[r * n + i + 1] = n - 1 - i
            r += 1
            j = r - 2
            while j >= 0:
                memcpy(before, &fs[j * n], n * sizeof(int))
                _left_weight(&fs[j * n], &fs[(j + 1) * n], n)
                if memcmp(before, &fs[j * n], n * sizeof(int)) == 0:
                    break
                j -= 1
            start = 0
            while start < r:
                is_w0 = True
                for q in range(n):
                    if fs[start * n + q] != n - 1 - q:
                        is_w0 = False
                        break
                if not is_w0:
                    break
                infimum += 1
                start += 1
            if start:
                for k in range(start, r):
                    memcpy(&fs[(k - start) * n], &fs[k * n], n * sizeof(int))
                r -= start
            while r > 0:
                is_id = True
                for q in range(n):
                    if fs[(r - 1) * n + q] != q:
                        is_id = False
                        break
                if not is_id:
                    break
                r -= 1
        return infimum, tuple([tuple([fs[k * n + q] for q in range(n)]) for k in range(r)])
    finally:
        free(fs)
