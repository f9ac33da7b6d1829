"""
Hot loops: the constrained-composition walk and orbit canonicalization.

Each kernel exists twice, a numba version (``*_jit``) and a numpy version
(``*_numpy``). The public names dispatch on ``_jit.BACKEND``; the benchmark
calls both variants directly.
"""

import numpy as np

from . import _jit
from ._jit import njit


@njit(cache=True, nogil=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


@njit(cache=True, nogil=True)
def walk_count_jit(sizes, weights, n, m, start_res):
    K = sizes.shape[0]
    if K == 0:
        return 1 if (n == 0 and start_res % m == 0) else 0

    # suffix gcds: the parts j.. can only fill multiples of gsize[j]
    # and only shift the residue by multiples of gw[j]
    gsize = np.zeros(K + 1, np.int64)
    gw = np.zeros(K + 1, np.int64)
    gw[K] = m
    for j in range(K - 1, -1, -1):
        gsize[j] = _gcd(gsize[j + 1], sizes[j])
        gw[j] = _gcd(gw[j + 1], weights[j] % m)

    start_res = start_res % m
    if n % gsize[0] != 0 or start_res % gw[0] != 0:
        return 0

    c = np.zeros(K, np.int64)
    rem = np.zeros(K, np.int64)
    res = np.zeros(K, np.int64)
    rem[0] = n
    res[0] = start_res
    c[0] = -1
    total = 0
    depth = 0
    while depth >= 0:
        if depth == K - 1:
            r = rem[depth]
            sz = sizes[depth]
            if r % sz == 0 and (res[depth] + (r // sz) * weights[depth]) % m == 0:
                total += 1
            depth -= 1
            continue
        c[depth] += 1
        used = c[depth] * sizes[depth]
        if used > rem[depth]:
            depth -= 1
            continue
        r = rem[depth] - used
        s = (res[depth] + c[depth] * weights[depth]) % m
        nxt = depth + 1
        if r % gsize[nxt] != 0 or s % gw[nxt] != 0:
            continue
        rem[nxt] = r
        res[nxt] = s
        c[nxt] = -1
        depth = nxt
    return total


def walk_count_numpy(sizes, weights, n, m, start_res):
    sizes = np.asarray(sizes, dtype=np.int64)
    weights = np.asarray(weights, dtype=np.int64) % m
    K = sizes.shape[0]
    start_res %= m
    if K == 0:
        return int(n == 0 and start_res == 0)
    if K == 1:
        s, w = int(sizes[0]), int(weights[0])
        return int(n % s == 0 and (start_res + (n // s) * w) % m == 0)

    gsize = [0] * (K + 1)
    gw = [m] * (K + 1)
    for j in range(K - 1, -1, -1):
        gsize[j] = np.gcd(gsize[j + 1], int(sizes[j]))
        gw[j] = np.gcd(gw[j + 1], int(weights[j]))

    sa, sb = int(sizes[-2]), int(sizes[-1])
    wa, wb = int(weights[-2]), int(weights[-1])

    def rec(j, rem, res):
        if rem % gsize[j] or res % gw[j]:
            return 0
        if j == K - 2:
            # last two parts: all leaves at once
            a = np.arange(rem // sa + 1, dtype=np.int64)
            r = rem - a * sa
            ok = r % sb == 0
            ok &= (res + a * wa + (r // sb) * wb) % m == 0
            return int(np.count_nonzero(ok))
        sj, wj = int(sizes[j]), int(weights[j])
        total = 0
        for c in range(rem // sj + 1):
            total += rec(j + 1, rem - c * sj, (res + c * wj) % m)
        return total

    return rec(0, n, start_res)


def walk_count(sizes, weights, n, m, start_res=0):
    """
    Number of non-negative vectors ``c`` with ``sum(c * sizes) == n`` and
    ``start_res + sum(c * weights) == 0 (mod m)``.
    """
    if _jit.BACKEND == "numba":
        return int(walk_count_jit(np.asarray(sizes, dtype=np.int64),
                                  np.asarray(weights, dtype=np.int64) % m,
                                  n, m, start_res))
    return walk_count_numpy(sizes, weights, n, m, start_res)


def unit_permutations(m, units):
    """Row u maps output index j to source index ``t_u^{-1} * j mod m``."""
    perms = np.empty((len(units), m), dtype=np.int64)
    j = np.arange(m, dtype=np.int64)
    for u, t in enumerate(units):
        perms[u] = (pow(t, -1, m) * j) % m if m > 1 else 0
    return perms


@njit(cache=True, nogil=True)
def canonical_forms_jit(S, perms):
    N, m = S.shape
    U = perms.shape[0]
    keys = S.copy()
    orbit = np.zeros(N, np.int64)
    for i in range(N):
        stab = 0
        for u in range(U):
            cmp = 0
            for j in range(m):
                a = S[i, perms[u, j]]
                b = keys[i, j]
                if a != b:
                    cmp = 1 if a > b else -1
                    break
            if cmp == 1:
                for j in range(m):
                    keys[i, j] = S[i, perms[u, j]]
            same = True
            for j in range(m):
                if S[i, perms[u, j]] != S[i, j]:
                    same = False
                    break
            if same:
                stab += 1
        orbit[i] = U // stab
    return keys, orbit


def canonical_forms_numpy(S, perms):
    S = np.asarray(S, dtype=np.int64)
    N = S.shape[0]
    rows = np.arange(N)
    keys = S.copy()
    stab = np.zeros(N, dtype=np.int64)
    for perm in perms:
        P = S[:, perm]
        diff = P != keys
        has = diff.any(axis=1)
        first = diff.argmax(axis=1)
        better = has & (P[rows, first] > keys[rows, first])
        keys[better] = P[better]
        stab += ~(P != S).any(axis=1)
    return keys, len(perms) // stab


def canonical_forms(S, perms, order="colex"):
    """
    For every row (a count vector) return the count vector of its canonical
    orbit member, and the orbit size.

    ``order="lex"`` picks the lexicographically least sorted exponent tuple,
    which is the lexicographically largest count vector. ``order="colex"``
    picks the least tuple when compared from the largest exponent down, which
    is the count vector whose reversal is lexicographically least; it is
    handled by running the lex kernel in relabelled, negated coordinates.
    """
    S = np.ascontiguousarray(S, dtype=np.int64)
    perms = np.ascontiguousarray(perms, dtype=np.int64)
    if S.shape[0] == 0:
        return S.copy(), np.zeros(0, dtype=np.int64)
    if order == "colex":
        m = S.shape[1]
        S = np.ascontiguousarray(-S[:, ::-1])
        perms = np.ascontiguousarray(m - 1 - perms[:, ::-1])
    elif order != "lex":
        raise ValueError(f"unknown canonical order {order!r}")
    if _jit.BACKEND == "numba":
        keys, sizes = canonical_forms_jit(S, perms)
    else:
        keys, sizes = canonical_forms_numpy(S, perms)
    if order == "colex":
        keys = np.ascontiguousarray(-keys[:, ::-1])
    return keys, sizes
