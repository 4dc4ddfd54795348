"""Independent Betti oracle: Smith normal form of the integer boundary
matrices, built from dense lists with no use of the package's linear algebra.

The rank of an integer matrix over F_p is the number of SNF diagonal entries
not divisible by p; over Q it is the number of nonzero entries.
"""

from __future__ import annotations

from itertools import combinations


def snf_diagonal(rows: list[list[int]]) -> list[int]:
    A = [list(r) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        A[t], A[pi] = A[pi], A[t]
        for r in A:
            r[t], r[pj] = r[pj], r[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for r in A:
                        r[j] -= q * r[t]
                if A[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the rest of the block
                bad = [(i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p]
                if not bad:
                    break
                i, _ = bad[0]
                A[t] = [a + b for a, b in zip(A[t], A[i])]
                continue
            nz = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            nz += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
            _, pi, pj = min(nz)
            A[t], A[pi] = A[pi], A[t]
            for r in A:
                r[t], r[pj] = r[pj], r[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def boundary_dense(simplices, i: int) -> list[list[int]]:
    """Augmented ∂_i as a dense integer matrix (rows: (i-1)-simplices)."""
    cols = sorted(s for s in simplices if len(s) == i + 1)
    if i == 0:
        return [[1] * len(cols)]
    rows = sorted(s for s in simplices if len(s) == i)
    idx = {s: k for k, s in enumerate(rows)}
    M = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for k in range(len(s)):
            M[idx[s[:k] + s[k + 1:]]][j] = (-1) ** k
    return M


def oracle_rank(M: list[list[int]], p: int | None) -> int:
    if not M or not M[0]:
        return 0
    d = snf_diagonal(M)
    return sum(1 for x in d if x and (p is None or x % p))


def oracle_betti(facets, p: int | None) -> list[int]:
    """Reduced Betti numbers from degree -1 up to the top dimension;
    ``p=None`` means Q."""
    simplices = {tuple(sorted(f[i] for i in c)) for f in facets
                 for r in range(1, len(f) + 1) for c in combinations(range(len(f)), r)}
    if not simplices:
        return [1]
    top = max(len(s) for s in simplices) - 1
    counts = [1] + [sum(1 for s in simplices if len(s) == i + 1) for i in range(top + 1)]
    ranks = [oracle_rank(boundary_dense(simplices, i), p) for i in range(top + 1)] + [0]
    # degree -1 has one generator (the empty simplex), hit by ∂_0
    out = [counts[0] - ranks[0]]
    for i in range(top + 1):
        out.append(counts[i + 1] - ranks[i] - ranks[i + 1])
    return out
