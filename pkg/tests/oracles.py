"""Brute-force reference implementations used to cross-check the library.

Everything here works on raw ints (bit i = entry i) and stays deliberately
independent of the package's algorithms: membership in these results is
decided by definitions, not by the code under test.
"""

from __future__ import annotations

import itertools


def popcount_parity(x: int) -> int:
    return x.bit_count() & 1


def int_dot(a: int, b: int) -> int:
    return (a & b).bit_count() & 1


def all_orthonormal_tuples(k: int, n: int) -> list[tuple[int, ...]]:
    """Every ordered tuple of n pairwise-orthonormal vectors in GF(2)^k."""
    out: list[tuple[int, ...]] = []

    def extend(chosen: list[int]) -> None:
        if len(chosen) == n:
            out.append(tuple(chosen))
            return
        for v in range(1, 1 << k):
            if popcount_parity(v) != 1:
                continue
            if any(int_dot(v, c) for c in chosen) or v in chosen:
                continue
            chosen.append(v)
            extend(chosen)
            chosen.pop()

    extend([])
    return out


def all_orthonormal_sets(k: int, n: int) -> list[tuple[int, ...]]:
    """Ascending tuples of n pairwise-orthonormal vectors in GF(2)^k."""
    out: list[tuple[int, ...]] = []

    def extend(chosen: list[int], start: int) -> None:
        if len(chosen) == n:
            out.append(tuple(chosen))
            return
        for v in range(start, 1 << k):
            if popcount_parity(v) != 1:
                continue
            if any(int_dot(v, c) for c in chosen):
                continue
            chosen.append(v)
            extend(chosen, v + 1)
            chosen.pop()

    extend([], 1)
    return out


def gram_of_columns(cols: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Rows of theta theta* where theta has the given columns."""
    rows = []
    for i in range(k):
        row_i = 0
        for j, c in enumerate(cols):
            if (c >> i) & 1:
                row_i |= 1 << j
        rows.append(row_i)
    out = []
    for i in range(k):
        bits = 0
        for j in range(k):
            bits |= int_dot(rows[i], rows[j]) << j
        out.append(bits)
    return tuple(out)


def matrix_rows_of_columns(cols: tuple[int, ...], k: int) -> tuple[int, ...]:
    rows = []
    for i in range(k):
        bits = 0
        for j, c in enumerate(cols):
            bits |= ((c >> i) & 1) << j
        rows.append(bits)
    return tuple(rows)


def complement_exists_brute(theta_cols: tuple[int, ...], k: int) -> bool:
    """Whether any k x (k-n) binary matrix psi has gram(theta)+gram(psi)=I.

    Scans every candidate psi; no structure beyond the definition is used.
    """
    n = len(theta_cols)
    target = gram_of_columns(theta_cols, k)
    identity = tuple(1 << i for i in range(k))
    m = k - n
    for assignment in range(1 << (k * m)):
        psi_cols = tuple((assignment >> (j * k)) & ((1 << k) - 1) for j in range(m))
        g = gram_of_columns(psi_cols, k)
        if all((target[i] ^ g[i]) == identity[i] for i in range(k)):
            return True
    return False


def factorization_exists_full_brute(m_rows: tuple[int, ...], k: int, n: int) -> bool:
    """Whether any k x n binary matrix theta satisfies theta theta* = m and
    theta* theta = I, by scanning all 2^(k*n) candidates."""
    identity_n = tuple(1 << i for i in range(n))
    for assignment in range(1 << (k * n)):
        cols = tuple((assignment >> (j * k)) & ((1 << k) - 1) for j in range(n))
        ok = True
        for a in range(n):
            for b in range(a, n):
                if int_dot(cols[a], cols[b]) != (1 if a == b else 0):
                    ok = False
                    break
            if not ok:
                break
        if ok and gram_of_columns(cols, k) == m_rows:
            return True
    return False


def factorization_exists_pruned(m_rows: tuple[int, ...], k: int, n: int) -> bool:
    """Same question as the full scan, pruned to orthonormal column sets.

    Still definition-driven: columns are built up in ascending order with
    the orthonormality conditions checked pairwise, and the Gram equation
    checked at the leaves.
    """
    for cols in all_orthonormal_sets(k, n):
        if gram_of_columns(cols, k) == m_rows:
            return True
    return False


def all_symmetric_idempotent(k: int) -> list[tuple[int, ...]]:
    """Rows of every symmetric idempotent k x k matrix over GF(2)."""
    positions = [(i, j) for i in range(k) for j in range(i, k)]
    out = []
    for mask in range(1 << len(positions)):
        rows = [0] * k
        for b, (i, j) in enumerate(positions):
            if (mask >> b) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        square = []
        for i in range(k):
            bits = 0
            for j in range(k):
                col_j = 0
                for r in range(k):
                    col_j |= ((rows[r] >> j) & 1) << r
                bits |= int_dot(rows[i], col_j) << j
            square.append(bits)
        if tuple(square) == tuple(rows):
            out.append(tuple(rows))
    return out


def rank_int_rows(rows: tuple[int, ...]) -> int:
    work = list(rows)
    r = 0
    for col in range(max(x.bit_length() for x in work) if any(work) else 0):
        piv = None
        for i in range(r, len(work)):
            if (work[i] >> col) & 1:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and (work[i] >> col) & 1:
                work[i] ^= work[r]
        r += 1
    return r


def perm_equivalent_brute(a_rows: tuple[int, ...], b_rows: tuple[int, ...], cols: int) -> bool:
    """Independent row/column permutation equivalence by exhaustion."""
    b_col_multiset = sorted(
        tuple((r >> j) & 1 for r in b_rows) for j in range(cols)
    )
    for rp in itertools.permutations(range(len(a_rows))):
        rows = [a_rows[i] for i in rp]
        a_cols = sorted(tuple((r >> j) & 1 for r in rows) for j in range(cols))
        if a_cols == b_col_multiset:
            return True
    return False


def conjugation_equivalent_brute(a_rows: tuple[int, ...], b_rows: tuple[int, ...]) -> bool:
    """Simultaneous permutation equivalence P a P* = b by exhaustion."""
    k = len(a_rows)
    for perm in itertools.permutations(range(k)):
        ok = True
        for i in range(k):
            row = 0
            for j in range(k):
                row |= ((a_rows[perm[i]] >> perm[j]) & 1) << j
            if row != b_rows[i]:
                ok = False
                break
        if ok:
            return True
    return False
