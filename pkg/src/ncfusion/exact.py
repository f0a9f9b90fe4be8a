"""Exact rank and projection routines over the integers and rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np


def _as_rows(m) -> list[list]:
    if isinstance(m, np.ndarray):
        return [[x.item() if hasattr(x, "item") else x for x in row] for row in m]
    return [list(row) for row in m]


def integer_rank(m) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    rows = [[int(x) for x in row] for row in _as_rows(m)]
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        piv_row = rows[rank]
        pv = piv_row[col]
        for r in range(rank + 1, n_rows):
            row = rows[r]
            f = row[col]
            for c in range(col, n_cols):
                row[c] = (pv * row[c] - f * piv_row[c]) // prev
        prev = pv
        rank += 1
        if rank == n_rows:
            break
    return rank


def rational_rank(m) -> int:
    return len(pivot_columns(m))


def pivot_columns(m) -> list[int]:
    """Pivot column indices of the reduced row echelon form over the rationals."""
    rows = [[Fraction(x) for x in row] for row in _as_rows(m)]
    if not rows:
        return []
    n_rows, n_cols = len(rows), len(rows[0])
    pivots = []
    r = 0
    for col in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == n_rows:
            break
    return pivots


def inverse(m) -> list[list[Fraction]]:
    rows = [[Fraction(x) for x in row] for row in _as_rows(m)]
    n = len(rows)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def fraction_array(m) -> np.ndarray:
    rows = _as_rows(m)
    out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = Fraction(x)
    return out


def span_projection(columns: np.ndarray) -> np.ndarray:
    """Orthogonal projection onto the column span, as a matrix of Fractions."""
    n = columns.shape[0]
    if columns.shape[1] == 0:
        return fraction_array(np.zeros((n, n), dtype=np.int64))
    basis = columns[:, pivot_columns(columns)]
    a = fraction_array(basis)
    gram_inv = fraction_array(inverse(a.T.dot(a)))
    return a.dot(gram_inv).dot(a.T)


def is_zero(m: np.ndarray) -> bool:
    return all(x == 0 for x in np.asarray(m).flat)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    a, b = np.asarray(a), np.asarray(b)
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def stack_columns(mats: Sequence[np.ndarray], n_rows: int) -> np.ndarray:
    if not mats:
        return np.zeros((n_rows, 0), dtype=object)
    return np.concatenate([np.asarray(m, dtype=object) for m in mats], axis=1)
