"""
Exact rank by fraction-free Gaussian elimination on numpy object arrays.

Entries only need ring operations and an is_zero() test, so the same code
serves Fractions, GaussianRationals and SurdScalars.
"""
import numpy as np


def _is_zero(entry) -> bool:
    checker = getattr(entry, 'is_zero', None)
    if checker is not None:
        return checker()
    return entry == 0


def exact_rank(matrix) -> int:
    """
    Rank of a matrix of exact field elements.

    Row r below the pivot row p is replaced by X[p,c]*X[r] - X[r,c]*X[p];
    no division is performed.
    """
    X = np.array(matrix, dtype=object)
    if X.size == 0:
        return 0
    if X.ndim != 2:
        raise ValueError(f"exact_rank expects a 2-d matrix, got shape {X.shape}")
    X = X.copy()
    n_rows, n_cols = X.shape

    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot_row = None
        for row in range(rank, n_rows):
            if not _is_zero(X[row, col]):
                pivot_row = row
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            X[[rank, pivot_row], :] = X[[pivot_row, rank], :]

        pivot = X[rank, col]
        for row in range(rank + 1, n_rows):
            factor = X[row, col]
            if _is_zero(factor):
                continue
            for j in range(col, n_cols):
                X[row, j] = pivot * X[row, j] - factor * X[rank, j]
        rank += 1
    return rank
