"""Exact rank of integer matrices.

Fraction-free Gaussian elimination (Bareiss).  Matrices here are small
graded pieces of ideals or contraction modules, so an O(n^3) dense sweep
with exact integer arithmetic is entirely adequate.
"""

from __future__ import annotations

from typing import Sequence


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix given as a list of rows."""
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return 0
    nrows = len(mat)
    ncols = len(mat[0])
    rank = 0
    prev_pivot = 1
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, nrows):
            if mat[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        pivot = mat[rank][col]
        for r in range(rank + 1, nrows):
            factor = mat[r][col]
            row = mat[r]
            top = mat[rank]
            if factor == 0:
                # still rescale for Bareiss exact division
                for c in range(col, ncols):
                    row[c] = (row[c] * pivot) // prev_pivot
            else:
                for c in range(col, ncols):
                    row[c] = (row[c] * pivot - top[c] * factor) // prev_pivot
        prev_pivot = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def row_span_rank(vectors: Sequence[dict], columns: Sequence) -> int:
    """Rank of sparse integer row vectors (dicts keyed by column labels)."""
    index = {c: i for i, c in enumerate(columns)}
    dense = []
    seen = set()
    for vec in vectors:
        row = [0] * len(index)
        for key, val in vec.items():
            row[index[key]] = val
        tup = tuple(row)
        if any(tup) and tup not in seen:
            seen.add(tup)
            dense.append(row)
    return int_rank(dense)
