"""Linear algebra over GF(2) on integer bitsets.

A matrix is a sequence of rows, each row an int whose bit j is the entry
in column j.  This keeps row operations down to single xor instructions.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

__all__ = [
    "rank",
    "row_echelon",
    "in_rowspan",
    "solve_affine",
    "nullspace",
]


def row_echelon(rows: Iterable[int]) -> List[int]:
    """Reduce rows by elimination; returns independent rows with distinct
    leading bits (an xor basis of the row space)."""
    basis: List[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    return basis


def rank(rows: Iterable[int]) -> int:
    return len(row_echelon(rows))


def in_rowspan(row: int, basis: Sequence[int]) -> bool:
    """Whether row lies in the span of a row_echelon basis."""
    for b in basis:
        row = min(row, row ^ b)
    return row == 0


def solve_affine(
    rows: Sequence[int], rhs: Sequence[int], width: int
) -> Optional[Tuple[int, List[int]]]:
    """Solve rows[i] . x = rhs[i] over GF(2) for width-bit vectors x.

    Returns (particular solution, nullspace basis), or None when the
    system is inconsistent.  Gauss-Jordan: every pivot column occurs in
    exactly one stored row, so solutions can be read off directly.
    """
    mask = (1 << width) - 1
    pivots: List[Tuple[int, int]] = []  # (pivot bit, reduced augmented row)
    for r, b in zip(rows, rhs):
        row = (r & mask) | ((b & 1) << width)
        for piv, prow in pivots:
            if row & piv:
                row ^= prow
        if row & mask == 0:
            if row:
                return None  # 0 = 1
            continue
        piv = row & -row  # variable bits sit below the rhs bit
        pivots = [(p, pr ^ row if pr & piv else pr) for p, pr in pivots]
        pivots.append((piv, row))

    particular = 0
    pivot_bits = 0
    for piv, prow in pivots:
        pivot_bits |= piv
        if prow >> width:
            particular |= piv

    basis: List[int] = []
    for j in range(width):
        bit = 1 << j
        if bit & pivot_bits:
            continue
        vec = bit
        for piv, prow in pivots:
            if prow & bit:
                vec |= piv
        basis.append(vec)
    return particular, basis


def nullspace(rows: Sequence[int], width: int) -> List[int]:
    """Basis of {x : rows . x = 0} as width-bit ints."""
    solved = solve_affine(rows, [0] * len(rows), width)
    assert solved is not None
    return solved[1]
