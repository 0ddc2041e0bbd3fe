"""Exact rational sparse matrices: rank, kernel, invertibility.

Elimination is fraction-free in spirit but simply exact: entries are
``fractions.Fraction`` and pivots are chosen by column order (first
nonzero row), never by magnitude, so results are reproducible and do not
depend on row insertion order.  Matrices here stay at desk scale (a few
thousand columns at most).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Mapping


class RatMatrix:
    """Immutable sparse matrix over the rationals, stored row-wise."""

    def __init__(self, nrows: int, ncols: int, entries: Mapping[tuple[int, int], Rational] = ()):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.nrows = nrows
        self.ncols = ncols
        rows: list[dict[int, Fraction]] = [{} for _ in range(nrows)]
        items = entries.items() if isinstance(entries, Mapping) else entries
        for (i, j), v in items:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise ValueError(f"entry ({i}, {j}) out of bounds for {nrows}x{ncols}")
            v = Fraction(v)
            if v:
                rows[i][j] = v
        self._rows = rows

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows[i].get(j, Fraction(0))

    def row(self, i: int) -> dict[int, Fraction]:
        return dict(self._rows[i])

    def __repr__(self) -> str:
        nnz = sum(len(r) for r in self._rows)
        return f"RatMatrix({self.nrows}x{self.ncols}, {nnz} nonzero)"


def _rref(rows: list[dict[int, Fraction]], ncols: int) -> tuple[list[dict[int, Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    pivots: list[int] = []
    pivot_row = 0
    for col in range(ncols):
        found = None
        for r in range(pivot_row, len(rows)):
            if rows[r].get(col):
                found = r
                break
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        pv = rows[pivot_row][col]
        if pv != 1:
            rows[pivot_row] = {j: v / pv for j, v in rows[pivot_row].items()}
        prow = rows[pivot_row]
        for r in range(len(rows)):
            if r == pivot_row:
                continue
            factor = rows[r].get(col)
            if not factor:
                continue
            target = rows[r]
            for j, v in prow.items():
                new = target.get(j, Fraction(0)) - factor * v
                if new:
                    target[j] = new
                else:
                    target.pop(j, None)
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return rows, pivots


def rref(m: RatMatrix) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    rows, pivots = _rref([dict(r) for r in m._rows], m.ncols)
    out = RatMatrix(m.nrows, m.ncols)
    out._rows = rows
    return out, pivots


def rank(m: RatMatrix) -> int:
    """Exact rank over the rationals."""
    _, pivots = _rref([dict(r) for r in m._rows], m.ncols)
    return len(pivots)


def kernel_basis(m: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space, reduced row-echelon normalized.

    Returns cols - rank vectors v with m @ v = 0 exactly; arranged as rows
    of an RREF matrix (each leading coefficient 1).
    """
    rows, pivots = _rref([dict(r) for r in m._rows], m.ncols)
    pivot_set = set(pivots)
    free_cols = [j for j in range(m.ncols) if j not in pivot_set]
    specials: list[dict[int, Fraction]] = []
    for j in free_cols:
        vec = {j: Fraction(1)}
        for r, pcol in enumerate(pivots):
            v = rows[r].get(j)
            if v:
                vec[pcol] = -v
        specials.append(vec)
    normalized, _ = _rref(specials, m.ncols)
    out = []
    for vec in normalized:
        if vec:
            out.append(tuple(vec.get(j, Fraction(0)) for j in range(m.ncols)))
    return out


def is_invertible(m: RatMatrix) -> bool:
    """rank == dimension; raises on non-square input."""
    if m.nrows != m.ncols:
        raise ValueError(f"invertibility needs a square matrix, got {m.nrows}x{m.ncols}")
    return rank(m) == m.nrows


def matvec(m: RatMatrix, v: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    if len(v) != m.ncols:
        raise ValueError("vector length does not match column count")
    return tuple(sum((c * v[j] for j, c in row.items()), Fraction(0)) for row in m._rows)


def identity(n: int) -> RatMatrix:
    return RatMatrix(n, n, {(i, i): Fraction(1) for i in range(n)})
