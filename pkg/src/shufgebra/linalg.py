"""Exact dense linear algebra over the coefficient fields.

Rows are plain lists of field values.  Used to solve for a polynomial in
the span of given polynomials and to compute ranks for basis/dimension
checks; everything is exact (Fraction or residues mod p), no pivoting
heuristics needed.
"""

from __future__ import annotations

from typing import Sequence

from .fields import require_same_field
from .poly import MONO_KEY, Polynomial


class Matrix:
    """Dense matrix over one field; rows of raw field values."""

    def __init__(self, field, rows: Sequence[Sequence]):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged rows")

    def rref(self):
        """Reduced row echelon form; returns (new Matrix, pivot columns)."""
        fld = self.field
        zero = fld.zero
        rows = [list(r) for r in self.rows]
        pivots = []
        row = 0
        for col in range(self.ncols):
            pivot = None
            for r in range(row, len(rows)):
                if rows[r][col] != zero:
                    pivot = r
                    break
            if pivot is None:
                continue
            rows[row], rows[pivot] = rows[pivot], rows[row]
            inv = fld.inv(rows[row][col])
            rows[row] = [fld.mul(x, inv) for x in rows[row]]
            for r in range(len(rows)):
                if r != row and rows[r][col] != zero:
                    factor = rows[r][col]
                    rows[r] = [
                        fld.sub(x, fld.mul(factor, y))
                        for x, y in zip(rows[r], rows[row])
                    ]
            pivots.append(col)
            row += 1
            if row == len(rows):
                break
        return Matrix(fld, rows), pivots

    def rank(self) -> int:
        if not self.rows or self.ncols == 0:
            return 0
        _, pivots = self.rref()
        return len(pivots)


def _monomial_index(polys: Sequence[Polynomial]):
    monos = set()
    for p in polys:
        monos.update(p.terms)
    return sorted(monos, key=MONO_KEY, reverse=True)


def linear_solve(vectors: Sequence[Polynomial], target: Polynomial):
    """Coefficients c with sum(c_i * vectors_i) == target, or None.

    The coefficient matrix is indexed by monomials (rows) and vectors
    (columns); a solution is read off the reduced echelon form with free
    variables set to zero, so the result is deterministic.
    """
    field = target.field
    for v in vectors:
        require_same_field(field, v.field)
    if not vectors:
        return [] if target.is_zero() else None
    monos = _monomial_index(list(vectors) + [target])
    if not monos:
        return [field.zero] * len(vectors)
    rows = []
    for m in monos:
        rows.append([v.coefficient(m) for v in vectors] + [target.coefficient(m)])
    reduced, pivots = Matrix(field, rows).rref()
    ncols = len(vectors)
    if ncols in pivots:
        return None  # pivot in the augmented column: inconsistent
    solution = [field.zero] * ncols
    for r, col in enumerate(pivots):
        solution[col] = reduced.rows[r][ncols]
    return solution


def span_rank(vectors: Sequence[Polynomial]) -> int:
    """Rank of the list of polynomials as vectors over their field."""
    vectors = [v for v in vectors]
    if not vectors:
        return 0
    field = vectors[0].field
    for v in vectors:
        require_same_field(field, v.field)
    monos = _monomial_index(vectors)
    if not monos:
        return 0
    rows = [[v.coefficient(m) for m in monos] for v in vectors]
    return Matrix(field, rows).rank()
