"""Graded free modules and homogeneous polynomial matrices."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .polynomials import (Polynomial, PolyRing, combine, p_add, p_mul, v_component,
                          v_from_components)


@dataclass(frozen=True)
class GradedFreeModule:
    """F = ⊕ R(-d_i); ``degrees`` lists the generator degrees d_i."""
    degrees: tuple = ()

    def __init__(self, degrees: Sequence[int] = ()):
        object.__setattr__(self, "degrees", tuple(int(d) for d in degrees))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def twist(self, a: int) -> "GradedFreeModule":
        """F(a): generator degrees shift down by a."""
        return GradedFreeModule([d - a for d in self.degrees])

    def dual(self) -> "GradedFreeModule":
        return GradedFreeModule([-d for d in self.degrees])

    def __add__(self, other: "GradedFreeModule") -> "GradedFreeModule":
        return GradedFreeModule(self.degrees + other.degrees)


class PolyMatrix:
    """Matrix over a polynomial ring stored column-wise as sparse vectors.

    Column j is a map (row, monomial) -> coefficient.  ``row_degrees`` are the
    target generator degrees, ``col_degrees`` the source ones, so entry (i, j)
    should be zero or homogeneous of degree col_degrees[j] - row_degrees[i].
    """

    __slots__ = ("ring", "row_degrees", "col_degrees", "cols")

    def __init__(self, ring: PolyRing, row_degrees, col_degrees, cols=None):
        self.ring = ring
        self.row_degrees = tuple(row_degrees)
        self.col_degrees = tuple(col_degrees)
        if cols is None:
            cols = [{} for _ in self.col_degrees]
        self.cols = tuple(cols)
        if len(self.cols) != len(self.col_degrees):
            raise ValueError("column count does not match column degrees")
        nr = len(self.row_degrees)
        for c in self.cols:
            for (i, _m) in c:
                if not 0 <= i < nr:
                    raise ValueError("entry outside the row range")

    @classmethod
    def from_rows(cls, ring: PolyRing, rows, row_degrees=None, col_degrees=None):
        """Build from a list of rows of Polynomials/ints; degrees inferred if omitted."""
        rows = [[ring(e) for e in r] for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if rows else (len(col_degrees) if col_degrees is not None else 0)
        if any(len(r) != nc for r in rows):
            raise ValueError("ragged matrix")
        if row_degrees is None:
            row_degrees = [0] * nr
        if col_degrees is None:
            col_degrees = []
            for j in range(nc):
                d = None
                for i in range(nr):
                    e = rows[i][j]
                    if e:
                        d = e.degree + row_degrees[i]
                        break
                col_degrees.append(0 if d is None else d)
        cols = [v_from_components([rows[i][j].terms for i in range(nr)]) for j in range(nc)]
        return cls(ring, row_degrees, col_degrees, cols)

    @classmethod
    def zero(cls, ring, row_degrees, col_degrees):
        return cls(ring, row_degrees, col_degrees)

    @classmethod
    def identity(cls, ring, degrees):
        one = ring.one_monomial()
        return cls(ring, degrees, degrees, [{(i, one): 1} for i in range(len(degrees))])

    @property
    def nrows(self) -> int:
        return len(self.row_degrees)

    @property
    def ncols(self) -> int:
        return len(self.col_degrees)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> Polynomial:
        return Polynomial(self.ring, v_component(self.cols[j], i))

    def rows(self) -> list[list[Polynomial]]:
        return [[self.entry(i, j) for j in range(self.ncols)] for i in range(self.nrows)]

    def is_zero(self) -> bool:
        return not any(self.cols)

    def apply(self, x: dict) -> dict:
        """Image of a raw vector indexed by columns."""
        return combine(self.cols, x, self.ring.p)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"dimension mismatch {self.shape} @ {other.shape}")
        cols = [self.apply(c) for c in other.cols]
        return PolyMatrix(self.ring, self.row_degrees, other.col_degrees, cols)

    def transpose(self) -> "PolyMatrix":
        """Dual map F1* -> F0*... as a matrix: rows/cols swapped, degrees negated."""
        new_cols = [dict() for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for (i, m), v in c.items():
                new_cols[i][(j, m)] = v
        return PolyMatrix(self.ring, [-d for d in self.col_degrees],
                          [-d for d in self.row_degrees], new_cols)

    def submatrix(self, rows=None, cols=None) -> "PolyMatrix":
        rows = list(range(self.nrows)) if rows is None else list(rows)
        cols = list(range(self.ncols)) if cols is None else list(cols)
        pos = {r: k for k, r in enumerate(rows)}
        new_cols = [{(pos[i], m): v for (i, m), v in self.cols[j].items() if i in pos} for j in cols]
        return PolyMatrix(self.ring, [self.row_degrees[r] for r in rows],
                          [self.col_degrees[c] for c in cols], new_cols)

    def hstack(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.row_degrees != other.row_degrees:
            raise ValueError("row degrees differ")
        return PolyMatrix(self.ring, self.row_degrees, self.col_degrees + other.col_degrees,
                          self.cols + other.cols)

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.ring == other.ring
                and self.row_degrees == other.row_degrees
                and self.col_degrees == other.col_degrees and self.cols == other.cols)

    def __repr__(self):
        return f"PolyMatrix({self.nrows}x{self.ncols})"

    def __str__(self):
        rows = self.rows()
        cells = [[str(e) for e in r] for r in rows]
        if not cells:
            return f"<{self.nrows}x{self.ncols} matrix>"
        widths = [max((len(cells[i][j]) for i in range(self.nrows)), default=1)
                  for j in range(self.ncols)]
        return "\n".join("| " + "  ".join(c.rjust(w) for c, w in zip(r, widths)) + " |" for r in cells)


def homogeneity_check(A: PolyMatrix) -> bool:
    """True iff every nonzero entry (i, j) is homogeneous of degree col_j - row_i."""
    for j, col in enumerate(A.cols):
        dj = A.col_degrees[j]
        for (i, m) in col:
            if sum(m) != dj - A.row_degrees[i]:
                return False
    return True


def matrix_apply(A: PolyMatrix, v: Sequence[Polynomial]) -> list[Polynomial]:
    """A·v for a column vector v of Polynomials."""
    if len(v) != A.ncols:
        raise ValueError(f"vector of length {len(v)} for a matrix with {A.ncols} columns")
    ring, p = A.ring, A.ring.p
    out = [dict() for _ in range(A.nrows)]
    for j, col in enumerate(A.cols):
        vj = ring(v[j]).terms
        if not vj:
            continue
        for (i, m), c in col.items():
            out[i] = p_add(out[i], p_mul({m: c}, vj, p), p)
    return [Polynomial(ring, f) for f in out]
