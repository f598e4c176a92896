"""Dense exact linear algebra over a finite field.

A matrix is an immutable grid of element indices of one owning field (see
ff.py for the index convention).  Reduced row-echelon form is the workhorse:
subspace identity, rank, intersection dimension and orthogonal complements
all reduce to it.  Counts are plain Python integers, so Gaussian binomials
never overflow.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .ff import FieldElement, FieldSpec


class MatrixFq:
    """Immutable r x c matrix over one field, stored as index tuples."""

    __slots__ = ("field", "rows")

    def __init__(self, field: FieldSpec, rows: tuple[tuple[int, ...], ...]):
        self.field = field
        self.rows = rows

    @classmethod
    def from_indices(cls, field: FieldSpec, rows: Sequence[Sequence[int]]) -> "MatrixFq":
        grid = tuple(tuple(r) for r in rows)
        width = len(grid[0]) if grid else 0
        for r in grid:
            if len(r) != width:
                raise ValueError("ragged rows")
            for v in r:
                if not 0 <= v < field.order:
                    raise ValueError(f"entry index {v} out of range for {field!r}")
        return cls(field, grid)

    @classmethod
    def from_elements(cls, field: FieldSpec, rows: Sequence[Sequence[FieldElement]]) -> "MatrixFq":
        grid = []
        for r in rows:
            row = []
            for e in r:
                if e.field != field:
                    raise ValueError("mixed-field entries")
                row.append(e.index)
            grid.append(tuple(row))
        return cls(field, tuple(grid))

    @classmethod
    def zeros(cls, field: FieldSpec, r: int, c: int) -> "MatrixFq":
        return cls(field, tuple((0,) * c for _ in range(r)))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "MatrixFq":
        return cls(field, tuple(tuple(1 if i == j else 0 for j in range(n))
                                for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def index_at(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def entry(self, i: int, j: int) -> FieldElement:
        return self.field.from_index(self.rows[i][j])

    def stack(self, other: "MatrixFq") -> "MatrixFq":
        if other.field != self.field or (self.rows and other.rows
                                         and other.ncols != self.ncols):
            raise ValueError("stack needs matching field and width")
        return MatrixFq(self.field, self.rows + other.rows)

    def __eq__(self, other) -> bool:
        return (isinstance(other, MatrixFq)
                and self.field == other.field and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.field.order, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(",".join(str(v) for v in r) for r in self.rows)
        return f"MatrixFq(q={self.field.order}, {self.nrows}x{self.ncols}: {body})"


def _eliminate(field: FieldSpec, rows: list[list[int]], reduced: bool) -> list[int]:
    """In-place Gaussian elimination; returns pivot columns.

    With reduced=True the result is the full RREF (pivots normalized to 1,
    zeros above and below); otherwise only a row-echelon rank skeleton.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        if reduced:
            lead = rows[r][c]
            if lead != 1:
                inv = field.inv(lead)
                rows[r] = [field.mul(inv, v) for v in rows[r]]
            span = range(nrows)
        else:
            span = range(r + 1, nrows)
        pivot_row = rows[r]
        for i in span:
            if i == r:
                continue
            f = rows[i][c]
            if f == 0:
                continue
            if not reduced:
                # echelon pass may have a non-unit pivot
                f = field.mul(f, field.inv(pivot_row[c]))
            row = rows[i]
            rows[i] = [field.sub(v, field.mul(f, w)) for v, w in zip(row, pivot_row)]
        pivots.append(c)
        r += 1
    return pivots


def rref(M: MatrixFq) -> tuple[MatrixFq, tuple[int, ...]]:
    """Reduced row-echelon form and its pivot columns (0-indexed)."""
    rows = [list(r) for r in M.rows]
    pivots = _eliminate(M.field, rows, reduced=True)
    return MatrixFq(M.field, tuple(tuple(r) for r in rows)), tuple(pivots)


def rank(M: MatrixFq) -> int:
    rows = [list(r) for r in M.rows]
    return len(_eliminate(M.field, rows, reduced=False))


def is_rref(M: MatrixFq) -> bool:
    """True when M is in reduced row-echelon form (zero rows trailing)."""
    pivots = []
    seen_zero_row = False
    for row in M.rows:
        lead = next((j for j, v in enumerate(row) if v), None)
        if lead is None:
            seen_zero_row = True
            continue
        if seen_zero_row or (pivots and lead <= pivots[-1]) or row[lead] != 1:
            return False
        pivots.append(lead)
    for i, c in enumerate(pivots):
        for r in range(len(M.rows)):
            if r != i and M.rows[r][c] != 0:
                return False
    return True


def intersection_dim(U: MatrixFq, W: MatrixFq) -> int:
    """dim(rowspace(U) ∩ rowspace(W)) = rk U + rk W - rk [U; W]."""
    if U.field != W.field or U.ncols != W.ncols:
        raise ValueError("operands live in different ambient spaces")
    return rank(U) + rank(W) - rank(U.stack(W))


def orthogonal_complement(U: MatrixFq) -> MatrixFq:
    """Canonical RREF basis of the dual under the standard dot product.

    U must have full row rank; the result has ncols - nrows rows.
    """
    field = U.field
    n = U.ncols
    R, pivots = rref(U)
    if len(pivots) != U.nrows:
        raise ValueError("rank-deficient input")
    free = [j for j in range(n) if j not in set(pivots)]
    rows = []
    for f in free:
        w = [0] * n
        w[f] = 1
        for i, pc in enumerate(pivots):
            w[pc] = field.neg(R.rows[i][f])
        rows.append(w)
    pivots2 = _eliminate(field, rows, reduced=True)
    assert len(pivots2) == len(free)
    return MatrixFq(field, tuple(tuple(r) for r in rows))


def gaussian_binomial(n: int, m: int, q: int) -> int:
    """Number of m-dimensional subspaces of F_q^n, exactly."""
    if m < 0 or m > n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    if q < 2:
        raise ValueError(f"need q >= 2, got {q}")
    num = 1
    den = 1
    for i in range(m):
        num *= q ** (n - i) - 1
        den *= q ** (m - i) - 1
    return num // den


def all_matrices(field: FieldSpec, r: int, c: int) -> Iterator[MatrixFq]:
    """All r x c matrices over the field, in row-major counting order."""
    cells = r * c
    q = field.order
    grid = [0] * cells
    while True:
        yield MatrixFq(field, tuple(tuple(grid[i * c:(i + 1) * c]) for i in range(r)))
        k = cells - 1
        while k >= 0:
            grid[k] += 1
            if grid[k] < q:
                break
            grid[k] = 0
            k -= 1
        if k < 0:
            return
