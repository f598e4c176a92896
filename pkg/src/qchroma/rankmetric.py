"""Gabidulin rank-metric codes and the identity-column lifting.

A code lives in the space of m x h matrices over F_q (h >= m) and is built
by evaluating the linearized polynomials  f(x) = a_0 x + a_1 x^q + ... +
a_{k-1} x^{q^{k-1}}  at the power basis 1, g, ..., g^{m-1} of F_{q^h}, with
g the canonical generator.  Row j of a codeword matrix holds the F_q
coordinates of f(g^j) with respect to (1, g, ..., g^{h-1}).  The resulting
code is F_q-linear of size q^{hk} and its minimum rank distance meets the
Singleton-like bound  |C| <= q^{max(m,h)(min(m,h)-d+1)}  with equality,
i.e. d = m - k + 1.

Cosets of the code are addressed by reading the complement coordinates of
a matrix (the non-pivot coordinates after reduction against the code's
RREF basis) as a base-q integer: two matrices share an index exactly when
their difference is a codeword.

Lifting threads an m x (n-m) matrix into an m x n matrix by placing
identity columns at the 1-positions of a weight-m binary vector and the
matrix columns, in order, at the 0-positions.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .ff import FieldSpec, field_for_order, relative_extension
from .matq import MatrixFq, rank
from .grassmann import Subspace

_DISTANCE_SCAN_LIMIT = 2 ** 20


class GabidulinCode:
    """An MRD code in M_{m x h}(F_q) with its coset bookkeeping."""

    __slots__ = ("field", "ext", "q", "m", "h", "d", "dim", "points",
                 "basis", "_rrows", "_pivots", "_nonpivots")

    def __init__(self, field: FieldSpec, ext: FieldSpec, m: int, h: int, d: int,
                 points: tuple[int, ...], basis: tuple[MatrixFq, ...]):
        self.field = field
        self.ext = ext
        self.q = field.order
        self.m = m
        self.h = h
        self.d = d
        self.dim = m - d + 1  # dimension over F_{q^h}
        self.points = points
        self.basis = basis
        rows = [list(_flatten(B)) for B in basis]
        pivots = []
        r = 0
        for c in range(m * h):
            pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            lead = rows[r][c]
            if lead != 1:
                inv = field.inv(lead)
                rows[r] = [field.mul(inv, v) for v in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [field.sub(v, field.mul(f, w))
                               for v, w in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        if r != len(rows):
            raise AssertionError("code basis is linearly dependent")
        self._rrows = tuple(tuple(row) for row in rows)
        self._pivots = tuple(pivots)
        self._nonpivots = tuple(c for c in range(m * h) if c not in set(pivots))

    @property
    def size(self) -> int:
        return self.q ** (self.h * self.dim)

    @property
    def num_cosets(self) -> int:
        return self.q ** (self.h * (self.m - self.dim))

    def _reduce(self, vec: list[int]) -> list[int]:
        field = self.field
        for i, p in enumerate(self._pivots):
            c = vec[p]
            if c:
                row = self._rrows[i]
                vec = [field.sub(v, field.mul(c, w)) for v, w in zip(vec, row)]
        return vec

    def contains(self, A: MatrixFq) -> bool:
        self._check_shape(A)
        return not any(self._reduce(list(_flatten(A))))

    def _check_shape(self, A: MatrixFq) -> None:
        if A.field != self.field:
            raise ValueError("matrix is over the wrong field")
        if A.nrows != self.m or A.ncols != self.h:
            raise ValueError(f"expected a {self.m}x{self.h} matrix")

    def codewords(self) -> Iterator[MatrixFq]:
        """All codewords, in base-q counting order over the basis weights."""
        field = self.field
        nb = len(self.basis)
        flat_basis = [_flatten(B) for B in self.basis]
        weights = [0] * nb
        while True:
            vec = [0] * (self.m * self.h)
            for w, b in zip(weights, flat_basis):
                if w:
                    vec = [field.add(v, field.mul(w, x)) for v, x in zip(vec, b)]
            yield _unflatten(field, vec, self.m, self.h)
            i = nb - 1
            while i >= 0:
                weights[i] += 1
                if weights[i] < self.q:
                    break
                weights[i] = 0
                i -= 1
            if i < 0:
                return

    def __repr__(self) -> str:
        return f"GabidulinCode(q={self.q}, m={self.m}, h={self.h}, d={self.d})"


def _flatten(A: MatrixFq) -> tuple[int, ...]:
    return tuple(v for row in A.rows for v in row)


def _unflatten(field: FieldSpec, vec: Sequence[int], m: int, h: int) -> MatrixFq:
    return MatrixFq(field, tuple(tuple(vec[i * h:(i + 1) * h]) for i in range(m)))


def gabidulin_build(q: int, m: int, h: int, d: int) -> GabidulinCode:
    """MRD code of minimum rank distance d in M_{m x h}(F_q); deterministic.

    Raises for d > m and for m > h (transpose the problem instead; the
    colouring pipeline does so through graph duality).
    """
    if d < 1:
        raise ValueError(f"distance {d} must be >= 1")
    if d > m:
        raise ValueError(f"distance {d} exceeds the row count {m}")
    if m > h:
        raise ValueError(f"need m <= h (got m={m}, h={h}); transpose the problem")
    field = field_for_order(q)
    ext = relative_extension(field, h)
    g = q if h > 1 else 1  # index of the class of x; F_q itself has no generator
    points = tuple(ext.power(g, j) for j in range(m))
    k = m - d + 1
    basis = []
    for i in range(k):
        # f(x) = a x^{q^i}; a runs over the power basis of the extension
        frob_points = tuple(ext.power(pt, q ** i) for pt in points)
        for s in range(h):
            a = ext.power(g, s)
            word_rows = tuple(ext.coeffs_of(ext.mul(a, fp)) for fp in frob_points)
            basis.append(MatrixFq(field, word_rows))
    return GabidulinCode(field, ext, m, h, d, points, tuple(basis))


def min_rank_distance(code: GabidulinCode, scan_limit: int = _DISTANCE_SCAN_LIMIT) -> int:
    """Exhaustive minimum rank over nonzero codewords (linearity covers pairs)."""
    if code.size < 2:
        raise ValueError("code has fewer than two words")
    if code.size > scan_limit:
        raise ValueError(f"code size {code.size} exceeds the scan limit {scan_limit}")
    best = None
    first = True
    for word in code.codewords():
        if first:
            first = False  # zero word
            continue
        r = rank(word)
        if best is None or r < best:
            best = r
            if best == 1:
                break
    return best


def coset_index(code: GabidulinCode, A: MatrixFq) -> int:
    """Base-q value of A's complement coordinates; constant on cosets of C."""
    code._check_shape(A)
    vec = code._reduce(list(_flatten(A)))
    val = 0
    scale = 1
    for c in code._nonpivots:
        val += vec[c] * scale
        scale *= code.q
    return val


def coset_representative(code: GabidulinCode, i: int) -> MatrixFq:
    """The unique representative with zero code component and digits i."""
    if not 0 <= i < code.num_cosets:
        raise ValueError(f"coset index {i} out of range [0, {code.num_cosets})")
    vec = [0] * (code.m * code.h)
    for c in code._nonpivots:
        i, digit = divmod(i, code.q)
        vec[c] = digit
    return _unflatten(code.field, vec, code.m, code.h)


def lift(u: Sequence[int], A: MatrixFq) -> MatrixFq:
    """Insert identity columns at the 1-positions of u, columns of A elsewhere."""
    m = A.nrows
    n = len(u)
    ones = [j for j, b in enumerate(u) if b == 1]
    zeros = [j for j, b in enumerate(u) if b == 0]
    if sorted(set(u)) not in ([0], [1], [0, 1]):
        raise ValueError("u must be a binary vector")
    if len(ones) != m:
        raise ValueError(f"weight of u is {len(ones)}, expected {m}")
    if A.ncols != n - m:
        raise ValueError(f"matrix has {A.ncols} columns, expected {n - m}")
    rows = []
    for i in range(m):
        row = [0] * n
        row[ones[i]] = 1
        for kcol, j in enumerate(zeros):
            row[j] = A.rows[i][kcol]
        rows.append(tuple(row))
    return MatrixFq(A.field, tuple(rows))


def unlift(S: Subspace) -> tuple[tuple[int, ...], MatrixFq]:
    """Identifying vector and the non-pivot block of the canonical basis.

    Inverse of `lift` on canonical bases: lift(u, A) reproduces the basis.
    """
    u = S.idvec
    nonpivots = [j for j, b in enumerate(u) if b == 0]
    rows = tuple(tuple(row[j] for j in nonpivots) for row in S.basis.rows)
    return u, MatrixFq(S.basis.field, rows)
