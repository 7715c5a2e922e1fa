"""Exact integer linear algebra: HNF, SNF, kernels and small-lattice reduction.

Everything here works on plain Python integers, so no precision is ever
lost during the reductions.  Matrices are small (relation matrices stay
below roughly 200 x 50), so the quadratic pivoting strategies are fine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, row-major."""

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = len(data)
        cols = len(data[0])
        flat = []
        for r in data:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(int(x) for x in r)
        return cls(rows, cols, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        a, b = self.to_lists(), other.to_lists()
        out = [
            [sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntMatrix.from_rows(out)

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)]
        )


def det(M: IntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    if M.rows != M.cols:
        raise ValueError("determinant of non-square matrix")
    n = M.rows
    a = M.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _hnf_inplace(a: List[List[int]], u: List[List[int]]) -> None:
    """Row-reduce `a` to HNF, accumulating the row operations in `u`."""
    rows, cols = len(a), len(a[0])
    pr = 0
    for pc in range(cols):
        if pr >= rows:
            break
        # eliminate below the pivot row; smallest pivot first to limit growth
        while True:
            pivot = None
            best = None
            for i in range(pr, rows):
                v = abs(a[i][pc])
                if v != 0 and (best is None or v < best):
                    best, pivot = v, i
            if pivot is None:
                break
            if pivot != pr:
                a[pr], a[pivot] = a[pivot], a[pr]
                u[pr], u[pivot] = u[pivot], u[pr]
            done = True
            for i in range(pr + 1, rows):
                if a[i][pc] != 0:
                    q = a[i][pc] // a[pr][pc]
                    for j in range(cols):
                        a[i][j] -= q * a[pr][j]
                    for j in range(len(u[0])):
                        u[i][j] -= q * u[pr][j]
                    if a[i][pc] != 0:
                        done = False
            if done:
                break
        if a[pr][pc] == 0:
            continue
        if a[pr][pc] < 0:
            a[pr] = [-x for x in a[pr]]
            u[pr] = [-x for x in u[pr]]
        # reduce the entries above the pivot
        for i in range(pr):
            q = a[i][pc] // a[pr][pc]
            if q:
                for j in range(cols):
                    a[i][j] -= q * a[pr][j]
                for j in range(len(u[0])):
                    u[i][j] -= q * u[pr][j]
        pr += 1


def hnf(M: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """Hermite normal form H = U*M with U unimodular.

    H is upper triangular (echelon) with positive pivots; entries above
    each pivot are reduced modulo the pivot.  Zero rows sink to the
    bottom when M is rank deficient.
    """
    a = M.to_lists()
    u = IntMatrix.identity(M.rows).to_lists()
    _hnf_inplace(a, u)
    return IntMatrix.from_rows(a), IntMatrix.from_rows(u)


def kernel(M: IntMatrix) -> List[Tuple[int, ...]]:
    """Basis of the integer (right) kernel {x : M x = 0}."""
    H, U = hnf(M.transpose())
    out = []
    for i in range(H.rows):
        if all(v == 0 for v in H.row(i)):
            out.append(U.row(i))
    return out


def snf(M: IntMatrix) -> Tuple[List[int], IntMatrix, IntMatrix]:
    """Smith normal form: U*M*V = diag(d) with d_i | d_{i+1}, U,V unimodular."""
    rows, cols = M.rows, M.cols
    a = M.to_lists()
    u = IntMatrix.identity(rows).to_lists()
    v = IntMatrix.identity(cols).to_lists()

    def row_op(i, k, q):  # row_i -= q * row_k
        for j in range(cols):
            a[i][j] -= q * a[k][j]
        for j in range(rows):
            u[i][j] -= q * u[k][j]

    def col_op(j, k, q):  # col_j -= q * col_k
        for i in range(rows):
            a[i][j] -= q * a[i][k]
        for i in range(cols):
            v[i][j] -= q * v[i][k]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for i in range(rows):
            a[i][j], a[i][k] = a[i][k], a[i][j]
        for i in range(cols):
            v[i][j], v[i][k] = v[i][k], v[i][j]

    n = min(rows, cols)
    for t in range(n):
        # find the smallest nonzero entry in the trailing block
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                w = abs(a[i][j])
                if w != 0 and (best is None or w < best):
                    best, pivot = w, (i, j)
        if pivot is None:
            break
        while True:
            i0, j0 = pivot
            if i0 != t:
                swap_rows(t, i0)
            if j0 != t:
                swap_cols(t, j0)
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    row_op(i, t, a[i][t] // a[t][t])
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    col_op(j, t, a[t][j] // a[t][t])
                    dirty = dirty or a[t][j] != 0
            # the pivot must divide every remaining entry
            if not dirty:
                offender = None
                for i in range(t + 1, rows):
                    for j in range(t + 1, cols):
                        if a[i][j] % a[t][t] != 0:
                            offender = (i, j)
                            break
                    if offender:
                        break
                if offender is None:
                    break
                i0, j0 = offender
                row_op(t, i0, -1)  # fold the offending row into the pivot row
                dirty = True
            # re-pick the smallest entry and continue
            pivot = None
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    w = abs(a[i][j])
                    if w != 0 and (best is None or w < best):
                        best, pivot = w, (i, j)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    d = [a[i][i] if i < rows and i < cols else 0 for i in range(n)]
    return d, IntMatrix.from_rows(u), IntMatrix.from_rows(v)


def lll_reduce(basis: Sequence[Sequence[int]]) -> List[List[int]]:
    """LLL-reduce a basis of row vectors (standard inner product, delta=3/4).

    Exact rational Gram-Schmidt; intended for the tiny (3-dimensional)
    ideal lattices, where it keeps generator searches over small boxes.
    """
    b = [list(map(int, row)) for row in basis]
    n = len(b)

    def gso():
        mu = [[Fraction(0) for _ in range(n)] for _ in range(n)]
        bs = []
        norms = []
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                if norms[j] == 0:
                    mu[i][j] = Fraction(0)
                    continue
                mu[i][j] = sum(Fraction(b[i][k]) * bs[j][k] for k in range(len(v))) / norms[j]
                v = [v[k] - mu[i][j] * bs[j][k] for k in range(len(v))]
            bs.append(v)
            norms.append(sum(x * x for x in v))
        return mu, norms

    k = 1
    mu, norms = gso()
    guard = 0
    while k < n:
        guard += 1
        if guard > 10000:
            break  # safety net; reduction quality only affects search speed
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                mu, norms = gso()
        if norms[k] >= (Fraction(3, 4) - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, norms = gso()
            k = max(k - 1, 1)
    return b
