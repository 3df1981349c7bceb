"""Exact sparse linear algebra over Q(zeta_n).

Matrices are lists of sparse rows ``{column: Cyc}``; zero entries are never
stored.  Ranks are computed by Gaussian elimination, with a fraction-free
(Bareiss) variant kept as an independent second route.
"""

from __future__ import annotations

from .scalars import Cyc

__all__ = ["Matrix", "rank", "bareiss_rank", "nullspace", "solve", "row_reduce"]


class Matrix:
    """Sparse exact matrix."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]

    @classmethod
    def from_dense(cls, dense, ncols=None):
        if ncols is None:
            ncols = len(dense[0]) if dense else 0
        rows = [{j: a for j, a in enumerate(r) if a} for r in dense]
        return cls(len(rows), ncols, rows)

    def to_dense(self, zero):
        out = []
        for r in self.rows:
            line = [zero] * self.ncols
            for j, a in r.items():
                line[j] = a
            out.append(line)
        return out

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j)

    def add_to(self, i: int, j: int, value) -> None:
        if not value:
            return
        r = self.rows[i]
        v = r.get(j)
        v = value if v is None else v + value
        if v:
            r[j] = v
        else:
            r.pop(j, None)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = Matrix(self.nrows, other.ncols)
        for i, r in enumerate(self.rows):
            acc = out.rows[i]
            for k, a in r.items():
                for j, b in other.rows[k].items():
                    v = acc.get(j)
                    v = a * b if v is None else v + a * b
                    if v:
                        acc[j] = v
                    else:
                        del acc[j]
        return out

    def __add__(self, other: "Matrix") -> "Matrix":
        out = Matrix(self.nrows, self.ncols, [dict(r) for r in self.rows])
        for i, r in enumerate(other.rows):
            for j, a in r.items():
                out.add_to(i, j, a)
        return out

    def scaled(self, c) -> "Matrix":
        if not c:
            return Matrix(self.nrows, self.ncols)
        return Matrix(self.nrows, self.ncols, [{j: a * c for j, a in r.items()} for r in self.rows])

    def __sub__(self, other: "Matrix") -> "Matrix":
        out = Matrix(self.nrows, self.ncols, [dict(r) for r in self.rows])
        for i, r in enumerate(other.rows):
            for j, a in r.items():
                out.add_to(i, j, -a)
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def nonzero_entries(self):
        for i, r in enumerate(self.rows):
            for j in sorted(r):
                yield i, j, r[j]

    def transpose(self) -> "Matrix":
        out = Matrix(self.ncols, self.nrows)
        for i, r in enumerate(self.rows):
            for j, a in r.items():
                out.rows[j][i] = a
        return out

    def rank(self) -> int:
        return rank(self.rows)

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, nnz={sum(len(r) for r in self.rows)})"


def row_reduce(rows):
    """Reduced row echelon form.

    Returns ``(echelon, pivots)`` where ``echelon[k]`` is a sparse row whose
    pivot column ``pivots[k]`` holds 1 and which is zero in every other pivot
    column.
    """
    echelon: list[dict] = []
    pivots: list[int] = []
    pivot_of: dict[int, int] = {}
    for row in rows:
        r = dict(row)
        # eliminate existing pivots
        changed = True
        while changed:
            changed = False
            for col in sorted(c for c in r if c in pivot_of):
                a = r.get(col)
                if a is None:
                    continue
                prow = echelon[pivot_of[col]]
                for j, b in prow.items():
                    v = r.get(j)
                    v = -a * b if v is None else v - a * b
                    if v:
                        r[j] = v
                    else:
                        r.pop(j, None)
                changed = True
        if not r:
            continue
        col = min(r)
        inv = r[col].inverse()
        r = {j: v * inv for j, v in r.items()}
        # back-substitute into the earlier rows
        for k, prow in enumerate(echelon):
            a = prow.get(col)
            if a is None:
                continue
            for j, b in r.items():
                v = prow.get(j)
                v = -a * b if v is None else v - a * b
                if v:
                    prow[j] = v
                else:
                    prow.pop(j, None)
        pivot_of[col] = len(echelon)
        echelon.append(r)
        pivots.append(col)
    order = sorted(range(len(pivots)), key=lambda k: pivots[k])
    return [echelon[k] for k in order], [pivots[k] for k in order]


def rank(rows) -> int:
    """Rank of a list of sparse rows (forward elimination only)."""
    pivot_rows: dict[int, dict] = {}
    for row in rows:
        r = dict(row)
        while r:
            col = min(r)
            prow = pivot_rows.get(col)
            if prow is None:
                inv = r[col].inverse()
                pivot_rows[col] = {j: v * inv for j, v in r.items()}
                break
            a = r[col]
            for j, b in prow.items():
                v = r.get(j)
                v = -a * b if v is None else v - a * b
                if v:
                    r[j] = v
                else:
                    r.pop(j, None)
    return len(pivot_rows)


def bareiss_rank(dense) -> int:
    """Fraction-free rank of a dense matrix (list of lists)."""
    a = [list(r) for r in dense]
    m = len(a)
    if m == 0:
        return 0
    n = len(a[0])
    prev = None
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                v = a[r][c] * a[i][j] - a[i][c] * a[r][j]
                a[i][j] = v if prev is None else v / prev
            a[i][c] = a[i][c] * 0
        prev = a[r][c]
        r += 1
        if r == m:
            break
    return r


def nullspace(rows, ncols: int, one: Cyc):
    """Basis of the right kernel ``{v : A v = 0}`` as sparse dict vectors."""
    echelon, pivots = row_reduce(rows)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = {free: one}
        for r, p in zip(echelon, pivots):
            a = r.get(free)
            if a:
                vec[p] = -a
        basis.append(vec)
    return basis


def solve(rows, rhs, ncols: int):
    """One solution x of A x = b (sparse dict), or None when inconsistent.

    ``rhs`` is a list of scalars (or None for zero) aligned with ``rows``.
    """
    aug = []
    for r, b in zip(rows, rhs):
        rr = dict(r)
        if b:
            rr[ncols] = b
        aug.append(rr)
    echelon, pivots = row_reduce(aug)
    if pivots and pivots[-1] == ncols:
        return None
    return {p: r[ncols] for r, p in zip(echelon, pivots) if ncols in r}
