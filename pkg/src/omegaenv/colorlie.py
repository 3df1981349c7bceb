"""Color Lie algebras given by structure constants, and their scalar 2-cocycles."""

from __future__ import annotations

from itertools import combinations_with_replacement

from .grading import Bicharacter, GroupSpec, Violation
from .linalg import nullspace, rank, solve
from .scalars import Cyc, CycField

__all__ = [
    "ColorLieAlgebra",
    "Cocycle2",
    "InvalidCocycle",
    "validate_algebra",
    "validate_cocycle",
    "central_extension",
    "coboundary",
    "is_cohomologous",
    "h2_scalar",
]


class InvalidCocycle(ValueError):
    pass


def _add_into(acc: dict, vec: dict, scale) -> None:
    for k, a in vec.items():
        v = acc.get(k)
        v = a * scale if v is None else v + a * scale
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)


class ColorLieAlgebra:
    """Finite-dimensional color Lie algebra on homogeneous generators.

    ``brackets`` maps ordered pairs ``(i, j)`` to sparse coefficient dicts
    ``{k: c_ij^k}``.  A pair given in only one order has its partner filled
    in by eps-antisymmetry; a pair given in both orders is kept verbatim so
    that inconsistent input shows up in :func:`validate_algebra`.
    """

    def __init__(self, names, degrees, eps: Bicharacter, brackets=None):
        self.names = list(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate generator names in {self.names}")
        self.eps = eps
        self.spec: GroupSpec = eps.spec
        self.field: CycField = eps.field
        self.degrees = [self.spec.element(d) for d in degrees]
        if len(self.degrees) != len(self.names):
            raise ValueError("names and degrees differ in length")
        self.identity = self.spec.identity
        d = len(self.names)
        given = {}
        for (i, j), coeffs in (brackets or {}).items():
            if not (0 <= i < d and 0 <= j < d):
                raise IndexError(f"bracket pair ({i}, {j}) out of range")
            vec = {}
            for k, c in coeffs.items():
                if not 0 <= k < d:
                    raise IndexError(f"bracket coefficient index {k} out of range")
                c = self.field(c)
                if c:
                    vec[k] = c
            given[(i, j)] = vec
        self.table = {}
        for (i, j), vec in given.items():
            if vec:
                self.table[(i, j)] = vec
            if i != j and (j, i) not in given and vec:
                s = -self.eps(self.degrees[j], self.degrees[i])
                self.table[(j, i)] = {k: s * c for k, c in vec.items()}

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, name) -> int:
        if isinstance(name, int):
            return name
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def e(self, i: int, j: int) -> Cyc:
        """eps(|x_i|, |x_j|)."""
        return self.eps(self.degrees[i], self.degrees[j])

    def parity(self, i: int) -> int:
        return self.eps.parity(self.degrees[i])

    def is_odd(self, i: int) -> bool:
        return self.parity(i) == -1

    def bracket(self, i: int, j: int) -> dict:
        return self.table.get((i, j), {})

    def bracket_vec(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                br = self.table.get((i, j))
                if br:
                    _add_into(out, br, a * b)
        return out

    def word_degree(self, word) -> tuple:
        return self.spec.product(self.degrees[i] for i in word)

    def is_abelian(self) -> bool:
        return not self.table

    def __repr__(self):
        return f"ColorLieAlgebra({self.names})"


class Cocycle2:
    """Bilinear form on generators, ``values[(i, j)] = w(x_i, x_j)``.

    Construct with :meth:`from_entries` to have eps-antisymmetric partners
    filled in.
    """

    def __init__(self, L: ColorLieAlgebra, values=None):
        self.L = L
        self.values = {}
        for (i, j), v in (values or {}).items():
            v = L.field(v)
            if v:
                self.values[(i, j)] = v

    @classmethod
    def from_entries(cls, L: ColorLieAlgebra, entries) -> "Cocycle2":
        given = {}
        for (i, j), v in entries.items():
            if not (0 <= i < L.dim and 0 <= j < L.dim):
                raise IndexError(f"cocycle pair ({i}, {j}) out of range")
            given[(i, j)] = L.field(v)
        vals = dict(given)
        for (i, j), v in given.items():
            if i != j and (j, i) not in given:
                vals[(j, i)] = -L.e(j, i) * v
        return cls(L, vals)

    @classmethod
    def zero(cls, L: ColorLieAlgebra) -> "Cocycle2":
        return cls(L, {})

    def __call__(self, i: int, j: int) -> Cyc:
        return self.values.get((i, j), self.L.field.zero)

    def on_vec(self, i: int, vec: dict) -> Cyc:
        """w(x_i, sum_k c_k x_k)."""
        out = self.L.field.zero
        for k, c in vec.items():
            w = self.values.get((i, k))
            if w:
                out = out + c * w
        return out

    def is_zero(self) -> bool:
        return not self.values

    def __sub__(self, other: "Cocycle2") -> "Cocycle2":
        vals = dict(self.values)
        for k, v in other.values.items():
            vals[k] = vals.get(k, self.L.field.zero) - v
        return Cocycle2(self.L, vals)

    def __add__(self, other: "Cocycle2") -> "Cocycle2":
        vals = dict(self.values)
        for k, v in other.values.items():
            vals[k] = vals.get(k, self.L.field.zero) + v
        return Cocycle2(self.L, vals)

    def __eq__(self, other):
        if not isinstance(other, Cocycle2):
            return NotImplemented
        return self.values == other.values

    def entries(self):
        """Stored values for i <= j, sorted; enough to rebuild via from_entries."""
        return {(i, j): v for (i, j), v in sorted(self.values.items()) if i <= j}

    def __repr__(self):
        items = ", ".join(f"({i},{j}): {v}" for (i, j), v in sorted(self.values.items()))
        return f"Cocycle2({{{items}}})"


# ---------- validation ----------

def validate_algebra(L: ColorLieAlgebra) -> list:
    out = []
    d = L.dim
    for i in range(d):
        for j in range(i, d):
            target = L.spec.compose(L.degrees[i], L.degrees[j])
            bad = sorted(
                k
                for pair in ((i, j), (j, i))
                for k in L.bracket(*pair)
                if L.degrees[k] != target
            )
            if bad:
                out.append(
                    Violation("grading", (i, j), f"[{L.names[i]},{L.names[j]}] has components {sorted(set(bad))} outside degree {list(target)}")
                )
    for i in range(d):
        for j in range(i, d):
            s = L.e(i, j)
            diff = dict(L.bracket(i, j))
            _add_into(diff, L.bracket(j, i), s)
            if diff:
                out.append(Violation("antisymmetry", (i, j), f"[{L.names[i]},{L.names[j]}] + eps*[{L.names[j]},{L.names[i]}] != 0"))
    for i, j, k in combinations_with_replacement(range(d), 3):
        if _jacobi(L, i, j, k):
            out.append(Violation("jacobi", (i, j, k), f"Jacobi fails on ({L.names[i]},{L.names[j]},{L.names[k]})"))
    return out


def _jacobi(L: ColorLieAlgebra, a: int, b: int, c: int) -> dict:
    out: dict = {}
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        inner = L.bracket(y, z)
        if inner:
            _add_into(out, L.bracket_vec({x: L.field.one}, inner), L.e(z, x))
    return out


def _cocycle_sum(L: ColorLieAlgebra, w: Cocycle2, a: int, b: int, c: int) -> Cyc:
    out = L.field.zero
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        inner = L.bracket(y, z)
        if inner:
            out = out + L.e(z, x) * w.on_vec(x, inner)
    return out


def validate_cocycle(L: ColorLieAlgebra, w: Cocycle2) -> list:
    out = []
    d = L.dim
    for i in range(d):
        for j in range(i, d):
            if (w(i, j) or w(j, i)) and L.spec.compose(L.degrees[i], L.degrees[j]) != L.identity:
                out.append(Violation("cocycle-degree", (i, j), f"w({L.names[i]},{L.names[j]}) nonzero off the identity degree"))
    for i in range(d):
        for j in range(i, d):
            if w(i, j) + L.e(i, j) * w(j, i):
                out.append(Violation("cocycle-antisymmetry", (i, j), f"w({L.names[i]},{L.names[j]}) + eps*w({L.names[j]},{L.names[i]}) != 0"))
    for i, j, k in combinations_with_replacement(range(d), 3):
        v = _cocycle_sum(L, w, i, j, k)
        if v:
            out.append(Violation("cocycle-identity", (i, j, k), f"cyclic sum = {v}"))
    return out


# ---------- extensions and coboundaries ----------

def central_extension(L: ColorLieAlgebra, w: Cocycle2, name: str = "c") -> ColorLieAlgebra:
    """L + K*c with [x_i, x_j]' = [x_i, x_j] + w(x_i, x_j) c, c central of degree e."""
    bad = validate_cocycle(L, w)
    if bad:
        raise InvalidCocycle(f"cannot extend by an invalid cocycle: {bad[0]}")
    while name in L.names:
        name += "'"
    c = L.dim
    brackets = {}
    for i in range(L.dim):
        for j in range(L.dim):
            vec = dict(L.bracket(i, j))
            if w(i, j):
                vec[c] = w(i, j)
            if vec:
                brackets[(i, j)] = vec
    return ColorLieAlgebra(L.names + [name], L.degrees + [L.identity], L.eps, brackets)


def coboundary(L: ColorLieAlgebra, lam: dict) -> Cocycle2:
    """(d lam)(x_i, x_j) = -lam([x_i, x_j]) for a degree-zero 1-cochain ``lam``."""
    for k, v in lam.items():
        if v and L.degrees[k] != L.identity:
            raise ValueError(f"1-cochain is nonzero on {L.names[k]}, which has non-identity degree")
    vals = {}
    for (i, j), vec in L.table.items():
        s = L.field.zero
        for k, c in vec.items():
            if k in lam:
                s = s + c * lam[k]
        if s:
            vals[(i, j)] = -s
    return Cocycle2(L, vals)


def is_cohomologous(L: ColorLieAlgebra, w1: Cocycle2, w2: Cocycle2):
    """A degree-zero lam with d(lam) = w1 - w2, or None if none exists."""
    unknowns = [k for k in range(L.dim) if L.degrees[k] == L.identity]
    col = {k: n for n, k in enumerate(unknowns)}
    diff = w1 - w2
    rows, rhs = [], []
    for i in range(L.dim):
        for j in range(L.dim):
            r = {}
            for k, c in L.bracket(i, j).items():
                if k in col:
                    r[col[k]] = -c
            target = diff(i, j)
            if r or target:
                rows.append(r)
                rhs.append(target)
    sol = solve(rows, rhs, len(unknowns))
    if sol is None:
        return None
    return {k: sol.get(col[k], L.field.zero) for k in unknowns}


def wedge2_pairs(L: ColorLieAlgebra, support=None):
    """Basis pairs of the eps-exterior square, strict at even generators.

    With ``support`` given, keep only pairs whose degrees multiply to it.
    """
    out = []
    for i in range(L.dim):
        for j in range(i, L.dim):
            if i == j and not L.is_odd(i):
                continue
            if support is not None and L.spec.compose(L.degrees[i], L.degrees[j]) != support:
                continue
            out.append((i, j))
    return out


def _form_from_coords(L, pairs, vec) -> Cocycle2:
    entries = {pairs[n]: a for n, a in vec.items() if a}
    return Cocycle2.from_entries(L, entries)


def _h2_block(L: ColorLieAlgebra, support):
    pairs = wedge2_pairs(L, support)
    col = {p: n for n, p in enumerate(pairs)}

    def coord(i, j):
        # w(x_i, x_j) in terms of the wedge coordinate of (min, max)
        if i <= j:
            n = col.get((i, j))
            return None if n is None else (n, L.field.one)
        n = col.get((j, i))
        return None if n is None else (n, -L.e(i, j))

    # cocycle identity, one equation per triple
    rows = []
    for a, b, c in combinations_with_replacement(range(L.dim), 3):
        r: dict = {}
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            for k, cf in L.bracket(y, z).items():
                t = coord(x, k)
                if t is not None:
                    n, s = t
                    _add_into(r, {n: s}, L.e(z, x) * cf)
        if r:
            rows.append(r)
    Z = nullspace(rows, len(pairs), L.field.one)
    # coboundaries of 1-cochains supported on the same degree
    B = []
    for k in range(L.dim):
        if L.degrees[k] != support:
            continue
        v: dict = {}
        for (i, j), n in col.items():
            c = L.bracket(i, j).get(k)
            if c:
                v[n] = -c
        if v:
            B.append(v)
    rb = rank(B)
    reps = []
    basis = list(B)
    cur = rb
    for z in Z:
        r = rank(basis + [z])
        if r > cur:
            basis.append(z)
            cur = r
            reps.append(_form_from_coords(L, pairs, z))
    return len(Z) - rb, reps


def h2_scalar(L: ColorLieAlgebra, all_degrees: bool = False):
    """dim H^2(L, K) for degree-zero cochains, with representative cocycles.

    With ``all_degrees`` the result is a dict keyed by the support degree of
    the cochains (the identity block is the degree-zero answer).
    """
    if not all_degrees:
        return _h2_block(L, L.identity)
    supports = sorted({L.spec.compose(L.degrees[i], L.degrees[j]) for i in range(L.dim) for j in range(L.dim)} | {L.identity})
    return {s: _h2_block(L, s) for s in supports}
