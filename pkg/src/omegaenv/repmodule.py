"""Finite-dimensional graded (w, L)-modules, induced U_w(L)-actions and
truncated adjoint modules."""

from __future__ import annotations

from .colorlie import ColorLieAlgebra, Cocycle2
from .enveloping import EnvelopingAlgebra, padd
from .grading import Violation
from .linalg import Matrix

__all__ = [
    "GradedModule",
    "ClosureError",
    "validate_module",
    "module_defect",
    "measured_twist",
    "induce_action",
    "adjoint_truncated",
    "trivial_module",
]


class ClosureError(AssertionError):
    pass


def identity_matrix(n: int, one) -> Matrix:
    return Matrix(n, n, [{i: one} for i in range(n)])


class GradedModule:
    """Basis with degrees, one action matrix per generator, and a twist.

    Matrices act on column vectors: entry (r, s) of ``actions[i]`` is the
    coefficient of basis vector r in x_i . m_s.
    """

    def __init__(self, name: str, L: ColorLieAlgebra, basis_names, degrees, actions, twist: Cocycle2 | None = None, twist_label: str | None = None):
        self.name = name
        self.L = L
        self.basis_names = list(basis_names)
        self.degrees = [L.spec.element(d) for d in degrees]
        n = len(self.basis_names)
        self.actions = {}
        for i, mat in actions.items():
            if not isinstance(mat, Matrix):
                if len(mat) != n or any(len(r) != n for r in mat):
                    raise ValueError(f"action of {L.names[i]} on module {name!r} must be {n}x{n}")
                mat = Matrix.from_dense([[L.field(v) for v in r] for r in mat], n)
            self.actions[i] = mat
        self.twist = twist if twist is not None else Cocycle2.zero(L)
        self.twist_label = twist_label or ("zero" if self.twist.is_zero() else "custom")

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def action(self, i: int) -> Matrix:
        m = self.actions.get(i)
        return m if m is not None else Matrix(self.dim, self.dim)

    def identity(self) -> Matrix:
        return identity_matrix(self.dim, self.L.field.one)

    def __repr__(self):
        return f"GradedModule({self.name!r}, dim={self.dim})"


def trivial_module(L: ColorLieAlgebra) -> GradedModule:
    """The one-dimensional module K in degree e with every generator acting by 0."""
    return GradedModule("trivial", L, ["1"], [L.identity], {}, Cocycle2.zero(L), "zero")


def _bracket_operator(L: ColorLieAlgebra, M: GradedModule, i: int, j: int) -> Matrix:
    """phi(x_i) phi(x_j) - eps(i, j) phi(x_j) phi(x_i) - phi([x_i, x_j])."""
    A, B = M.action(i), M.action(j)
    out = (A @ B) - (B @ A).scaled(L.e(i, j))
    for k, c in L.bracket(i, j).items():
        out = out - M.action(k).scaled(c)
    return out


def module_defect(L: ColorLieAlgebra, w: Cocycle2, M: GradedModule, i: int, j: int) -> Matrix:
    """Left side minus right side of the (w, L)-module identity for (x_i, x_j)."""
    out = _bracket_operator(L, M, i, j)
    if w(i, j):
        out = out - M.identity().scaled(w(i, j))
    return out


def _matrix_str(M: Matrix) -> str:
    return "; ".join(f"({r},{s})={v}" for r, s, v in M.nonzero_entries())


def validate_module(L: ColorLieAlgebra, w: Cocycle2, M: GradedModule) -> list:
    out = []
    for i in sorted(M.actions):
        for r, s, _ in M.actions[i].nonzero_entries():
            if M.degrees[r] != L.spec.compose(L.degrees[i], M.degrees[s]):
                out.append(Violation("module-degree", (i, r, s), f"{L.names[i]} maps {M.basis_names[s]} outside degree"))
    for i in range(L.dim):
        for j in range(i, L.dim):
            D = module_defect(L, w, M, i, j)
            if not D.is_zero():
                out.append(Violation("module-relation", (i, j), _matrix_str(D)))
    return out


def measured_twist(L: ColorLieAlgebra, M: GradedModule):
    """The cocycle t with [[phi x, phi y]] - phi[x, y] = t(x, y) id, or None if
    some bracket defect is not a scalar matrix."""
    vals = {}
    for i in range(L.dim):
        for j in range(L.dim):
            D = _bracket_operator(L, M, i, j)
            if D.is_zero():
                continue
            c = D[0, 0]
            if c is None or D != M.identity().scaled(c):
                return None
            vals[(i, j)] = c
    return Cocycle2(L, vals)


class InducedAction:
    """phi extended multiplicatively to words and normal-form elements."""

    def __init__(self, E: EnvelopingAlgebra, M: GradedModule):
        self.E = E
        self.M = M
        self._cache: dict = {(): M.identity()}

    def word_matrix(self, word) -> Matrix:
        hit = self._cache.get(word)
        if hit is None:
            hit = self.M.action(word[0]) @ self.word_matrix(word[1:])
            self._cache[word] = hit
        return hit

    def __call__(self, poly: dict) -> Matrix:
        out = Matrix(self.M.dim, self.M.dim)
        for word, c in poly.items():
            out = out + self.word_matrix(word).scaled(c)
        return out


def induce_action(E: EnvelopingAlgebra, M: GradedModule) -> InducedAction:
    bad = validate_module(E.L, E.omega, M)
    if bad:
        raise ValueError(f"module {M.name!r} is not a (w, L)-module for this twist: {bad[0]}")
    return InducedAction(E, M)


def adjoint_truncated(E: EnvelopingAlgebra, N: int) -> GradedModule:
    """U_{<=N} under ad(x) m = x m - eps(|x|, |m|) m x."""
    L = E.L
    basis = E.pbw_basis(N)
    index = {m: k for k, m in enumerate(basis)}
    degrees = [E.degree(m) for m in basis]
    actions = {}
    for i in range(L.dim):
        mat = Matrix(len(basis), len(basis))
        for s, m in enumerate(basis):
            img = E.nf({(i,) + m: E.one})
            padd(img, E.nf({m + (i,): E.one}), -L.eps(L.degrees[i], degrees[s]))
            for w, c in img.items():
                r = index.get(w)
                if r is None:
                    raise ClosureError(f"ad({L.names[i]}) maps {E.mono_str(m) or '1'} outside U_<={N}: {E.format(img)}")
                mat.rows[r][s] = c
        actions[i] = mat
    names = [E.mono_str(m) or "1" for m in basis]
    return GradedModule(f"adjoint<={N}", L, names, degrees, actions, Cocycle2.zero(L), "zero")
