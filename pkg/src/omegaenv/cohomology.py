"""Chevalley-Eilenberg cochains over the eps-exterior algebra, the free
resolution U (x) wedge L with its differential, and truncated Hochschild
cohomology through the adjoint module."""

from __future__ import annotations

from .colorlie import ColorLieAlgebra, Cocycle2, central_extension
from .enveloping import EnvelopingAlgebra, padd
from .linalg import Matrix
from .repmodule import GradedModule, InducedAction, adjoint_truncated, measured_twist

__all__ = [
    "NotAComplex",
    "wedge_basis",
    "wedge_normalize",
    "CochainSpace",
    "coboundary_matrix",
    "verify_complex",
    "cohomology_dims",
    "resolution_d",
    "verify_resolution",
    "hochschild_truncated",
]


class NotAComplex(ValueError):
    pass


# ---------- eps-exterior powers ----------

def wedge_basis(L: ColorLieAlgebra, n: int):
    """Weakly increasing index sequences, strict at even generators."""
    if n < 0:
        raise ValueError("wedge degree must be non-negative")
    out = []

    def rec(start, left, prefix):
        if left == 0:
            out.append(prefix)
            return
        for g in range(start, L.dim):
            rec(g if L.is_odd(g) else g + 1, left - 1, prefix + (g,))

    rec(0, n, ())
    return out


def wedge_normalize(L: ColorLieAlgebra, seq):
    """Rewrite <seq> on the wedge basis: (sign, sorted) or None when it vanishes.

    Adjacent swaps use <.., a, b, ..> = -eps(a, b) <.., b, a, ..>.
    """
    w = list(seq)
    sign = L.field.one
    n = len(w)
    for i in range(n):
        swapped = False
        for j in range(n - 1 - i):
            a, b = w[j], w[j + 1]
            if a > b:
                sign = -sign * L.e(a, b)
                w[j], w[j + 1] = b, a
                swapped = True
        if not swapped:
            break
    for a, b in zip(w, w[1:]):
        if a == b and not L.is_odd(a):
            return None
    return sign, tuple(w)


def eps_prefix(L: ColorLieAlgebra, seq, i: int):
    """prod_{h < i} eps(|x_h|, |x_i|) for 0-based position i."""
    out = L.field.one
    for h in range(i):
        out = out * L.e(seq[h], seq[i])
    return out


# ---------- cochain spaces and the coboundary ----------

class CochainSpace:
    """Hom(wedge^n L, M) split into blocks by cochain degree |m| - |w|."""

    def __init__(self, L: ColorLieAlgebra, M: GradedModule, n: int):
        self.L = L
        self.M = M
        self.n = n
        self.wedges = wedge_basis(L, n)
        self.blocks: dict = {}
        spec = L.spec
        for w in self.wedges:
            wdeg = spec.invert(L.word_degree(w))
            for r in range(M.dim):
                g = spec.compose(M.degrees[r], wdeg)
                self.blocks.setdefault(g, []).append((w, r))
        self.index = {g: {b: k for k, b in enumerate(basis)} for g, basis in self.blocks.items()}

    def block(self, g):
        return self.blocks.get(g, [])

    def dim(self, g=None) -> int:
        if g is None:
            return sum(len(b) for b in self.blocks.values())
        return len(self.block(g))


def _delta_terms(L: ColorLieAlgebra, target, g):
    """Terms of (delta f)(target) as (coef, generator or None, source wedge).

    ``g`` is the cochain degree; moving x_i past f contributes eps(g, |x_i|).
    """
    terms = []
    m = len(target)
    for i in range(m):
        x = target[i]
        coef = eps_prefix(L, target, i) * L.eps(g, L.degrees[x])
        if i % 2:
            coef = -coef
        terms.append((coef, x, target[:i] + target[i + 1:]))
    for i in range(m):
        for j in range(i + 1, m):
            br = L.bracket(target[i], target[j])
            if not br:
                continue
            coef = eps_prefix(L, target, i) * eps_prefix(L, target, j) * L.e(target[j], target[i])
            if (i + j) % 2:
                coef = -coef
            rest = tuple(target[h] for h in range(m) if h not in (i, j))
            for k, c in br.items():
                r = wedge_normalize(L, (k,) + rest)
                if r is not None:
                    terms.append((coef * c * r[0], None, r[1]))
    return terms


def coboundary_matrix(L: ColorLieAlgebra, M: GradedModule, n: int, g=None) -> Matrix:
    """Matrix of delta_n on the degree-``g`` block (default: identity degree)."""
    if g is None:
        g = L.identity
    src = CochainSpace(L, M, n)
    dst = CochainSpace(L, M, n + 1)
    return _coboundary_block(L, M, src, dst, g)


def _coboundary_block(L, M, src, dst, g) -> Matrix:
    rows_basis = dst.block(g)
    cols = src.index.get(g, {})
    mat = Matrix(len(rows_basis), len(src.block(g)))
    if not rows_basis or not cols:
        return mat
    cache: dict = {}
    for row, (target, r) in enumerate(rows_basis):
        terms = cache.get(target)
        if terms is None:
            terms = cache[target] = _delta_terms(L, target, g)
        for coef, x, w in terms:
            if x is None:
                col = cols.get((w, r))
                if col is not None:
                    mat.add_to(row, col, coef)
            else:
                for s, a in M.action(x).rows[r].items():
                    col = cols.get((w, s))
                    if col is not None:
                        mat.add_to(row, col, coef * a)
    return mat


def _degrees(spaces, degree):
    if degree == "identity":
        return [spaces[0].L.identity]
    if degree == "all":
        return sorted(set().union(*(s.blocks for s in spaces)))
    if isinstance(degree, tuple):
        return [degree]
    raise ValueError(f"degree filter must be 'identity' or 'all', got {degree!r}")


def _twist_pairing(E: EnvelopingAlgebra, M: GradedModule, src: CochainSpace, dst: CochainSpace, g) -> Matrix:
    """Matrix of f -> f o (dbar o dbar) from C^n to C^{n+2} over U_w(L)."""
    rows_basis = dst.block(g)
    cols = src.index.get(g, {})
    mat = Matrix(len(rows_basis), len(src.block(g)))
    L = E.L
    act = InducedAction(E, M)
    cache: dict = {}
    for row, (target, r) in enumerate(rows_basis):
        dd = cache.get(target)
        if dd is None:
            one = {((), target): E.one}
            dd = cache[target] = resolution_d(E, resolution_d(E, one))
        for (u, w), c in dd.items():
            sign = c * L.eps(g, E.degree(u))
            for s, a in act.word_matrix(u).rows[r].items():
                col = cols.get((w, s))
                if col is not None:
                    mat.add_to(row, col, sign * a)
    return mat


def verify_complex(L: ColorLieAlgebra, w: Cocycle2, M: GradedModule, n_max: int, degree="all") -> dict:
    """delta_{n+1} delta_n for n < n_max, per cochain-degree block.

    Alongside the measured composites the report carries, for each block,
    the operator f -> f o (dbar o dbar) of the resolution over U_w(L): the
    defect that the twist ``w`` itself puts on the complex.
    """
    spaces = [CochainSpace(L, M, n) for n in range(n_max + 2)]
    E = EnvelopingAlgebra(L, w, force=True)
    twist = measured_twist(L, M)
    blocks = {}
    all_zero = True
    for g in _degrees(spaces, degree):
        per_n = []
        for n in range(n_max):
            d0 = _coboundary_block(L, M, spaces[n], spaces[n + 1], g)
            d1 = _coboundary_block(L, M, spaces[n + 1], spaces[n + 2], g)
            comp = d1 @ d0
            pairing = _twist_pairing(E, M, spaces[n], spaces[n + 2], g)
            if not comp.is_zero():
                all_zero = False
            per_n.append(
                {
                    "n": n,
                    "composite_zero": comp.is_zero(),
                    "composite": _entries(comp, spaces[n + 2].block(g), spaces[n].block(g), L, M),
                    "twist_defect": _entries(pairing, spaces[n + 2].block(g), spaces[n].block(g), L, M),
                    "composite_equals_twist_defect": comp == pairing,
                }
            )
        blocks[g] = per_n
    return {
        "module": M.name,
        "measured_twist": None if twist is None else {f"{i},{j}": str(v) for (i, j), v in sorted(twist.values.items())},
        "measured_twist_zero": twist is not None and twist.is_zero(),
        "all_composites_zero": all_zero,
        "blocks": blocks,
    }


def _cochain_label(L, M, w, r):
    return "<" + ",".join(L.names[i] for i in w) + ">->" + M.basis_names[r]


def _entries(mat: Matrix, row_basis, col_basis, L, M):
    return [
        [_cochain_label(L, M, *row_basis[i]), _cochain_label(L, M, *col_basis[j]), str(v)]
        for i, j, v in mat.nonzero_entries()
    ]


def cohomology_dims(L: ColorLieAlgebra, M: GradedModule, n_max: int, degree="identity") -> dict:
    """dim H^n(L, M) for n <= n_max, per cochain-degree block.

    Raises :class:`NotAComplex` when some delta_{n+1} delta_n is nonzero.
    """
    spaces = [CochainSpace(L, M, n) for n in range(n_max + 2)]
    report = {}
    for g in _degrees(spaces, degree):
        mats = [_coboundary_block(L, M, spaces[n], spaces[n + 1], g) for n in range(n_max + 1)]
        for n in range(n_max):
            if not (mats[n + 1] @ mats[n]).is_zero():
                raise NotAComplex(f"delta^2 != 0 at n={n}, degree {list(g)} for module {M.name!r}")
        ranks = [m.rank() for m in mats]
        rows = []
        for n in range(n_max + 1):
            dim = spaces[n].dim(g)
            ker = dim - ranks[n]
            prev = ranks[n - 1] if n else 0
            rows.append({"n": n, "dim": dim, "rank": ranks[n], "kernel": ker, "H": ker - prev})
        report[g] = rows
    return report


# ---------- the free resolution ----------

def resolution_d(E: EnvelopingAlgebra, elt: dict) -> dict:
    """d(u (x) <x_1 ... x_n>) with U-coefficients in normal form.

    ``elt`` maps (monomial, wedge) to coefficients; brackets come from E.L, so
    E = U(L_w) gives the complex C and E = U_w(L) gives Cbar.
    """
    L = E.L
    out: dict = {}
    for (u, w), c in elt.items():
        m = len(w)
        if m == 0:
            continue
        for i in range(m):
            coef = eps_prefix(L, w, i) * c
            if i % 2:
                coef = -coef
            rest = w[:i] + w[i + 1:]
            prod = E.times_word({u: E.one}, (w[i],))
            padd(out, {(v, rest): a for v, a in prod.items()}, coef)
        for i in range(m):
            for j in range(i + 1, m):
                br = L.bracket(w[i], w[j])
                if not br:
                    continue
                coef = eps_prefix(L, w, i) * eps_prefix(L, w, j) * L.e(w[j], w[i]) * c
                if (i + j) % 2:
                    coef = -coef
                rest = tuple(w[h] for h in range(m) if h not in (i, j))
                for k, b in br.items():
                    r = wedge_normalize(L, (k,) + rest)
                    if r is not None:
                        padd(out, {(u, r[1]): coef * b * r[0]})
    return out


def _format_res(E: EnvelopingAlgebra, elt: dict) -> dict:
    keys = sorted(elt, key=lambda k: (len(k[1]), k[1], E.sort_key(k[0])))
    return {f"{E.mono_str(u) or '1'}@<{','.join(E.L.names[i] for i in w)}>": str(elt[(u, w)]) for u, w in keys}


def _augmented_ranks(spaces_by_n, dmap):
    """Ranks of d_n between consecutive spaces (lists of (u, w) basis keys)."""
    ranks = {}
    for n in range(1, len(spaces_by_n)):
        src, dst = spaces_by_n[n], spaces_by_n[n - 1]
        index = {b: k for k, b in enumerate(dst)}
        cols = []
        for key in src:
            img = dmap(key)
            col = {}
            for k2, v in img.items():
                r = index.get(k2)
                if r is None:
                    raise AssertionError(f"differential leaves the filtered piece: {k2}")
                col[r] = v
            cols.append(col)
        # rank of the transpose equals the rank
        ranks[n] = Matrix(len(cols), len(dst), cols).rank()
    return ranks


def verify_resolution(E: EnvelopingAlgebra, n_max: int = 4, deg_max: int = 5) -> dict:
    """Check the free resolution attached to E = U_w(L).

    (a) d o d = 0 on C = U(L_w) (x) wedge L_w for wedge degree <= n_max;
        the corresponding composite on Cbar = U_w(L) (x) wedge L is reported.
    (b) the associated graded of Cbar, i.e. the Koszul complex
        S(L) (x) wedge L, is exact in degrees >= 1 for total degree <= deg_max.
    (c) every filtered piece F_p C (p <= deg_max) is a resolution of K.
    """
    L = E.L
    Lw = central_extension(L, E.omega)
    Ec = EnvelopingAlgebra(Lw, force=not E.trusted)
    dd_failures = []
    for n in range(2, n_max + 1):
        for w in wedge_basis(Lw, n):
            dd = resolution_d(Ec, resolution_d(Ec, {((), w): Ec.one}))
            if dd:
                dd_failures.append({"wedge": [Lw.names[i] for i in w], "residue": _format_res(Ec, dd)})
    bar_defects = []
    for n in range(2, n_max + 1):
        for w in wedge_basis(L, n):
            dd = resolution_d(E, resolution_d(E, {((), w): E.one}))
            if dd:
                bar_defects.append({"wedge": [L.names[i] for i in w], "residue": _format_res(E, dd)})

    # (b) Koszul complex from symbols of the U_w products
    koszul = []
    koszul_exact = True
    for t in range(deg_max + 1):
        spaces = []
        for n in range(t + 1):
            spaces.append([(u, w) for w in wedge_basis(L, n) for u in E.pbw_monomials(t - n)])

        def dk(key, t=t):
            u, w = key
            out: dict = {}
            top = len(u) + 1
            for i in range(len(w)):
                coef = eps_prefix(L, w, i)
                if i % 2:
                    coef = -coef
                prod = E.times_word({u: E.one}, (w[i],))
                sym = {v: a for v, a in prod.items() if len(v) == top}
                rest = w[:i] + w[i + 1:]
                padd(out, {(v, rest): a for v, a in sym.items()}, coef)
            return out

        ranks = _augmented_ranks(spaces, dk)
        ranks.setdefault(len(spaces), 0)
        for n in range(len(spaces)):
            dim = len(spaces[n])
            h = dim - (ranks.get(n, 0)) - ranks.get(n + 1, 0)
            expected = 1 if (n == 0 and t == 0) else 0
            if h != expected:
                koszul_exact = False
            koszul.append({"total_degree": t, "n": n, "dim": dim, "H": h, "expected": expected})

    # (c) filtered pieces of C over U(L_w)
    filtered = []
    filtered_exact = True
    for p in range(deg_max + 1):
        spaces = []
        for n in range(min(p, n_max) + 1):
            spaces.append([(u, w) for w in wedge_basis(Lw, n) for u in Ec.pbw_basis(p - n)])

        def dc(key):
            return resolution_d(Ec, {key: Ec.one})

        ranks = _augmented_ranks(spaces, dc)
        top = len(spaces) - 1
        for n in range(top):
            dim = len(spaces[n])
            h = dim - ranks.get(n, 0) - ranks.get(n + 1, 0)
            expected = 1 if n == 0 else 0
            if h != expected:
                filtered_exact = False
            filtered.append({"filtration": p, "n": n, "dim": dim, "H": h, "expected": expected})

    return {
        "dd_zero": not dd_failures,
        "dd_failures": dd_failures,
        "bar_dd_defects": bar_defects,
        "koszul_exact": koszul_exact,
        "koszul": koszul,
        "filtered_exact": filtered_exact,
        "filtered": filtered,
        "n_max": n_max,
        "deg_max": deg_max,
    }


def hochschild_truncated(E: EnvelopingAlgebra, n: int, truncations) -> dict:
    """dim H^n(L, ad U_{<=N}) in the identity degree, for each N."""
    out = {}
    for N in truncations:
        M = adjoint_truncated(E, N)
        rep = cohomology_dims(E.L, M, n, "identity")
        out[N] = rep[E.L.identity][n]["H"]
    return out
