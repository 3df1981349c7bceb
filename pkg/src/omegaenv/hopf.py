"""Color Hopf structure on U(L) and the Hopf-ideal obstruction for twisted U_w(L).

Tensor elements are dicts ``{(left_word, right_word): coeff}``.  With
``normalize`` the factors are PBW monomials; in the free variants they are
arbitrary words of T(L).
"""

from __future__ import annotations

from .enveloping import EnvelopingAlgebra, padd
from .grading import Violation

__all__ = [
    "TwistedHopfError",
    "braided_mul",
    "coproduct",
    "counit",
    "antipode",
    "check_hopf_axioms",
    "hopf_ideal_check",
]


class TwistedHopfError(ValueError):
    pass


def _require_untwisted(E: EnvelopingAlgebra) -> None:
    if not E.omega.is_zero():
        raise TwistedHopfError("Hopf operations need a zero twist; use hopf_ideal_check for U_w(L)")


def _tensor_nf(E: EnvelopingAlgebra, t: dict) -> dict:
    out: dict = {}
    for (a, b), c in t.items():
        na, nb = E.nf({a: E.one}), E.nf({b: E.one})
        for wa, ca in na.items():
            for wb, cb in nb.items():
                padd(out, {(wa, wb): c * ca * cb})
    return out


def braided_mul(E: EnvelopingAlgebra, s: dict, t: dict, normalize: bool = True) -> dict:
    """(a x b) * (a' x b') = eps(|b|, |a'|) aa' x bb'."""
    eps = E.L.eps
    out: dict = {}
    for (a, b), c in s.items():
        gb = E.degree(b)
        for (a2, b2), c2 in t.items():
            padd(out, {(a + a2, b + b2): c * c2 * eps(gb, E.degree(a2))})
    return _tensor_nf(E, out) if normalize else out


def _primitive(E: EnvelopingAlgebra, i: int) -> dict:
    return {((i,), ()): E.one, ((), (i,)): E.one}


def _free_coproduct(E: EnvelopingAlgebra, word) -> dict:
    out = {((), ()): E.one}
    for i in word:
        out = braided_mul(E, out, _primitive(E, i), normalize=False)
    return out


def coproduct(E: EnvelopingAlgebra, a: dict) -> dict:
    _require_untwisted(E)
    memo = E.__dict__.setdefault("_coproduct_memo", {(): {((), ()): E.one}})

    def mono(m):
        hit = memo.get(m)
        if hit is None:
            hit = braided_mul(E, mono(m[:-1]), _primitive(E, m[-1]))
            memo[m] = hit
        return hit

    out: dict = {}
    for m, c in E.nf(a).items():
        padd(out, mono(m), c)
    return out


def counit(E: EnvelopingAlgebra, a: dict):
    return E.nf(a).get((), E.field.zero)


def antipode(E: EnvelopingAlgebra, a: dict) -> dict:
    """S(x_1...x_k) = (-1)^k prod_{r<s} eps(x_r, x_s) x_k...x_1."""
    _require_untwisted(E)
    e = E.L.e
    out: dict = {}
    for m, c in E.nf(a).items():
        sign = -E.one if len(m) % 2 else E.one
        for r in range(len(m)):
            for s in range(r + 1, len(m)):
                sign = sign * e(m[r], m[s])
        padd(out, E.nf({tuple(reversed(m)): sign}), c)
    return out


def _mult(E: EnvelopingAlgebra, t: dict) -> dict:
    out: dict = {}
    for (a, b), c in t.items():
        padd(out, E.nf({a + b: E.one}), c)
    return out


def check_hopf_axioms(E: EnvelopingAlgebra, max_degree: int = 4) -> dict:
    """Coassociativity, counit, antipode and multiplicativity of the coproduct
    on every PBW monomial (and pair of monomials) of total length <= max_degree."""
    _require_untwisted(E)
    basis = E.pbw_basis(max_degree)
    fails: list = []
    counts = {"coassociativity": 0, "counit": 0, "antipode": 0, "algebra_map": 0}
    one = E.one
    for m in basis:
        a = {m: one}
        D = coproduct(E, a)
        left: dict = {}
        right: dict = {}
        for (u, v), c in D.items():
            for (u1, u2), c1 in coproduct(E, {u: one}).items():
                padd(left, {(u1, u2, v): c * c1})
            for (v1, v2), c2 in coproduct(E, {v: one}).items():
                padd(right, {(u, v1, v2): c * c2})
        counts["coassociativity"] += 1
        if left != right:
            fails.append(("coassociativity", m))
        eps_l: dict = {}
        eps_r: dict = {}
        for (u, v), c in D.items():
            if not u:
                padd(eps_l, {v: c})
            if not v:
                padd(eps_r, {u: c})
        counts["counit"] += 1
        if eps_l != a or eps_r != a:
            fails.append(("counit", m))
        target = E.scalar(counit(E, a))
        s_id: dict = {}
        id_s: dict = {}
        for (u, v), c in D.items():
            padd(s_id, E.mul(antipode(E, {u: one}), {v: one}), c)
            padd(id_s, E.mul({u: one}, antipode(E, {v: one})), c)
        counts["antipode"] += 1
        if s_id != target or id_s != target:
            fails.append(("antipode", m))
    for m1 in basis:
        for m2 in basis:
            if len(m1) + len(m2) > max_degree:
                continue
            counts["algebra_map"] += 1
            lhs = coproduct(E, E.mul({m1: one}, {m2: one}))
            rhs = braided_mul(E, coproduct(E, {m1: one}), coproduct(E, {m2: one}))
            if lhs != rhs:
                fails.append(("algebra_map", m1, m2))
    return {
        "max_degree": max_degree,
        "checked": counts,
        "failures": [[f[0]] + [E.mono_str(w) or "1" for w in f[1:]] for f in fails],
        "ok": not fails,
    }


def _relation(E: EnvelopingAlgebra, i: int, j: int) -> dict:
    """x_i x_j - eps(i, j) x_j x_i - [x_i, x_j] - w(x_i, x_j) as a free polynomial."""
    L = E.L
    r: dict = {}
    padd(r, {(i, j): E.one})
    padd(r, {(j, i): -L.e(i, j)})
    for k, c in L.bracket(i, j).items():
        padd(r, {(k,): -c})
    w = E.omega(i, j)
    if w:
        padd(r, {(): -w})
    return r


def hopf_ideal_check(E: EnvelopingAlgebra) -> dict:
    """Counit and coproduct of each defining relation r_ij, i <= j.

    Returns ``{"obstructions": [...], "violations": [...]}``.  The coproduct
    residue is Delta(r) - r x 1 - 1 x r computed in T(L) x T(L) and then
    reduced factorwise modulo the defining ideal.
    """
    L = E.L
    obstructions = []
    violations = []
    for i in range(L.dim):
        for j in range(i, L.dim):
            r = _relation(E, i, j)
            if not r:
                continue
            cu = r.get((), E.field.zero)
            free: dict = {}
            for word, c in r.items():
                padd(free, _free_coproduct(E, word), c)
            for word, c in r.items():
                padd(free, {(word, ()): -c})
                padd(free, {((), word): -c})
            residue = _tensor_nf(E, free)
            if not cu and not residue:
                continue
            res_scalar = residue.get(((), ()), E.field.zero)
            extra = {k: v for k, v in residue.items() if k != ((), ())}
            entry = {"i": L.names[i], "j": L.names[j], "counit": str(cu), "coproduct_residue": str(res_scalar)}
            if extra:
                entry["coproduct_residue_other"] = {
                    f"{E.mono_str(a)}|{E.mono_str(b)}": str(c) for (a, b), c in sorted(extra.items())
                }
            obstructions.append(entry)
            violations.append(Violation("hopf-ideal", (i, j), f"counit {cu}, coproduct residue {res_scalar}"))
    return {"obstructions": obstructions, "violations": violations}
