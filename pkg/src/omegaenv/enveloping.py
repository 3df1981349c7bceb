"""Generalized enveloping algebras U_w(L) as a straightening rewriting system.

Elements are sparse dicts ``{word: coefficient}`` where a word is a tuple of
generator indices.  A word is *ordered* (a PBW monomial) when its generator
ranks are weakly increasing and strictly increasing at odd generators.

Rewrite rules, for generators a, b with rank(a) > rank(b)::

    x_a x_b  ->  eps(a, b) x_b x_a + [x_a, x_b] + w(x_a, x_b)
    x_a x_a  ->  1/2 ([x_a, x_a] + w(x_a, x_a))          (a odd)
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct

from .colorlie import ColorLieAlgebra, Cocycle2
from .grading import Violation

__all__ = [
    "EnvelopingAlgebra",
    "UntrustedAlgebra",
    "StepBudgetExceeded",
    "padd",
    "normal_form",
    "multiply",
    "bracket_in_U",
    "check_overlaps",
    "dims",
    "symbol",
    "filtered_iso",
    "step_bound",
]


class UntrustedAlgebra(ValueError):
    def __init__(self, report):
        self.report = report
        first = report[0] if report else None
        super().__init__(f"overlap check failed ({len(report)} unresolved ambiguities); first: {first}")


class StepBudgetExceeded(RuntimeError):
    pass


def padd(acc: dict, poly: dict, scale=None) -> dict:
    """acc += scale * poly, in place; zero coefficients are dropped."""
    for w, a in poly.items():
        if scale is not None:
            a = a * scale
        v = acc.get(w)
        v = a if v is None else v + a
        if v:
            acc[w] = v
        else:
            acc.pop(w, None)
    return acc


def step_bound(length: int, ngens: int) -> int:
    """Upper bound on rewrite steps needed to straighten one word.

    Each step on a word either removes one inversion (pairs out of order, or
    equal odd pairs; at most l(l-1)/2 of them) and spawns at most ``ngens``
    words of length l-1 plus one of length l-2, or shortens the word.
    """
    S = [0, 0]
    for l in range(2, length + 1):
        inv = l * (l - 1) // 2
        S.append(inv * (1 + ngens * S[l - 1] + S[l - 2]))
    return S[length] if length < len(S) else S[-1]


class EnvelopingAlgebra:
    """U_w(L) with a fixed total order on generators.

    Construction runs :meth:`check_overlaps`; an algebra whose ambiguities do
    not all resolve raises :class:`UntrustedAlgebra` unless ``force`` is set,
    in which case it is usable but carries ``trusted = False``.
    """

    def __init__(self, L: ColorLieAlgebra, omega: Cocycle2 | None = None, order=None, force: bool = False):
        self.L = L
        self.field = L.field
        self.omega = omega if omega is not None else Cocycle2.zero(L)
        d = L.dim
        self.order = list(range(d)) if order is None else [L.index(o) for o in order]
        if sorted(self.order) != list(range(d)):
            raise ValueError(f"order {order} is not a permutation of the generators")
        self.rank = [0] * d
        for pos, i in enumerate(self.order):
            self.rank[i] = pos
        self.odd = [L.is_odd(i) for i in range(d)]
        self.one = self.field.one
        self._half = Fraction(1, 2)
        self._rules = {}
        for a in range(d):
            for b in range(d):
                if self.rank[a] > self.rank[b]:
                    self._rules[(a, b)] = (L.e(a, b), L.bracket(a, b), self.omega(a, b))
                elif a == b and self.odd[a]:
                    self._rules[(a, a)] = (
                        None,
                        {k: c * self._half for k, c in L.bracket(a, a).items()},
                        self.omega(a, a) * self._half,
                    )
        self._memo: dict = {}
        self.overlap_report = check_overlaps(self)
        self.trusted = not self.overlap_report
        if not self.trusted and not force:
            raise UntrustedAlgebra(self.overlap_report)

    # ----- basic helpers -----
    @property
    def dim_L(self) -> int:
        return self.L.dim

    def gen(self, i: int) -> dict:
        return {(i,): self.one}

    def scalar(self, c) -> dict:
        c = self.field(c)
        return {(): c} if c else {}

    def word(self, text_or_names) -> tuple:
        names = text_or_names.split() if isinstance(text_or_names, str) else text_or_names
        return tuple(self.L.index(n) for n in names)

    def is_ordered(self, word) -> bool:
        r = self.rank
        for a, b in zip(word, word[1:]):
            if r[a] > r[b] or (a == b and self.odd[a]):
                return False
        return True

    def reducible(self, a: int, b: int) -> bool:
        return (a, b) in self._rules

    def degree(self, word) -> tuple:
        return self.L.word_degree(word)

    def mono_str(self, word) -> str:
        return ".".join(self.L.names[i] for i in word)

    def format(self, poly: dict) -> dict:
        """JSON-ready form: ``{"q.p": "1", "": "-1"}`` in PBW order."""
        keys = sorted(poly, key=self.sort_key)
        return {self.mono_str(w): str(poly[w]) for w in keys}

    def sort_key(self, word):
        return (len(word), tuple(self.rank[i] for i in word))

    def pbw_monomials(self, n: int):
        """Ordered monomials of length exactly n, in PBW order."""
        out = []

        def rec(start, left, prefix):
            if left == 0:
                out.append(prefix)
                return
            for pos in range(start, self.L.dim):
                g = self.order[pos]
                nxt = pos + 1 if self.odd[g] else pos
                rec(nxt, left - 1, prefix + (g,))

        rec(0, n, ())
        return out

    def pbw_basis(self, N: int):
        out = []
        for n in range(N + 1):
            out.extend(self.pbw_monomials(n))
        return out

    # ----- rewriting -----
    def rewrite_at(self, word, p: int) -> dict:
        """One rule application at positions (p, p+1) of ``word``."""
        a, b = word[p], word[p + 1]
        sign, br, w = self._rules[(a, b)]
        pre, post = word[:p], word[p + 2:]
        out: dict = {}
        if sign is not None:
            padd(out, {pre + (b, a) + post: sign})
        for k, c in br.items():
            padd(out, {pre + (k,) + post: c})
        if w:
            padd(out, {pre + post: w})
        return out

    def _times_gen(self, m: tuple, g: int) -> dict:
        key = (m, g)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if not m:
            res = {(g,): self.one}
        else:
            last = m[-1]
            if not self.reducible(last, g):
                res = {m + (g,): self.one}
            else:
                head = m[:-1]
                sign, br, w = self._rules[(last, g)]
                res = {}
                if sign is not None:
                    for mono, c in self._times_gen(head, g).items():
                        padd(res, self._times_gen(mono, last), c * sign)
                for k, c in br.items():
                    padd(res, self._times_gen(head, k), c)
                if w:
                    padd(res, {head: w})
        self._memo[key] = res
        return res

    def times_word(self, poly: dict, word) -> dict:
        cur = poly
        for g in word:
            nxt: dict = {}
            for mono, c in cur.items():
                padd(nxt, self._times_gen(mono, g), c)
            cur = nxt
        return cur

    def nf(self, poly: dict) -> dict:
        out: dict = {}
        for word, c in poly.items():
            padd(out, self.times_word({(): self.one}, word), c)
        return out

    def mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for wb, cb in b.items():
            padd(out, self.times_word(a, wb), cb)
        return out

    def reduce_naive(self, poly: dict, strategy: str = "left", budget=None):
        """Exhaustive rewriting with a fixed strategy; returns (normal form, steps).

        Independent of the memoized path used by :meth:`nf`; kept as an
        oracle and for the overlap check.
        """
        work = dict(poly)
        done: dict = {}
        steps = 0
        if budget is None:
            longest = max((len(w) for w in poly), default=0)
            budget = max(1, len(poly)) * step_bound(longest, self.L.dim)
        while work:
            word = min(work, key=self.sort_key) if strategy == "left" else max(work, key=self.sort_key)
            c = work.pop(word)
            positions = [p for p in range(len(word) - 1) if self.reducible(word[p], word[p + 1])]
            if not positions:
                padd(done, {word: c})
                continue
            p = positions[0] if strategy == "left" else positions[-1]
            steps += 1
            if steps > budget:
                raise StepBudgetExceeded(f"rewriting exceeded {budget} steps")
            for w2, c2 in self.rewrite_at(word, p).items():
                if self.is_ordered(w2):
                    padd(done, {w2: c2 * c})
                else:
                    padd(work, {w2: c2 * c})
        return done, steps

    # ----- filtration and symbols -----
    def sym_sort(self, word):
        """Straighten ``word`` inside S(L): returns (sign, ordered word) or None."""
        w = list(word)
        sign = self.one
        r = self.rank
        n = len(w)
        for i in range(n):
            for j in range(n - 1 - i):
                a, b = w[j], w[j + 1]
                if r[a] > r[b]:
                    sign = sign * self.L.e(a, b)
                    w[j], w[j + 1] = b, a
        for a, b in zip(w, w[1:]):
            if a == b and self.odd[a]:
                return None
        return sign, tuple(w)

    def sym_mul(self, s: dict, t: dict) -> dict:
        out: dict = {}
        for m1, c1 in s.items():
            for m2, c2 in t.items():
                r = self.sym_sort(m1 + m2)
                if r is not None:
                    padd(out, {r[1]: r[0] * c1 * c2})
        return out


# ---------- module-level operations ----------

def normal_form(E: EnvelopingAlgebra, p: dict) -> dict:
    return E.nf(p)


def multiply(E: EnvelopingAlgebra, a: dict, b: dict) -> dict:
    return E.mul(a, b)


def bracket_in_U(E: EnvelopingAlgebra, i: int, j: int) -> dict:
    """x_i x_j - eps(i, j) x_j x_i in normal form."""
    out = E.nf({(i, j): E.one})
    padd(out, E.nf({(j, i): E.one}), -E.L.e(i, j))
    return out


def check_overlaps(E: EnvelopingAlgebra) -> list:
    """Resolve every ambiguity x_k x_j x_i both ways; list the failures.

    Also checks that the defining relations not used as rules (pairs in
    increasing order, squares of even generators) reduce to zero, since the
    rewriting system must generate the whole ideal.
    """
    out = []
    L = E.L
    d = L.dim
    for k, j, i in iproduct(range(d), repeat=3):
        if not (E.reducible(k, j) and E.reducible(j, i)):
            continue
        word = (k, j, i)
        left, _ = E.reduce_naive(E.rewrite_at(word, 0))
        right, _ = E.reduce_naive(E.rewrite_at(word, 1))
        diff = padd(dict(left), right, -E.one)
        if diff:
            out.append(
                Violation(
                    "overlap",
                    word,
                    f"{E.mono_str(word)}: left - right = {E.format(diff)}",
                )
            )
    for a in range(d):
        for b in range(d):
            if E.reducible(a, b) or (a == b and E.odd[a]):
                continue
            # relation a b - eps(a,b) b a - [a,b] - w(a,b)
            rel = {(a, b): E.one}
            padd(rel, {(b, a): E.one}, -L.e(a, b))
            padd(rel, {(k,): c for k, c in L.bracket(a, b).items()}, -E.one)
            if E.omega(a, b):
                padd(rel, {(): -E.omega(a, b)})
            red, _ = E.reduce_naive(rel)
            if red:
                out.append(Violation("relation", (a, b), f"relation for ({L.names[a]},{L.names[b]}) reduces to {E.format(red)}"))
    return out


def symmetric_dims(E: EnvelopingAlgebra, N: int) -> dict:
    """Dimensions of S(L) per (n, G-degree) from its Hilbert series.

    Even generators contribute 1/(1 - t g), odd ones (1 + t g).
    """
    L = E.L
    series = {(0, L.identity): 1}
    for i in range(L.dim):
        g = L.degrees[i]
        maxpow = 1 if E.odd[i] else N
        nxt: dict = {}
        for (n, h), c in series.items():
            cur = h
            for a in range(0, maxpow + 1):
                if n + a > N:
                    break
                key = (n + a, cur)
                nxt[key] = nxt.get(key, 0) + c
                cur = L.spec.compose(cur, g)
        series = nxt
    out: dict = {}
    for (n, h), c in series.items():
        out.setdefault(n, {})[h] = c
    for n in range(N + 1):
        out.setdefault(n, {})
    return out


def dims(E: EnvelopingAlgebra, N: int) -> dict:
    """PBW monomial counts per (length, G-degree) against S(L)."""
    pbw: dict = {}
    for n in range(N + 1):
        row: dict = {}
        for m in E.pbw_monomials(n):
            g = E.degree(m)
            row[g] = row.get(g, 0) + 1
        pbw[n] = row
    sym = symmetric_dims(E, N)
    return {
        "pbw": pbw,
        "symmetric": sym,
        "per_degree": [sum(pbw[n].values()) for n in range(N + 1)],
        "match": pbw == sym,
    }


def symbol(E: EnvelopingAlgebra, a: dict) -> dict:
    """Top filtration component of a normal-form element."""
    if not a:
        raise ValueError("the zero element has no symbol")
    top = max(len(w) for w in a)
    return {w: c for w, c in a.items() if len(w) == top}


def psi_image(E2: EnvelopingAlgebra, lam: dict, word) -> dict:
    """Image of a word under x_i -> x_i + lam(x_i), computed in E2."""
    cur = {(): E2.one}
    for g in word:
        step = {(g,): E2.one}
        if lam.get(g):
            step[()] = lam[g]
        cur = E2.mul(cur, step)
    return cur


def filtered_iso(E1: EnvelopingAlgebra, E2: EnvelopingAlgebra, lam: dict, N: int) -> dict:
    """Check that x_i -> x_i + lam(x_i) induces a filtered isomorphism U_w1 -> U_w2."""
    from .colorlie import coboundary

    if E1.L is not E2.L:
        raise ValueError("filtered_iso needs two twists of the same color Lie algebra")
    L = E1.L
    if coboundary(L, lam) != E1.omega - E2.omega:
        raise ValueError("d(lambda) != w1 - w2; the cochain does not relate the two twists")
    relation_failures = []
    for i in range(L.dim):
        for j in range(L.dim):
            img = E2.mul(psi_image(E2, lam, (i,)), psi_image(E2, lam, (j,)))
            padd(img, E2.mul(psi_image(E2, lam, (j,)), psi_image(E2, lam, (i,))), -L.e(i, j))
            br = L.bracket(i, j)
            for k, c in br.items():
                padd(img, psi_image(E2, lam, (k,)), -c)
            if E1.omega(i, j):
                padd(img, {(): -E1.omega(i, j)})
            if img:
                relation_failures.append({"pair": [i, j], "residue": E2.format(img)})
    triangular_failures = []
    symbol_failures = []
    basis = E1.pbw_basis(N)
    for m in basis:
        img = psi_image(E2, lam, m)
        top = symbol(E2, img)
        if top != {m: E2.one}:
            symbol_failures.append(E1.mono_str(m))
        if any(len(w) > len(m) or (len(w) == len(m) and w != m) for w in img):
            triangular_failures.append(E1.mono_str(m))
    return {
        "relations_ok": not relation_failures,
        "relation_failures": relation_failures,
        "triangular_ok": not triangular_failures,
        "triangular_failures": triangular_failures,
        "symbol_identity_ok": not symbol_failures,
        "symbol_failures": symbol_failures,
        "basis_checked": len(basis),
        "max_degree": N,
        "iso": not (relation_failures or triangular_failures or symbol_failures),
    }
