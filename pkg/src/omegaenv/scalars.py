"""Exact arithmetic in the cyclotomic fields Q(zeta_n).

An element is stored as the coefficient vector of its unique residue modulo
the n-th cyclotomic polynomial, so equality is coefficient-wise.  The case
n = 1 (and n = 2, where zeta = -1) is plain rational arithmetic.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "Cyc",
    "CycField",
    "ScalarParseError",
    "cyclotomic_poly",
    "totient",
    "parse_scalar",
    "root_of_unity_order",
]


class ScalarParseError(ValueError):
    pass


# ---------- polynomials over Q, little-endian coefficient lists ----------

def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _psub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


def _pdivmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] -= c * y
        _trim(a)
    return _trim(q), a


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Integer coefficients of Phi_n, constant term first."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    p = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            p, r = _pdivmod(p, [Fraction(c) for c in cyclotomic_poly(d)])
            assert not r
    return tuple(int(c) for c in p)


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple:
    """Reduced coefficient vectors of zeta^k for 0 <= k < n."""
    phi = len(cyclotomic_poly(n)) - 1
    monic = cyclotomic_poly(n)
    rows = []
    cur = [Fraction(0)] * phi
    cur[0] = Fraction(1)
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by zeta: shift up and fold the top coefficient back
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * monic[i]
    return tuple(rows)


# ---------- field elements ----------

class Cyc:
    """Element of Q(zeta_n) as a reduced coefficient tuple."""

    __slots__ = ("n", "c", "_hash")

    def __init__(self, n: int, coeffs):
        self.n = n
        self.c = coeffs
        self._hash = None

    # construction helpers
    @classmethod
    def rational(cls, n: int, value) -> "Cyc":
        phi = _phi(n)
        return cls(n, (Fraction(value),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def from_poly(cls, n: int, poly) -> "Cyc":
        """Reduce an arbitrary coefficient list (in zeta) modulo Phi_n."""
        phi = _phi(n)
        out = [Fraction(0)] * phi
        table = None
        for k, a in enumerate(poly):
            if not a:
                continue
            if k < phi:
                out[k] += a
            else:
                if n == 1:
                    out[0] += a
                    continue
                if table is None:
                    table = _power_table(n)
                kk = k % n
                if kk < phi:
                    out[kk] += a
                else:
                    for i, v in enumerate(table[kk]):
                        if v:
                            out[i] += a * v
        return cls(n, tuple(out))

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyc":
        k %= n
        poly = [Fraction(0)] * k + [Fraction(1)]
        return cls.from_poly(n, poly)

    # coercion
    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.n != self.n:
                raise ValueError(f"mismatched cyclotomic orders {self.n} and {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyc.rational(self.n, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyc(self.n, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyc(self.n, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return Cyc(self.n, tuple(-a for a in self.c))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Cyc(self.n, (Fraction(0),) * len(self.c))
            return Cyc(self.n, tuple(a * other for a in self.c))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.c, o.c
        if len(a) == 1:
            return Cyc(self.n, (a[0] * b[0],))
        prod = [Fraction(0)] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyc.from_poly(self.n, prod)

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.n)
        if len(self.c) == 1:
            return Cyc(self.n, (1 / self.c[0],))
        # extended Euclid: s*a + t*Phi = 1
        phi_poly = [Fraction(x) for x in cyclotomic_poly(self.n)]
        r0, r1 = phi_poly, _trim(list(self.c))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        # r1 is a nonzero constant since Phi_n is irreducible
        c = r1[0]
        return Cyc.from_poly(self.n, [x / c for x in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyc.rational(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        if isinstance(other, Cyc):
            return self.n == other.n and self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c[0] == other and not any(self.c[1:])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not any(self.c[1:]):
                self._hash = hash(self.c[0])
            else:
                self._hash = hash((self.n, self.c))
        return self._hash

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Cyc({self.n}, {format_scalar(self)!r})"


@lru_cache(maxsize=None)
def _phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


class CycField:
    """The field Q(zeta_n); a factory for its elements."""

    def __init__(self, order: int = 1):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        self.order = order
        self.degree = _phi(order)
        self.zero = Cyc.rational(order, 0)
        self.one = Cyc.rational(order, 1)

    def __call__(self, value) -> Cyc:
        if isinstance(value, Cyc):
            if value.n != self.order:
                raise ValueError(f"mismatched cyclotomic orders {value.n} and {self.order}")
            return value
        if isinstance(value, str):
            return parse_scalar(value, self.order)
        return Cyc.rational(self.order, value)

    def zeta(self, k: int = 1) -> Cyc:
        return Cyc.zeta(self.order, k)

    def __eq__(self, other):
        return isinstance(other, CycField) and other.order == self.order

    def __hash__(self):
        return hash(("CycField", self.order))

    def __repr__(self):
        return f"CycField({self.order})"


# ---------- literal grammar ----------

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<num>\d+)(?:\s*/\s*(?P<den>\d+))?(?:\s*\*\s*(?P<z1>z)(?:\s*\^\s*(?P<e1>-?\d+))?)?
          |
          (?P<z2>z)(?:\s*\^\s*(?P<e2>-?\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_scalar(text: str, order: int) -> Cyc:
    """Parse a literal such as ``-1/2``, ``z`` or ``3*z^2 - 1`` into Q(zeta_order)."""
    if not isinstance(text, str):
        raise ScalarParseError(f"scalar literal must be a string, got {text!r}")
    s = text.strip()
    if not s:
        raise ScalarParseError("empty scalar literal")
    pos = 0
    poly: dict[int, Fraction] = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ScalarParseError(f"malformed scalar literal {text!r} at offset {pos}")
        if not first and m.group("sign") is None:
            raise ScalarParseError(f"missing operator in {text!r} at offset {pos}")
        first = False
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("num") is not None:
            den = int(m.group("den")) if m.group("den") is not None else 1
            if den == 0:
                raise ScalarParseError(f"zero denominator in {text!r}")
            coef = Fraction(int(m.group("num")), den)
            has_z = m.group("z1") is not None
            exp = m.group("e1")
        else:
            coef = Fraction(1)
            has_z = True
            exp = m.group("e2")
        k = 0
        if has_z:
            if order == 1:
                raise ScalarParseError(f"'z' is meaningless for cyclotomic order 1 in {text!r}")
            k = int(exp) if exp is not None else 1
            k %= order
        poly[k] = poly.get(k, Fraction(0)) + sign * coef
        pos = m.end()
    coeffs = [Fraction(0)] * (max(poly) + 1)
    for k, v in poly.items():
        coeffs[k] += v
    return Cyc.from_poly(order, coeffs)


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_scalar(a: Cyc) -> str:
    parts = []
    for k, c in enumerate(a.c):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = _frac_str(mag)
        else:
            zpart = "z" if k == 1 else f"z^{k}"
            body = zpart if mag == 1 else f"{_frac_str(mag)}*{zpart}"
        parts.append((c < 0, body))
    if not parts:
        return "0"
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def root_of_unity_order(a: Cyc):
    """Smallest m with a**m == 1, or None when a is not a root of unity."""
    if not a:
        return None
    bound = 2 * a.n * a.n
    p = a
    for m in range(1, bound + 1):
        if p == 1:
            return m
        p = p * a
    return None
