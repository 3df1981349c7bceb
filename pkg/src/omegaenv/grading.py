"""Grading groups Z^r x Z_m1 x ... and antisymmetric bicharacters on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .scalars import Cyc, CycField

__all__ = ["GroupSpec", "Bicharacter", "Violation", "group_op", "eps_eval", "parity"]


class Violation(NamedTuple):
    """One failed instance of an axiom; ``where`` holds generator indices."""

    kind: str
    where: tuple
    detail: str = ""

    def to_json(self):
        return {"kind": self.kind, "where": list(self.where), "detail": self.detail}


@dataclass(frozen=True)
class GroupSpec:
    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free_rank must be non-negative")
        if any(m < 2 for m in self.torsion):
            raise ValueError(f"torsion orders must be >= 2, got {list(self.torsion)}")
        object.__setattr__(self, "torsion", tuple(self.torsion))

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def identity(self) -> tuple:
        return (0,) * self.ngens

    def element(self, coords) -> tuple:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.ngens:
            raise ValueError(f"degree {list(coords)} has length {len(coords)}, expected {self.ngens}")
        r = self.free_rank
        return coords[:r] + tuple(c % m for c, m in zip(coords[r:], self.torsion))

    def compose(self, g, h) -> tuple:
        if len(g) != self.ngens or len(h) != self.ngens:
            raise ValueError("group element length mismatch")
        return self.element(a + b for a, b in zip(g, h))

    def invert(self, g) -> tuple:
        if len(g) != self.ngens:
            raise ValueError("group element length mismatch")
        return self.element(-a for a in g)

    def product(self, gs) -> tuple:
        out = self.identity
        for g in gs:
            out = self.compose(out, g)
        return out

    def exponent(self) -> int:
        """lcm of the torsion orders (1 if torsion-free)."""
        from math import lcm

        out = 1
        for m in self.torsion:
            out = lcm(out, m)
        return out


def group_op(spec: GroupSpec, g, h=None, mode: str = "compose"):
    if mode == "compose":
        return spec.compose(g, h)
    if mode == "invert":
        return spec.invert(g)
    raise ValueError(f"unknown group operation {mode!r}")


@dataclass
class Bicharacter:
    """eps on generators: ``values[i][j] = eps(g_i, g_j)``."""

    spec: GroupSpec
    values: list
    field: CycField
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        k = self.spec.ngens
        if len(self.values) != k or any(len(row) != k for row in self.values):
            raise ValueError(f"bicharacter must be a {k}x{k} matrix")
        self.values = [[self.field(v) for v in row] for row in self.values]

    @classmethod
    def trivial(cls, spec: GroupSpec, fld: CycField) -> "Bicharacter":
        k = spec.ngens
        return cls(spec, [[fld.one] * k for _ in range(k)], fld)

    def __call__(self, g, h) -> Cyc:
        key = (g, h)
        v = self._cache.get(key)
        if v is None:
            v = self.field.one
            for i, a in enumerate(g):
                if a:
                    for j, b in enumerate(h):
                        if b:
                            v = v * self.values[i][j] ** (a * b)
            self._cache[key] = v
        return v

    def parity(self, g) -> int:
        v = self(g, g)
        if v == 1:
            return 1
        if v == -1:
            return -1
        raise ValueError(f"eps(g,g) = {v} is not +-1; bicharacter is not antisymmetric")

    def validate(self) -> list:
        out = []
        k = self.spec.ngens
        B = self.values
        r = self.spec.free_rank
        for i in range(k):
            for j in range(i, k):
                if B[i][j] * B[j][i] != 1:
                    kind = "diagonal" if i == j else "antisymmetry"
                    out.append(Violation(f"bicharacter-{kind}", (i, j), f"{B[i][j]} * {B[j][i]} != 1"))
        for i in range(k):
            for j in range(k):
                if not B[i][j]:
                    out.append(Violation("bicharacter-nonzero", (i, j), "value is zero"))
                    continue
                for t in (i, j):
                    if t >= r:
                        m = self.spec.torsion[t - r]
                        if B[i][j] ** m != 1:
                            out.append(
                                Violation("bicharacter-torsion", (i, j), f"({B[i][j]})^{m} != 1 (generator {t} has order {m})")
                            )
                            break
        return out


def eps_eval(B: Bicharacter, g, h) -> Cyc:
    return B(g, h)


def parity(B: Bicharacter, g) -> int:
    return B.parity(g)
