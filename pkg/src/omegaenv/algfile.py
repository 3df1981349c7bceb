"""JSON algebra description files: one file per problem instance.

Loading reports schema problems as :class:`SchemaError` carrying a JSON
pointer to the offending key.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .colorlie import ColorLieAlgebra, Cocycle2
from .grading import Bicharacter, GroupSpec
from .repmodule import GradedModule
from .scalars import CycField, ScalarParseError

__all__ = ["AlgebraFile", "SchemaError", "load", "loads", "dumps", "fixture_names", "fixture_path", "format_degree"]

_KEYS = {"name", "description", "cyclotomic_order", "group", "bicharacter", "generators", "brackets", "cocycle", "cocycles", "order", "modules"}


class SchemaError(ValueError):
    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer or "/"
        self.message = message


@dataclass
class AlgebraFile:
    name: str
    L: ColorLieAlgebra
    omega: Cocycle2
    order: list | None = None
    cocycles: dict = field(default_factory=dict)
    modules: list = field(default_factory=list)
    description: str = ""
    digest: str = ""

    def cocycle(self, name: str) -> Cocycle2:
        if name == "omega":
            return self.omega
        if name == "zero":
            return Cocycle2.zero(self.L)
        if name not in self.cocycles:
            known = ", ".join(["omega", "zero"] + sorted(self.cocycles))
            raise KeyError(f"unknown cocycle {name!r} (known: {known})")
        return self.cocycles[name]

    def module(self, name: str) -> GradedModule:
        for M in self.modules:
            if M.name == name:
                return M
        raise KeyError(f"unknown module {name!r}")


def format_degree(g) -> str:
    if not any(g):
        return "e"
    return "(" + ",".join(str(a) for a in g) + ")"


# ---------- reading ----------

def _expect(cond, pointer, message):
    if not cond:
        raise SchemaError(pointer, message)


def _int(value, pointer) -> int:
    _expect(isinstance(value, int) and not isinstance(value, bool), pointer, f"expected an integer, got {value!r}")
    return value


def _lit(fld: CycField, value, pointer):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise SchemaError(pointer, f"expected a scalar literal, got {value!r}")
    try:
        return fld(value)
    except ScalarParseError as exc:
        raise SchemaError(pointer, str(exc)) from None


def _gen(names, value, pointer) -> int:
    if isinstance(value, str):
        if value in names:
            return names.index(value)
        if value.isdigit():
            value = int(value)
        else:
            raise SchemaError(pointer, f"unknown generator {value!r}")
    value = _int(value, pointer)
    _expect(0 <= value < len(names), pointer, f"generator index {value} out of range")
    return value


def _pairs(L: ColorLieAlgebra, entries, pointer) -> dict:
    _expect(isinstance(entries, list), pointer, "expected a list of {i, j, value} entries")
    out = {}
    for n, ent in enumerate(entries):
        p = f"{pointer}/{n}"
        _expect(isinstance(ent, dict), p, "expected an object")
        _expect(set(ent) <= {"i", "j", "value"} and {"i", "j", "value"} <= set(ent), p, "needs exactly the keys i, j, value")
        i = _gen(L.names, ent["i"], p + "/i")
        j = _gen(L.names, ent["j"], p + "/j")
        _expect((i, j) not in out, p, "duplicate pair")
        out[(i, j)] = _lit(L.field, ent["value"], p + "/value")
    return out


def _module(L: ColorLieAlgebra, omega: Cocycle2, data, pointer) -> GradedModule:
    _expect(isinstance(data, dict), pointer, "expected an object")
    extra = set(data) - {"name", "basis", "actions", "twist"}
    _expect(not extra, pointer, f"unknown keys {sorted(extra)}")
    name = data.get("name")
    _expect(isinstance(name, str) and name, pointer + "/name", "module needs a name")
    basis = data.get("basis")
    _expect(isinstance(basis, list) and basis, pointer + "/basis", "expected a non-empty list")
    bnames, bdegs = [], []
    for n, b in enumerate(basis):
        p = f"{pointer}/basis/{n}"
        _expect(isinstance(b, dict) and isinstance(b.get("name"), str), p, "basis vectors need a name")
        deg = b.get("degree", list(L.identity))
        _expect(isinstance(deg, list) and len(deg) == L.spec.ngens, p + "/degree", f"expected {L.spec.ngens} integers")
        bnames.append(b["name"])
        bdegs.append([_int(a, f"{p}/degree/{k}") for k, a in enumerate(deg)])
    dim = len(bnames)
    actions = data.get("actions", {})
    _expect(isinstance(actions, dict), pointer + "/actions", "expected an object keyed by generator")
    mats = {}
    for g, mat in actions.items():
        p = f"{pointer}/actions/{g}"
        i = _gen(L.names, g, p)
        _expect(isinstance(mat, list) and len(mat) == dim, p, f"expected a {dim}x{dim} matrix")
        rows = []
        for r, row in enumerate(mat):
            _expect(isinstance(row, list) and len(row) == dim, f"{p}/{r}", f"expected {dim} entries")
            rows.append([_lit(L.field, v, f"{p}/{r}/{s}") for s, v in enumerate(row)])
        mats[i] = rows
    twist = data.get("twist", "zero")
    _expect(twist in ("zero", "omega"), pointer + "/twist", 'expected "zero" or "omega"')
    tw = omega if twist == "omega" else Cocycle2.zero(L)
    try:
        return GradedModule(name, L, bnames, bdegs, mats, tw, twist)
    except ValueError as exc:
        raise SchemaError(pointer, str(exc)) from None


def from_dict(data: dict, digest: str = "") -> AlgebraFile:
    _expect(isinstance(data, dict), "", "top level must be an object")
    extra = set(data) - _KEYS
    _expect(not extra, "", f"unknown keys {sorted(extra)}")
    group = data.get("group", {"free_rank": 0, "torsion": []})
    _expect(isinstance(group, dict) and set(group) <= {"free_rank", "torsion"}, "/group", "expected {free_rank, torsion}")
    r = _int(group.get("free_rank", 0), "/group/free_rank")
    tors = group.get("torsion", [])
    _expect(isinstance(tors, list), "/group/torsion", "expected a list")
    tors = [_int(m, f"/group/torsion/{k}") for k, m in enumerate(tors)]
    try:
        spec = GroupSpec(r, tuple(tors))
    except ValueError as exc:
        raise SchemaError("/group", str(exc)) from None
    order = data.get("cyclotomic_order", spec.exponent())
    order = _int(order, "/cyclotomic_order")
    _expect(order >= 1, "/cyclotomic_order", "must be positive")
    fld = CycField(order)

    bich = data.get("bicharacter", [["1"] * spec.ngens for _ in range(spec.ngens)])
    _expect(isinstance(bich, list) and len(bich) == spec.ngens, "/bicharacter", f"expected a {spec.ngens}x{spec.ngens} matrix")
    vals = []
    for a, row in enumerate(bich):
        _expect(isinstance(row, list) and len(row) == spec.ngens, f"/bicharacter/{a}", f"expected {spec.ngens} entries")
        vals.append([_lit(fld, v, f"/bicharacter/{a}/{b}") for b, v in enumerate(row)])
    eps = Bicharacter(spec, vals, fld)

    gens = data.get("generators")
    _expect(isinstance(gens, list) and gens, "/generators", "expected a non-empty list")
    names, degs = [], []
    for n, g in enumerate(gens):
        p = f"/generators/{n}"
        _expect(isinstance(g, dict) and isinstance(g.get("name"), str) and g["name"], p, "generators need a name")
        _expect(g["name"] not in names, p + "/name", f"duplicate generator {g['name']!r}")
        _expect(" " not in g["name"] and "." not in g["name"], p + "/name", "names may not contain spaces or dots")
        deg = g.get("degree", [0] * spec.ngens)
        _expect(isinstance(deg, list) and len(deg) == spec.ngens, p + "/degree", f"expected {spec.ngens} integers")
        names.append(g["name"])
        degs.append([_int(a, f"{p}/degree/{k}") for k, a in enumerate(deg)])

    brackets = {}
    br = data.get("brackets", [])
    _expect(isinstance(br, list), "/brackets", "expected a list")
    for n, ent in enumerate(br):
        p = f"/brackets/{n}"
        _expect(isinstance(ent, dict) and set(ent) == {"i", "j", "coeffs"}, p, "needs exactly the keys i, j, coeffs")
        i = _gen(names, ent["i"], p + "/i")
        j = _gen(names, ent["j"], p + "/j")
        _expect((i, j) not in brackets, p, "duplicate pair")
        _expect(isinstance(ent["coeffs"], dict), p + "/coeffs", "expected an object")
        brackets[(i, j)] = {_gen(names, k, f"{p}/coeffs/{k}"): _lit(fld, v, f"{p}/coeffs/{k}") for k, v in ent["coeffs"].items()}
    try:
        L = ColorLieAlgebra(names, degs, eps, brackets)
    except ValueError as exc:
        raise SchemaError("/generators", str(exc)) from None

    omega = Cocycle2.from_entries(L, _pairs(L, data.get("cocycle", []), "/cocycle"))
    variants = {}
    cv = data.get("cocycles", {})
    _expect(isinstance(cv, dict), "/cocycles", "expected an object of named cocycles")
    for key, ents in cv.items():
        _expect(key not in ("omega", "zero"), f"/cocycles/{key}", "reserved name")
        variants[key] = Cocycle2.from_entries(L, _pairs(L, ents, f"/cocycles/{key}"))

    gen_order = data.get("order")
    if gen_order is not None:
        _expect(isinstance(gen_order, list) and sorted(_gen(names, g, f"/order/{k}") for k, g in enumerate(gen_order)) == list(range(len(names))),
                "/order", "expected a permutation of the generators")
        gen_order = [names[_gen(names, g, "/order")] for g in gen_order]

    mods = data.get("modules", [])
    _expect(isinstance(mods, list), "/modules", "expected a list")
    modules = [_module(L, omega, m, f"/modules/{n}") for n, m in enumerate(mods)]
    _expect(len({M.name for M in modules}) == len(modules), "/modules", "duplicate module names")
    return AlgebraFile(
        name=str(data.get("name", "")),
        L=L,
        omega=omega,
        order=gen_order,
        cocycles=variants,
        modules=modules,
        description=str(data.get("description", "")),
        digest=digest,
    )


def loads(text: str) -> AlgebraFile:
    digest = hashlib.sha256(text.encode()).hexdigest()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("", f"invalid JSON: {exc}") from None
    return from_dict(data, digest)


def fixture_names() -> list:
    root = resources.files("omegaenv") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def fixture_path(name: str):
    return resources.files("omegaenv") / "fixtures" / f"{name}.json"


def load(path_or_name) -> AlgebraFile:
    """Read a file; a bare fixture name such as ``weyl`` selects a bundled fixture."""
    p = Path(path_or_name)
    if not p.exists() and str(path_or_name) in fixture_names():
        return loads(fixture_path(str(path_or_name)).read_text())
    try:
        text = p.read_text()
    except OSError as exc:
        raise SchemaError("", f"cannot read {path_or_name}: {exc.strerror}") from None
    return loads(text)


# ---------- writing ----------

def _pairs_json(w: Cocycle2) -> list:
    return [{"i": i, "j": j, "value": str(v)} for (i, j), v in w.entries().items()]


def to_dict(A: AlgebraFile) -> dict:
    L = A.L
    out = {
        "name": A.name,
        "cyclotomic_order": L.field.order,
        "group": {"free_rank": L.spec.free_rank, "torsion": list(L.spec.torsion)},
        "bicharacter": [[str(v) for v in row] for row in L.eps.values],
        "generators": [{"name": n, "degree": list(g)} for n, g in zip(L.names, L.degrees)],
        "brackets": [
            {"i": i, "j": j, "coeffs": {str(k): str(c) for k, c in sorted(vec.items())}}
            for (i, j), vec in sorted(L.table.items())
        ],
        "cocycle": _pairs_json(A.omega),
    }
    if A.description:
        out["description"] = A.description
    if A.cocycles:
        out["cocycles"] = {k: _pairs_json(v) for k, v in sorted(A.cocycles.items())}
    if A.order is not None:
        out["order"] = list(A.order)
    if A.modules:
        out["modules"] = [
            {
                "name": M.name,
                "basis": [{"name": b, "degree": list(g)} for b, g in zip(M.basis_names, M.degrees)],
                "actions": {L.names[i]: [[str(v) for v in row] for row in M.actions[i].to_dense(L.field.zero)] for i in sorted(M.actions)},
                "twist": M.twist_label,
            }
            for M in A.modules
        ]
    return out


def dumps(A: AlgebraFile) -> str:
    return json.dumps(to_dict(A), indent=2, sort_keys=True) + "\n"
