"""Command-line driver: ``omegaenv <command> FILE [options]``.

Every run prints one JSON report on stdout.  Exit status: 0 success, 1 a
mathematical check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algfile
from .algfile import SchemaError, format_degree
from .cohomology import cohomology_dims, hochschild_truncated, verify_complex, verify_resolution
from .colorlie import h2_scalar, is_cohomologous, validate_algebra, validate_cocycle
from .enveloping import EnvelopingAlgebra, UntrustedAlgebra, dims, filtered_iso
from .grading import Violation
from .hopf import check_hopf_axioms, hopf_ideal_check
from .repmodule import ClosureError, adjoint_truncated, trivial_module, validate_module

class InputError(Exception):
    pass


def _vjson(A, v: Violation, source: str | None = None) -> dict:
    out = v.to_json()
    names = A.L.names
    # bicharacter sites are group generators, not algebra generators
    if v.kind == "module-degree":
        out["at"] = [names[v.where[0]]]
    elif v.where and not v.kind.startswith("bicharacter"):
        out["at"] = [names[i] for i in v.where]
    if source:
        out["source"] = source
    return out


def _words(A, text: str) -> tuple:
    names = text.split()
    for n in names:
        if n not in A.L.names:
            raise InputError(f"unknown generator {n!r} in word {text!r}")
    return tuple(A.L.index(n) for n in names)


def _structural(A) -> list:
    """Bicharacter, grading and cocycle-degree problems: the preconditions for rewriting."""
    out = [(v, None) for v in A.L.eps.validate()]
    out += [(v, None) for v in validate_algebra(A.L) if v.kind == "grading"]
    out += [(v, "omega") for v in validate_cocycle(A.L, A.omega) if v.kind == "cocycle-degree"]
    return out


def _algebra(A, force: bool = False):
    return EnvelopingAlgebra(A.L, A.omega, order=A.order, force=force)


def _cocycle(A, name):
    try:
        return A.cocycle(name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None


def _pairs_json(L, w) -> list:
    return [{"i": L.names[i], "j": L.names[j], "value": str(v)} for (i, j), v in w.entries().items()]


# ---------- commands ----------

def cmd_check(A, args):
    viol = [(v, None) for v in A.L.eps.validate()]
    viol += [(v, None) for v in validate_algebra(A.L)]
    viol += [(v, "omega") for v in validate_cocycle(A.L, A.omega)]
    for name in sorted(A.cocycles):
        viol += [(v, name) for v in validate_cocycle(A.L, A.cocycles[name])]
    for M in A.modules:
        viol += [(v, f"module:{M.name}") for v in validate_module(A.L, M.twist, M)]
    results = {
        "generators": len(A.L.names),
        "cocycles": ["omega"] + sorted(A.cocycles),
        "modules": [M.name for M in A.modules],
    }
    return results, viol


def cmd_overlaps(A, args):
    pre = _structural(A)
    try:
        E = _algebra(A, force=True)
    except ValueError as exc:
        pre.append((Violation("bicharacter-parity", (), str(exc)), None))
        return {"trusted": False, "ambiguities": None}, pre
    checked = sum(1 for k in range(A.L.dim) for j in range(A.L.dim) for i in range(A.L.dim) if E.reducible(k, j) and E.reducible(j, i))
    viol = pre + [(v, None) for v in E.overlap_report]
    return {"trusted": E.trusted, "ambiguities": checked, "rules": len(E._rules)}, viol


def _trusted(A, args):
    try:
        return _algebra(A, force=getattr(args, "force", False)), []
    except UntrustedAlgebra as exc:
        return None, [(v, None) for v in exc.report]


def cmd_nf(A, args):
    E, viol = _trusted(A, args)
    if E is None:
        return {"trusted": False}, viol
    word = _words(A, args.word)
    return {"word": args.word, "normal_form": E.format(E.nf({word: E.one})), "trusted": E.trusted}, []


def cmd_mul(A, args):
    E, viol = _trusted(A, args)
    if E is None:
        return {"trusted": False}, viol
    a = E.nf({_words(A, args.left): E.one})
    b = E.nf({_words(A, args.right): E.one})
    return {"left": args.left, "right": args.right, "product": E.format(E.mul(a, b)), "trusted": E.trusted}, []


def cmd_dims(A, args):
    E, viol = _trusted(A, args)
    if E is None:
        return {}, viol
    N = args.max_degree
    rep = dims(E, N)
    blocks = {}
    for n in range(N + 1):
        keys = sorted(set(rep["pbw"][n]) | set(rep["symmetric"][n]))
        blocks[str(n)] = {format_degree(g): {"pbw": rep["pbw"][n].get(g, 0), "symmetric": rep["symmetric"][n].get(g, 0)} for g in keys}
    sym = [sum(rep["symmetric"][n].values()) for n in range(N + 1)]
    results = {
        "max_degree": N,
        "per_degree": rep["per_degree"],
        "symmetric_per_degree": sym,
        "total": sum(rep["per_degree"]),
        "blocks": blocks,
        "match": rep["match"],
    }
    if not rep["match"]:
        viol = [(Violation("dims-mismatch", (), "PBW counts differ from S(L)"), None)]
    return results, viol


def cmd_h2(A, args):
    L = A.L
    if args.all_degrees:
        table = {}
        for g, (d, reps) in h2_scalar(L, all_degrees=True).items():
            table[format_degree(g)] = {"dim": d, "representatives": [_pairs_json(L, w) for w in reps]}
        return {"by_degree": table}, []
    d, reps = h2_scalar(L)
    return {"dim": d, "representatives": [_pairs_json(L, w) for w in reps]}, []


def cmd_cohomologous(A, args):
    L = A.L
    w1, w2 = _cocycle(A, args.w1), _cocycle(A, args.w2)
    viol = [(v, args.w1) for v in validate_cocycle(L, w1)] + [(v, args.w2) for v in validate_cocycle(L, w2)]
    if viol:
        return {"w1": args.w1, "w2": args.w2, "cohomologous": None}, viol
    lam = is_cohomologous(L, w1, w2)
    results = {"w1": args.w1, "w2": args.w2, "cohomologous": lam is not None}
    if lam is None:
        return results, [(Violation("not-cohomologous", (), f"{args.w1} - {args.w2} is not a coboundary"), None)]
    results["lambda"] = {L.names[k]: str(v) for k, v in sorted(lam.items())}
    return results, []


def cmd_iso(A, args):
    results, viol = cmd_cohomologous(A, args)
    if viol:
        return results, viol
    L = A.L
    lam = {L.index(n): L.field(v) for n, v in results["lambda"].items()}
    try:
        E1 = EnvelopingAlgebra(L, _cocycle(A, args.w1), order=A.order)
        E2 = EnvelopingAlgebra(L, _cocycle(A, args.w2), order=A.order)
    except UntrustedAlgebra as exc:
        return results, [(v, None) for v in exc.report]
    rep = filtered_iso(E1, E2, lam, args.max_degree)
    rep["relation_failures"] = [
        {"pair": [L.names[i] for i in f["pair"]], "residue": f["residue"]} for f in rep["relation_failures"]
    ]
    results["iso"] = rep
    if not rep["iso"]:
        viol = [(Violation("iso-failure", (), "the induced map is not a filtered isomorphism"), None)]
    return results, viol


def _module(A, E, name):
    if name == "trivial":
        return trivial_module(A.L)
    if name.startswith("adjoint:"):
        try:
            N = int(name.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad adjoint truncation in {name!r}") from None
        return adjoint_truncated(E, N)
    try:
        return A.module(name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None


def cmd_cohomology(A, args):
    E, viol = _trusted(A, args)
    if E is None:
        return {}, viol
    L = A.L
    try:
        M = _module(A, E, args.module)
    except ClosureError as exc:
        return {}, [(Violation("adjoint-closure", (), str(exc)), None)]
    viol = [(v, f"module:{M.name}") for v in validate_module(L, M.twist, M)]
    rep = verify_complex(L, A.omega, M, args.n_max, args.degree)
    defects = {}
    for g, rows in rep["blocks"].items():
        defects[format_degree(g)] = [
            {
                "n": r["n"],
                "composite_zero": r["composite_zero"],
                "composite": r["composite"],
                "twist_defect": r["twist_defect"],
                "composite_equals_twist_defect": r["composite_equals_twist_defect"],
            }
            for r in rows
        ]
    results = {
        "module": M.name,
        "module_dim": M.dim,
        "n_max": args.n_max,
        "degree": args.degree,
        "measured_twist": rep["measured_twist"],
        "complex": rep["all_composites_zero"],
        "defects": defects,
    }
    if not rep["all_composites_zero"]:
        viol.append((Violation("not-a-complex", (), "delta^2 != 0; cohomology not computed"), None))
        return results, viol
    table, details = {}, {}
    for g, rows in cohomology_dims(L, M, args.n_max, args.degree).items():
        dg = format_degree(g)
        details[dg] = rows
        for r in rows:
            table[f"H{r['n']}@{dg}"] = r["H"]
    results["table"] = table
    results["details"] = details
    return results, viol


def cmd_resolution(A, args):
    E, viol = _trusted(A, args)
    if E is None:
        return {}, viol
    rep = verify_resolution(E, args.n_max, args.deg_max)
    if not rep["dd_zero"]:
        viol.append((Violation("resolution-dd", (), f"{len(rep['dd_failures'])} wedges with d o d != 0"), None))
    if not rep["koszul_exact"]:
        viol.append((Violation("koszul-homology", (), "associated graded complex is not exact"), None))
    if not rep["filtered_exact"]:
        viol.append((Violation("filtered-homology", (), "a filtered piece of the resolution is not exact"), None))
    return rep, viol


def _int_list(text: str) -> list:
    try:
        out = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None
    if not out or min(out) < 0:
        raise InputError(f"expected non-negative integers, got {text!r}")
    return out


def cmd_hochschild(A, args):
    E, viol = _trusted(A, args)
    if E is None:
        return {}, viol
    Ns = _int_list(args.truncations)
    try:
        vals = hochschild_truncated(E, args.n, Ns)
    except ClosureError as exc:
        return {}, [(Violation("adjoint-closure", (), str(exc)), None)]
    key = f"H{args.n}@{format_degree(A.L.identity)}"
    return {"n": args.n, "truncations": Ns, "table": {key: {str(N): vals[N] for N in Ns}}}, []


def cmd_hopf(A, args):
    L = A.L
    try:
        E0 = EnvelopingAlgebra(L, order=A.order)
        E = _algebra(A)
    except UntrustedAlgebra as exc:
        return {}, [(v, None) for v in exc.report]
    axioms = check_hopf_axioms(E0, args.max_degree)
    ideal = hopf_ideal_check(E)
    viol = [(v, None) for v in ideal["violations"]]
    if not axioms["ok"]:
        viol.append((Violation("hopf-axiom", (), f"{len(axioms['failures'])} failures on U(L)"), None))
    return {"axioms": axioms, "obstructions": ideal["obstructions"], "hopf_ideal": not ideal["obstructions"]}, viol


COMMANDS = {
    "check": cmd_check,
    "overlaps": cmd_overlaps,
    "nf": cmd_nf,
    "mul": cmd_mul,
    "dims": cmd_dims,
    "h2": cmd_h2,
    "cohomologous": cmd_cohomologous,
    "iso": cmd_iso,
    "cohomology": cmd_cohomology,
    "resolution-check": cmd_resolution,
    "hochschild": cmd_hochschild,
    "hopf-check": cmd_hopf,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="omegaenv", description="Twisted enveloping algebras of color Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="algebra JSON file, or the name of a bundled fixture")
        sp.add_argument("--verbose", action="store_true", help="human-readable summary on stderr")
        return sp

    add("check", "validate bicharacter, algebra, cocycles and modules")
    add("overlaps", "resolve all ambiguities of the rewriting system")
    sp = add("nf", "normal form of a word")
    sp.add_argument("--word", required=True)
    sp.add_argument("--force", action="store_true", help="rewrite even if overlaps fail")
    sp = add("mul", "product of two words")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--force", action="store_true")
    sp = add("dims", "PBW dimensions against the symmetric algebra")
    sp.add_argument("--max-degree", type=int, default=6)
    sp = add("h2", "second scalar cohomology")
    sp.add_argument("--all-degrees", action="store_true")
    for name in ("cohomologous", "iso"):
        sp = add(name, "compare two cocycles" if name == "cohomologous" else "filtered isomorphism between twists")
        sp.add_argument("--w1", default="omega")
        sp.add_argument("--w2", default="zero")
        if name == "iso":
            sp.add_argument("--max-degree", type=int, default=4)
    sp = add("cohomology", "cohomology with coefficients in a module")
    sp.add_argument("--module", default="trivial", help="trivial, adjoint:N, or a module from the file")
    sp.add_argument("--n-max", type=int, default=4)
    sp.add_argument("--degree", choices=["identity", "all"], default="identity")
    sp = add("resolution-check", "d o d = 0 and exactness of the free resolution")
    sp.add_argument("--n-max", type=int, default=4)
    sp.add_argument("--deg-max", type=int, default=5)
    sp = add("hochschild", "truncated Hochschild cohomology via the adjoint module")
    sp.add_argument("--n", type=int, default=0)
    sp.add_argument("--truncations", default="1,2,3,4")
    sp = add("hopf-check", "Hopf axioms on U(L) and the obstruction for the twist")
    sp.add_argument("--max-degree", type=int, default=4)
    return p


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")


def run(argv=None):
    """Parse ``argv``, run the command and return ``(report, exit_code)``."""
    args = build_parser().parse_args(argv)
    for opt in ("max_degree", "n_max", "deg_max", "n"):
        if getattr(args, opt, 0) < 0:
            return {"command": args.command, "error": {"pointer": f"--{opt.replace('_', '-')}", "message": "must be non-negative"}}, 2
    try:
        A = algfile.load(args.file)
        results, viol = COMMANDS[args.command](A, args)
    except SchemaError as exc:
        return {"command": args.command, "error": {"pointer": exc.pointer, "message": exc.message}}, 2
    except InputError as exc:
        return {"command": args.command, "error": {"pointer": "argv", "message": str(exc)}}, 2
    report = {
        "command": args.command,
        "input": {"name": A.name, "sha256": A.digest},
        "results": results,
        "violations": [_vjson(A, v, src) for v, src in viol],
    }
    report["ok"] = not viol
    if args.verbose:
        status = "ok" if not viol else f"{len(viol)} violation(s)"
        print(f"{args.command} {A.name}: {status}", file=sys.stderr)
        for v, src in viol:
            print(f"  {v.kind} at {list(v.where)}{' [' + src + ']' if src else ''}: {v.detail}", file=sys.stderr)
    return report, (1 if viol else 0)


def main(argv=None) -> int:
    report, code = run(argv)
    _emit(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
