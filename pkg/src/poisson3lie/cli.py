"""Command-line front end.

Exit codes: 0 all checks pass, 1 a law or condition failed (or a
construction's precondition does not hold), 2 input error, 3 the three
equivalence paths disagree.
"""
from __future__ import annotations

import argparse
import hashlib
import re
import sys
import time
from pathlib import Path

from . import io
from .algebras import FAMILIES, direct_sum, h_twist, tensor_with_commutative, validate
from .duality import COALGEBRA_FAMILIES, dualize_algebra, dualize_coalgebra, validate_coalgebra
from .kernel import InputError, PreconditionError, format_scalar, scalar
from .manin import (BIALGEBRA_FAMILIES, check_bialgebra, check_manin_triple, double_construct,
                    solve_invariant_forms, verify_equivalence)
from .pairs import check_matched_pair, matched_pair_sum
from .reps import semidirect_product, validate_representation
from .search import BudgetExceeded, enumerate_structures

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2, 3
CONSTRUCTIONS = ("direct-sum", "tensor", "twist", "semidirect", "pair-sum", "double", "dual")


class RunReport:
    """One self-contained result object per run; key order is fixed."""

    def __init__(self, argv, inputs):
        self.command = list(argv)
        self.inputs = {str(p): _digest(p) for p in inputs}
        self.checks = {}
        self.extra = {}
        self.started = time.perf_counter()

    def add(self, name: str, ok: bool, payload: dict) -> None:
        self.checks[name] = {"ok": ok, **payload}

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks.values())

    def to_json(self) -> dict:
        out = {"command": self.command, "inputs": self.inputs, "checks": self.checks, "ok": self.ok}
        out.update(self.extra)
        return out

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.started


def _digest(path) -> str:
    return "sha256:" + hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _families(args, allowed, default) -> tuple:
    fams = args.family or list(default)
    bad = [f for f in fams if f not in allowed]
    if bad:
        raise InputError(f"family {bad[0]!r} not available here; choose from {', '.join(allowed)}")
    return tuple(dict.fromkeys(fams))


def _emit(args, report: RunReport, human: list) -> None:
    if args.json:
        sys.stdout.write(io.dumps(report.to_json()))
    else:
        for line in human:
            print(line)
        print(f"overall: {'PASS' if report.ok else 'FAIL'}")
        if args.timing:
            print(f"wall time: {report.elapsed:.3f} s")


def _law_block(name: str, rep) -> list:
    lines = [f"== {name}: {'PASS' if rep.ok else 'FAIL'}"]
    lines.extend("  " + ln for ln in rep.summary().splitlines())
    return lines


def _closure(args):
    return False if args.no_closure else None


# ---------------------------------------------------------------------------

def cmd_validate(args, argv) -> int:
    obj = io.read_json(args.path)
    kind, value = io.from_json(obj, _closure(args), args.path)
    report = RunReport(argv, [args.path])
    human = []
    if kind == "algebra":
        fams = _families(args, FAMILIES, FAMILIES)
        for f in fams:
            r = validate(value, f)
            report.add(f, r.ok, r.to_json())
            human += _law_block(f, r)
    elif kind == "coalgebra":
        fams = _families(args, COALGEBRA_FAMILIES, COALGEBRA_FAMILIES)
        for f in fams:
            r = validate_coalgebra(value, f)
            report.add(f, r.ok, r.to_json())
            human += _law_block(f, r)
    elif kind == "representation":
        fams = _families(args, FAMILIES, FAMILIES)
        for f in fams:
            r = validate_representation(value, f)
            ok = r.ok and r.preconditions.ok
            report.add(f, ok, r.to_json())
            human += _law_block(f, r)
    elif kind == "matched_pair":
        fams = _families(args, FAMILIES, FAMILIES)
        for f in fams:
            r = check_matched_pair(value, f)
            report.add(f, r.ok, r.to_json())
            human += _law_block(f, r)
    elif kind == "bundle":
        alg, co = value
        fams = _families(args, BIALGEBRA_FAMILIES, ("poisson", "admissible"))
        for f in fams:
            r = check_bialgebra(alg, co, f)
            report.add(f, r.ok, r.to_json())
            human += _law_block(f"{f} bialgebra", r)
    else:
        raise InputError(f"{args.path}: nothing to validate for kind {kind!r}")
    _emit(args, report, human)
    return EXIT_OK if report.ok else EXIT_FAIL


def _parse_element(text: str, n: int) -> list:
    """'e1', '2*e1-e3', '1/2e2' or a comma list of n coordinates."""
    s = text.replace(" ", "")
    if "e" not in s:
        coords = [scalar(c) for c in s.split(",")]
        if len(coords) != n:
            raise InputError(f"element {text!r} needs {n} coordinates")
        return coords
    out = [scalar(0)] * n
    pos = 0
    for m in re.finditer(r"([+-]?)([0-9/]*)\*?e(\d+)", s):
        if m.start() != pos:
            break
        sign = -1 if m.group(1) == "-" else 1
        c = scalar(m.group(2)) if m.group(2) else scalar(1)
        i = int(m.group(3))
        if not 1 <= i <= n:
            raise InputError(f"basis element e{i} outside e1..e{n}")
        out[i - 1] += sign * c
        pos = m.end()
    if pos != len(s):
        raise InputError(f"cannot parse element {text!r}")
    return out


def cmd_construct(args, argv) -> int:
    op, paths, c = args.op, args.inputs, _closure(args)
    need = {"direct-sum": 2, "tensor": 2, "twist": 1, "semidirect": 1, "pair-sum": 1, "double": (1, 2),
            "dual": 1}[op]
    if len(paths) not in (need if isinstance(need, tuple) else (need,)):
        raise InputError(f"construct {op} takes {need} input file(s), got {len(paths)}")
    extra = {}
    family = args.family[0] if args.family else None
    if op == "direct-sum":
        out = direct_sum(io.load(paths[0], c, "algebra"), io.load(paths[1], c, "algebra"))
    elif op == "tensor":
        out = tensor_with_commutative(io.load(paths[0], c, "algebra"), io.load(paths[1], c, "algebra"))
    elif op == "twist":
        alg = io.load(paths[0], c, "algebra")
        if args.h is None:
            raise InputError("twist needs --h")
        out = h_twist(alg, _parse_element(args.h, alg.dim))
    elif op == "semidirect":
        out = semidirect_product(io.load(paths[0], c, "representation"))
    elif op == "pair-sum":
        out = matched_pair_sum(io.load(paths[0], c, "matched_pair"))
    elif op == "dual":
        kind, value = io.from_json(io.read_json(paths[0]), c, paths[0])
        if kind == "coalgebra":
            out = dualize_coalgebra(value)
        elif kind == "algebra":
            co = dualize_algebra(value)
            return _finish_construct(args, argv, io.coalgebra_to_json(co), None, family)
        else:
            raise InputError(f"{paths[0]}: dual needs an algebra or a coalgebra")
    else:  # double
        if len(paths) == 1:
            alg, co = io.load(paths[0], c, "bundle")
        else:
            alg, co = io.load(paths[0], c, "algebra"), io.load(paths[1], c, "coalgebra")
        d = double_construct(alg, co)
        out = d.algebra
        extra = {"split": d.split, "form": io.matrix_to_json(d.form.matrix)}
    return _finish_construct(args, argv, io.algebra_to_json(out, **extra), out, family)


def _finish_construct(args, argv, obj, alg, family) -> int:
    if args.out:
        io.save(args.out, obj)
    report = RunReport(argv, args.inputs)
    report.extra["output"] = {"path": args.out, "kind": obj["kind"], "dim": obj["dim"]}
    human = [f"built {obj['kind']} of dim {obj['dim']}" + (f" -> {args.out}" if args.out else "")]
    if alg is not None:
        fams = (family,) if family else FAMILIES
        for f in fams:
            r = validate(alg, f)
            report.checks[f] = {"ok": r.ok, "summary": "PASS" if r.ok else "FAIL", "failed": r.failed}
            human.append(f"  {f}: {'PASS' if r.ok else 'FAIL'}")
    if not args.out and not args.json:
        human.append(io.dumps(obj).rstrip())
    if args.json:
        out = report.to_json()
        out.pop("ok")
        if not args.out:
            out["object"] = obj
        sys.stdout.write(io.dumps(out))
    else:
        for line in human:
            print(line)
    # the summary is informational; building succeeded
    return EXIT_OK


def cmd_verify(args, argv) -> int:
    alg, co = io.load(args.path, _closure(args), "bundle")
    fams = _families(args, ("poisson", "admissible", "comm-assoc", "3-lie"), ("poisson",))
    report = RunReport(argv, [args.path])
    human = []
    agree = True
    for f in fams:
        r = verify_equivalence(alg, co, f)
        agree = agree and r.agree
        report.add(f, r.ok, r.to_json())
        human += r.summary().splitlines()
    report.extra["agree"] = agree
    _emit(args, report, human)
    if not agree:
        return EXIT_DISAGREE
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_manin(args, argv) -> int:
    alg, co = io.load(args.path, _closure(args), "bundle")
    fams = _families(args, FAMILIES, ("poisson",))
    d = double_construct(alg, co)
    report = RunReport(argv, [args.path])
    human = []
    for f in fams:
        r = check_manin_triple(d, f)
        report.add(f, r.ok, r.to_json())
        human += _law_block(f"{f} Manin triple", r)
    _emit(args, report, human)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_search(args, argv) -> int:
    t = io.load(args.path, expect="template")
    report = RunReport(argv, [args.path])
    found = []
    for assignment, alg in enumerate_structures(t, args.budget, closure=not args.no_closure):
        found.append({"assignment": [format_scalar(v) for v in assignment],
                      "algebra": io.algebra_to_json(alg)})
    report.extra["candidates"] = t.candidates
    report.extra["found"] = found
    if args.out:
        io.save(args.out, {"kind": "search_result", "results": found})
    if args.json:
        sys.stdout.write(io.dumps(report.to_json()))
    else:
        print(f"{len(found)} structure(s) out of {t.candidates} candidate assignments")
        for item in found:
            print("  " + " ".join(item["assignment"]))
    return EXIT_OK


def cmd_solve_forms(args, argv) -> int:
    alg = io.load(args.path, _closure(args), "algebra")
    sol = solve_invariant_forms(alg, expand=args.expand)
    report = RunReport(argv, [args.path])
    payload = {
        "dimension": len(sol.basis),
        "basis": [io.matrix_to_json(M) for M in sol.basis],
        "certificate": None if sol.certificate is None else [format_scalar(scalar(x)) for x in sol.certificate],
        "determinant_polynomial": None if sol.polynomial is None else repr(sol.polynomial),
    }
    report.add("nondegenerate_invariant_form", sol.nondegenerate, payload)
    human = [f"invariant symmetric forms: dimension {len(sol.basis)}",
             f"nondegenerate form exists: {'yes' if sol.nondegenerate else 'no'}"]
    if sol.polynomial is not None:
        human.append(f"generic determinant: {sol.polynomial!r}")
    _emit(args, report, human)
    return EXIT_OK if sol.nondegenerate else EXIT_FAIL


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="p3lie", description="Exact checks for (transposed) Poisson 3-Lie algebras.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", action="append", help="law family (repeatable)")
    common.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    common.add_argument("--no-closure", action="store_true", help="do not complete (anti)symmetric entries")
    common.add_argument("--timing", action="store_true", help="print wall time (human output only)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check the laws of any object file")
    s.add_argument("path")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("construct", parents=[common], help="build a new algebra")
    s.add_argument("op", choices=CONSTRUCTIONS)
    s.add_argument("inputs", nargs="+")
    s.add_argument("-o", "--out")
    s.add_argument("--h", help="twist element, e.g. e1 or 1,0,0")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", parents=[common], help="three-way equivalence on a bundle")
    s.add_argument("path")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("manin", parents=[common], help="Manin triple checks on the double of a bundle")
    s.add_argument("path")
    s.set_defaults(func=cmd_manin)

    s = sub.add_parser("search", parents=[common], help="enumerate structures from a template")
    s.add_argument("path")
    s.add_argument("--budget", type=int)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("solve-forms", parents=[common], help="invariant symmetric bilinear forms")
    s.add_argument("path")
    s.add_argument("--expand", action="store_true", help="always expand the generic determinant")
    s.set_defaults(func=cmd_solve_forms)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, argv)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
