"""Declarative multilinear identities and the reports they produce.

An identity is written as two sums of contraction terms over named
structure tensors. Each letter of ``args`` is a basis index that is
universally quantified; the letters of ``out`` index the components of the
value (an element, a matrix, a tensor power). Evaluation contracts only
nonzero entries, then scans the residual for the lexicographically first
failing argument tuple.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .kernel import _ints, contract, format_scalar


@dataclass(frozen=True)
class Term:
    coef: Fraction
    spec: str
    operands: tuple


def T(coef, spec: str, *operands: str) -> Term:
    coef = Fraction(coef)
    return Term(coef.numerator if coef.denominator == 1 else coef, spec, tuple(operands))


@dataclass(frozen=True)
class Identity:
    lhs: tuple
    rhs: tuple = ()


@dataclass(frozen=True)
class Law:
    id: str
    args: str
    out: str
    parts: tuple
    text: str = ""
    spaces: str = ""  # one character per arg naming the space it ranges over

    def rename(self, new_id: str, mapping: Mapping[str, str], text: str = None, spaces: str = None) -> "Law":
        """Same identity with operand names substituted (used for mirror conditions)."""
        def sub(t: Term) -> Term:
            return Term(t.coef, t.spec, tuple(mapping.get(o, o) for o in t.operands))
        parts = tuple(Identity(tuple(map(sub, p.lhs)), tuple(map(sub, p.rhs))) for p in self.parts)
        return Law(new_id, self.args, self.out, parts, text if text is not None else self.text,
                   spaces if spaces is not None else self.spaces)


def law(id: str, args: str, out: str, *parts, text: str = "", spaces: str = "") -> Law:
    """Build a law; each part is a (lhs terms, rhs terms) pair."""
    return Law(id, args, out, tuple(Identity(tuple(l), tuple(r)) for l, r in parts), text, spaces)


@dataclass(frozen=True)
class Witness:
    """First failing argument tuple of a law.

    ``args`` are 1-based basis indices. ``lhs``/``rhs`` map component index
    tuples (1-based) to the nonzero coefficients of each side.
    """
    law: str
    args: tuple
    lhs: dict
    rhs: dict
    part: int = 0
    spaces: str = ""
    note: str = ""

    def describe(self) -> str:
        names = []
        for k, a in enumerate(self.args):
            sp = self.spaces[k] if k < len(self.spaces) else "e"
            names.append(f"{_space_symbol(sp)}{a}")
        head = f"{self.law} at ({', '.join(names)})"
        if self.note:
            head += f": {self.note}"
        return f"{head}: {format_components(self.lhs)} != {format_components(self.rhs)}"

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "part": self.part,
            "args": list(self.args),
            "spaces": self.spaces,
            "lhs": _components_json(self.lhs),
            "rhs": _components_json(self.rhs),
            "note": self.note,
        }


def _space_symbol(sp: str) -> str:
    return {"A": "e", "B": "f", "e": "e"}.get(sp, sp)


def _components_json(vals: dict) -> list:
    return [[*k, format_scalar(v)] for k, v in sorted(vals.items())]


def format_components(vals: dict) -> str:
    if not vals:
        return "0"
    out = []
    for k, v in sorted(vals.items()):
        label = "e" + ",".join(map(str, k)) if k else ""
        c = format_scalar(v)
        if not label:
            out.append(c)
        elif v == 1:
            out.append(label)
        elif v == -1:
            out.append("-" + label)
        else:
            out.append(f"{c}*{label}")
    return " + ".join(out).replace("+ -", "- ")


@dataclass
class LawReport:
    """Per-law verdicts, in evaluation order, with witnesses for failures."""

    verdicts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    preconditions: "LawReport | None" = None

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    @property
    def failed(self) -> list:
        return [k for k, v in self.verdicts.items() if not v]

    def __getitem__(self, law_id: str) -> bool:
        return self.verdicts[law_id]

    def record(self, law_id: str, ok: bool, witness: Witness = None) -> None:
        if law_id in self.verdicts:
            return
        self.verdicts[law_id] = ok
        if not ok:
            if witness is None:
                raise ValueError(f"failed law {law_id} needs a witness")
            self.witnesses[law_id] = witness

    def merge(self, other: "LawReport", prefix: str = "") -> "LawReport":
        for k, v in other.verdicts.items():
            w = other.witnesses.get(k)
            if w is not None and prefix:
                w = Witness(prefix + w.law, w.args, w.lhs, w.rhs, w.part, w.spaces, w.note)
            self.record(prefix + k, v, w)
        return self

    def first_failure(self) -> Witness | None:
        for k in self.failed:
            return self.witnesses[k]
        return None

    def summary(self) -> str:
        lines = []
        if self.preconditions is not None and not self.preconditions.ok:
            lines.append("precondition failures (base algebra):")
            lines.extend("  " + ln for ln in self.preconditions.summary().splitlines())
        for k, v in self.verdicts.items():
            lines.append(f"{'PASS' if v else 'FAIL'}  {k}")
            if not v:
                lines.append("      " + self.witnesses[k].describe())
        return "\n".join(lines)

    def to_json(self) -> dict:
        out = {
            "ok": self.ok,
            "verdicts": {k: ("PASS" if v else "FAIL") for k, v in self.verdicts.items()},
            "witnesses": {k: w.to_json() for k, w in self.witnesses.items()},
        }
        if self.preconditions is not None:
            out["preconditions"] = self.preconditions.to_json()
        return out


def _side(terms: Sequence[Term], args: str, out: str, env: Mapping[str, dict]) -> dict:
    acc = defaultdict(int)
    target = args + out
    for t in terms:
        vals = contract(f"{t.spec}->{target}", *(env[o] for o in t.operands))
        for k, v in vals.items():
            acc[k] += t.coef * v
    return {k: v for k, v in acc.items() if v}


def evaluate(l: Law, env: Mapping[str, dict]):
    """Return (ok, witness) for one law against sparse tensors in ``env``."""
    n = len(l.args)
    best = None
    for pi, part in enumerate(l.parts):
        lhs = _side(part.lhs, l.args, l.out, env)
        rhs = _side(part.rhs, l.args, l.out, env)
        bad = None
        for k in set(lhs) | set(rhs):
            if lhs.get(k, 0) != rhs.get(k, 0):
                t = k[:n]
                if bad is None or t < bad:
                    bad = t
        if bad is not None and (best is None or (bad, pi) < best[:2]):
            best = (bad, pi, lhs, rhs)
    if best is None:
        return True, None
    bad, pi, lhs, rhs = best
    w = Witness(
        l.id,
        tuple(i + 1 for i in bad),
        _restrict(lhs, bad),
        _restrict(rhs, bad),
        pi,
        l.spaces,
    )
    return False, w


def _restrict(vals: dict, prefix: tuple) -> dict:
    n = len(prefix)
    return {tuple(i + 1 for i in k[n:]): Fraction(v) for k, v in vals.items() if k[:n] == prefix}


def check_laws(laws: Sequence[Law], env: Mapping[str, dict], report: LawReport = None,
               prefix: str = "") -> LawReport:
    report = report if report is not None else LawReport()
    env = {k: _ints(v) for k, v in env.items()}
    for l in laws:
        if prefix + l.id in report.verdicts:
            continue
        ok, w = evaluate(l, env)
        if w is not None and prefix:
            w = Witness(prefix + w.law, w.args, w.lhs, w.rhs, w.part, w.spaces, w.note)
        report.record(prefix + l.id, ok, w)
    return report
