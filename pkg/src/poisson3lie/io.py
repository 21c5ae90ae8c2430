"""JSON files for every object kind: 1-based indices, scalars as "p/q" strings.

Each file is one object with a ``kind`` field: algebra, coalgebra,
representation, matched_pair, bundle or template.
"""
from __future__ import annotations

import json
import re
from pathlib import Path

from .algebras import Algebra
from .duality import Coalgebra
from .kernel import InputError, Matrix, format_scalar, scalar
from .pairs import MatchedPair
from .reps import Representation

KINDS = ("algebra", "coalgebra", "representation", "matched_pair", "bundle", "template")


def _entries(sparse: dict) -> list:
    return [[*(i + 1 for i in k), format_scalar(v)] for k, v in sorted(sparse.items())]


def _list(obj: dict, key: str, where: str) -> list:
    v = obj.get(key, [])
    if not isinstance(v, list) or any(not isinstance(e, list) for e in v):
        raise InputError(f"{where}: '{key}' must be a list of entries")
    return v


def _dim(obj: dict, where: str, key: str = "dim") -> int:
    d = obj.get(key)
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise InputError(f"{where}: '{key}' must be a nonnegative integer")
    return d


def _closure(obj: dict, default: bool) -> bool:
    c = obj.get("closure", default)
    if not isinstance(c, bool):
        raise InputError("'closure' must be true or false")
    return c


def _expect(obj, kind: str, where: str) -> dict:
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected a JSON object")
    k = obj.get("kind", kind)
    if k != kind:
        raise InputError(f"{where}: expected kind '{kind}', found '{k}'")
    return obj


# ---------------------------------------------------------------------------
# to and from plain JSON objects

def algebra_to_json(alg: Algebra, **extra) -> dict:
    out = {"kind": "algebra", "dim": alg.dim, "closure": False,
           "product": _entries(alg.product.sparse), "bracket": _entries(alg.bracket.sparse)}
    if alg.labels:
        out["labels"] = list(alg.labels)
    out.update(extra)
    return out


def algebra_from_json(obj, closure: bool = None, where: str = "algebra") -> Algebra:
    obj = _expect(obj, "algebra", where)
    c = _closure(obj, True) if closure is None else closure
    n = _dim(obj, where)
    try:
        return Algebra.from_entries(n, _list(obj, "product", where), _list(obj, "bracket", where),
                                    closure=c, labels=obj.get("labels", ()))
    except (InputError, ValueError, TypeError) as exc:
        raise InputError(f"{where}: {exc}") from exc


def coalgebra_to_json(co: Coalgebra) -> dict:
    return {"kind": "coalgebra", "dim": co.dim, "closure": False,
            "Delta": _entries(co.cop2.sparse), "delta": _entries(co.cop3.sparse)}


def coalgebra_from_json(obj, closure: bool = None, where: str = "coalgebra") -> Coalgebra:
    obj = _expect(obj, "coalgebra", where)
    c = _closure(obj, True) if closure is None else closure
    n = _dim(obj, where)
    try:
        return Coalgebra.from_entries(n, _list(obj, "Delta", where), _list(obj, "delta", where), closure=c)
    except (InputError, ValueError, TypeError) as exc:
        raise InputError(f"{where}: {exc}") from exc


def _action_entries(mats) -> list:
    out = []
    for i, M in enumerate(mats):
        for (r, c), v in sorted(M.sparse.items()):
            out.append([i + 1, r + 1, c + 1, format_scalar(v)])
    return out


def _pair_action_entries(rows) -> list:
    out = []
    for i, row in enumerate(rows):
        for j, M in enumerate(row):
            for (r, c), v in sorted(M.sparse.items()):
                out.append([i + 1, j + 1, r + 1, c + 1, format_scalar(v)])
    return out


def representation_to_json(rep: Representation) -> dict:
    return {"kind": "representation", "base": algebra_to_json(rep.base), "carrier": rep.carrier,
            "closure": False, "mu": _action_entries(rep.mu), "rho": _pair_action_entries(rep.rho)}


def representation_from_json(obj, closure: bool = None, where: str = "representation") -> Representation:
    obj = _expect(obj, "representation", where)
    c = _closure(obj, True) if closure is None else closure
    base = algebra_from_json(obj.get("base"), closure, f"{where}.base")
    try:
        return Representation.from_entries(base, _dim(obj, where, "carrier"), _list(obj, "mu", where),
                                           _list(obj, "rho", where), closure=c)
    except (InputError, ValueError, TypeError, IndexError) as exc:
        raise InputError(f"{where}: {exc}") from exc


def matched_pair_to_json(mp: MatchedPair) -> dict:
    return {"kind": "matched_pair", "A": algebra_to_json(mp.algA), "B": algebra_to_json(mp.algB),
            "closure": False,
            "muA": _action_entries(mp.muA), "rhoA": _pair_action_entries(mp.rhoA),
            "muB": _action_entries(mp.muB), "rhoB": _pair_action_entries(mp.rhoB)}


def matched_pair_from_json(obj, closure: bool = None, where: str = "matched_pair") -> MatchedPair:
    obj = _expect(obj, "matched_pair", where)
    c = _closure(obj, True) if closure is None else closure
    A = algebra_from_json(obj.get("A"), closure, f"{where}.A")
    B = algebra_from_json(obj.get("B"), closure, f"{where}.B")
    try:
        ra = Representation.from_entries(A, B.dim, _list(obj, "muA", where), _list(obj, "rhoA", where), c)
        rb = Representation.from_entries(B, A.dim, _list(obj, "muB", where), _list(obj, "rhoB", where), c)
    except (InputError, ValueError, TypeError, IndexError) as exc:
        raise InputError(f"{where}: {exc}") from exc
    return MatchedPair.from_reps(ra, rb)


def bundle_to_json(alg: Algebra, co: Coalgebra) -> dict:
    return {"kind": "bundle", "algebra": algebra_to_json(alg), "coalgebra": coalgebra_to_json(co)}


def bundle_from_json(obj, closure: bool = None, where: str = "bundle") -> tuple:
    obj = _expect(obj, "bundle", where)
    alg = algebra_from_json(obj.get("algebra"), closure, f"{where}.algebra")
    co = coalgebra_from_json(obj.get("coalgebra"), closure, f"{where}.coalgebra")
    if alg.dim != co.dim:
        raise InputError(f"{where}: algebra dim {alg.dim} and coalgebra dim {co.dim} differ")
    return alg, co


def template_from_json(obj, where: str = "template"):
    from .search import SearchTemplate
    obj = _expect(obj, "template", where)
    n = _dim(obj, where)
    fixed = obj.get("fixed", {})
    free = obj.get("free", {})
    if not isinstance(fixed, dict) or not isinstance(free, dict):
        raise InputError(f"{where}: 'fixed' and 'free' must be objects with product/bracket lists")
    try:
        return SearchTemplate(
            dim=n,
            fixed_product=tuple(tuple(e) for e in _list(fixed, "product", where)),
            fixed_bracket=tuple(tuple(e) for e in _list(fixed, "bracket", where)),
            free_product=tuple(tuple(e) for e in _list(free, "product", where)),
            free_bracket=tuple(tuple(e) for e in _list(free, "bracket", where)),
            coefficients=tuple(scalar(c) for c in obj.get("coefficients", [])),
            families=tuple(obj.get("families", ())),
            budget=obj.get("budget"),
        )
    except (InputError, ValueError, TypeError) as exc:
        raise InputError(f"{where}: {exc}") from exc


def template_to_json(t) -> dict:
    def fmt(entries, valued):
        return [[*e[:-1], format_scalar(scalar(e[-1]))] if valued else list(e) for e in entries]
    out = {"kind": "template", "dim": t.dim,
           "fixed": {"product": fmt(t.fixed_product, True), "bracket": fmt(t.fixed_bracket, True)},
           "free": {"product": fmt(t.free_product, False), "bracket": fmt(t.free_bracket, False)},
           "coefficients": [format_scalar(c) for c in t.coefficients],
           "families": list(t.families)}
    if t.budget is not None:
        out["budget"] = t.budget
    return out


_READERS = {
    "algebra": algebra_from_json,
    "coalgebra": coalgebra_from_json,
    "representation": representation_from_json,
    "matched_pair": matched_pair_from_json,
    "bundle": bundle_from_json,
}


def from_json(obj, closure: bool = None, where: str = "input"):
    """Decode any object kind; returns (kind, value)."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InputError(f"{where}: expected an object with a 'kind' field")
    kind = obj["kind"]
    if kind == "template":
        return kind, template_from_json(obj, where)
    if kind not in _READERS:
        raise InputError(f"{where}: unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    return kind, _READERS[kind](obj, closure, where)


def read_json(path) -> object:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def load(path, closure: bool = None, expect: str = None):
    """Read a file and decode it; with ``expect`` the kind must match."""
    obj = read_json(path)
    kind, value = from_json(obj, closure, str(path))
    if expect is not None and kind != expect:
        raise InputError(f"{path}: expected kind '{expect}', found '{kind}'")
    return value


_FLAT = re.compile(r"\[\s+([^\[\]{}\"]*(?:\"[^\"\s]*\"[^\[\]{}\"]*)*)\s+\]")


def dumps(obj) -> str:
    """Indented JSON with each innermost list (one entry) kept on a single line."""
    text = json.dumps(obj, indent=2)
    return _FLAT.sub(lambda m: "[" + " ".join(m.group(1).split()) + "]", text) + "\n"


def save(path, obj: dict) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def matrix_to_json(M: Matrix) -> list:
    return [[format_scalar(v) for v in row] for row in M.row_lists()]
