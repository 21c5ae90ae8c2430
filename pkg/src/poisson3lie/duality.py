"""Coalgebras on coproduct tensors and the structure-constant duality.

  cop2[k, i, j]    coefficient of e_i (x) e_j in Delta(e_k)
  cop3[k, i, j, l] coefficient of e_i (x) e_j (x) e_l in delta(e_k)

Coalgebra laws are evaluated on the coproducts themselves, never by
dualizing first, so duality soundness is a genuine cross-check.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebras import Algebra, family_list
from .kernel import InputError, Tensor, permutation_sign, scalar
from .laws import T, LawReport, check_laws, law

COALGEBRA_FAMILIES = ("comm-assoc", "3-lie", "poisson", "admissible")


@dataclass(frozen=True)
class Coalgebra:
    dim: int
    cop2: Tensor
    cop3: Tensor

    def __post_init__(self):
        n = self.dim
        if self.cop2.dims != (n, n, n):
            raise InputError(f"Delta extents {self.cop2.dims} do not match dim {n}")
        if self.cop3.dims != (n, n, n, n):
            raise InputError(f"delta extents {self.cop3.dims} do not match dim {n}")

    @classmethod
    def zero(cls, n: int) -> "Coalgebra":
        return cls(n, Tensor.zeros((n,) * 3), Tensor.zeros((n,) * 4))

    @classmethod
    def from_entries(cls, dim: int, Delta=(), delta=(), closure: bool = True) -> "Coalgebra":
        """1-based entries [k, i, j, v] and [k, i, j, l, v].

        With ``closure`` the tensor factors of Delta are symmetrized and
        those of delta antisymmetrized (conflicts raise InputError).
        """
        b = _fill(dim, Delta, 2, True, closure, "Delta")
        d = _fill(dim, delta, 3, False, closure, "delta")
        return cls(dim, Tensor.from_sparse((dim,) * 3, b), Tensor.from_sparse((dim,) * 4, d))

    def env(self) -> dict:
        return {"b": self.cop2.sparse, "d": self.cop3.sparse}


def _fill(dim, entries, arity, sym, closure, what) -> dict:
    out = {}
    for e in entries:
        e = list(e)
        if len(e) != arity + 2:
            raise InputError(f"{what} entry {e} should have {arity + 1} indices and a value")
        idx = tuple(int(i) - 1 for i in e[:-1])
        if any(not 0 <= i < dim for i in idx):
            raise InputError(f"{what} entry {e} has an index outside 1..{dim}")
        v = scalar(e[-1])
        k, slots = idx[0], idx[1:]
        perms = itertools.permutations(range(arity)) if closure else [tuple(range(arity))]
        for perm in perms:
            key = (k,) + tuple(slots[p] for p in perm)
            val = v if sym else permutation_sign(perm) * v
            if key in out and out[key] != val:
                raise InputError(f"{what} closure conflict at {tuple(i + 1 for i in key)}")
            out[key] = val
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# coalgebra laws. b = Delta, d = delta; x is the input basis element and
# p, q, s, t, u are tensor slots in order.

COCOMMUTATIVITY = law("cocommutativity", "x", "pq", ([T(1, "xpq", "b")], [T(1, "xqp", "b")]),
                      text="tau Delta = Delta")
COASSOCIATIVITY = law("coassociativity", "x", "pqs",
                      ([T(1, "xks,kpq", "b", "b")], [T(1, "xpk,kqs", "b", "b")]),
                      text="(Delta (x) 1)Delta = (1 (x) Delta)Delta")
COANTISYMMETRY = law("cobracket_antisymmetry", "x", "pqs",
                     ([T(1, "xpqs", "d")], [T(-1, "xqps", "d")]),
                     ([T(1, "xpqs", "d")], [T(-1, "xpsq", "d")]),
                     text="delta takes values in totally antisymmetric tensors")
CO_FILIPPOV = law(
    "co_filippov_jacobi", "x", "pqstu",
    ([T(1, "xktu,kpqs", "d", "d"), T(1, "xsku,kpqt", "d", "d"), T(1, "xstk,kpqu", "d", "d")],
     [T(1, "xpqk,kstu", "d", "d")]),
    text="(delta(x)1(x)1)delta + t23 t12 (1(x)delta(x)1)delta + t13 t24 (1(x)1(x)delta)delta"
         " = (1(x)1(x)delta)delta")
CO_POISSON = law("co_poisson", "x", "pqst",
                 ([T(1, "xkst,kpq", "d", "b")],
                  [T(1, "xpk,kqst", "b", "d"), T(1, "xqk,kpst", "b", "d")]),
                 text="(Delta(x)1(x)1)delta = (1(x)delta)Delta + (t12(x)1(x)1)(1(x)delta)Delta")
CO_ADMISSIBLE = law("co_admissible", "x", "pqst",
                    ([T(1, "xkst,kpq", "d", "b")], []),
                    ([T(1, "xpk,kqst", "b", "d")], []),
                    text="(Delta(x)1(x)1)delta = (1(x)delta)Delta = 0")

COALGEBRA_LAWS = {
    "comm-assoc": (COCOMMUTATIVITY, COASSOCIATIVITY),
    "3-lie": (COANTISYMMETRY, CO_FILIPPOV),
}
COALGEBRA_LAWS["poisson"] = COALGEBRA_LAWS["comm-assoc"] + COALGEBRA_LAWS["3-lie"] + (CO_POISSON,)
COALGEBRA_LAWS["admissible"] = COALGEBRA_LAWS["comm-assoc"] + COALGEBRA_LAWS["3-lie"] + (CO_ADMISSIBLE,)


def coalgebra_laws(families) -> tuple:
    seen = {}
    for f in family_list(families):
        if f not in COALGEBRA_LAWS:
            raise InputError(f"no coalgebra family {f!r}; expected one of {', '.join(COALGEBRA_FAMILIES)}")
        for l in COALGEBRA_LAWS[f]:
            seen.setdefault(l.id, l)
    return tuple(seen.values())


def validate_coalgebra(co: Coalgebra, families=COALGEBRA_FAMILIES) -> LawReport:
    return check_laws(coalgebra_laws(families), co.env())


def dualize_coalgebra(co: Coalgebra) -> Algebra:
    """Algebra on the dual basis: e_i* o e_j* = sum_k b[k,i,j] e_k*,
    [e_i*, e_j*, e_l*] = sum_k d[k,i,j,l] e_k*."""
    n = co.dim
    p = {(i, j, k): v for (k, i, j), v in co.cop2.sparse.items()}
    b = {(i, j, l, k): v for (k, i, j, l), v in co.cop3.sparse.items()}
    return Algebra(n, Tensor.from_sparse((n,) * 3, p), Tensor.from_sparse((n,) * 4, b))


def dualize_algebra(alg: Algebra) -> Coalgebra:
    """Coproducts whose dual operations are those of ``alg``."""
    n = alg.dim
    b = {(k, i, j): v for (i, j, k), v in alg.product.sparse.items()}
    d = {(k, i, j, l): v for (i, j, l, k), v in alg.bracket.sparse.items()}
    return Coalgebra(n, Tensor.from_sparse((n,) * 3, b), Tensor.from_sparse((n,) * 4, d))
