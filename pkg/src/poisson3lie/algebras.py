"""Algebras given by structure constants, their laws and constructions.

Conventions (0-based internally):
  product[i, j, l]    coefficient of e_l in e_i . e_j
  bracket[i, j, k, l] coefficient of e_l in [e_i, e_j, e_k]
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .kernel import (InputError, Matrix, PreconditionError, Tensor, ZERO,
                     permutation_sign, scalar)
from .laws import T, LawReport, check_laws, law

FAMILIES = ("comm-assoc", "3-lie", "poisson", "transposed", "admissible")


@dataclass(frozen=True)
class Algebra:
    dim: int
    product: Tensor
    bracket: Tensor
    labels: tuple = ()

    def __post_init__(self):
        n = self.dim
        if self.product.dims != (n, n, n):
            raise InputError(f"product extents {self.product.dims} do not match dim {n}")
        if self.bracket.dims != (n, n, n, n):
            raise InputError(f"bracket extents {self.bracket.dims} do not match dim {n}")
        if self.labels and len(self.labels) != n:
            raise InputError("number of basis labels does not match dim")

    @classmethod
    def zero(cls, n: int) -> "Algebra":
        return cls(n, Tensor.zeros((n,) * 3), Tensor.zeros((n,) * 4))

    @classmethod
    def from_entries(cls, dim: int, product: Iterable = (), bracket: Iterable = (),
                     closure: bool = True, labels: Sequence[str] = ()) -> "Algebra":
        """Build from 1-based "nonzero operation" entries.

        With ``closure`` the product is completed symmetrically and the
        bracket antisymmetrically; conflicting entries raise InputError.
        """
        p = _fill(dim, product, 2, sym=True, closure=closure, what="product")
        b = _fill(dim, bracket, 3, sym=False, closure=closure, what="bracket")
        return cls(dim, Tensor.from_sparse((dim,) * 3, p), Tensor.from_sparse((dim,) * 4, b),
                   tuple(labels))

    def mul(self, x: Sequence, y: Sequence) -> tuple:
        """Product of two coordinate vectors."""
        out = [ZERO] * self.dim
        for (i, j, l), v in self.product.sparse.items():
            if x[i] and y[j]:
                out[l] += v * scalar(x[i]) * scalar(y[j])
        return tuple(out)

    def br(self, x: Sequence, y: Sequence, z: Sequence) -> tuple:
        out = [ZERO] * self.dim
        for (i, j, k, l), v in self.bracket.sparse.items():
            if x[i] and y[j] and z[k]:
                out[l] += v * scalar(x[i]) * scalar(y[j]) * scalar(z[k])
        return tuple(out)

    def left_mult(self, i: int) -> Matrix:
        """Matrix of y -> e_i . y (0-based i)."""
        n = self.dim
        return Matrix.from_sparse((n, n), {(l, j): v for (a, j, l), v in self.product.sparse.items() if a == i})

    def ad(self, i: int, j: int) -> Matrix:
        """Matrix of z -> [e_i, e_j, z] (0-based)."""
        n = self.dim
        return Matrix.from_sparse((n, n), {(l, k): v for (a, b, k, l), v in self.bracket.sparse.items()
                                           if a == i and b == j})

    def env(self) -> dict:
        return {"a": self.product.sparse, "c": self.bracket.sparse}


def _fill(dim: int, entries: Iterable, arity: int, sym: bool, closure: bool, what: str) -> dict:
    out = {}
    for e in entries:
        e = list(e)
        if len(e) != arity + 2:
            raise InputError(f"{what} entry {e} should have {arity + 1} indices and a value")
        idx = tuple(int(i) - 1 for i in e[:-1])
        if any(not 0 <= i < dim for i in idx):
            raise InputError(f"{what} entry {e} has an index outside 1..{dim}")
        v = scalar(e[-1])
        ins, res = idx[:-1], idx[-1]
        perms = itertools.permutations(range(arity)) if closure else [tuple(range(arity))]
        for perm in perms:
            s = 1 if sym else permutation_sign(perm)
            key = tuple(ins[p] for p in perm) + (res,)
            val = s * v
            if key in out and out[key] != val:
                raise InputError(f"{what} closure conflict at {tuple(i + 1 for i in key)}: "
                                 f"{out[key]} vs {val}")
            out[key] = val
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class LinearMap:
    source: int
    target: int
    matrix: Matrix  # target x source; column c is the image of e_c

    def __post_init__(self):
        if self.matrix.dims != (self.target, self.source):
            raise InputError(f"matrix extents {self.matrix.dims} do not match {self.target}x{self.source}")

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(n, n, Matrix.identity(n))

    @classmethod
    def zero(cls, source: int, target: int) -> "LinearMap":
        return cls(source, target, Matrix((target, source)))

    @classmethod
    def scaled(cls, n: int, s) -> "LinearMap":
        return cls(n, n, Matrix.from_sparse((n, n), {(i, i): s for i in range(n)}))

    def tensor(self) -> dict:
        """Sparse f[c, r] = coefficient of e_r in f(e_c)."""
        return {(c, r): v for (r, c), v in self.matrix.sparse.items()}


# ---------------------------------------------------------------------------
# law catalog. operands: a = product, c = bracket

COMMUTATIVITY = law("commutativity", "xy", "l", ([T(1, "xyl", "a")], [T(1, "yxl", "a")]),
                    text="x.y = y.x")
ASSOCIATIVITY = law("associativity", "xyz", "l",
                    ([T(1, "xym,mzl", "a", "a")], [T(1, "yzm,xml", "a", "a")]),
                    text="(x.y).z = x.(y.z)")
ANTISYMMETRY = law("bracket_antisymmetry", "xyz", "l",
                   ([T(1, "xyzl", "c")], [T(-1, "yxzl", "c")]),
                   ([T(1, "xyzl", "c")], [T(-1, "xzyl", "c")]),
                   text="[x,y,z] = -[y,x,z] = -[x,z,y]")
FILIPPOV_JACOBI = law(
    "filippov_jacobi", "abcde", "l",
    ([T(1, "cdem,abml", "c", "c")],
     [T(1, "abcm,mdel", "c", "c"), T(1, "abdm,cmel", "c", "c"), T(1, "abem,cdml", "c", "c")]),
    text="[x1,x2,[y1,y2,y3]] = [[x1,x2,y1],y2,y3] + [y1,[x1,x2,y2],y3] + [y1,y2,[x1,x2,y3]]")
POISSON_LEIBNIZ = law(
    "poisson_leibniz", "wxyz", "l",
    ([T(1, "wxm,myzl", "a", "c")], [T(1, "xyzm,wml", "c", "a"), T(1, "wyzm,xml", "c", "a")]),
    text="[w.x,y,z] = w.[x,y,z] + x.[w,y,z]")
TRANSPOSED_LEIBNIZ = law(
    "transposed_leibniz", "wxyz", "l",
    ([T(3, "xyzm,wml", "c", "a")],
     [T(1, "wxm,myzl", "a", "c"), T(1, "wym,xmzl", "a", "c"), T(1, "wzm,xyml", "a", "c")]),
    text="3w.[x,y,z] = [w.x,y,z] + [x,w.y,z] + [x,y,w.z]")
MIXED_VANISH = law(
    "mixed_products_vanish", "uxyz", "l",
    ([T(1, "xyzm,uml", "c", "a")], []),
    ([T(1, "uxm,myzl", "a", "c")], []),
    text="u.[x,y,z] = 0 and [u.x,y,z] = 0")

FAMILY_LAWS = {
    "comm-assoc": (COMMUTATIVITY, ASSOCIATIVITY),
    "3-lie": (ANTISYMMETRY, FILIPPOV_JACOBI),
}
FAMILY_LAWS["poisson"] = FAMILY_LAWS["comm-assoc"] + FAMILY_LAWS["3-lie"] + (POISSON_LEIBNIZ,)
FAMILY_LAWS["transposed"] = FAMILY_LAWS["comm-assoc"] + FAMILY_LAWS["3-lie"] + (TRANSPOSED_LEIBNIZ,)
FAMILY_LAWS["admissible"] = FAMILY_LAWS["comm-assoc"] + FAMILY_LAWS["3-lie"] + (MIXED_VANISH,)


def family_list(families) -> tuple:
    if isinstance(families, str):
        families = (families,)
    families = tuple(families)
    for f in families:
        if f not in FAMILIES:
            raise InputError(f"unknown law family {f!r}; expected one of {', '.join(FAMILIES)}")
    return families


def laws_for(families) -> tuple:
    seen = {}
    for f in family_list(families):
        for l in FAMILY_LAWS[f]:
            seen.setdefault(l.id, l)
    return tuple(seen.values())


def validate(alg: Algebra, families=FAMILIES) -> LawReport:
    """Check every law of the requested families over all basis tuples."""
    return check_laws(laws_for(families), alg.env())


def family_ok(report: LawReport, family: str) -> bool:
    return all(report.verdicts[l.id] for l in FAMILY_LAWS[family])


# ---------------------------------------------------------------------------
# constructions

def direct_sum(a1: Algebra, a2: Algebra) -> Algebra:
    n1, n = a1.dim, a1.dim + a2.dim
    p = dict(a1.product.sparse)
    b = dict(a1.bracket.sparse)
    p.update({tuple(i + n1 for i in k): v for k, v in a2.product.sparse.items()})
    b.update({tuple(i + n1 for i in k): v for k, v in a2.bracket.sparse.items()})
    labels = a1.labels + a2.labels if a1.labels and a2.labels else ()
    return Algebra(n, Tensor.from_sparse((n,) * 3, p), Tensor.from_sparse((n,) * 4, b), labels)


def tensor_with_commutative(a1: Algebra, c2: Algebra) -> Algebra:
    """A1 (x) C2 for a commutative associative C2 with zero bracket.

    Basis e_i (x) f_u sits at index i * dim(C2) + u.
    """
    if not c2.bracket.is_zero():
        raise PreconditionError("second factor must have zero bracket")
    rep = validate(c2, "comm-assoc")
    if not rep.ok:
        raise PreconditionError(f"second factor is not commutative associative: {rep.failed}")
    n2 = c2.dim
    n = a1.dim * n2
    a2 = c2.product.sparse
    # triple products (u.v).w in C2
    triple = {}
    for (u, v, s), x in a2.items():
        for (s2, w, t), y in a2.items():
            if s2 == s:
                triple[(u, v, w, t)] = triple.get((u, v, w, t), ZERO) + x * y
    p, b = {}, {}
    for (i, j, l), x in a1.product.sparse.items():
        for (u, v, w), y in a2.items():
            key = (i * n2 + u, j * n2 + v, l * n2 + w)
            p[key] = p.get(key, ZERO) + x * y
    for (i, j, k, l), x in a1.bracket.sparse.items():
        for (u, v, w, t), y in triple.items():
            if y:
                key = (i * n2 + u, j * n2 + v, k * n2 + w, l * n2 + t)
                b[key] = b.get(key, ZERO) + x * y
    return Algebra(n, Tensor.from_sparse((n,) * 3, p), Tensor.from_sparse((n,) * 4, b))


def h_twist(alg: Algebra, h: Sequence) -> Algebra:
    """Same product, bracket [x,y,z]_h = h.[x,y,z]."""
    n = alg.dim
    h = [scalar(x) for x in h]
    if len(h) != n:
        raise InputError(f"twist element needs {n} coordinates")
    rep = validate(alg, "transposed")
    if not rep.ok:
        raise PreconditionError(f"twist needs a transposed algebra; failed: {rep.failed}")
    hm = {}  # hm[m, l] = coefficient of e_l in h.e_m
    for (p, m, l), v in alg.product.sparse.items():
        if h[p]:
            hm[(m, l)] = hm.get((m, l), ZERO) + h[p] * v
    b = {}
    for (i, j, k, m), v in alg.bracket.sparse.items():
        for l in range(n):
            x = hm.get((m, l))
            if x:
                b[(i, j, k, l)] = b.get((i, j, k, l), ZERO) + v * x
    out = Algebra(n, alg.product, Tensor.from_sparse((n,) * 4, b), alg.labels)
    check = validate(out, "transposed")
    if not check.ok:  # would contradict the twist proposition
        raise AssertionError(f"twist produced a non-transposed algebra: {check.summary()}")
    return out


HOM_BRACKET = law("hom_bracket", "xyz", "l",
                  ([T(1, "xyzm,ml", "c1", "f")], [T(1, "xp,yq,zr,pqrl", "f", "f", "f", "c2")]),
                  text="f[x,y,z] = [fx,fy,fz]")
HOM_PRODUCT = law("hom_product", "xy", "l",
                  ([T(1, "xym,ml", "a1", "f")], [T(1, "xp,yq,pql", "f", "f", "a2")]),
                  text="f(x.y) = fx.fy")
DERIVATION = law("derivation", "xyz", "l",
                 ([T(1, "xyzm,ml", "c", "D")],
                  [T(1, "xm,myzl", "D", "c"), T(1, "ym,xmzl", "D", "c"), T(1, "zm,xyml", "D", "c")]),
                 text="D[x,y,z] = [Dx,y,z] + [x,Dy,z] + [x,y,Dz]")


def is_homomorphism(f: LinearMap, a1: Algebra, a2: Algebra) -> LawReport:
    if f.source != a1.dim or f.target != a2.dim:
        raise InputError("map dimensions do not match the algebras")
    env = {"a1": a1.product.sparse, "c1": a1.bracket.sparse,
           "a2": a2.product.sparse, "c2": a2.bracket.sparse, "f": f.tensor()}
    return check_laws((HOM_BRACKET, HOM_PRODUCT), env)


def is_derivation(D: LinearMap, alg: Algebra) -> LawReport:
    if D.source != alg.dim or D.target != alg.dim:
        raise InputError("derivation must be square of the algebra's dimension")
    return check_laws((DERIVATION,), {"c": alg.bracket.sparse, "D": D.tensor()})


def ad_map(alg: Algebra, i: int, j: int) -> LinearMap:
    return LinearMap(alg.dim, alg.dim, alg.ad(i, j))
