"""Representations (mu, rho), duals, adjoints and semi-direct products.

Matrices act on column vectors of the carrier: ``mu[i][r, c]`` is the
coefficient of v_r in mu(e_i) v_c. For contraction the same data is
re-indexed input-first, like structure constants: mu_t[i, c, r].
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebras import Algebra, family_list, validate
from .kernel import InputError, Matrix, Tensor, scalar
from .laws import T, LawReport, check_laws, law


@dataclass(frozen=True)
class Representation:
    base: Algebra
    carrier: int
    mu: tuple   # n matrices m x m
    rho: tuple  # n x n matrices m x m

    def __post_init__(self):
        n, m = self.base.dim, self.carrier
        if len(self.mu) != n or len(self.rho) != n or any(len(r) != n for r in self.rho):
            raise InputError("representation maps must be indexed by the base basis")
        for M in list(self.mu) + [M for row in self.rho for M in row]:
            if M.dims != (m, m):
                raise InputError(f"action matrix extents {M.dims} do not match carrier {m}")

    @classmethod
    def from_entries(cls, base: Algebra, carrier: int, mu=(), rho=(), closure: bool = True):
        """1-based entries [i, r, c, v] for mu and [i, j, r, c, v] for rho."""
        n, m = base.dim, carrier
        mus = [dict() for _ in range(n)]
        rhos = [[dict() for _ in range(n)] for _ in range(n)]
        for e in mu:
            i, r, c = (int(x) - 1 for x in e[:3])
            _bounds((i,), n, "mu")
            _bounds((r, c), m, "mu")
            mus[i][(r, c)] = scalar(e[3])
        for e in rho:
            i, j, r, c = (int(x) - 1 for x in e[:4])
            _bounds((i, j), n, "rho")
            _bounds((r, c), m, "rho")
            v = scalar(e[4])
            _put(rhos[i][j], (r, c), v)
            if closure:
                _put(rhos[j][i], (r, c), -v)
        return cls(base, m,
                   tuple(Matrix.from_sparse((m, m), d) for d in mus),
                   tuple(tuple(Matrix.from_sparse((m, m), d) for d in row) for row in rhos))

    @classmethod
    def from_tensors(cls, base: Algebra, carrier: int, mu_t: dict, rho_t: dict):
        """Build from input-first sparse tensors mu_t[i,c,r], rho_t[i,j,c,r]."""
        n, m = base.dim, carrier
        mus = [dict() for _ in range(n)]
        rhos = [[dict() for _ in range(n)] for _ in range(n)]
        for (i, c, r), v in mu_t.items():
            mus[i][(r, c)] = v
        for (i, j, c, r), v in rho_t.items():
            rhos[i][j][(r, c)] = v
        return cls(base, m,
                   tuple(Matrix.from_sparse((m, m), d) for d in mus),
                   tuple(tuple(Matrix.from_sparse((m, m), d) for d in row) for row in rhos))

    def mu_tensor(self) -> dict:
        return {(i, c, r): v for i, M in enumerate(self.mu) for (r, c), v in M.sparse.items()}

    def rho_tensor(self) -> dict:
        return {(i, j, c, r): v for i, row in enumerate(self.rho) for j, M in enumerate(row)
                for (r, c), v in M.sparse.items()}

    def env(self) -> dict:
        e = self.base.env()
        e["mu"] = self.mu_tensor()
        e["rho"] = self.rho_tensor()
        return e


def _bounds(idx, n, what):
    if any(not 0 <= i < n for i in idx):
        raise InputError(f"{what} entry index out of range 1..{n}")


def _put(d, key, v):
    if key in d and d[key] != v:
        raise InputError(f"rho closure conflict at {key}")
    d[key] = v


# ---------------------------------------------------------------------------
# law catalog. "xsk,..." style: s is the input carrier index, r the output.

RHO_SKEW = law("rho_antisymmetry", "xy", "sr", ([T(1, "xysr", "rho")], [T(-1, "yxsr", "rho")]),
               text="rho(x,y) = -rho(y,x)")
CA_REP = law("comm_assoc_rep", "xy", "sr",
             ([T(1, "xym,msr", "a", "mu")], [T(1, "ysk,xkr", "mu", "mu")]),
             text="mu(x.y) = mu(x)mu(y)")
LIE_REP_1 = law("lie_rep_commutator", "abcd", "sr",
                ([T(1, "cdsk,abkr", "rho", "rho"), T(-1, "absk,cdkr", "rho", "rho")],
                 [T(1, "abcm,mdsr", "c", "rho"), T(-1, "abdm,mcsr", "c", "rho")]),
                text="[rho(x1,x2), rho(x3,x4)] = rho([x1,x2,x3],x4) - rho([x1,x2,x4],x3)")
LIE_REP_2 = law("lie_rep_bracket", "abcd", "sr",
                ([T(1, "abcm,mdsr", "c", "rho")],
                 [T(1, "cdsk,abkr", "rho", "rho"), T(1, "adsk,bckr", "rho", "rho"),
                  T(1, "bdsk,cakr", "rho", "rho")]),
                text="rho([x1,x2,x3],x4) = rho(x1,x2)rho(x3,x4) + rho(x2,x3)rho(x1,x4) + rho(x3,x1)rho(x2,x4)")
POISSON_REP_1 = law("poisson_rep_product", "xyz", "sr",
                    ([T(1, "xym,mzsr", "a", "rho")],
                     [T(1, "yzsk,xkr", "rho", "mu"), T(1, "xzsk,ykr", "rho", "mu")]),
                    text="rho(x.y,z) = mu(x)rho(y,z) + mu(y)rho(x,z)")
POISSON_REP_2 = law("poisson_rep_bracket", "xyz", "sr",
                    ([T(1, "zsk,xykr", "mu", "rho")],
                     [T(1, "xyzm,msr", "c", "mu"), T(1, "xysk,zkr", "rho", "mu")]),
                    text="rho(x,y)mu(z) = mu([x,y,z]) + mu(z)rho(x,y)")
TRANS_REP_1 = law("transposed_rep_product", "xyz", "sr",
                  ([T(3, "yzsk,xkr", "rho", "mu")],
                   [T(1, "xym,mzsr", "a", "rho"), T(1, "xzm,ymsr", "a", "rho"), T(1, "xsk,yzkr", "mu", "rho")]),
                  text="3mu(x)rho(y,z) = rho(x.y,z) + rho(y,x.z) + rho(y,z)mu(x)")
TRANS_REP_2 = law("transposed_rep_bracket", "xyz", "sr",
                  ([T(3, "xyzm,msr", "c", "mu")],
                   [T(1, "xsk,yzkr", "mu", "rho"), T(-1, "ysk,xzkr", "mu", "rho"), T(1, "zsk,xykr", "mu", "rho")]),
                  text="3mu([x,y,z]) = rho(y,z)mu(x) - rho(x,z)mu(y) + rho(x,y)mu(z)")
ADMISSIBLE_REP = law("admissible_rep_vanish", "xyz", "sr",
                     ([T(1, "yzsk,xkr", "rho", "mu")], []),
                     ([T(1, "xsk,yzkr", "mu", "rho")], []),
                     ([T(1, "xym,mzsr", "a", "rho")], []),
                     ([T(1, "xyzm,msr", "c", "mu")], []),
                     text="mu(x)rho(y,z) = rho(y,z)mu(x) = rho(x.y,z) = mu([x,y,z]) = 0")

REP_LAWS = {
    "comm-assoc": (CA_REP,),
    "3-lie": (RHO_SKEW, LIE_REP_1, LIE_REP_2),
}
REP_LAWS["poisson"] = REP_LAWS["comm-assoc"] + REP_LAWS["3-lie"] + (POISSON_REP_1, POISSON_REP_2)
REP_LAWS["transposed"] = REP_LAWS["comm-assoc"] + REP_LAWS["3-lie"] + (TRANS_REP_1, TRANS_REP_2)
REP_LAWS["admissible"] = REP_LAWS["comm-assoc"] + REP_LAWS["3-lie"] + (ADMISSIBLE_REP,)

TRANSPOSED_DUAL = law("transposed_dual_condition", "xyz", "sr",
                      ([T(1, "yzsk,xkr", "rho", "mu")], [T(1, "xsk,yzkr", "mu", "rho")]),
                      ([T(1, "xyzm,msr", "c", "mu")], []),
                      text="mu(x)rho(y,z) = rho(y,z)mu(x) and mu([x,y,z]) = 0")


def rep_laws(family: str) -> tuple:
    (family,) = family_list(family)
    return REP_LAWS[family]


def validate_representation(rep: Representation, family: str) -> LawReport:
    """Verdicts for the family's representation identities.

    The base algebra is checked too; its verdicts are kept apart in
    ``report.preconditions`` so a bad base is not confused with a bad rep.
    """
    report = check_laws(rep_laws(family), rep.env())
    report.preconditions = validate(rep.base, family)
    return report


def adjoint_representation(alg: Algebra) -> Representation:
    n = alg.dim
    return Representation(alg, n, tuple(alg.left_mult(i) for i in range(n)),
                          tuple(tuple(alg.ad(i, j) for j in range(n)) for i in range(n)))


def dual_representation(rep: Representation) -> Representation:
    """(rho*, -mu*): rho*(x,y) = -rho(x,y)^T and (-mu*)(x) = mu(x)^T."""
    return Representation(rep.base, rep.carrier,
                          tuple(M.transpose() for M in rep.mu),
                          tuple(tuple(-M.transpose() for M in row) for row in rep.rho))


def transposed_dual_report(rep: Representation) -> LawReport:
    """Whether the dual of a transposed representation is again one.

    For the transposed family the dual is a representation exactly when
    mu(x)rho(y,z) = rho(y,z)mu(x) and mu([x,y,z]) = 0 hold.
    """
    report = check_laws((TRANSPOSED_DUAL,), rep.env())
    report.preconditions = validate(rep.base, "transposed")
    return report


def coadjoint_representation(alg: Algebra) -> Representation:
    return dual_representation(adjoint_representation(alg))


def semidirect_product(rep: Representation, family: str = None) -> Algebra:
    """A x| V with (x+u).(y+v) = x.y + mu(x)v + mu(y)u and
    [x1+u1, x2+u2, x3+u3] = [x1,x2,x3] + rho(x1,x2)u3 - rho(x1,x3)u2 + rho(x2,x3)u1.

    ``family`` is accepted for symmetry with the other constructors; the
    formulas are the same for every family.
    """
    base, m = rep.base, rep.carrier
    n = base.dim
    N = n + m
    p = dict(base.product.sparse)
    b = dict(base.bracket.sparse)
    for (i, c, r), v in rep.mu_tensor().items():
        _acc(p, (i, n + c, n + r), v)
        _acc(p, (n + c, i, n + r), v)
    for (i, j, c, r), v in rep.rho_tensor().items():
        _acc(b, (i, j, n + c, n + r), v)
        _acc(b, (i, n + c, j, n + r), -v)
        _acc(b, (n + c, i, j, n + r), v)
    return Algebra(N, Tensor.from_sparse((N,) * 3, p), Tensor.from_sparse((N,) * 4, b))


def _acc(d: dict, k: tuple, v) -> None:
    d[k] = d.get(k, 0) + v


def zero_representation(base: Algebra, m: int) -> Representation:
    n = base.dim
    z = Matrix((m, m))
    return Representation(base, m, (z,) * n, tuple((z,) * n for _ in range(n)))
