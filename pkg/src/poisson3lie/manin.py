"""Doubles on A (+) A*, invariant forms, Manin triples and bialgebras.

In a double of dimension 2n, coordinates 0..n-1 are the basis e_i of A and
n..2n-1 the dual basis e_i* of A*. The standard form pairs e_i with e_i*.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .algebras import Algebra, family_list, validate
from .duality import Coalgebra, dualize_coalgebra, validate_coalgebra
from .kernel import (InputError, Matrix, Polynomial, Tensor, bareiss_echelon, determinant,
                     determinant_polynomial)
from .laws import T, LawReport, Witness, check_laws, law
from .pairs import MatchedPair, check_matched_pair
from .reps import coadjoint_representation


@dataclass(frozen=True)
class BilinearForm:
    dim: int
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.dims != (self.dim, self.dim):
            raise InputError(f"form extents {self.matrix.dims} do not match dim {self.dim}")

    @classmethod
    def zero(cls, n: int) -> "BilinearForm":
        return cls(n, Matrix((n, n)))

    @classmethod
    def identity(cls, n: int) -> "BilinearForm":
        return cls(n, Matrix.identity(n))

    def __call__(self, i: int, j: int) -> Fraction:
        return self.matrix[i, j]


def standard_form(n: int) -> BilinearForm:
    """<x, eta> + <y, xi> on A (+) A* with dim A = n."""
    N = 2 * n
    vals = {}
    for i in range(n):
        vals[(i, n + i)] = 1
        vals[(n + i, i)] = 1
    return BilinearForm(N, Matrix.from_sparse((N, N), vals))


@dataclass(frozen=True)
class SplitDouble:
    algebra: Algebra
    split: int
    form: BilinearForm

    def __post_init__(self):
        N = self.algebra.dim
        if not 0 <= self.split <= N:
            raise InputError(f"split {self.split} outside 0..{N}")
        if self.form.dim != N:
            raise InputError("form and algebra dimensions differ")

    def shifted(self, by: int) -> "SplitDouble":
        return SplitDouble(self.algebra, self.split + by, self.form)


def double_construct(alg: Algebra, co: Coalgebra) -> SplitDouble:
    """Bracket and product on A (+) A* from the coadjoint actions of both sides.

    The product uses the symmetric reading
    (x+xi).(y+eta) = x.y - L*(x)eta - L*(y)xi + xi o eta - L*(xi)y - L*(eta)x.
    """
    if alg.dim != co.dim:
        raise InputError(f"algebra dim {alg.dim} and coalgebra dim {co.dim} differ")
    n = alg.dim
    N = 2 * n
    P, B = {}, {}

    def add(d, k, v):
        d[k] = d.get(k, 0) + v

    for (i, j, l), v in alg.product.sparse.items():
        add(P, (i, j, l), v)
        # e_i . e_l* has A* component a[i,j,l] at e_j*
        add(P, (i, n + l, n + j), v)
        add(P, (n + l, i, n + j), v)
    for (k, i, j), v in co.cop2.sparse.items():
        add(P, (n + i, n + j, n + k), v)
        # e_k . e_i* has A component b[k,i,j] at e_j
        add(P, (k, n + i, j), v)
        add(P, (n + i, k, j), v)
    for (i, j, k, l), v in alg.bracket.sparse.items():
        add(B, (i, j, k, l), v)
        add(B, (i, j, n + l, n + k), -v)
        add(B, (i, n + l, j, n + k), v)
        add(B, (n + l, i, j, n + k), -v)
    for (l, i, j, k), v in co.cop3.sparse.items():
        add(B, (n + i, n + j, n + k, n + l), v)
        add(B, (n + i, n + j, l, k), -v)
        add(B, (n + i, l, n + j, k), v)
        add(B, (l, n + i, n + j, k), -v)
    P = {k: v for k, v in P.items() if v}
    B = {k: v for k, v in B.items() if v}
    d = Algebra(N, Tensor.from_sparse((N,) * 3, P), Tensor.from_sparse((N,) * 4, B))
    # the mixed A/A* products are symmetric by construction, whatever the inputs
    assert all(P.get((j, i, l), 0) == v for (i, j, l), v in P.items()
               if (i < n) != (j < n)), "double product not commutative"
    return SplitDouble(d, n, standard_form(n))


# ---------------------------------------------------------------------------
# invariant bilinear forms; g[i, j] = B(e_i, e_j)

FORM_SYMMETRY = law("form_symmetric", "xy", "", ([T(1, "xy", "g")], [T(1, "yx", "g")]),
                    text="B(x,y) = B(y,x)")
PRODUCT_INVARIANCE = law("product_invariance", "xyz", "",
                         ([T(1, "xym,mz", "a", "g")], [T(1, "yzm,xm", "a", "g")]),
                         text="B(x.y,z) = B(x,y.z)")
BRACKET_INVARIANCE = law("bracket_invariance", "xyzu", "",
                         ([T(1, "xyzm,mu", "c", "g")], [T(-1, "xyum,mz", "c", "g")]),
                         text="B([x,y,z],u) = -B([x,y,u],z)")


def check_invariance(form: BilinearForm, alg: Algebra) -> LawReport:
    if form.dim != alg.dim:
        raise InputError("form and algebra dimensions differ")
    env = alg.env()
    env["g"] = form.matrix.sparse
    report = check_laws((FORM_SYMMETRY, PRODUCT_INVARIANCE, BRACKET_INVARIANCE), env)
    det = determinant(form.matrix)
    report.record("form_nondegenerate", det != 0,
                  None if det != 0 else Witness("form_nondegenerate", (), {(): det}, {}, note="det B = 0"))
    return report


def _scan(report: LawReport, law_id: str, items, note: str) -> None:
    """Record a law that holds iff ``items`` (sorted (args, component, value)) is empty."""
    items = sorted(items)
    if not items:
        report.record(law_id, True)
        return
    args = items[0][0]
    lhs = {comp: v for a, comp, v in items if a == args}
    report.record(law_id, False, Witness(law_id, args, lhs, {}, note=note))


def check_manin_triple(d: SplitDouble, family: str = "poisson") -> LawReport:
    """Subalgebras, isotropy, the projection conditions and the pseudo-metric.

    A is spanned by coordinates below the split, A* by the rest.
    """
    (family,) = family_list(family)
    alg, s = d.algebra, d.split
    report = LawReport()
    report.merge(validate(alg, family), "double.")

    def inA(i):
        return i < s
    P, Br, G = alg.product.sparse, alg.bracket.sparse, d.form.matrix.sparse

    def one(idx):
        return tuple(i + 1 for i in idx)

    for name, side in (("A", True), ("A*", False)):
        _scan(report, f"{name}_product_closed",
              [(one(k[:2]), one(k[2:]), v) for k, v in P.items()
               if inA(k[0]) == side and inA(k[1]) == side and inA(k[2]) != side],
              f"product leaves {name}")
        _scan(report, f"{name}_bracket_closed",
              [(one(k[:3]), one(k[3:]), v) for k, v in Br.items()
               if all(inA(i) == side for i in k[:3]) and inA(k[3]) != side],
              f"bracket leaves {name}")
        _scan(report, f"{name}_isotropic",
              [(one(k), (), v) for k, v in G.items() if inA(k[0]) == side and inA(k[1]) == side],
              f"form nonzero on {name}")
    # pr_1[x1, y1, x2] = 0 and pr_2[x2, y2, x1] = 0
    _scan(report, "projection_A",
          [(one(k[:3]), one(k[3:]), v) for k, v in Br.items()
           if inA(k[0]) and inA(k[1]) and not inA(k[2]) and inA(k[3])],
          "pr_1 of [x1, y1, x2] is nonzero")
    _scan(report, "projection_A*",
          [(one(k[:3]), one(k[3:]), v) for k, v in Br.items()
           if not inA(k[0]) and not inA(k[1]) and inA(k[2]) and not inA(k[3])],
          "pr_2 of [x2, y2, x1] is nonzero")
    report.merge(check_invariance(d.form, alg), "form.")
    return report


# ---------------------------------------------------------------------------
# bialgebra compatibilities. a = product, c = bracket, b = Delta, d = delta;
# x, y, z are basis elements of A and p, q, s the tensor slots in order.

INFINITESIMAL = law("infinitesimal_bialgebra", "xy", "pq",
                    ([T(1, "xym,mpq", "a", "b")], [T(1, "yiq,xip", "b", "a"), T(1, "xpj,yjq", "b", "a")]),
                    text="Delta(x.y) = (L_x (x) 1)Delta(y) + (1 (x) L_y)Delta(x)")
LIE_BIALG_1 = law("lie_bialgebra_1", "xyz", "pqs",
                  ([T(1, "xyzm,mpqs", "c", "d")],
                   [T(1, "xpqk,yzks", "d", "c"), T(1, "ypqk,zxks", "d", "c"), T(1, "zpqk,xyks", "d", "c")]),
                  text="delta[x,y,z] = (1(x)1(x)ad_{y,z})delta(x) + (1(x)1(x)ad_{z,x})delta(y)"
                       " + (1(x)1(x)ad_{x,y})delta(z)")
LIE_BIALG_2 = law("lie_bialgebra_2", "xyz", "pqs",
                  ([T(1, "xyzm,mpqs", "c", "d")],
                   [T(1, "xpqk,yzks", "d", "c"), T(1, "xpks,yzkq", "d", "c"), T(1, "xkqs,yzkp", "d", "c")]),
                  text="delta[x,y,z] = (1(x)1(x)ad_{y,z} + 1(x)ad_{y,z}(x)1 + ad_{y,z}(x)1(x)1)delta(x)")
POISSON_BIALG_1 = law("poisson_bialgebra_1", "xyz", "pq",
                      ([T(1, "xyzm,mpq", "c", "b")], [T(1, "xpk,yzkq", "b", "c"), T(1, "xkq,yzkp", "b", "c")]),
                      text="Delta[x,y,z] = (1 (x) ad_{y,z})Delta(x) + (ad_{y,z} (x) 1)Delta(x)")
POISSON_BIALG_2 = law("poisson_bialgebra_2", "xy", "pqs",
                      ([T(1, "xym,mpqs", "a", "d")], [T(1, "xkqs,ykp", "d", "a"), T(1, "ykqs,xkp", "d", "a")]),
                      text="delta(x.y) = (L(y)(x)1(x)1)delta(x) + (L(x)(x)1(x)1)delta(y)")
POISSON_BIALG_3 = law("poisson_bialgebra_3", "xy", "pqs",
                      ([T(1, "ykqs,xkp", "d", "a")], [T(1, "ypqk,xks", "d", "a")]),
                      text="(L(x)(x)1(x)1)delta(y) = (1(x)1(x)L(x))delta(y)")
POISSON_BIALG_4 = law("poisson_bialgebra_4", "xyz", "pq",
                      ([T(1, "zpk,xykq", "b", "c")], [T(1, "xpk,yzkq", "b", "c")]),
                      text="(1 (x) ad_{x,y})Delta(z) = (1 (x) ad_{y,z})Delta(x)")
ADMISSIBLE_BIALG = (
    law("admissible_bialgebra_1", "xyz", "pq", ([T(1, "xyzm,mpq", "c", "b")], []), text="Delta[x,y,z] = 0"),
    law("admissible_bialgebra_2", "xy", "pqs", ([T(1, "xym,mpqs", "a", "d")], []), text="delta(x.y) = 0"),
    law("admissible_bialgebra_3", "xyz", "pq", ([T(1, "xkq,yzkp", "b", "c")], []),
        text="(ad_{y,z} (x) 1)Delta(x) = 0"),
    law("admissible_bialgebra_4", "xy", "pqs", ([T(1, "xpqk,yks", "d", "a")], []),
        text="(1(x)1(x)L(y))delta(x) = 0"),
    law("admissible_bialgebra_5", "xyz", "pq", ([T(1, "xpk,yzkq", "b", "c")], []),
        text="(1 (x) ad_{y,z})Delta(x) = 0"),
    law("admissible_bialgebra_6", "xy", "pqs", ([T(1, "xkqs,ykp", "d", "a")], []),
        text="(L(y)(x)1(x)1)delta(x) = 0"),
)

BIALGEBRA_LAWS = {
    "comm-assoc": (INFINITESIMAL,),
    "3-lie": (LIE_BIALG_1, LIE_BIALG_2),
}
BIALGEBRA_LAWS["poisson"] = (LIE_BIALG_1, LIE_BIALG_2, INFINITESIMAL,
                             POISSON_BIALG_1, POISSON_BIALG_2, POISSON_BIALG_3, POISSON_BIALG_4)
BIALGEBRA_LAWS["admissible"] = (LIE_BIALG_1, LIE_BIALG_2, INFINITESIMAL) + ADMISSIBLE_BIALG
BIALGEBRA_FAMILIES = tuple(BIALGEBRA_LAWS)


def check_bialgebra(alg: Algebra, co: Coalgebra, family: str) -> LawReport:
    """Algebra and coalgebra laws of the family, then the compatibilities."""
    (family,) = family_list(family)
    if family not in BIALGEBRA_LAWS:
        raise InputError(f"no bialgebra notion for family {family!r}")
    if alg.dim != co.dim:
        raise InputError(f"algebra dim {alg.dim} and coalgebra dim {co.dim} differ")
    report = LawReport()
    report.merge(validate(alg, family), "A.")
    report.merge(validate_coalgebra(co, family), "co.")
    env = alg.env()
    env.update(co.env())
    return check_laws(BIALGEBRA_LAWS[family], env, report)


# ---------------------------------------------------------------------------
# solving for invariant symmetric forms

@dataclass
class FormSolution:
    dim: int
    basis: list            # symmetric Matrices spanning the invariant forms
    nondegenerate: bool
    certificate: tuple = None   # coefficients of a nondegenerate combination
    polynomial: Polynomial = None  # generic determinant, when it was expanded

    def generic(self) -> list:
        """The generic form as a matrix of linear polynomials in the basis coefficients."""
        k, n = len(self.basis), self.dim
        return [[Polynomial.linear([M[i, j] for M in self.basis]) if k else Polynomial(0)
                 for j in range(n)] for i in range(n)]


def _form_rows(alg: Algebra) -> tuple:
    """Linear conditions on the upper-triangle unknowns g[i,j], i <= j."""
    n = alg.dim
    var = {}
    for nv, (i, j) in enumerate(itertools.combinations_with_replacement(range(n), 2)):
        var[(i, j)] = var[(j, i)] = nv
    nv = n * (n + 1) // 2
    rows = set()

    def emit(acc):
        acc = {k: v for k, v in acc.items() if v}
        if acc:
            rows.add(tuple(sorted(acc.items())))

    a, c = alg.product.sparse, alg.bracket.sparse
    by_xy = {}
    for (x, y, m), v in a.items():
        by_xy.setdefault((x, y), []).append((m, v))
    for x, y, z in itertools.product(range(n), repeat=3):
        acc = {}
        for m, v in by_xy.get((x, y), ()):
            acc[var[(m, z)]] = acc.get(var[(m, z)], 0) + v
        for m, v in by_xy.get((y, z), ()):
            acc[var[(x, m)]] = acc.get(var[(x, m)], 0) - v
        emit(acc)
    by_xyz = {}
    for (x, y, z, m), v in c.items():
        by_xyz.setdefault((x, y, z), []).append((m, v))
    for x, y, z, u in itertools.product(range(n), repeat=4):
        acc = {}
        for m, v in by_xyz.get((x, y, z), ()):
            acc[var[(m, u)]] = acc.get(var[(m, u)], 0) + v
        for m, v in by_xyz.get((x, y, u), ()):
            acc[var[(m, z)]] = acc.get(var[(m, z)], 0) + v
        emit(acc)
    return var, nv, sorted(rows)


def _candidate_points(k: int):
    yield (1,) * k
    yield tuple(range(1, k + 1))
    yield tuple(2 ** i for i in range(k))
    yield tuple((i + 1) ** 2 for i in range(k))
    for i in range(k):
        yield tuple(int(j == i) for j in range(k))


def solve_invariant_forms(alg: Algebra, expand: bool = False) -> FormSolution:
    """Basis of the symmetric invariant forms and whether a nondegenerate one exists.

    A nonzero determinant at an explicit point certifies existence. Otherwise
    (or with ``expand``) the determinant of the generic combination is
    expanded exactly and compared with the zero polynomial.
    """
    n = alg.dim
    var, nv, rows = _form_rows(alg)
    dense = [[dict(r).get(j, 0) for j in range(nv)] for r in rows]
    ech, pivots, _ = bareiss_echelon(dense, nv)
    basis = []
    pivot_set = set(pivots)
    for free in range(nv):
        if free in pivot_set:
            continue
        xs = [Fraction(0)] * nv
        xs[free] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            col = pivots[r]
            row = ech[r]
            xs[col] = -sum((row[j] * xs[j] for j in range(col + 1, nv) if row[j]), Fraction(0)) / row[col]
        basis.append(Matrix.from_sparse((n, n), {(i, j): xs[var[(i, j)]]
                                                 for i in range(n) for j in range(n) if xs[var[(i, j)]]}))
    sol = FormSolution(n, basis, False)
    if n == 0:
        sol.nondegenerate = True
        sol.certificate = ()
        return sol
    if basis and not expand:
        for pt in _candidate_points(len(basis)):
            M = _combine(basis, pt, n)
            if determinant(M) != 0:
                sol.nondegenerate = True
                sol.certificate = pt
                return sol
    sol.polynomial = determinant_polynomial(sol.generic()) if basis else Polynomial(0)
    sol.nondegenerate = not sol.polynomial.is_zero()
    if sol.nondegenerate and sol.certificate is None:
        sol.certificate = _nonzero_point(sol.polynomial, len(basis))
    return sol


def _combine(basis, pt, n) -> Matrix:
    vals = {}
    for t, M in zip(pt, basis):
        if t:
            for k, v in M.sparse.items():
                vals[k] = vals.get(k, 0) + t * v
    return Matrix.from_sparse((n, n), {k: v for k, v in vals.items() if v})


def _nonzero_point(poly: Polynomial, k: int) -> tuple:
    # a nonzero polynomial of degree <= D is nonzero somewhere on {0..D}^k
    D = max((sum(e) for e in poly.terms), default=0)
    for pt in itertools.product(range(D + 1), repeat=k):
        if poly.evaluate(pt) != 0:
            return pt
    raise AssertionError("nonzero polynomial vanished on a full grid")


def in_solution_space(form: BilinearForm, alg: Algebra) -> bool:
    """Whether ``form`` satisfies symmetry and both invariance identities."""
    r = check_invariance(form, alg)
    return all(r[k] for k in ("form_symmetric", "product_invariance", "bracket_invariance"))


# ---------------------------------------------------------------------------
# three-way equivalence

def coadjoint_pair(alg: Algebra, co: Coalgebra) -> MatchedPair:
    """(A, A*, ad*, -L*, ad*, -L*) built from the coadjoint representations."""
    return MatchedPair.from_reps(coadjoint_representation(alg),
                                 coadjoint_representation(dualize_coalgebra(co)))


@dataclass
class EquivalenceReport:
    family: str
    bialgebra: LawReport
    matched_pair: LawReport
    manin: LawReport
    witnesses: dict = field(default_factory=dict)

    @property
    def verdicts(self) -> dict:
        return {"bialgebra": self.bialgebra.ok, "matched_pair": self.matched_pair.ok,
                "manin_triple": self.manin.ok}

    @property
    def agree(self) -> bool:
        return len(set(self.verdicts.values())) == 1

    @property
    def ok(self) -> bool:
        return self.agree and all(self.verdicts.values())

    def summary(self) -> str:
        lines = [f"family {self.family}"]
        for k, v in self.verdicts.items():
            lines.append(f"{'PASS' if v else 'FAIL'}  {k}")
            w = self.witnesses.get(k)
            if w is not None:
                lines.append("      " + w.describe())
        lines.append("agree" if self.agree else "DISAGREE")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "verdicts": {k: ("PASS" if v else "FAIL") for k, v in self.verdicts.items()},
            "agree": self.agree,
            "witnesses": {k: w.to_json() for k, w in self.witnesses.items()},
            "reports": {"bialgebra": self.bialgebra.to_json(),
                        "matched_pair": self.matched_pair.to_json(),
                        "manin_triple": self.manin.to_json()},
        }


def verify_equivalence(alg: Algebra, co: Coalgebra, family: str = "poisson") -> EquivalenceReport:
    """Evaluate the bialgebra, coadjoint matched pair and Manin triple statements independently."""
    (family,) = family_list(family)
    if family not in ("poisson", "admissible", "comm-assoc", "3-lie"):
        raise InputError(f"no equivalence theorem for family {family!r}")
    if alg.dim != co.dim:
        raise InputError(f"algebra dim {alg.dim} and coalgebra dim {co.dim} differ")
    bi = check_bialgebra(alg, co, family)
    mp = check_matched_pair(coadjoint_pair(alg, co), family)
    mt = check_manin_triple(double_construct(alg, co), family)
    rep = EquivalenceReport(family, bi, mp, mt)
    for name, r in (("bialgebra", bi), ("matched_pair", mp), ("manin_triple", mt)):
        w = r.first_failure()
        if w is not None:
            rep.witnesses[name] = w
    return rep
