"""Matched pairs of algebras, their conditions and the sum A |><| B.

Letters in the condition catalog: a..e range over the basis of A (x1..x5),
f..j over the basis of B (y1..y5), l is the output component and m, k are
summed. Every condition stated for (A, B) has a mirror obtained by swapping
the roles of the two algebras; the mirror is generated by renaming operands.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebras import Algebra, family_list, validate
from .kernel import InputError, Matrix, Tensor
from .laws import T, LawReport, check_laws, law
from .reps import REP_LAWS, Representation


@dataclass(frozen=True)
class MatchedPair:
    algA: Algebra
    algB: Algebra
    muA: tuple   # n matrices p x p
    rhoA: tuple  # n x n matrices p x p
    muB: tuple   # p matrices n x n
    rhoB: tuple  # p x p matrices n x n

    def __post_init__(self):
        # extents are checked by building the two representations
        self.rep_a
        self.rep_b

    @property
    def rep_a(self) -> Representation:
        """(B, rho_A, mu_A) as a representation of A."""
        return Representation(self.algA, self.algB.dim, tuple(self.muA), tuple(map(tuple, self.rhoA)))

    @property
    def rep_b(self) -> Representation:
        return Representation(self.algB, self.algA.dim, tuple(self.muB), tuple(map(tuple, self.rhoB)))

    @classmethod
    def from_reps(cls, rep_a: Representation, rep_b: Representation) -> "MatchedPair":
        if rep_a.carrier != rep_b.base.dim or rep_b.carrier != rep_a.base.dim:
            raise InputError("each representation must act on the other algebra")
        return cls(rep_a.base, rep_b.base, rep_a.mu, rep_a.rho, rep_b.mu, rep_b.rho)

    def env(self) -> dict:
        ra, rb = self.rep_a, self.rep_b
        return {
            "aA": self.algA.product.sparse, "cA": self.algA.bracket.sparse,
            "aB": self.algB.product.sparse, "cB": self.algB.bracket.sparse,
            "muA": ra.mu_tensor(), "rhoA": ra.rho_tensor(),
            "muB": rb.mu_tensor(), "rhoB": rb.rho_tensor(),
        }


MIRROR = {"aA": "aB", "aB": "aA", "cA": "cB", "cB": "cA",
          "muA": "muB", "muB": "muA", "rhoA": "rhoB", "rhoB": "rhoA"}


def _swap_spaces(s: str) -> str:
    return s.translate(str.maketrans("AB", "BA"))


def _pair(l, mirror_id: str) -> tuple:
    return l, l.rename(mirror_id, MIRROR, spaces=_swap_spaces(l.spaces))


# commutative associative (x = a, y = b in A; a = f, b = g in B)
CA_1, CA_2 = _pair(law(
    "ca_pair_1", "afg", "l",
    ([T(1, "fgm,aml", "aB", "muA")],
     [T(1, "afm,mgl", "muA", "aB"), T(1, "fam,mgl", "muB", "muA")]),
    text="mu_A(x)(a.b) = (mu_A(x)a).b + mu_A(mu_B(a)x)b", spaces="ABB"), "ca_pair_2")

# 3-Lie
LIE_1, LIE_4 = _pair(law(
    "lie_pair_1", "abcij", "l",
    ([T(1, "abcm,ijml", "cA", "rhoB")],
     [T(1, "ijam,mbcl", "rhoB", "cA"), T(1, "ijbm,amcl", "rhoB", "cA"), T(1, "ijcm,abml", "rhoB", "cA")]),
    text="rho_B(y4,y5)[x1,x2,x3] = sum of rho_B(y4,y5) acting in each slot", spaces="AAABB"), "lie_pair_4")
LIE_2, LIE_5 = _pair(law(
    "lie_pair_2", "abdhj", "l",
    ([T(-1, "abhm,mjdl", "rhoA", "rhoB")],
     [T(-1, "adjm,mhbl", "rhoA", "rhoB"), T(1, "bdjm,mhal", "rhoA", "rhoB"), T(-1, "hjdm,abml", "rhoB", "cA")]),
    text="-rho_B(rho_A(x1,x2)y3,y5)x4 = -rho_B(rho_A(x1,x4)y5,y3)x2 + rho_B(rho_A(x2,x4)y5,y3)x1"
         " - [x1,x2,rho_B(y3,y5)x4]", spaces="AAABB"), "lie_pair_5")
LIE_3, LIE_6 = _pair(law(
    "lie_pair_3", "adegh", "l",
    ([T(1, "gham,mdel", "rhoB", "cA")],
     [T(1, "adem,ghml", "cA", "rhoB"), T(1, "degm,mhal", "rhoA", "rhoB"), T(1, "dehm,gmal", "rhoA", "rhoB")]),
    text="[rho_B(y2,y3)x1,x4,x5] = rho_B(y2,y3)[x1,x4,x5] + rho_B(rho_A(x4,x5)y2,y3)x1"
         " + rho_B(y2,rho_A(x4,x5)y3)x1", spaces="AAABB"), "lie_pair_6")

# Poisson
P_1, P_2 = _pair(law(
    "poisson_pair_1", "abcf", "l",
    ([T(1, "fam,mbcl", "muB", "cA")], [T(1, "bcfm,mal", "rhoA", "muB"), T(1, "abcm,fml", "cA", "muB")]),
    text="[mu_B(y1)x1,x2,x3] = mu_B(rho_A(x2,x3)y1)x1 + mu_B(y1)[x1,x2,x3]", spaces="AAAB"), "poisson_pair_2")
P_3, P_4 = _pair(law(
    "poisson_pair_3", "abfg", "l",
    ([T(1, "afm,mgbl", "muA", "rhoB")], [T(1, "fgbm,aml", "rhoB", "aA")]),
    text="rho_B(mu_A(x1)y1,y2)x2 = x1.(rho_B(y1,y2)x2)", spaces="AABB"), "poisson_pair_4")
P_5, P_6 = _pair(law(
    "poisson_pair_5", "abcf", "l",
    ([T(1, "abfm,mcl", "rhoA", "muB"), T(1, "cbfm,mal", "rhoA", "muB")], []),
    text="mu_B(rho_A(x1,x2)y1)x3 + mu_B(rho_A(x3,x2)y1)x1 = 0", spaces="AAAB"), "poisson_pair_6")
P_7, P_8 = _pair(law(
    "poisson_pair_7", "abhi", "l",
    ([T(1, "abm,himl", "aA", "rhoB")], [T(1, "hibm,aml", "rhoB", "aA"), T(1, "hiam,bml", "rhoB", "aA")]),
    text="rho_B(y3,y4)(x1.x2) = x1.(rho_B(y3,y4)x2) + x2.(rho_B(y3,y4)x1)", spaces="AABB"), "poisson_pair_8")

# transposed
TP_1, TP_2 = _pair(law(
    "transposed_pair_1", "abci", "l",
    ([T(3, "abcm,iml", "cA", "muB")],
     [T(1, "iam,mbcl", "muB", "cA"), T(1, "ibm,amcl", "muB", "cA"), T(1, "icm,abml", "muB", "cA")]),
    text="3mu_B(y4)[x1,x2,x3] = sum of mu_B(y4) acting in each slot", spaces="AAAB"), "transposed_pair_2")
TP_3, TP_4 = _pair(law(
    "transposed_pair_3", "bcdf", "l",
    ([T(1, "fdm,mbcl", "muB", "cA")], [T(3, "bcfm,mdl", "rhoA", "muB")]),
    text="[mu_B(y1)x4,x2,x3] = 3mu_B(rho_A(x2,x3)y1)x4", spaces="AAAB"), "transposed_pair_4")
# The A-component carries the term 3 x4.(rho_B(y1,y2)x3) coming from
# (x4 + y4) acting on the bracket of the sum; B- and A-components must
# vanish separately since they live in different summands.
TP_5, TP_6 = _pair(law(
    "transposed_pair_5", "cdfg", "l",
    ([T(1, "dcm,fgml", "aA", "rhoB"), T(1, "dfm,mgcl", "muA", "rhoB"), T(1, "dgm,fmcl", "muA", "rhoB")],
     [T(3, "fgcm,dml", "rhoB", "aA")]),
    ([T(1, "gdm,mcfl", "muB", "rhoA"), T(1, "fdm,cmgl", "muB", "rhoA")], []),
    text="rho_B(y1,y2)(x4.x3) + rho_B(mu_A(x4)y1,y2)x3 + rho_B(y1,mu_A(x4)y2)x3 = 3x4.(rho_B(y1,y2)x3);"
         " rho_A(mu_B(y2)x4,x3)y1 + rho_A(x3,mu_B(y1)x4)y2 = 0", spaces="AABB"), "transposed_pair_6")
# weaker variant: both components set to zero without the 3x4.(...) term.
# Kept to show it accepts pairs whose sum is not transposed.
TP_5_WEAK, TP_6_WEAK = _pair(law(
    "transposed_pair_5_weak", "cdfg", "l",
    ([T(1, "dcm,fgml", "aA", "rhoB"), T(1, "dfm,mgcl", "muA", "rhoB"), T(1, "dgm,fmcl", "muA", "rhoB")], []),
    ([T(1, "gdm,mcfl", "muB", "rhoA"), T(1, "fdm,cmgl", "muB", "rhoA")], []),
    spaces="AABB"), "transposed_pair_6_weak")

# admissible
AD_1A, AD_2A = _pair(law("admissible_pair_1a", "abci", "l", ([T(1, "abcm,iml", "cA", "muB")], []),
                         text="mu_B(y4)[x1,x2,x3] = 0", spaces="AAAB"), "admissible_pair_2a")
AD_1B, AD_2B = _pair(law("admissible_pair_1b", "abhi", "l", ([T(1, "ihm,abml", "aB", "rhoA")], []),
                         text="rho_A(x1,x2)(y4.y3) = 0", spaces="AABB"), "admissible_pair_2b")
AD_3, AD_4 = _pair(law("admissible_pair_3", "bcdf", "l", ([T(1, "bcfm,mdl", "rhoA", "muB")], []),
                       text="mu_B(rho_A(x2,x3)y1)x4 = 0", spaces="AAAB"), "admissible_pair_4")
AD_5, AD_6 = _pair(law("admissible_pair_5", "bcdf", "l", ([T(1, "fdm,mbcl", "muB", "cA")], []),
                       text="[mu_B(y1)x4,x2,x3] = 0", spaces="AAAB"), "admissible_pair_6")
AD_7 = law("admissible_pair_7", "abhi", "l",
           ([T(1, "iam,mbhl", "muB", "rhoA")], []),
           ([T(1, "aim,hmbl", "muA", "rhoB")], []),
           text="rho_A(mu_B(y4)x1,x2)y3 + rho_B(y3,mu_A(x1)y4)x2 = 0 (each summand)", spaces="AABB")
# needed for the sum to be admissible: x4.(rho_B(y1,y2)x3) = 0 and its mirror
AD_8, AD_9 = _pair(law("admissible_pair_8", "cdfg", "l", ([T(1, "fgcm,dml", "rhoB", "aA")], []),
                       text="x4.(rho_B(y1,y2)x3) = 0", spaces="AABB"), "admissible_pair_9")

PAIR_CONDITIONS = {
    "comm-assoc": (CA_1, CA_2),
    "3-lie": (LIE_1, LIE_2, LIE_3, LIE_4, LIE_5, LIE_6),
    "poisson": (P_1, P_2, P_3, P_4, P_5, P_6, P_7, P_8),
    "transposed": (TP_1, TP_2, TP_3, TP_4, TP_5, TP_6),
    "admissible": (AD_1A, AD_1B, AD_2A, AD_2B, AD_3, AD_4, AD_5, AD_6, AD_7, AD_8, AD_9),
}
WEAK_CONDITIONS = {
    "transposed": (TP_1, TP_2, TP_3, TP_4, TP_5_WEAK, TP_6_WEAK),
    "admissible": (AD_1A, AD_1B, AD_2A, AD_2B, AD_3, AD_4, AD_5, AD_6, AD_7),
}


def check_matched_pair(mp: MatchedPair, family: str, weak: bool = False) -> LawReport:
    """All conditions a matched pair of the family must satisfy.

    Prerequisites come first (both algebras in the family, both actions
    representations, and for the compound families the underlying
    commutative associative and 3-Lie matched pairs). ``weak`` swaps in
    the shorter transposed/admissible condition sets, which miss the
    3x4.(rho_B(y1,y2)x3) term and its admissible analogue.
    """
    (family,) = family_list(family)
    report = LawReport()
    report.merge(validate(mp.algA, family), "A.")
    report.merge(validate(mp.algB, family), "B.")
    env = mp.env()
    ra, rb = mp.rep_a, mp.rep_b
    check_laws(REP_LAWS[family], ra.env(), report, "rep_A.")
    check_laws(REP_LAWS[family], rb.env(), report, "rep_B.")
    subs = ("comm-assoc", "3-lie") if family in ("poisson", "transposed", "admissible") else (family,)
    conds = []
    for f in subs:
        conds.extend(PAIR_CONDITIONS[f])
    if family not in subs:
        source = WEAK_CONDITIONS if weak and family in WEAK_CONDITIONS else PAIR_CONDITIONS
        conds.extend(source[family])
    return check_laws(conds, env, report)


def matched_pair_sum(mp: MatchedPair) -> Algebra:
    """A (+) B with the product and bracket built from both actions.

    Indices 0..n-1 are A, n..n+p-1 are B.
    """
    n, p = mp.algA.dim, mp.algB.dim
    N = n + p
    env = mp.env()
    P, B = {}, {}

    def add(d, k, v):
        d[k] = d.get(k, 0) + v

    for k, v in env["aA"].items():
        add(P, k, v)
    for (i, j, l), v in env["aB"].items():
        add(P, (n + i, n + j, n + l), v)
    # x.b -> mu_B(b)x + mu_A(x)b, and symmetrically
    for (i, c, r), v in env["muA"].items():
        add(P, (i, n + c, n + r), v)
        add(P, (n + c, i, n + r), v)
    for (c, i, l), v in env["muB"].items():
        add(P, (i, n + c, l), v)
        add(P, (n + c, i, l), v)

    for k, v in env["cA"].items():
        add(B, k, v)
    for (i, j, k, l), v in env["cB"].items():
        add(B, (n + i, n + j, n + k, n + l), v)
    # rho_A(x1,x2)y3 + rho_A(x3,x1)y2 + rho_A(x2,x3)y1
    for (i, j, c, r), v in env["rhoA"].items():
        add(B, (i, j, n + c, n + r), v)
        add(B, (j, n + c, i, n + r), v)
        add(B, (n + c, i, j, n + r), v)
    # rho_B(y1,y2)x3 + rho_B(y3,y1)x2 + rho_B(y2,y3)x1
    for (c, d, i, l), v in env["rhoB"].items():
        add(B, (n + c, n + d, i, l), v)
        add(B, (n + d, i, n + c, l), v)
        add(B, (i, n + c, n + d, l), v)
    P = {k: v for k, v in P.items() if v}
    B = {k: v for k, v in B.items() if v}
    return Algebra(N, Tensor.from_sparse((N,) * 3, P), Tensor.from_sparse((N,) * 4, B))


@dataclass
class PairTheoremReport:
    family: str
    conditions: LawReport
    sum_report: LawReport

    @property
    def conditions_ok(self) -> bool:
        return self.conditions.ok

    @property
    def sum_ok(self) -> bool:
        return self.sum_report.ok

    @property
    def agree(self) -> bool:
        return self.conditions_ok == self.sum_ok

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "conditions": "PASS" if self.conditions_ok else "FAIL",
            "sum": "PASS" if self.sum_ok else "FAIL",
            "agree": self.agree,
            "witnesses": {
                "conditions": _first(self.conditions),
                "sum": _first(self.sum_report),
            },
        }


def _first(r: LawReport):
    w = r.first_failure()
    return None if w is None else w.to_json()


def verify_matched_pair_theorem(mp: MatchedPair, family: str) -> PairTheoremReport:
    """Conditions verdict against validity of the sum, evaluated independently."""
    (family,) = family_list(family)
    return PairTheoremReport(family, check_matched_pair(mp, family), validate(matched_pair_sum(mp), family))


def zero_maps(algA: Algebra, algB: Algebra) -> MatchedPair:
    n, p = algA.dim, algB.dim
    zp, zn = Matrix((p, p)), Matrix((n, n))
    return MatchedPair(algA, algB, (zp,) * n, tuple((zp,) * n for _ in range(n)),
                       (zn,) * p, tuple((zn,) * p for _ in range(p)))
