"""Acceptance criteria, one test per criterion.

Each criterion prints a single PASS/FAIL line with its wall time; the same
lines are repeated in the pytest terminal summary. Run directly with
``python3 tests/test_acceptance.py`` for just those lines.
"""
import itertools
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from randgen import rand_algebra, rand_coalgebra, rand_matched_pair, rand_representation, seeded, valid_algebra

from poisson3lie import (FAMILIES, Algebra, Coalgebra, check_bialgebra, check_invariance, check_manin_triple,
                         direct_sum, double_construct, dualize_algebra, dualize_coalgebra,
                         enumerate_structures, h_twist, semidirect_product, solve_invariant_forms,
                         tensor_with_commutative, validate, validate_coalgebra, validate_representation,
                         verify_equivalence, verify_matched_pair_theorem)
from poisson3lie.io import load
from poisson3lie.manin import coadjoint_pair
from poisson3lie.pairs import zero_maps

FIX = Path(__file__).parent / "fixtures"
RESULTS = []


def fixture(name):
    return load(FIX / name)


def e(n, *coords):
    """Coordinate vector; e(4, 2) is e2 in dim 4."""
    v = [0] * n
    for i in coords:
        v[i - 1] += 1
    return tuple(v)


def run(number, title, limit, body):
    t0 = time.perf_counter()
    err = None
    try:
        detail = body()
    except AssertionError as exc:
        err = f"assertion failed: {exc}" if str(exc) else "assertion failed"
    elapsed = time.perf_counter() - t0
    if err is None and elapsed >= limit:
        err = f"took {elapsed:.2f} s, limit {limit} s"
    verdict = "PASS" if err is None else "FAIL"
    line = f"{verdict} criterion {number:2d}: {title} ({elapsed:.2f} s < {limit} s)"
    if err is None and detail:
        line += f" [{detail}]"
    if err is not None:
        line += f" -- {err}"
    print(line)
    RESULTS.append(line)
    return err


# ---------------------------------------------------------------------------

def c1():
    t3 = fixture("t3.alg")
    r = validate(t3, ("transposed", "poisson"))
    assert r["transposed_leibniz"] and r["commutativity"] and r["filippov_jacobi"]
    assert not r["poisson_leibniz"]
    w = r.witnesses["poisson_leibniz"]
    # (w, x, y, z) = (e2, e2, e2, e3): [e2.e2, e2, e3] = e1 while the right side vanishes
    assert w.args == (2, 2, 2, 3), w.args
    assert w.lhs == {(1,): 1} and w.rhs == {}
    assert t3.br(t3.mul(e(3, 2), e(3, 2)), e(3, 2), e(3, 3)) == e(3, 1)
    return "witness (e2,e2,e2,e3)"


def c2():
    r = validate(fixture("a4.alg"), ("poisson", "transposed", "admissible"))
    assert r.ok, r.summary()


def c3():
    alg, co = fixture("ex616.bundle")
    adm = check_bialgebra(alg, co, "admissible")
    assert adm.ok, adm.summary()
    expected = [f"admissible_bialgebra_{k}" for k in range(1, 7)] + [
        "lie_bialgebra_1", "lie_bialgebra_2", "infinitesimal_bialgebra",
        "co.cocommutativity", "co.coassociativity", "co.cobracket_antisymmetry",
        "co.co_filippov_jacobi", "co.co_admissible"]
    assert all(k in adm.verdicts for k in expected)
    assert validate_coalgebra(co).ok
    poi = check_bialgebra(alg, co, "poisson")
    assert poi.ok, poi.summary()
    return f"{len(adm.verdicts)} admissible + {len(poi.verdicts)} poisson checks"


def c4():
    alg, co = fixture("ex616.bundle")
    dual = dualize_coalgebra(co)
    assert dual.product.sparse == {(0, 0, 1): 1}
    wedge = {}
    for perm in itertools.permutations((0, 2, 3)):
        sign = 1 if perm in ((0, 2, 3), (2, 3, 0), (3, 0, 2)) else -1
        wedge[(*perm, 1)] = sign
    assert dual.bracket.sparse == wedge
    assert dual == fixture("ex616-dual.alg")
    d = double_construct(alg, co)
    assert d.algebra.dim == 8
    assert validate(d.algebra, "admissible").ok
    inv = check_invariance(d.form, d.algebra)
    assert inv.ok and {"form_symmetric", "product_invariance", "bracket_invariance",
                       "form_nondegenerate"} <= set(inv.verdicts)
    mt = check_manin_triple(d, "admissible")
    assert mt.ok, mt.summary()


def perturbations(alg, co):
    """Single-entry edits of the ex616 bundle.

    Raw edits add 1 to every seventh zero entry of each tensor (so the
    symmetry class is broken). Closed edits add one new operation and keep
    the symmetric/antisymmetric closure.
    """
    n = alg.dim
    out = []
    for name, arity in (("product", 3), ("bracket", 4), ("Delta", 3), ("delta", 4)):
        t = {"product": alg.product, "bracket": alg.bracket, "Delta": co.cop2, "delta": co.cop3}[name]
        zeros = [idx for idx in itertools.product(range(n), repeat=arity) if not t[idx]]
        for idx in zeros[::7]:
            t2 = t.replace({idx: 1})
            a2 = Algebra(n, t2, alg.bracket) if name == "product" else (
                Algebra(n, alg.product, t2) if name == "bracket" else alg)
            c2 = Coalgebra(n, t2, co.cop3) if name == "Delta" else (
                Coalgebra(n, co.cop2, t2) if name == "delta" else co)
            out.append((f"{name}{tuple(i + 1 for i in idx)}", a2, c2))
    prod, br = [[2, 2, 1, 1]], [[2, 3, 4, 1, 1]]
    Delta, delta = [[2, 1, 1, 1]], [[2, 1, 3, 4, 1]]
    for label, p, b, D, dd in (
            ("closed e1.e3=e2", prod + [[1, 3, 2, 1]], br, Delta, delta),
            ("closed e3.e3=e4", prod + [[3, 3, 4, 1]], br, Delta, delta),
            ("closed [e1,e2,e3]=e4", prod, br + [[1, 2, 3, 4, 1]], Delta, delta),
            ("closed [e1,e3,e4]=e1", prod, br + [[1, 3, 4, 1, 1]], Delta, delta),
            ("closed Delta(e1)=e3e4", prod, br, Delta + [[1, 3, 4, 1]], delta),
            ("closed Delta(e4)=e2e2", prod, br, Delta + [[4, 2, 2, 1]], delta),
            ("closed delta(e1)=e2^e3^e4", prod, br, Delta, delta + [[1, 2, 3, 4, 1]]),
            ("closed delta(e3)=e1^e2^e4", prod, br, Delta, delta + [[3, 1, 2, 4, 1]])):
        out.append((label, Algebra.from_entries(4, p, b), Coalgebra.from_entries(4, D, dd)))
    return out


def c5():
    alg, co = fixture("ex616.bundle")
    for family in ("admissible", "poisson"):
        r = verify_equivalence(alg, co, family)
        assert r.agree and r.ok, r.summary()
    a4 = fixture("a4.alg")
    r = verify_equivalence(a4, Coalgebra.zero(4), "poisson")
    assert r.agree and r.ok, r.summary()
    cases = perturbations(alg, co)
    assert len(cases) >= 20
    for label, a2, c2 in cases:
        r = verify_equivalence(a2, c2, "admissible")
        assert r.agree, f"{label}: disagreement (exit-3 sentinel)\n{r.summary()}"
        assert not any(r.verdicts.values()), f"{label}: expected all FAIL\n{r.summary()}"
    return f"{len(cases)} perturbations all-FAIL, all agree"


def c6():
    t3 = fixture("t3.alg")
    sol = solve_invariant_forms(t3, expand=True)
    assert sol.basis, "solution space should be nonzero"
    assert sol.polynomial is not None and sol.polynomial.is_zero()
    assert not sol.nondegenerate
    assert t3.br(t3.mul(e(3, 2), e(3, 2)), e(3, 2), e(3, 3)) == e(3, 1)
    assert not validate(t3, "admissible")["mixed_products_vanish"]
    return f"solution space dim {len(sol.basis)}, det polynomial 0"


def c7():
    rng = seeded(20260701)
    count = 0
    for family in ("poisson", "transposed", "admissible"):
        pool = {n: [valid_algebra(rng, n, family) for _ in range(12)] for n in (1, 2, 3)}
        seen = {True: 0, False: 0}
        for _ in range(500):
            base = rng.choice(pool[rng.randint(1, 3)])
            rep = rand_representation(rng, base, rng.randint(1, 2))
            lhs = validate_representation(rep, family)
            assert lhs.preconditions.ok
            rhs = validate(semidirect_product(rep, family), family)
            assert lhs.ok == rhs.ok, (family, lhs.summary(), rhs.summary())
            seen[lhs.ok] += 1
            count += 1
        assert seen[True] and seen[False], seen
    return f"{count} instances"


def c8():
    families = ("comm-assoc", "3-lie", "poisson", "transposed", "admissible")
    alg, co = fixture("ex616.bundle")
    a4 = fixture("a4.alg")
    goldens = [coadjoint_pair(alg, co), coadjoint_pair(a4, Coalgebra.zero(4)),
               zero_maps(a4, Algebra.zero(2)), zero_maps(fixture("t3.alg"), a4)]
    for mp in goldens:
        for f in families:
            r = verify_matched_pair_theorem(mp, f)
            assert r.agree, (f, r.to_json())
    assert verify_matched_pair_theorem(goldens[0], "admissible").conditions_ok
    rng = seeded(8)
    pools = {n: [valid_algebra(rng, n, "admissible") for _ in range(6)] +
             [rand_algebra(rng, n, 0.4) for _ in range(6)] for n in (1, 2)}
    passed = 0
    n_pairs = 240
    for _ in range(n_pairs):
        A = rng.choice(pools[rng.randint(1, 2)])
        B = rng.choice(pools[rng.randint(1, 2)])
        mp = rand_matched_pair(rng, A, B)
        for f in families:
            r = verify_matched_pair_theorem(mp, f)
            assert r.agree, (f, r.to_json())
            passed += r.conditions_ok
    assert passed, "no passing random pairs"
    return f"{n_pairs} random pairs + {len(goldens)} goldens x 5 families"


def c9():
    rng = seeded(9)
    pairs = {"comm-assoc": "comm-assoc", "3-lie": "3-lie", "poisson": "poisson", "admissible": "admissible"}
    hits = {True: 0, False: 0}
    total = 240
    for k in range(total):
        n = rng.randint(1, 4)
        co = rand_coalgebra(rng, n, rng.choice((0.05, 0.15, 0.3)))
        if k % 4 == 3:
            # raw tensors: break the symmetry classes too
            co = Coalgebra(n, co.cop2.replace({(0, 0, n - 1): 1}), co.cop3)
        dual = dualize_coalgebra(co)
        for f, fd in pairs.items():
            a = validate(dual, f).ok
            assert a == validate_coalgebra(co, fd).ok, (f, co)
            hits[a] += 1
        assert dualize_algebra(dual) == co
        alg = rand_algebra(rng, n, 0.3)
        assert dualize_coalgebra(dualize_algebra(alg)) == alg
    assert hits[True] and hits[False], hits
    return f"{total} random coalgebras"


def c10():
    rng = seeded(10)
    t3, a4 = fixture("t3.alg"), fixture("a4.alg")
    assert validate(direct_sum(a4, a4)).ok
    assert validate(direct_sum(t3, t3), "transposed").ok
    unit = Algebra.from_entries(1, [[1, 1, 1, 1]])
    assert tensor_with_commutative(a4, unit) == a4
    assert validate(tensor_with_commutative(t3, Algebra.from_entries(2, [[1, 1, 1, 1]])), "transposed").ok
    for k in range(3):
        assert h_twist(t3, e(3, k + 1)).bracket.is_zero()

    def families_of(alg):
        return {f for f in FAMILIES if validate(alg, f).ok}

    pool = [valid_algebra(rng, n, f) for n in (1, 2, 3) for f in ("poisson", "transposed", "admissible")
            for _ in range(4)] + [rand_algebra(rng, n, 0.3) for n in (2, 3) for _ in range(6)]
    comm = [valid_algebra(rng, n, "comm-assoc") for n in (1, 2) for _ in range(5)]
    comm = [Algebra(c.dim, c.product, Algebra.zero(c.dim).bracket) for c in comm]
    comm = [c for c in comm if validate(c, "comm-assoc").ok]
    fams = {id(a): families_of(a) for a in pool}
    for _ in range(100):
        a1, a2 = rng.choice(pool), rng.choice(pool)
        s = direct_sum(a1, a2)
        for f in fams[id(a1)] & fams[id(a2)]:
            assert validate(s, f).ok, f
    for _ in range(100):
        a1, c2 = rng.choice(pool), rng.choice(comm)
        t = tensor_with_commutative(a1, c2)
        for f in fams[id(a1)] & {"poisson", "transposed"}:
            assert validate(t, f).ok, f
    transposed = [a for a in pool if "transposed" in fams[id(a)]]
    for _ in range(100):
        a = rng.choice(transposed)
        h = tuple(rng.choice((-1, 0, 1, 2)) for _ in range(a.dim))
        assert validate(h_twist(a, h), "transposed").ok
    return "100 random instances per construction"


def c11():
    t = fixture("ex214.template")
    found = list(enumerate_structures(t))
    target = (1, 0, 0, -3, 0, 0)
    assigns = [tuple(a) for a, _ in found]
    assert target in assigns
    for a, alg in found:
        assert validate(alg, "transposed").ok
    assert dict(zip(assigns, (alg for _, alg in found)))[target] == fixture("t3.alg")
    return f"{len(found)} emissions"


def jacobi_brute(alg):
    """All basis 5-tuples failing (Jac), evaluated with plain vector arithmetic."""
    n = alg.dim
    basis = [e(n, i + 1) for i in range(n)]

    def add(*vs):
        return tuple(sum(c) for c in zip(*vs))

    fails = []
    for x1, x2, y1, y2, y3 in itertools.product(range(n), repeat=5):
        X1, X2, Y1, Y2, Y3 = (basis[i] for i in (x1, x2, y1, y2, y3))
        lhs = alg.br(X1, X2, alg.br(Y1, Y2, Y3))
        rhs = add(alg.br(alg.br(X1, X2, Y1), Y2, Y3), alg.br(Y1, alg.br(X1, X2, Y2), Y3),
                  alg.br(Y1, Y2, alg.br(X1, X2, Y3)))
        if lhs != rhs:
            fails.append(((x1 + 1, x2 + 1), (y1 + 1, y2 + 1, y3 + 1)))
    return fails


def c12():
    alg = fixture("fj-counterexample.alg")
    r = validate(alg, "3-lie")
    assert not r["filippov_jacobi"]
    fails = jacobi_brute(alg)
    assert ((1, 3), (1, 2, 4)) in fails
    w = r.witnesses["filippov_jacobi"]
    assert ((w.args[0], w.args[1]), tuple(w.args[2:])) == fails[0]
    # at ((e1,e3),(e1,e2,e4)): [e1,e3,[e1,e2,e4]] = [e1,e3,e2] = -e1, right side 0
    X = e(4, 1), e(4, 3)
    assert alg.br(*X, alg.br(e(4, 1), e(4, 2), e(4, 4))) == (Fraction(-1), 0, 0, 0)
    return f"{len(fails)} failing tuples; reported {fails[0]}"


CRITERIA = [
    (1, "T3 transposed PASS, Poisson FAIL with witness", 0.1, c1),
    (2, "A4 Poisson/transposed/admissible PASS", 0.1, c2),
    (3, "ex616 bialgebra conditions (admissible and poisson)", 0.5, c3),
    (4, "dual algebra and dim-8 double (validate, invariance, Manin triple)", 1.0, c4),
    (5, "equivalence agreement on goldens and perturbations", 5.0, c5),
    (6, "T3 has no nondegenerate invariant form; mixed product nonzero", 1.0, c6),
    (7, "semidirect biconditional, 3 x 500 random instances", 10.0, c7),
    (8, "matched-pair biconditional, five families", 10.0, c8),
    (9, "duality soundness and round trips", 5.0, c9),
    (10, "constructions preserve laws", 5.0, c10),
    (11, "search rediscovers the T3 assignment", 5.0, c11),
    (12, "Filippov-Jacobi counterexample vs brute force", 0.5, c12),
]


@pytest.mark.parametrize("number,title,limit,body", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, title, limit, body):
    err = run(number, title, limit, body)
    assert err is None, err


if __name__ == "__main__":
    bad = sum(run(*c) is not None for c in CRITERIA)
    sys.exit(1 if bad else 0)
