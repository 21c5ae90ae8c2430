from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from randgen import rand_representation, seeded, valid_algebra

from poisson3lie import (Algebra, InputError, Representation, adjoint_representation,
                         coadjoint_representation, direct_sum, dual_representation, semidirect_product,
                         validate, validate_representation)
from poisson3lie.io import load
from poisson3lie.reps import transposed_dual_report, zero_representation

FIX = Path(__file__).parent / "fixtures"
T3 = load(FIX / "t3.alg")
A4 = load(FIX / "a4.alg")
seeds = st.integers(0, 2 ** 32 - 1)


def nonzero_actions(rep):
    """{("mu", i, r, c) or ("rho", i, j, r, c): value}, 1-based."""
    out = {}
    for i, M in enumerate(rep.mu):
        for (r, c), v in M.sparse.items():
            out[("mu", i + 1, r + 1, c + 1)] = v
    for i, row in enumerate(rep.rho):
        for j, M in enumerate(row):
            for (r, c), v in M.sparse.items():
                out[("rho", i + 1, j + 1, r + 1, c + 1)] = v
    return out


def test_adjoint_a4():
    rep = adjoint_representation(A4)
    # mu(e2)e3 = e1, mu(e3)e2 = e1, rho(e2,e3)e4 = e1 and its antisymmetric images
    acts = nonzero_actions(rep)
    assert acts[("mu", 2, 1, 3)] == 1 and acts[("mu", 3, 1, 2)] == 1
    assert acts[("rho", 2, 3, 1, 4)] == 1 and acts[("rho", 3, 2, 1, 4)] == -1
    assert len([k for k in acts if k[0] == "mu"]) == 2
    assert len([k for k in acts if k[0] == "rho"]) == 6
    assert validate_representation(rep, "admissible").ok


def test_adjoint_t3():
    acts = nonzero_actions(adjoint_representation(T3))
    assert acts[("rho", 1, 2, 1, 3)] == 1
    assert acts[("mu", 2, 1, 2)] == 1
    assert acts[("mu", 3, 1, 3)] == -3


def test_adjoint_zero_algebra():
    assert not nonzero_actions(adjoint_representation(Algebra.zero(3)))


@pytest.mark.parametrize("family", ["comm-assoc", "3-lie", "poisson", "transposed", "admissible"])
@pytest.mark.parametrize("m", [0, 1, 3])
def test_zero_representation_passes(family, m):
    base = A4 if validate(A4, family).ok else Algebra.zero(2)
    assert validate_representation(zero_representation(base, m), family).ok
    if family in ("comm-assoc", "3-lie", "transposed"):
        assert validate_representation(zero_representation(T3, m), family).ok


def test_adjoint_t3_not_poisson():
    r = validate_representation(adjoint_representation(T3), "poisson")
    assert not r.ok
    assert not r.preconditions.ok and "poisson_leibniz" in r.preconditions.failed
    assert any(k.startswith("poisson_rep") for k in r.failed)


def test_coadjoint_a4():
    co = coadjoint_representation(A4)
    assert validate_representation(co, "admissible").ok
    # (-mu*)(e2) e1* = e3*
    assert co.mu[1].apply((1, 0, 0, 0)) == (0, 0, 1, 0)


def test_dual_twice_is_identity():
    rep = adjoint_representation(T3)
    assert dual_representation(dual_representation(rep)) == rep


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_dual_involution_random(seed):
    rng = seeded(seed)
    rep = rand_representation(rng, valid_algebra(rng, rng.randint(1, 3), "poisson"), rng.randint(1, 3))
    assert dual_representation(dual_representation(rep)) == rep


def test_transposed_dual_of_t3_fails():
    adj = adjoint_representation(T3)
    assert validate_representation(adj, "transposed").ok
    r = transposed_dual_report(adj)
    assert not r.ok
    dual = dual_representation(adj)
    assert not validate_representation(dual, "transposed").ok
    assert not validate(semidirect_product(dual, "transposed"), "transposed").ok


def test_semidirect_examples():
    s = semidirect_product(adjoint_representation(A4), "admissible")
    assert s.dim == 8 and validate(s, "admissible").ok
    assert semidirect_product(zero_representation(T3, 2)) == direct_sum(T3, Algebra.zero(2))


@settings(max_examples=80, deadline=None)
@given(seeds, st.sampled_from(["comm-assoc", "3-lie", "poisson", "transposed", "admissible"]))
def test_semidirect_biconditional(seed, family):
    rng = seeded(seed)
    base = valid_algebra(rng, rng.randint(1, 3), family)
    rep = rand_representation(rng, base, rng.randint(1, 2))
    assert validate_representation(rep, family).ok == validate(semidirect_product(rep, family), family).ok


@settings(max_examples=60, deadline=None)
@given(seeds, st.sampled_from(["poisson", "admissible"]))
def test_dual_of_valid_rep_is_valid(seed, family):
    rng = seeded(seed)
    base = valid_algebra(rng, rng.randint(1, 3), family)
    for _ in range(20):
        rep = rand_representation(rng, base, rng.randint(1, 2))
        if validate_representation(rep, family).ok:
            assert validate_representation(dual_representation(rep), family).ok
            return


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_constructors_keep_rho_antisymmetric(seed):
    rng = seeded(seed)
    rep = rand_representation(rng, valid_algebra(rng, rng.randint(1, 3), "3-lie"), 2)
    for r in (rep, dual_representation(rep), adjoint_representation(rep.base),
              coadjoint_representation(rep.base)):
        assert validate_representation(r, "3-lie")["rho_antisymmetry"]


def test_from_entries():
    rep = Representation.from_entries(T3, 2, [[1, 1, 2, "1/2"]], [[1, 2, 2, 1, 3]])
    assert rep.mu[0].sparse == {(0, 1): 0.5}
    assert rep.rho[0][1].sparse == {(1, 0): 3} and rep.rho[1][0].sparse == {(1, 0): -3}
    raw = Representation.from_entries(T3, 2, rho=[[1, 2, 2, 1, 3]], closure=False)
    assert raw.rho[1][0].is_zero()
    assert not validate_representation(raw, "3-lie")["rho_antisymmetry"]
    with pytest.raises(InputError):
        Representation.from_entries(T3, 2, [[1, 3, 1, 1]])
    with pytest.raises(InputError):
        Representation.from_entries(T3, 2, rho=[[1, 2, 1, 1, 1], [2, 1, 1, 1, 1]])
    with pytest.raises(InputError):
        Representation(T3, 2, rep.mu[:2], rep.rho)
