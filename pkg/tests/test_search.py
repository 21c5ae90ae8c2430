import functools
import itertools
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from randgen import seeded, valid_algebra

from poisson3lie import Algebra, InputError, SearchTemplate, enumerate_structures, validate
from poisson3lie.io import load
from poisson3lie.search import BudgetExceeded

FIX = Path(__file__).parent / "fixtures"
seeds = st.integers(0, 2 ** 32 - 1)


@functools.lru_cache
def ex214():
    t = load(FIX / "ex214.template")
    return t, list(enumerate_structures(t))


def test_rediscovers_t3():
    t, found = ex214()
    assigns = [tuple(a) for a, _ in found]
    assert (1, 0, 0, -3, 0, 0) in assigns
    assert len(found) == 21
    assert all(validate(alg, "transposed").ok for _, alg in found)
    assert assigns == sorted(assigns, key=lambda a: [t.coefficients.index(v) for v in a])


def test_deterministic():
    t, found = ex214()
    assert list(enumerate_structures(t)) == found


@pytest.mark.parametrize("n", [1, 2, 3])
def test_all_zero_coefficients(n):
    prod = [s for s in itertools.product(range(1, n + 1), repeat=3) if s[0] <= s[1]]
    br = [(*c, l) for c in itertools.combinations(range(1, n + 1), 3) for l in range(1, n + 1)]
    t = SearchTemplate(n, free_product=prod, free_bracket=br, coefficients=(0,))
    found = list(enumerate_structures(t))
    assert len(found) == 1 and found[0][1] == Algebra.zero(n)


def test_dim2_bracket_is_empty():
    slots = [s for s in itertools.product((1, 2), repeat=4)]
    for s in slots:
        t = SearchTemplate(2, free_bracket=[s], coefficients=(1, -1))
        assert list(enumerate_structures(t)) == []


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_planted_assignment_is_found(seed):
    rng = seeded(seed)
    fam = rng.choice(("poisson", "transposed", "admissible", "comm-assoc"))
    alg = valid_algebra(rng, rng.randint(2, 3), fam)
    entries = [(i + 1, j + 1, l + 1, v) for (i, j, l), v in alg.product.sparse.items() if i <= j]
    if not entries:
        return
    free = rng.sample(entries, min(3, len(entries)))
    fixed = [e for e in entries if e not in free]
    fixed_br = [(i + 1, j + 1, k + 1, l + 1, v) for (i, j, k, l), v in alg.bracket.sparse.items()
                if i < j < k]
    coeffs = sorted({0, 1, -1} | {e[-1] for e in free})
    t = SearchTemplate(alg.dim, fixed_product=fixed, fixed_bracket=fixed_br,
                       free_product=[e[:3] for e in free], coefficients=coeffs, families=(fam,))
    emitted = [a for a, _ in enumerate_structures(t)]
    assert tuple(e[-1] for e in free) in [tuple(a) for a in emitted]


def test_budget():
    t = load(FIX / "ex214.template")
    with pytest.raises(BudgetExceeded) as exc:
        list(enumerate_structures(t, budget=10))
    assert exc.value.required == 3 ** 6 and exc.value.budget == 10


def test_template_errors():
    with pytest.raises(InputError):
        SearchTemplate(3, fixed_product=[(1, 1, 1, 1)], free_product=[(1, 1, 1)])
    with pytest.raises(InputError):
        SearchTemplate(3, free_product=[(1, 1, 1), (1, 1, 1)])
    with pytest.raises(InputError):
        SearchTemplate(3, free_bracket=[(1, 2, 3)])
    with pytest.raises(InputError):
        SearchTemplate(3, free_product=[(1, 1, 1)], coefficients=())
    with pytest.raises(InputError):
        SearchTemplate(3, families=("lie",))
