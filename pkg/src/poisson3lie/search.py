"""Brute-force enumeration of structure constants over a finite coefficient set."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .algebras import FAMILIES, Algebra, family_list, validate
from .kernel import InputError, scalar

DEFAULT_BUDGET = 10 ** 6


class BudgetExceeded(InputError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"template needs {required} candidate assignments, budget is {budget}")
        self.required = required
        self.budget = budget


@dataclass(frozen=True)
class SearchTemplate:
    """Pinned entries plus free slots, all 1-based.

    fixed_product: [i, j, l, value]      free_product: [i, j, l]
    fixed_bracket: [i, j, k, l, value]   free_bracket: [i, j, k, l]
    Symmetric/antisymmetric closure is applied after each assignment.
    """
    dim: int
    fixed_product: tuple = ()
    fixed_bracket: tuple = ()
    free_product: tuple = ()
    free_bracket: tuple = ()
    coefficients: tuple = (0, 1, -1)
    families: tuple = FAMILIES
    budget: int = None

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(scalar(c) for c in self.coefficients))
        object.__setattr__(self, "families", family_list(self.families or FAMILIES))
        for fixed, free, what in ((self.fixed_product, self.free_product, "product"),
                                  (self.fixed_bracket, self.free_bracket, "bracket")):
            arity = 3 if what == "product" else 4
            if any(len(e) != arity + 1 for e in fixed) or any(len(s) != arity for s in free):
                raise InputError(f"{what} template entries have the wrong length")
            pinned = {tuple(e[:-1]) for e in fixed}
            slots = [tuple(s) for s in free]
            if len(set(slots)) != len(slots):
                raise InputError(f"duplicate free {what} slot")
            clash = pinned.intersection(slots)
            if clash:
                raise InputError(f"{what} slots {sorted(clash)} are both fixed and free")
        if not self.coefficients and self.n_free:
            raise InputError("empty coefficient set")

    @property
    def n_free(self) -> int:
        return len(self.free_product) + len(self.free_bracket)

    @property
    def candidates(self) -> int:
        return len(self.coefficients) ** self.n_free

    def complete(self, assignment: tuple, closure: bool = True) -> Algebra:
        """The algebra for one assignment; InputError on a closure conflict."""
        k = len(self.free_product)
        prod = list(self.fixed_product) + [(*s, v) for s, v in zip(self.free_product, assignment[:k])]
        br = list(self.fixed_bracket) + [(*s, v) for s, v in zip(self.free_bracket, assignment[k:])]
        return Algebra.from_entries(self.dim, prod, br, closure=closure)


def enumerate_structures(t: SearchTemplate, budget: int = None, closure: bool = True) -> Iterator[tuple]:
    """Yield (assignment, algebra) for every valid completion, in lexicographic order.

    Assignments follow the order of the coefficient list, free product slots
    first. Completions equal to an earlier emission are skipped.
    """
    budget = budget if budget is not None else (t.budget if t.budget is not None else DEFAULT_BUDGET)
    if t.candidates > budget:
        raise BudgetExceeded(t.candidates, budget)
    seen = set()
    for assignment in itertools.product(t.coefficients, repeat=t.n_free):
        try:
            alg = t.complete(assignment, closure)
        except InputError:
            continue
        key = (alg.product, alg.bracket)
        if key in seen:
            continue
        seen.add(key)
        if validate(alg, t.families).ok:
            yield assignment, alg
