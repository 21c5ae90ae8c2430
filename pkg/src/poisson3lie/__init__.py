"""Exact structure-constant toolkit for (transposed) Poisson 3-Lie algebras."""
from .algebras import (FAMILIES, Algebra, LinearMap, direct_sum, h_twist, is_derivation,
                       is_homomorphism, tensor_with_commutative, validate)
from .duality import Coalgebra, dualize_algebra, dualize_coalgebra, validate_coalgebra
from .kernel import InputError, Matrix, PreconditionError, Tensor, scalar
from .laws import LawReport, Witness
from .manin import (BilinearForm, EquivalenceReport, SplitDouble, check_bialgebra, check_invariance,
                    check_manin_triple, double_construct, solve_invariant_forms, standard_form,
                    verify_equivalence)
from .pairs import MatchedPair, check_matched_pair, matched_pair_sum, verify_matched_pair_theorem
from .reps import (Representation, adjoint_representation, coadjoint_representation,
                   dual_representation, semidirect_product, validate_representation)
from .search import SearchTemplate, enumerate_structures

__version__ = "0.1.0"

__all__ = [
    "FAMILIES",
    "Algebra",
    "LinearMap",
    "direct_sum",
    "h_twist",
    "is_derivation",
    "is_homomorphism",
    "tensor_with_commutative",
    "validate",
    "Coalgebra",
    "dualize_algebra",
    "dualize_coalgebra",
    "validate_coalgebra",
    "InputError",
    "Matrix",
    "PreconditionError",
    "Tensor",
    "scalar",
    "LawReport",
    "Witness",
    "BilinearForm",
    "EquivalenceReport",
    "SplitDouble",
    "check_bialgebra",
    "check_invariance",
    "check_manin_triple",
    "double_construct",
    "solve_invariant_forms",
    "standard_form",
    "verify_equivalence",
    "MatchedPair",
    "check_matched_pair",
    "matched_pair_sum",
    "verify_matched_pair_theorem",
    "Representation",
    "adjoint_representation",
    "coadjoint_representation",
    "dual_representation",
    "semidirect_product",
    "validate_representation",
    "SearchTemplate",
    "enumerate_structures",
]
