"""Finite-instance checkers for iterated monoidal structure and enrichment.

Two kinds of instance are supported.  Table instances spell out every
object, morphism, composition cell, tensor cell, associator and
interchange cell, and the generic checkers quantify over all tuples the
axioms mention.  Thin instances describe the truncated-addition monoid
on {0, ..., K} where a unique morphism x -> y exists exactly when
x >= y; there the checkers reduce every diagram to vectorized equalities
between object-level grids, which stays exact at K = 100 where tables
would be hopeless.

The product construction builds an enriched category out of two others
by tensoring hom-objects with a second monoidal product and routing
composition through an interchange cell, and `verify_theorem41` checks
that the result is again enriched, that a one-object unit instance is a
strict unit for it, and that rebracketing and interchange act on it as
enriched functors.
"""

from .core import (
    Failure,
    FinCategory,
    FinMonoidalInstance,
    Verdict,
    check_kfold,
    check_monoidal,
    check_symmetry,
    eta_from_symmetry,
    make_kfold_from_symmetric,
)
from .enriched import (
    FinEnrichedFunctor,
    FinEnrichedNat,
    FinEnrichedCategory,
    check_enriched,
    check_functor,
    check_nat,
    quasi_metric_instance,
    random_quasi_metric,
    unit_enriched,
)
from .product import Theorem41Report, alpha1_functor, eta1_functor, product_enriched, verify_theorem41
from .samples import (discrete_monoid_instance, one_object_involution_instance,
                      potential_enriched_instance, two_object_sign_instance)
from .thin import ThinInstance, make_vk, materialize
from .io import load_instance, save_instance

__all__ = [
    "Failure",
    "FinCategory",
    "FinMonoidalInstance",
    "Verdict",
    "check_kfold",
    "check_monoidal",
    "check_symmetry",
    "eta_from_symmetry",
    "make_kfold_from_symmetric",
    "FinEnrichedFunctor",
    "FinEnrichedNat",
    "FinEnrichedCategory",
    "check_enriched",
    "check_functor",
    "check_nat",
    "quasi_metric_instance",
    "random_quasi_metric",
    "unit_enriched",
    "discrete_monoid_instance",
    "one_object_involution_instance",
    "two_object_sign_instance",
    "potential_enriched_instance",
    "Theorem41Report",
    "alpha1_functor",
    "eta1_functor",
    "product_enriched",
    "verify_theorem41",
    "ThinInstance",
    "make_vk",
    "materialize",
    "load_instance",
    "save_instance",
]
