"""Exact generalised polynomial maps on number fields.

Certified number field arithmetic (numberfield), an expression language
with exact evaluation (genpoly), explicit set predicates for lattices,
units, Pisot and Salem numbers and hereditary power sets (constructions),
linear recurrent sequence machinery (linrec), and word combinatorics
(analysis).
"""

from .numberfield import (NumberField, FieldElement, certified_ceil,
                          certified_dist, certified_floor, certified_frac,
                          certified_nint, compare_elements)
from .intervals import RatInterval, ComplexBox
from .algebraic import (RealAlg, abs_sq_of_embedding, complex_floor,
                        embedding_is_real, im_of_embedding, re_of_embedding)
from .genpoly import (Environment, GPExpr, Value, eval_expr,
                      linear_functional_expr, parse, pretty, trace_expr,
                      zero_indicator)
from .constructions import (IndexSet, PisotSetSpec, SetPredicate, choose_m,
                            default_rho, hereditary_predicate,
                            lattice_indicator, pisot_unit_test,
                            power_set_predicate, salem_test,
                            trace_collision_search, unit_indicator)
from .linrec import (LinRecSeq, SalemRecoveryFamily, TransferMap,
                     pisot_step, salem_recover_exact, salem_recovery_family,
                     sml_zeros, trace_representation, transfer_map,
                     transfer_to_powers, true_onset, value_set_membership,
                     verified_i0)
from .analysis import (BinaryWord, NonHereditaryPlan, density_profile,
                       non_hereditary_construct, sturmian,
                       subword_complexity, surrogate_slow_decay_set)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "NumberField", "FieldElement", "RatInterval", "ComplexBox", "RealAlg",
    "certified_floor", "certified_ceil", "certified_frac", "certified_nint",
    "certified_dist", "compare_elements", "complex_floor", "re_of_embedding",
    "im_of_embedding", "abs_sq_of_embedding", "embedding_is_real",
    "GPExpr", "Environment", "Value", "parse", "pretty", "eval_expr",
    "zero_indicator", "trace_expr", "linear_functional_expr",
    "SetPredicate", "IndexSet", "PisotSetSpec", "lattice_indicator",
    "unit_indicator", "pisot_unit_test", "salem_test", "power_set_predicate",
    "choose_m", "default_rho", "hereditary_predicate", "trace_collision_search",
    "LinRecSeq", "TransferMap", "SalemRecoveryFamily", "trace_representation",
    "verified_i0", "true_onset", "pisot_step", "transfer_map",
    "transfer_to_powers", "salem_recover_exact", "salem_recovery_family",
    "value_set_membership", "sml_zeros",
    "BinaryWord", "NonHereditaryPlan", "sturmian", "subword_complexity",
    "density_profile", "surrogate_slow_decay_set", "non_hereditary_construct",
    "errors",
]
