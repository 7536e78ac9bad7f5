"""hombox: exact structure-constant calculus for monoidal Hom-Hopf
algebras, with machine-checked law suites for every construction."""

from .kernel import (QQ, PrimeField, Rational, Tensor, contract, ein,
                     field_from_tag, mat_inverse, mat_power, permute,
                     tensor_product)
from .hom_core import (ActionMap, CheckReport, CoactionMap, HomAlgebra,
                       HomBialgebra, HomCoalgebra, HomHopfAlgebra, Verdict,
                       check_action_laws, check_coaction_laws,
                       check_structure)
from .constructions import (convolve, dual_hopf, opposite,
                            regular_action_left, regular_action_right,
                            yau_twist)
from .products import (bicross_left, bicross_right, canonical_action_coaction,
                       canonical_bicross, check_condition_set,
                       smash_coproduct_left, smash_product_right)
from .codouble import (copair_from_bicross, double_crosscoproduct,
                       drinfeld_codouble)
from .braiding import (BilinearForm, cocycle_from_cqt, codouble_cqt_form,
                       comodule_algebra_from_twist, convolution_inverse,
                       heisenberg_double, twist, verify_thm510)
from .sweedler import sweedler_eval
from .zoo import BUILTIN_NAMES, builtin
from .fileio import (load_algebra, parse_algebra_file, save_algebra,
                     serialize_algebra)

__version__ = "0.1.0"

__all__ = [
    "QQ", "PrimeField", "Rational", "Tensor", "contract", "ein",
    "field_from_tag", "mat_inverse", "mat_power", "permute",
    "tensor_product",
    "ActionMap", "CheckReport", "CoactionMap", "HomAlgebra", "HomBialgebra",
    "HomCoalgebra", "HomHopfAlgebra", "Verdict", "check_action_laws",
    "check_coaction_laws", "check_structure",
    "convolve", "dual_hopf", "opposite", "regular_action_left",
    "regular_action_right", "yau_twist",
    "bicross_left", "bicross_right", "canonical_action_coaction",
    "canonical_bicross", "check_condition_set", "smash_coproduct_left",
    "smash_product_right",
    "copair_from_bicross", "double_crosscoproduct", "drinfeld_codouble",
    "BilinearForm", "cocycle_from_cqt", "codouble_cqt_form",
    "comodule_algebra_from_twist", "convolution_inverse",
    "heisenberg_double", "twist", "verify_thm510",
    "sweedler_eval",
    "BUILTIN_NAMES", "builtin",
    "load_algebra", "parse_algebra_file", "save_algebra",
    "serialize_algebra",
]
