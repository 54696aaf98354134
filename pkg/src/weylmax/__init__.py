"""weylmax: exact combinatorics for finite Weyl groups.

Root systems in all irreducible crystallographic types (fixed Bourbaki
numbering), exact group elements with lengths and reduced words, Bruhat
order with maximum detection, conjugacy classes with length strata, the
family of classes containing a unique maximal-length element together
with its normal forms, rank identities, lattice structure and descent
chains, plus independent brute-force oracles for differential testing.

All arithmetic is exact integer arithmetic; there is no floating point
anywhere in the package.
"""

from . import _kernel
from .bruhat import bruhat_leq, bruhat_maximum, configure_cache
from .cartan import CartanType, cartan_matrix, positive_root_count, weyl_order
from .conjugacy import (DEFAULT_ENUMERATION_CAP, ConjClass, all_classes,
                        class_of, enumerate_elements, involution_classes)
from .errors import (ChainNotFound, EmptyElementSet, EnumerationCapExceeded,
                     InvalidCartanType, MismatchedRootSystems, WeylMaxError,
                     WordParseError)
from .oracle import ORACLE_CAP, bruhat_oracle, classes_oracle, enumerate_group
from .rootsys import RootSystem, build_root_system, simple_reflection_action
from .weyl import (SimpleSubset, WeylElement, fixed_space_dim, from_word,
                   generators, identity_element, integer_rank, is_involution,
                   length, longest_element, minus_w0_on_simples, multiply,
                   parabolic_longest, rank_one_minus, reduced_word, support)
from .wm import (CheckReport, DescentChain, RankIdentityResult, WmEntry,
                 WmLattice, chain_step_property_check, gkp_descent_chain,
                 gkp_suite, lattice_check, predicted_dimension,
                 psi_rank_maximization_check, rank_identity_check,
                 rank_lemma_suite, richardson_decomposition,
                 theorem_max_check, validate_descent_chain, wm_classes)

__version__ = "0.1.0"

KERNEL_BACKEND = _kernel.ACTIVE_BACKEND

__all__ = [
    "CartanType", "RootSystem", "WeylElement", "SimpleSubset", "ConjClass",
    "WmEntry", "WmLattice", "CheckReport", "DescentChain",
    "RankIdentityResult", "build_root_system", "simple_reflection_action",
    "cartan_matrix", "positive_root_count", "weyl_order", "identity_element",
    "generators", "from_word", "multiply", "length", "reduced_word",
    "support", "is_involution", "longest_element", "parabolic_longest",
    "minus_w0_on_simples", "rank_one_minus", "fixed_space_dim",
    "integer_rank", "bruhat_leq", "bruhat_maximum", "configure_cache",
    "class_of", "all_classes", "involution_classes", "enumerate_elements",
    "wm_classes", "richardson_decomposition", "rank_identity_check",
    "rank_lemma_suite", "psi_rank_maximization_check", "theorem_max_check",
    "gkp_descent_chain", "gkp_suite", "validate_descent_chain",
    "chain_step_property_check", "lattice_check", "predicted_dimension",
    "enumerate_group", "bruhat_oracle", "classes_oracle",
    "DEFAULT_ENUMERATION_CAP", "ORACLE_CAP", "KERNEL_BACKEND",
    "WeylMaxError", "InvalidCartanType", "MismatchedRootSystems",
    "EnumerationCapExceeded", "EmptyElementSet", "ChainNotFound",
    "WordParseError",
]
