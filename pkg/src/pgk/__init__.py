"""Vertex connectivity of power graphs of finite cyclic groups.

The power graph of C_n joins two group elements when one is a power of the
other. This package computes its vertex connectivity exactly along two
independent routes (a weighted minimum cut on the divisor-class quotient and
an element-level brute force), evaluates the known closed forms and the upper
bound for the remaining case, constructs explicit minimum separators with
verified disconnection witnesses, and enumerates all minimum separators
exhaustively at small scale.
"""

from .arith import Factorization, alpha_beta, cofree_divisor, divisors, factorize, totient
from .connectivity import (
    KappaResult,
    SeparationWitness,
    case_tag_for,
    kappa_class,
    min_cut_between,
    verify_witness,
    witness_problems,
)
from .element_oracle import element_adjacency, element_guard, kappa_element_oracle
from .formulas import (
    CASE_I,
    CASE_II_BOUND,
    CASE_III,
    PRIME_POWER,
    R3_EXACT,
    CaseTag,
    case_i_expression,
    classify,
    corollary_p1_ge_r,
    kappa_formula,
    lemma4_slack,
    upper_bound_ii,
)
from .quotient import (
    DivisorClass,
    QuotientGraph,
    build_quotient,
    components_without,
    expand_to_elements,
    subgroup_classes,
)
from .separators import (
    ClassSeparator,
    build_Z,
    check_disconnects,
    enumerate_min_separators,
    example_2310,
    optimal_Z,
    size_Z_formula,
)

__version__ = "0.1.0"

__all__ = [
    "Factorization",
    "factorize",
    "totient",
    "divisors",
    "cofree_divisor",
    "alpha_beta",
    "DivisorClass",
    "QuotientGraph",
    "build_quotient",
    "subgroup_classes",
    "expand_to_elements",
    "components_without",
    "KappaResult",
    "SeparationWitness",
    "kappa_class",
    "kappa_element_oracle",
    "min_cut_between",
    "verify_witness",
    "witness_problems",
    "case_tag_for",
    "element_adjacency",
    "element_guard",
    "CaseTag",
    "classify",
    "kappa_formula",
    "case_i_expression",
    "upper_bound_ii",
    "corollary_p1_ge_r",
    "lemma4_slack",
    "PRIME_POWER",
    "CASE_I",
    "CASE_II_BOUND",
    "CASE_III",
    "R3_EXACT",
    "ClassSeparator",
    "build_Z",
    "size_Z_formula",
    "optimal_Z",
    "example_2310",
    "check_disconnects",
    "enumerate_min_separators",
    "__version__",
]
