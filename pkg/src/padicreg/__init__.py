"""Explicit p-adic polylogarithmic cocycles and their regulator pairings.

The package computes, to a certified p-adic precision, the values of the
odd-degree group cocycles on tuples of matrices congruent to the identity
modulo a prime power, transfers bar-resolution chains from a congruence
subgroup to the full matrix group, and pairs the results into normalized
regulator values.  Everything is exact-rational or fixed-precision ring
arithmetic; no floats are involved anywhere.

Layout:

- ``arith``     residue rings, p-adic numbers, logarithms, precision bounds
- ``simplex``   exact rational integration of polynomial forms on simplices
- ``matforms``  matrix-coefficient polynomial differential forms
- ``cocycle``   the cocycle evaluator and its defect diagnostics
- ``homology``  bar chains, coset systems, the transfer map
- ``regulator`` the pairing, the transfer-normalized map and absolute values
- ``cli``       JSON-reporting command-line verbs
"""

from .arith import (
    QpElem,
    RingElem,
    RingParams,
    extend_log,
    factorial_valuation,
    padic_log,
    rational_to_qp,
    truncation_degree,
)
from .cocycle import (
    EvalSettings,
    cocycle_defect,
    cocycle_eval,
    conjugation_defect,
    galois_defect,
    invariance_defect,
)
from .errors import (
    CongruenceError,
    ConvergenceError,
    NonUnitError,
    PadicError,
    ParameterError,
    PrecisionError,
    SchemaError,
    SizeGuardError,
)
from .homology import (
    BarChain,
    GroupSpec,
    bar_differential,
    check_chain_map,
    matrix_group_spec,
    perm_group_spec,
    transfer_T,
)
from .matforms import OMatrix
from .regulator import (
    RegulatorConfig,
    R_NF,
    abs_value_Q,
    hat_R,
    index,
    normalization_constant,
    pair,
    product_formula_check,
)
from .simplex import (
    RationalForm,
    integrate_top,
    iterated_integral_oracle,
    stokes_check,
)

__all__ = [
    "QpElem",
    "RingElem",
    "RingParams",
    "extend_log",
    "factorial_valuation",
    "padic_log",
    "rational_to_qp",
    "truncation_degree",
    "EvalSettings",
    "cocycle_defect",
    "cocycle_eval",
    "conjugation_defect",
    "galois_defect",
    "invariance_defect",
    "CongruenceError",
    "ConvergenceError",
    "NonUnitError",
    "PadicError",
    "ParameterError",
    "PrecisionError",
    "SchemaError",
    "SizeGuardError",
    "BarChain",
    "GroupSpec",
    "bar_differential",
    "check_chain_map",
    "matrix_group_spec",
    "perm_group_spec",
    "transfer_T",
    "OMatrix",
    "RegulatorConfig",
    "R_NF",
    "abs_value_Q",
    "hat_R",
    "index",
    "normalization_constant",
    "pair",
    "product_formula_check",
    "RationalForm",
    "integrate_top",
    "iterated_integral_oracle",
    "stokes_check",
]

__version__ = "0.1.0"
