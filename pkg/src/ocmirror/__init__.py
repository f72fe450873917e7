"""Exact-arithmetic open-closed mirror maps for unit-fraction weight
systems: enumeration, Picard-Fuchs solutions, map inversion, and the
integrality suites."""

from .scalars import harmonic, factorial_ratio_seq, format_rat, parse_rat
from .series import (BiSeries, LogSeries, ThetaOperator, apply_op,
                     lagrange_good_coeff, revert_pair, substitute_pair)
from .geometry import (COMPACT, COMPACT_TILDE, LOCAL_INNER_A, LOCAL_INNER_B,
                       LOCAL_OUTER, PHASES, WeightSystem, charge_vectors,
                       enumerate_solutions, pf_operators, weight_system)
from .mirrormaps import (IntegralityReport, MirrorMapBundle, ObstructionError,
                         ProductFormExponents, g0_series, g1_series,
                         integrality_report, invert_map, local_inner_b_inverse,
                         local_map, open_closed_map, product_form_exponents,
                         recursive_pf_solve)
from .verify import (CheckResult, SuiteResult, check_annihilation,
                     golden_corpus, obstruction_constant, run_suite,
                     tilde_solutions)

__version__ = "0.1.0"

__all__ = [
    "harmonic", "factorial_ratio_seq", "format_rat", "parse_rat",
    "BiSeries", "LogSeries", "ThetaOperator", "apply_op",
    "lagrange_good_coeff", "revert_pair", "substitute_pair",
    "COMPACT", "COMPACT_TILDE", "LOCAL_INNER_A", "LOCAL_INNER_B",
    "LOCAL_OUTER", "PHASES", "WeightSystem", "charge_vectors",
    "enumerate_solutions", "pf_operators", "weight_system",
    "IntegralityReport", "MirrorMapBundle", "ObstructionError",
    "ProductFormExponents", "g0_series", "g1_series", "integrality_report",
    "invert_map", "local_inner_b_inverse", "local_map", "open_closed_map",
    "product_form_exponents", "recursive_pf_solve",
    "CheckResult", "SuiteResult", "check_annihilation", "golden_corpus",
    "obstruction_constant", "run_suite", "tilde_solutions",
    "__version__",
]
