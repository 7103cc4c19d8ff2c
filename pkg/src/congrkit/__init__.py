"""Exact congruence toolkit for truncated central binomial sums.

Modular arithmetic, Lucas sequences, binary quadratic forms, cubic and
quartic residue symbols, and a registry of checkable congruence statements
with a CLI front end.
"""

from .binomsum import (
    BinomSumSpec,
    binom_mod,
    binom_mod_general,
    binom_shift_lemma_check,
    mod_tables,
    sum_binom_pow,
)
from .combsum import (
    TSumKey,
    delta5,
    delta5_claimed,
    delta5_findings,
    t0_closed,
    t5_row_claim,
    t10_lucas_identity,
    t12_v_identities,
    t_recurrences_check,
    t_sum_exact,
)
from .cyclotomic import (
    EisensteinInt,
    GaussianInt,
    UnityRoot3,
    UnityRoot4,
    cubic_character,
    cubic_symbol,
    k_factor,
    quartic_character,
    quartic_symbol,
)
from .errors import CongruenceError
from .lucas import (
    LucasPair,
    LucasParams,
    fibonacci_lucas_mod,
    half_index_shift,
    lucas_uv_exact,
    lucas_uv_mod,
    uv_mod,
)
from .modarith import (
    PrimeModulus,
    Rational,
    Residue,
    frac_mod,
    inv_mod,
    is_prime,
    jacobi,
    mod_inv,
    mod_pow,
    rational_residue,
    sieve_primes,
    sqrt_mod,
)
from .qform import (
    ClassMatch,
    QuadForm,
    Representation,
    class_group,
    classify_by_class,
    reduce,
    represent,
    two_squares,
)
from .registry import (
    Report,
    Verdict,
    check_statement,
    cubic_roots,
    delta_p,
    registered_ids,
    reports_json,
    verify_many,
    verify_range,
)

__version__ = "0.1.0"

__all__ = [
    "BinomSumSpec",
    "ClassMatch",
    "CongruenceError",
    "EisensteinInt",
    "GaussianInt",
    "LucasPair",
    "LucasParams",
    "PrimeModulus",
    "QuadForm",
    "Rational",
    "Report",
    "Representation",
    "Residue",
    "TSumKey",
    "UnityRoot3",
    "UnityRoot4",
    "Verdict",
    "binom_mod",
    "binom_mod_general",
    "binom_shift_lemma_check",
    "check_statement",
    "class_group",
    "classify_by_class",
    "cubic_character",
    "cubic_roots",
    "cubic_symbol",
    "delta5",
    "delta5_claimed",
    "delta5_findings",
    "delta_p",
    "fibonacci_lucas_mod",
    "frac_mod",
    "half_index_shift",
    "inv_mod",
    "is_prime",
    "jacobi",
    "k_factor",
    "lucas_uv_exact",
    "lucas_uv_mod",
    "mod_inv",
    "mod_pow",
    "mod_tables",
    "quartic_character",
    "quartic_symbol",
    "rational_residue",
    "reduce",
    "registered_ids",
    "reports_json",
    "represent",
    "sieve_primes",
    "sqrt_mod",
    "sum_binom_pow",
    "t0_closed",
    "t10_lucas_identity",
    "t12_v_identities",
    "t5_row_claim",
    "t_recurrences_check",
    "t_sum_exact",
    "two_squares",
    "uv_mod",
    "verify_many",
    "verify_range",
]
