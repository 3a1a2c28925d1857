"""Thue-Morse sequence toolkit.

Thin package over the compiled extension: sequences and morphisms, repetition
scans, shift class sets, exact truncated-series identities, signed infinite
products, and the +/-1 Dirichlet series with its zero scan.
"""

from ._tmtools import (
    ClassSets,
    DigitStats,
    GridSample,
    IdentityCheck,
    MemberShortfall,
    Morphism,
    ProductResult,
    RepetitionWitness,
    TheoremReport,
    ZeroScanResult,
    b_members,
    beta_seq,
    c_members,
    check_proof_identities,
    class_sets,
    dirichlet_eval,
    dirichlet_zero_scan,
    find_repetition,
    flajolet_martin_phi,
    gamma_seq,
    is_evil,
    lacunary_coeffs,
    nu2,
    period_doubling,
    period_doubling_morphism,
    prime_digit_stats,
    product_eval,
    prouhet_partition,
    smallest_period,
    ternary_word,
    thue_morse_morphism,
    tm_bit,
    tm_coeffs,
    tm_sign,
    tm_signs,
    tm_word,
    verify_halving,
    verify_star,
    verify_theorem,
    w_coeffs,
    xa_sa_coeffs,
)

__version__ = "1.0.0"

__all__ = [
    "ClassSets",
    "DigitStats",
    "GridSample",
    "IdentityCheck",
    "MemberShortfall",
    "Morphism",
    "ProductResult",
    "RepetitionWitness",
    "TheoremReport",
    "ZeroScanResult",
    "b_members",
    "beta_seq",
    "c_members",
    "check_proof_identities",
    "class_sets",
    "dirichlet_eval",
    "dirichlet_zero_scan",
    "find_repetition",
    "flajolet_martin_phi",
    "gamma_seq",
    "is_evil",
    "lacunary_coeffs",
    "nu2",
    "period_doubling",
    "period_doubling_morphism",
    "prime_digit_stats",
    "product_eval",
    "prouhet_partition",
    "smallest_period",
    "ternary_word",
    "thue_morse_morphism",
    "tm_bit",
    "tm_coeffs",
    "tm_sign",
    "tm_signs",
    "tm_word",
    "verify_halving",
    "verify_star",
    "verify_theorem",
    "w_coeffs",
    "xa_sa_coeffs",
]
