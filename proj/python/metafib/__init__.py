"""Meta-Fibonacci recurrence evaluation and linear recurrent subsequence embedding."""

from ._metafib import (
    CaseTrace,
    Construction,
    Death,
    EvalResult,
    GrowthCertificate,
    GrowthResult,
    GrowthViolation,
    HValidity,
    InitialCondition,
    LinearRecurrence,
    MetaFibRecurrence,
    Mismatch,
    OracleBudgetError,
    RotatedRecurrence,
    SearchLimitError,
    Slot,
    SlotClass,
    SweepReport,
    TheoremReport,
    TheoremVerifier,
    TraceTerm,
    build,
    build_meta_recurrence,
    check_subsequence,
    check_theorem,
    construction_from_json,
    eval_oracle,
    eval_prefix,
    extract_subsequence,
    find_h,
    growth_certificate,
    is_valid_h,
    minimal_certified_m0,
    q_slot,
    sweep_cases,
    trace_case,
)

__all__ = [
    "CaseTrace",
    "Construction",
    "Death",
    "EvalResult",
    "GrowthCertificate",
    "GrowthResult",
    "GrowthViolation",
    "HValidity",
    "InitialCondition",
    "LinearRecurrence",
    "MetaFibRecurrence",
    "Mismatch",
    "OracleBudgetError",
    "RotatedRecurrence",
    "SearchLimitError",
    "Slot",
    "SlotClass",
    "SweepReport",
    "TheoremReport",
    "TheoremVerifier",
    "TraceTerm",
    "build",
    "build_meta_recurrence",
    "check_subsequence",
    "check_theorem",
    "construction_from_json",
    "eval_oracle",
    "eval_prefix",
    "extract_subsequence",
    "find_h",
    "growth_certificate",
    "is_valid_h",
    "minimal_certified_m0",
    "q_slot",
    "sweep_cases",
    "trace_case",
]
