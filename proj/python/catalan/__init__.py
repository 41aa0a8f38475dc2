"""Exact integer toolkit for the equation x^p - y^q = 1."""

from ._core import (
    Error,
    cassels_bound_check,
    certify,
    classify,
    integer_nth_root,
    lemma2_transfer,
    lte_valuation,
    pell_fundamental,
    search,
    verify_certificate,
)

__all__ = [
    "Error",
    "cassels_bound_check",
    "certify",
    "classify",
    "integer_nth_root",
    "lemma2_transfer",
    "lte_valuation",
    "pell_fundamental",
    "search",
    "verify_certificate",
]
