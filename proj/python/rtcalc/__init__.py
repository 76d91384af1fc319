"""Renormalized invariants of colored framed links over the unrolled quantum group of sl2."""

from ._core import (
    DomainError,
    NumericalError,
    catalog_names,
    decompose,
    eta_ratio,
    evaluate,
    evaluate_json,
    mod_qdim,
    qbracket,
    qdim,
    qint,
    qpow,
    s_prime,
    s_prime_engine,
    serialize_catalog,
    twist_scalar,
    verify,
)

__all__ = [
    "DomainError",
    "NumericalError",
    "catalog_names",
    "decompose",
    "eta_ratio",
    "evaluate",
    "evaluate_json",
    "mod_qdim",
    "qbracket",
    "qdim",
    "qint",
    "qpow",
    "s_prime",
    "s_prime_engine",
    "serialize_catalog",
    "twist_scalar",
    "verify",
]
