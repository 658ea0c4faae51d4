"""Exact computations with polynomial endomorphisms of Cuntz algebras."""

import json

from ._cuntzlab import (
    BudgetExceeded,
    ConvergenceError,
    DomainError,
    Element,
    Endomorphism,
    ParseError,
    block_map,
    join_counts,
    lemma1_norms,
    oracle_equivalence,
    oracle_map,
    verify_suites,
)
from . import _cuntzlab

__all__ = [
    "BudgetExceeded",
    "ConvergenceError",
    "DomainError",
    "Element",
    "Endomorphism",
    "ParseError",
    "block_map",
    "entropy",
    "join_counts",
    "lemma1_norms",
    "oracle_equivalence",
    "oracle_map",
    "table1",
    "verify",
    "verify_suites",
]


def entropy(e, masa="standard", p_max=4, n_max=16, budget=1 << 22):
    """Entropy summary and per-p reports as a dict."""
    return json.loads(_cuntzlab.entropy_json(e, masa, p_max, n_max, budget))


def verify(suite, seed=20240607, depth=0):
    return json.loads(_cuntzlab.verify_json(suite, seed, depth))


def table1(p_max=4, n_max=16):
    return json.loads(_cuntzlab.table1_json(p_max, n_max))
