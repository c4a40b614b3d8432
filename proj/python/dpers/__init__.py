"""Temporal reasoning with decreasing persistence of certainty.

Degrees and time points are returned as ``fractions.Fraction``; time points
and degrees may be passed as ints, Fractions or strings such as ``"1/2"``.
"""

from ._dpers import (
    ClosedHistoryViolation,
    DomainError,
    EmptyItpError,
    Error,
    Formula,
    ParseError,
    SchemaSet,
    SemanticError,
    TimedKB,
    VocabularyError,
    apply_at,
    entails,
    inconsistency,
    necessity,
    query,
    timeline,
    timeline_csv,
)

__all__ = [
    "ClosedHistoryViolation",
    "DomainError",
    "EmptyItpError",
    "Error",
    "Formula",
    "ParseError",
    "SchemaSet",
    "SemanticError",
    "TimedKB",
    "VocabularyError",
    "apply_at",
    "entails",
    "inconsistency",
    "necessity",
    "query",
    "timeline",
    "timeline_csv",
]
