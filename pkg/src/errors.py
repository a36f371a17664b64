"""
Weylham - Exception Hierarchy
Purpose: Typed failures for root-system construction, graph search and ingestion
Version: 1.0.0
Date: 2026-10-19

Three families map onto the CLI exit codes:
- InputError (exit 2): malformed or out-of-range input
- SearchError (exit 1): a search or generation ran out of budget or found nothing
- InvariantViolation (exit 3): the data contradicts a structural invariant
"""

from typing import Any, Optional


class WeylhamError(Exception):
    """Base class for all weylham errors."""

    exit_code: int = 3

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


# ============================================================================
# INPUT ERRORS (exit 2)
# ============================================================================

class InputError(WeylhamError):
    exit_code = 2


class ParseError(InputError):
    pass


class RankMismatch(InputError):
    pass


class DuplicateRoot(InputError):
    pass


class SpecError(InputError):
    pass


class RangeError(InputError):
    pass


class UnknownGenerator(InputError):
    pass


class NotInverseClosed(InputError):
    pass


class IdentityGenerator(InputError):
    pass


class NonSymmetric(InputError):
    pass


class DegenerateOrder(InputError):
    pass


class RankError(InputError):
    pass


class NotReducible(InputError):
    pass


class ComponentMismatch(InputError):
    pass


class NonGenericParameter(InputError):
    pass


class DatasetNotFound(InputError):
    pass


# ============================================================================
# SEARCH ERRORS (exit 1)
# ============================================================================

class SearchError(WeylhamError):
    exit_code = 1


class BudgetExceeded(SearchError):
    pass


class NoCycleFound(SearchError):
    pass


class CapExceeded(SearchError):
    pass


class NotIGood(SearchError):
    pass


# ============================================================================
# INVARIANT VIOLATIONS (exit 3)
# ============================================================================

class InvariantViolation(WeylhamError):
    exit_code = 3


class NotABase(InvariantViolation):
    pass


class Unbounded(InvariantViolation):
    pass


class AxiomViolation(InvariantViolation):
    pass


class MixedSigns(InvariantViolation):
    pass


class BipartiteViolation(InvariantViolation):
    pass


class IncompatiblePartition(InvariantViolation):
    pass


class NonIntegralCoordinate(InvariantViolation):
    pass


class InternalError(InvariantViolation):
    pass


__all__ = [
    "WeylhamError",
    "InputError",
    "ParseError",
    "RankMismatch",
    "DuplicateRoot",
    "SpecError",
    "RangeError",
    "UnknownGenerator",
    "NotInverseClosed",
    "IdentityGenerator",
    "NonSymmetric",
    "DegenerateOrder",
    "RankError",
    "NotReducible",
    "ComponentMismatch",
    "NonGenericParameter",
    "DatasetNotFound",
    "SearchError",
    "BudgetExceeded",
    "NoCycleFound",
    "CapExceeded",
    "NotIGood",
    "InvariantViolation",
    "NotABase",
    "Unbounded",
    "AxiomViolation",
    "MixedSigns",
    "BipartiteViolation",
    "IncompatiblePartition",
    "NonIntegralCoordinate",
    "InternalError",
]
