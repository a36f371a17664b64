"""
Weylham - S.2: Axiom Validation
Purpose: Check the finite Weyl groupoid root system axioms before building anything
Version: 1.0.0
Date: 2026-10-19
"""

from typing import Any, Dict
import logging

from src.core.root_core import validate_fgrs

logger = logging.getLogger(__name__)


def validate_system(state: Dict[str, Any]) -> Dict[str, Any]:
    """
    S.2: Run validate_fgrs and record failures in the state's error list.

    Returns:
        Updated state with 'validation'
    """
    report = validate_fgrs(state["system"])
    errors = list(state.get("errors", []))
    warnings = list(state.get("warnings", [])) + report.warnings
    if not report.passed:
        errors.extend(report.errors)
        logger.error(f"S.2: Validation failed: {report.errors}")
    else:
        logger.info(f"S.2: Axioms hold, {report.base_count} bases")
    return {**state, "validation": report, "errors": errors, "warnings": warnings}


__all__ = ["validate_system"]
