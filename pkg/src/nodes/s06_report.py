"""
Weylham - S.6: Report
Purpose: Collapse the pipeline state into a JSON-serializable summary
Version: 1.0.0
Date: 2026-10-19
"""

from datetime import datetime, timezone
from typing import Any, Dict
import logging

logger = logging.getLogger(__name__)


def generate_report(state: Dict[str, Any]) -> Dict[str, Any]:
    """
    S.6: Build the run summary.

    The summary has a 'passed' flag, the system shape, the validation
    outcome and, when the later stages ran, graph, cycle and spectrum
    sections.

    Returns:
        Updated state with 'summary' and current_stage COMPLETE
    """
    system = state.get("system")
    validation = state.get("validation")
    summary: Dict[str, Any] = {
        "system": {
            "name": system.name if system else None,
            "rank": system.rank if system else None,
            "roots": len(system.roots) if system else None,
        },
        "validation": validation.model_dump() if validation else None,
    }

    graph = state.get("graph")
    if graph is not None:
        summary["graph"] = {
            "vertices": graph.order,
            "edges": len(graph.edges),
            "quotient_classes": len(state.get("quotient", [])),
        }
    if "cycle_report" in state:
        word = state.get("cycle_word")
        summary["cycle"] = {
            "accepted": state["cycle_report"].accepted,
            "length": len(word) if word is not None else 0,
            "word": list(word.word) if word is not None else [],
            "message": state["cycle_report"].message,
        }
    if "spectrum_report" in state:
        summary["spectrum"] = state["spectrum_report"]

    errors = list(state.get("errors", []))
    summary["errors"] = errors
    summary["warnings"] = list(state.get("warnings", []))
    summary["passed"] = not errors

    started = state.get("pipeline_started_at")
    elapsed = (datetime.now(timezone.utc) - started).total_seconds() if isinstance(started, datetime) else 0.0
    logger.info(
        f"S.6: Report {'PASSED' if summary['passed'] else 'FAILED'} "
        f"with {len(errors)} errors after {elapsed:.2f}s"
    )
    return {**state, "summary": summary, "current_stage": "COMPLETE"}


__all__ = ["generate_report"]
