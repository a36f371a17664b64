"""
Weylham - LCEL Pipeline
Purpose: Ingest, validate, build, cycle, spectrum and report as one runnable
Version: 1.0.0
Date: 2026-10-19

Stages:
- S.1: Ingestion (roots file, embedded id, family or super datum)
- S.2: Axiom validation
- S.3: Cayley graph, smallest quotient and Cartan scheme
- S.4: Cycle verification when a word is supplied, otherwise search
- S.5: Spectrum
- S.6: Report

A failed validation skips S.3-S.5 and goes straight to the report.
"""

from datetime import datetime, timezone
from typing import Any, Callable, Dict
import logging

from langchain_core.runnables import Runnable, RunnableBranch, RunnableLambda

from src.nodes.s01_ingestion import ingest_system
from src.nodes.s02_validation import validate_system
from src.nodes.s03_graph import build_system_graph
from src.nodes.s04_cycle import search_cycle, verify_supplied_cycle
from src.nodes.s05_spectrum import compute_spectrum
from src.nodes.s06_report import generate_report

logger = logging.getLogger(__name__)

StageFunc = Callable[[Dict[str, Any]], Dict[str, Any]]


# ============================================================================
# PIPELINE STATE INITIALIZATION
# ============================================================================

def initialize_pipeline_state(input_data: Dict[str, Any]) -> Dict[str, Any]:
    return {
        **input_data,
        "pipeline_started_at": datetime.now(timezone.utc),
        "current_stage": "S.1",
        "errors": [],
        "warnings": [],
    }


# ============================================================================
# STAGE TRACKING WRAPPERS
# ============================================================================

def wrap_with_stage_tracking(func: StageFunc, stage_name: str) -> StageFunc:
    """
    Wrap a stage so it logs its start and end and records current_stage.

    Args:
        func: Stage function taking and returning the state dict
        stage_name: Stage name (e.g. "S.1")
    """
    def wrapped(state: Dict[str, Any]) -> Dict[str, Any]:
        logger.info(f"=== Stage {stage_name} Starting ===")
        result = func({**state, "current_stage": stage_name})
        logger.info(f"=== Stage {stage_name} Complete ===")
        return result

    return wrapped


def _stage(func: StageFunc, stage_name: str) -> Runnable:
    return RunnableLambda(wrap_with_stage_tracking(func, stage_name))


def _validation_failed(state: Dict[str, Any]) -> bool:
    report = state.get("validation")
    return report is None or not report.passed


# ============================================================================
# MAIN LCEL PIPELINE
# ============================================================================

def create_weylham_pipeline() -> Runnable:
    """
    Compose the six stages.

    Returns:
        LCEL Runnable taking the input dict (roots/family/super, optional
        cycle, search options, top) and returning the final state
    """
    cycle_stage = RunnableBranch(
        (lambda x: x.get("cycle_word") is not None, _stage(verify_supplied_cycle, "S.4-verify")),
        _stage(search_cycle, "S.4-search"),
    )
    graph_stages = (
        _stage(build_system_graph, "S.3")
        | cycle_stage
        | _stage(compute_spectrum, "S.5")
    )
    pipeline = (
        RunnableLambda(initialize_pipeline_state)
        | _stage(ingest_system, "S.1")
        | _stage(validate_system, "S.2")
        | RunnableBranch(
            (_validation_failed, RunnableLambda(lambda x: x)),
            graph_stages,
        )
        | _stage(generate_report, "S.6")
    )
    return pipeline


# ============================================================================
# PIPELINE EXECUTION
# ============================================================================

def run_pipeline(input_data: Dict[str, Any]) -> Dict[str, Any]:
    """
    Run the pipeline and return the final state.

    Example:
        >>> run_pipeline({"roots": "ch-rank3-nr1"})["summary"]["graph"]["vertices"]
        24
    """
    logger.info("=" * 80)
    logger.info(f"Starting weylham pipeline: {input_data}")
    logger.info("=" * 80)
    try:
        result = create_weylham_pipeline().invoke(input_data)
    except Exception as e:
        logger.error(f"Pipeline execution error: {e}", exc_info=True)
        raise
    logger.info(f"Pipeline complete: passed = {result['summary']['passed']}")
    return result


__all__ = [
    "initialize_pipeline_state",
    "wrap_with_stage_tracking",
    "create_weylham_pipeline",
    "run_pipeline",
]
