"""
Weylham - S.4: Hamiltonian Cycle
Purpose: Verify a supplied cycle word or search for one
Version: 1.0.0
Date: 2026-10-19

This node performs:
- verify_supplied_cycle: walk the word loaded at S.1
- search_cycle: run the auto dispatcher under the configured budget
"""

from typing import Any, Dict
import logging

from src.core.hamilton import find, verify_cycle
from src.state.schemas import SearchConfig, SearchMethod
from src.utils.settings import get_settings

logger = logging.getLogger(__name__)


def search_config(state: Dict[str, Any]) -> SearchConfig:
    """SearchConfig from state overrides on top of the settings."""
    settings = get_settings()

    def pick(key: str, default: Any) -> Any:
        value = state.get(key)
        return default if value is None else value

    return SearchConfig(
        method=SearchMethod(pick("method", SearchMethod.AUTO)),
        time_budget=pick("time_budget", settings.time_budget),
        deterministic=pick("deterministic", settings.deterministic),
        seed=pick("seed", settings.seed),
        threads=pick("threads", settings.threads),
    )


def verify_supplied_cycle(state: Dict[str, Any]) -> Dict[str, Any]:
    """
    S.4 (verify): Check the supplied word against the graph.

    Returns:
        Updated state with 'cycle_report'; a rejection is added to 'errors'
    """
    report = verify_cycle(state["graph"], state["cycle_word"])
    errors = list(state.get("errors", []))
    if report.accepted:
        logger.info(f"S.4: Cycle word accepted ({len(state['cycle_word'])} letters)")
    else:
        logger.warning(f"S.4: Cycle word rejected at step {report.failed_step}: {report.message}")
        errors.append(f"cycle word rejected: {report.message}")
    return {**state, "cycle_report": report, "errors": errors}


def search_cycle(state: Dict[str, Any]) -> Dict[str, Any]:
    """
    S.4 (search): Find a Hamiltonian cycle.

    Raises:
        BudgetExceeded / NoCycleFound: as hamilton.find
    """
    cfg = search_config(state)
    word = find(state["system"], state["graph"], cfg)
    report = verify_cycle(state["graph"], word)
    logger.info(f"S.4: Found a cycle of length {len(word)}")
    return {**state, "cycle_word": word, "cycle_report": report}


__all__ = ["search_config", "verify_supplied_cycle", "search_cycle"]
