"""
Weylham - S.1: Ingestion
Purpose: Turn a root-data reference, family specifier or super datum into a RootSystem
Version: 1.0.0
Date: 2026-10-19

This node performs:
- Dataset resolution (file path, embedded id, WEYLHAM_DATA_DIR)
- Root parsing (ch-notation or JSON)
- Family construction from the family grammar
- Super data generation
- Cycle word loading when a word is supplied
"""

from typing import Any, Dict
import logging

from src.core.families import generate_super_fgrs, parse_family
from src.knowledge.datasets import resolve
from src.parsers.parser_factory import parse_cycle, parse_roots, parse_super_datum
from src.state.schemas import RootSystem

logger = logging.getLogger(__name__)


def load_system(state: Dict[str, Any]) -> RootSystem:
    """
    Build the root system named by exactly one of roots, family or super.

    Raises:
        ValueError: none or several sources given
    """
    sources = [key for key in ("roots", "family", "super") if state.get(key)]
    if len(sources) != 1:
        raise ValueError(f"exactly one of roots, family or super is required, got {sources or 'none'}")
    key = sources[0]
    reference = state[key]

    if key == "family":
        return parse_family(reference)
    dataset = resolve(reference, kind=key)
    if key == "super":
        return generate_super_fgrs(parse_super_datum(dataset.payload), name=dataset.id)
    return parse_roots(dataset.payload, name=dataset.metadata.get("name") or dataset.id)


def ingest_system(state: Dict[str, Any]) -> Dict[str, Any]:
    """
    S.1: Load the system and, when given, the cycle word.

    Args:
        state: Pipeline state with one of 'roots', 'family', 'super' and an optional 'cycle'

    Returns:
        Updated state with 'system' and optionally 'cycle_word'

    Example:
        >>> ingest_system({"roots": "ch-rank3-nr1"})["system"].rank
        3
    """
    system = load_system(state)
    logger.info(f"S.1: Loaded {system.name or 'system'} of rank {system.rank} with {len(system.roots)} roots")

    result = {**state, "system": system}
    if state.get("cycle"):
        dataset = resolve(state["cycle"], kind="cycle")
        result["cycle_word"] = parse_cycle(dataset.payload)
        logger.info(f"S.1: Loaded cycle word {dataset.id} of length {len(result['cycle_word'])}")
    return result


__all__ = ["load_system", "ingest_system"]
