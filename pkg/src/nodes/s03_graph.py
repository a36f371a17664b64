"""
Weylham - S.3: Cayley Graph
Purpose: Build the Weyl groupoid Cayley graph and its smallest quotient
Version: 1.0.0
Date: 2026-10-19
"""

from typing import Any, Dict
import logging

from src.core.groupoid_graph import build_graph, extract_cartan_scheme, quotient_classes
from src.state.schemas import QuotientMode

logger = logging.getLogger(__name__)


def build_system_graph(state: Dict[str, Any]) -> Dict[str, Any]:
    """
    S.3: Build the graph, the smallest-equivalence classes and the Cartan scheme.

    Returns:
        Updated state with 'graph', 'quotient' and 'cartan_scheme'
    """
    system = state["system"]
    graph = build_graph(system)
    classes = quotient_classes(system, graph, QuotientMode.SMALLEST)
    scheme = extract_cartan_scheme(system, graph)
    logger.info(f"S.3: {graph.order} vertices, {len(classes)} classes, {len(scheme.objects)} objects")
    return {**state, "graph": graph, "quotient": classes, "cartan_scheme": scheme}


__all__ = ["build_system_graph"]
