"""
Weylham - S.5: Spectrum
Purpose: Adjacency spectrum, lambda_2 and the bipartite Ramanujan test
Version: 1.0.0
Date: 2026-10-19
"""

from typing import Any, Dict
import logging

from src.core.spectral import spectrum_of_graph, spectrum_report

logger = logging.getLogger(__name__)


def compute_spectrum(state: Dict[str, Any]) -> Dict[str, Any]:
    """
    S.5: Eigenvalues of the graph built at S.3.

    Returns:
        Updated state with 'spectrum' and 'spectrum_report' (top eigenvalues per 'top')
    """
    spectrum = spectrum_of_graph(state["graph"])
    report = spectrum_report(spectrum, state.get("top"))
    if spectrum.n > 1:
        logger.info(f"S.5: lambda_2 = {spectrum.lambda2:.7f}, ramanujan = {report['ramanujan']}")
    return {**state, "spectrum": spectrum, "spectrum_report": report}


__all__ = ["compute_spectrum"]
