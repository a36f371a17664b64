"""
Weylham - Pipeline Nodes Module
Version: 1.0.0
"""

from .s01_ingestion import ingest_system, load_system
from .s02_validation import validate_system
from .s03_graph import build_system_graph
from .s04_cycle import search_config, search_cycle, verify_supplied_cycle
from .s05_spectrum import compute_spectrum
from .s06_report import generate_report

__all__ = [
    "load_system",
    "ingest_system",
    "validate_system",
    "build_system_graph",
    "search_config",
    "verify_supplied_cycle",
    "search_cycle",
    "compute_spectrum",
    "generate_report",
]
