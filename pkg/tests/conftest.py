"""
Pytest Configuration and Fixtures for weylham
"""

from pathlib import Path
import os

import pytest

from src.core.families import build_classical, parse_family
from src.core.groupoid_graph import build_graph
from src.knowledge.datasets import embedded_datasets, has_ch_data
from src.parsers.parser_factory import parse_roots
from src.state.schemas import ClassicalType
from src.utils.settings import get_settings

R_HAT_1_TEXT = """rank: 3
1
2
3
1 2
1 3
1 2 3
"""

R_HAT_2_TEXT = """rank: 3
1
2
3
1 2
1 3
2 3
1 2 3
"""


@pytest.fixture(autouse=True)
def fresh_settings():
    """Settings are cached; tests that set WEYLHAM_* variables need a fresh read."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture(scope="session")
def r_hat_1():
    """The rank-3 system Nr. 1 (24 bases)."""
    return parse_roots(R_HAT_1_TEXT, name="Nr1")


@pytest.fixture(scope="session")
def r_hat_2():
    """The rank-3 system Nr. 2 (32 bases)."""
    return parse_roots(R_HAT_2_TEXT, name="Nr2")


@pytest.fixture(scope="session")
def graph_1(r_hat_1):
    return build_graph(r_hat_1)


@pytest.fixture(scope="session")
def graph_2(r_hat_2):
    return build_graph(r_hat_2)


@pytest.fixture(scope="session")
def a1():
    return build_classical(ClassicalType.A, 1)


@pytest.fixture(scope="session")
def a2():
    return build_classical(ClassicalType.A, 2)


@pytest.fixture(scope="session")
def datasets():
    return embedded_datasets()


@pytest.fixture
def roots_file(tmp_path):
    """Nr. 2 written to a ch-notation file."""
    path = tmp_path / "nr2.txt"
    path.write_text(R_HAT_2_TEXT)
    return path


def ch_data_available(rank: int, number: int) -> bool:
    """Root data beyond the two embedded systems comes from WEYLHAM_DATA_DIR."""
    data_dir = os.environ.get("WEYLHAM_DATA_DIR")
    if number <= 2 and rank == 3:
        return True
    if not data_dir or not Path(data_dir).is_dir():
        return False
    return has_ch_data(rank, number)


# Systems whose whole groupoid is walked by the property tests
BUILT_SYSTEMS = [
    "a:1", "a:2", "b:2", "g2", "a:3", "b:3", "c:3",
    "phi:3:1", "phi:3:1,2", "psi:3:1", "a:1+a:2", "a:1+a:1+a:1",
    "ch-rank3-nr1", "ch-rank3-nr2",
]


def system_by_name(name: str):
    """An embedded ch-notation system or a family specifier."""
    if name.startswith("ch-"):
        return parse_roots(embedded_datasets()[name].payload, name=name)
    return parse_family(name)
