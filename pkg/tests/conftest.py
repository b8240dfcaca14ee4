"""Shared fixtures"""

import pytest
from loguru import logger

from backend.app.core.logging_config import configure_logging
from backend.app.services.gridmap import load_sample_map, parse_map


@pytest.fixture(autouse=True, scope="session")
def _quiet_logging():
    configure_logging("WARNING")
    yield
    logger.remove()


@pytest.fixture
def line_map():
    """'B.A': goal (0,0), start (0,2), all Flat"""
    return parse_map("B.A")


@pytest.fixture
def blocked_map():
    """'B#A': the only route is blocked"""
    return parse_map("B#A")


@pytest.fixture
def ring_map():
    """3x3 ring around a central obstacle, goal top-left, start bottom-right"""
    return parse_map("B..\n.#.\n..A")


@pytest.fixture
def wall_run_map():
    """Terrains Flat, Flat, Wall, Wall, Flat along a single corridor"""
    return parse_map("A.WWB")


@pytest.fixture
def sample_map():
    return load_sample_map()


@pytest.fixture
def map_file(tmp_path):
    """Write map text to a file and return its path"""
    def _write(text: str, name: str = "mission.map"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path
    return _write
