from __future__ import annotations

import pytest

from selfsim_app.core.catalog import fixed_loops, one_loop, plain, rotating_ring, swapped_loops, two_cycle, two_loops
from selfsim_app.core.model import SelfSimilarGraph


@pytest.fixture(autouse=True)
def _isolated_config(tmp_path, monkeypatch):
    monkeypatch.setenv("SELFSIM_CONFIG_DIR", str(tmp_path / "config"))


@pytest.fixture
def ring2() -> SelfSimilarGraph:
    return rotating_ring(2)


@pytest.fixture
def ring3() -> SelfSimilarGraph:
    return rotating_ring(3)


@pytest.fixture
def one_loop_ssg() -> SelfSimilarGraph:
    return plain(one_loop(), "one-loop")


@pytest.fixture
def two_loops_ssg() -> SelfSimilarGraph:
    return plain(two_loops(), "two-loops")


@pytest.fixture
def two_cycle_ssg() -> SelfSimilarGraph:
    return plain(two_cycle(), "two-cycle")


@pytest.fixture
def fixed_two_loops() -> SelfSimilarGraph:
    return fixed_loops(2)


@pytest.fixture
def swapped() -> SelfSimilarGraph:
    return swapped_loops()
