"""
Pytest configuration and fixtures.
"""
from pathlib import Path
from typing import Callable, List, Tuple

import pytest

from src.core.config import settings
from src.core.graph import (
    ColoredGraph,
    EdgeColoring,
    PartitionedGraph,
    covers,
    find_conflict,
)
from src.interface.cli.main import main

FIXTURES_DIR = settings.fixtures_dir


def assert_proper(g: PartitionedGraph, c: EdgeColoring) -> None:
    """Every edge colored exactly once, no two adjacent edges alike, colors within [1, t]."""
    assert covers(g, c), f"coloring does not cover {g.describe()}"
    assert find_conflict(g, c) is None, find_conflict(g, c)
    assert all(1 <= color <= c.t for color in c.colors.values())


def assert_interval(colored: ColoredGraph) -> None:
    assert_proper(colored.graph, colored.coloring)
    assert colored.is_interval, {
        v: colored.spectrum(v) for v in colored.graph.vertices if not colored.spectrum(v).is_interval
    }


@pytest.fixture
def fixtures_dir() -> Path:
    """Directory holding the golden figure documents."""
    return FIXTURES_DIR


@pytest.fixture
def figure_text() -> Callable[[int], str]:
    """Read a golden figure document by number."""
    def read(number: int) -> str:
        return (FIXTURES_DIR / f"fig{number}.json").read_text(encoding="utf-8")
    return read


@pytest.fixture
def run_cli(capsys: pytest.CaptureFixture[str]) -> Callable[..., Tuple[int, str, str]]:
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""
    def run(*argv: str) -> Tuple[int, str, str]:
        args: List[str] = list(argv)
        code = main(args)
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return run


@pytest.fixture
def k33() -> PartitionedGraph:
    """K_{3,3}."""
    return PartitionedGraph((3, 3))


@pytest.fixture
def triangle() -> PartitionedGraph:
    """K_3 as K_{1,1,1}."""
    return PartitionedGraph((1, 1, 1))


def size_tuples(max_order: int, min_order: int = 2) -> List[Tuple[int, ...]]:
    """Part sizes, largest first, of every complete multipartite graph with min_order..max_order vertices."""
    def split(total: int, cap: int):
        if total == 0:
            yield ()
            return
        for first in range(min(cap, total), 0, -1):
            for rest in split(total - first, first):
                yield (first,) + rest

    return [
        sizes
        for order in range(min_order, max_order + 1)
        for sizes in split(order, order)
        if len(sizes) >= 2
    ]


def marked_slow_from(order: int, cases: List[Tuple[int, ...]]) -> list:
    """Wrap size tuples as params, marking those with at least `order` vertices slow."""
    return [
        pytest.param(sizes, marks=pytest.mark.slow) if sum(sizes) >= order else sizes
        for sizes in cases
    ]
