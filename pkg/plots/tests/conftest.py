import pathlib

import pytest

from hcplots import ResultRow

FIXTURE = pathlib.Path(__file__).resolve().parent / "fixtures" / \
    "minibench_results.csv"


@pytest.fixture
def fixture_csv():
    return FIXTURE


def make_row(**kw):
    """ResultRow with filler defaults, overridable per test."""
    base = dict(graph="g.txt", target=1, in_degree=8, budget=4,
                algorithm="topb", objective=10.0, size=4.0, time_ms=1.0,
                seed=0)
    base.update(kw)
    return ResultRow(**base)
