from fractions import Fraction

import sys

import pytest
from hypothesis import strategies as st

from linedraw.core import Drawing, SimilarityMatrix, WeightedGraph
from linedraw.corpus import a5_matrix


@pytest.fixture
def a5():
    return a5_matrix()


@pytest.fixture
def triangle():
    return WeightedGraph.from_labeled_edges([("a", "b", 3), ("b", "c", 2), ("a", "c", 1)])


@st.composite
def matrices(draw, min_n=1, max_n=6, max_weight=4, allow_missing=True):
    n = draw(st.integers(min_n, max_n))
    values = st.integers(1, max_weight).map(Fraction)
    if allow_missing:
        values = st.one_of(st.none(), values)
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = draw(values)
    return SimilarityMatrix.from_rows(rows)


@st.composite
def permutations_of(draw, n):
    return tuple(draw(st.permutations(range(n))))


@st.composite
def drawings(draw, n):
    xs = draw(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=6),
                       min_size=n, max_size=n, unique=True))
    return Drawing.from_sequence(xs)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "SUMMARY", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
