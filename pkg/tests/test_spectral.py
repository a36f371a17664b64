"""
Weylham - Spectral Tests
Purpose: Adjacency spectra, the exact oracle and the lambda_2 table
Version: 1.0.0
Date: 2026-10-19
"""

import logging
import math

import numpy as np
import pytest

from src.core.families import parse_family
from src.core.groupoid_graph import build_graph
from src.core.spectral import (
    adjacency,
    characteristic_polynomial,
    compare_lambda2,
    eigenvalues,
    exact_spectrum,
    is_bipartite_ramanujan,
    lambda2_table,
    spectrum_of_graph,
    spectrum_report,
)
from src.errors import DegenerateOrder, NonSymmetric, RangeError
from src.state.schemas import Spectrum


class TestAdjacency:
    """Tests for adjacency and eigenvalues"""

    def test_a1(self, a1):
        assert adjacency(build_graph(a1)).tolist() == [[0.0, 1.0], [1.0, 0.0]]

    def test_row_sums(self, graph_2):
        m = adjacency(graph_2)
        assert m.shape == (32, 32)
        assert set(m.sum(axis=1)) == {3.0}
        assert np.array_equal(m, m.T)

    def test_non_symmetric(self):
        with pytest.raises(NonSymmetric):
            eigenvalues([[0, 1], [0, 0]])

    def test_non_square(self):
        with pytest.raises(NonSymmetric):
            eigenvalues([[0, 1, 0], [1, 0, 1]])

    def test_empty(self):
        assert eigenvalues(np.zeros((0, 0))).n == 0


class TestGraphSpectra:
    """Tests for spectrum_of_graph on known graphs"""

    def test_six_cycle(self, a2):
        s = spectrum_of_graph(build_graph(a2))
        assert s.values == pytest.approx((2, 1, 1, -1, -1, -2), abs=1e-9)
        assert s.degree == 2

    def test_four_cycle(self):
        s = spectrum_of_graph(build_graph(parse_family("a:1+a:1")))
        assert s.values == pytest.approx((2, 0, 0, -2), abs=1e-9)

    def test_nr1(self, graph_1):
        s = spectrum_of_graph(graph_1)
        assert s.values[0] == pytest.approx(3.0)
        assert s.lambda2 == pytest.approx(1 + math.sqrt(2), abs=1e-7)
        assert compare_lambda2(1, s.lambda2)

    def test_nr2(self, graph_2):
        s = spectrum_of_graph(graph_2)
        assert s.lambda2 == pytest.approx((1 + math.sqrt(17)) / 2, abs=1e-7)
        assert compare_lambda2(2, s.lambda2)

    def test_bipartite_symmetry(self, graph_2):
        values = spectrum_of_graph(graph_2).values
        assert values == pytest.approx(tuple(-x for x in reversed(values)), abs=1e-9)


class TestRamanujan:
    """Tests for the bipartite Ramanujan bound"""

    def test_small_graphs_are_ramanujan(self, graph_1, graph_2):
        assert is_bipartite_ramanujan(spectrum_of_graph(graph_1))
        assert is_bipartite_ramanujan(spectrum_of_graph(graph_2))

    def test_above_bound(self):
        s = Spectrum(values=(3.0, 2.8565004, 0.0, -2.8565004, -3.0), degree=3)
        assert not is_bipartite_ramanujan(s)

    def test_at_bound(self):
        bound = 2 * math.sqrt(2)
        s = Spectrum(values=(3.0, bound, -bound, -3.0), degree=3)
        assert is_bipartite_ramanujan(s)

    def test_degenerate(self, a1):
        with pytest.raises(DegenerateOrder):
            is_bipartite_ramanujan(spectrum_of_graph(build_graph(a1)))


class TestExactOracle:
    """Tests for the sympy characteristic polynomial"""

    def test_six_cycle_polynomial(self, a2):
        poly = characteristic_polynomial(adjacency(build_graph(a2)))
        assert poly.all_coeffs() == [1, 0, -6, 0, 9, 0, -4]

    def test_exact_matches_numeric(self, a2):
        m = adjacency(build_graph(a2))
        assert exact_spectrum(m) == pytest.approx(eigenvalues(m).values, abs=1e-9)

    @pytest.mark.slow
    def test_exact_nr1(self, graph_1):
        m = adjacency(graph_1)
        assert exact_spectrum(m) == pytest.approx(spectrum_of_graph(graph_1).values, abs=1e-8)


class TestLambda2Table:
    """Tests for the embedded lambda_2 table"""

    def test_size(self):
        table = lambda2_table()
        assert sorted(table) == list(range(1, 56))
        assert table[9] == pytest.approx(2.8565004)

    def test_unknown_number(self):
        with pytest.raises(RangeError):
            compare_lambda2(56, 2.5)

    def test_mismatch_logs(self, caplog):
        with caplog.at_level(logging.WARNING, logger="src.core.spectral"):
            assert not compare_lambda2(1, 2.5)
        assert "Nr. 1" in caplog.text

    def test_report(self, graph_2):
        report = spectrum_report(spectrum_of_graph(graph_2), top=2)
        assert report == {"n": 32, "d": 3, "lambda": [3.0, 2.5615528], "ramanujan": True}

    def test_report_without_flag(self, a1):
        report = spectrum_report(spectrum_of_graph(build_graph(a1)))
        assert report["ramanujan"] is None
        assert report["lambda"] == [1.0, -1.0]
