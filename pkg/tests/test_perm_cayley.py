"""
Weylham - Permutation Cayley Graph Tests
Purpose: Permutations, Alt(n) graphs, relation checks and the Alt(4) listing
Version: 1.0.0
Date: 2026-10-19
"""

import logging

import pytest

from src.core.hamilton import find_on_graph, lift_search, verify_cycle
from src.core.perm_cayley import (
    Permutation,
    alt_generators,
    build_perm_graph,
    commuting_relations_check,
    involution_relations_check,
    reconcile_hamiltonian_map,
    theorem_one_generators,
    verify_perm_cycle,
)
from src.core.spectral import spectrum_of_graph
from src.errors import (
    CapExceeded,
    IdentityGenerator,
    NotInverseClosed,
    ParseError,
    RangeError,
    UnknownGenerator,
)
from src.knowledge.datasets import alt4_listing
from src.parsers.parser_factory import parse_alt_word


@pytest.fixture(scope="module")
def alt4():
    return build_perm_graph(alt_generators(4))


@pytest.fixture(scope="module")
def alt5():
    return build_perm_graph(alt_generators(5))


def alt_word(datasets, n):
    return parse_alt_word(datasets[f"alt{n}-word"].payload)


class TestPermutation:
    """Tests for Permutation arithmetic and parsing"""

    def test_compact_and_spaced(self):
        assert Permutation.from_cycles("(123)", 4) == Permutation.from_cycles("(1 2 3)", 4)

    def test_right_to_left(self):
        p = Permutation.from_cycles("(1 2)", 3)
        q = Permutation.from_cycles("(2 3)", 3)
        assert p * q == Permutation.from_cycles("(1 2 3)", 3)
        assert q * p == Permutation.from_cycles("(1 3 2)", 3)

    def test_inverse_and_order(self):
        p = Permutation.from_cycles("(1 2 3)(4 5)", 5)
        assert (p * p.inverse()).is_identity()
        assert p.order() == 6
        assert Permutation.identity(3).order() == 1

    def test_str(self):
        assert str(Permutation.from_cycles("(2 4 3)", 4)) == "(2 4 3)"
        assert str(Permutation.from_cycles("()", 4)) == "()"
        assert Permutation.from_cycles("(1 3)(2 4)", 4).cycles() == [(1, 3), (2, 4)]

    @pytest.mark.parametrize("text", ["(1 2", "(1 5)", "(1 1)", "(a b)", "1 2"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            Permutation.from_cycles(text, 4)

    def test_generators(self):
        assert [str(p) for p in alt_generators(4).values()] == ["(1 2 3)", "(1 3 2)", "(1 2)(3 4)"]
        assert list(alt_generators(6)) == ["x1", "x2", "x3", "x4", "x5"]

    def test_generators_need_three_points(self):
        with pytest.raises(RangeError):
            alt_generators(2)


class TestPermGroupGraph:
    """Tests for build_perm_graph"""

    @pytest.mark.parametrize("n,order", [(4, 12), (5, 60), (6, 360)])
    def test_alt_orders(self, n, order):
        g = build_perm_graph(alt_generators(n))
        assert g.order == order
        assert g.degree == n - 1

    def test_identity_first(self, alt4):
        assert alt4.elements[0].is_identity()
        assert alt4.index_of(Permutation.identity(4)) == 0

    def test_inverse_labels(self, alt4):
        assert alt4.inverse_labels == (2, 1, 3)
        assert len(alt4.edges) == 18

    def test_odd_permutation_not_in_group(self, alt4):
        with pytest.raises(RangeError):
            alt4.index_of(Permutation.from_cycles("(1 2)", 4))

    def test_unknown_label(self, alt4):
        with pytest.raises(UnknownGenerator):
            alt4.label_of("x9")

    def test_identity_generator(self):
        with pytest.raises(IdentityGenerator):
            build_perm_graph({"e": Permutation.identity(4), "t": Permutation.from_cycles("(1 2)", 4)})

    def test_not_inverse_closed(self):
        with pytest.raises(NotInverseClosed):
            build_perm_graph({"x1": Permutation.from_cycles("(1 2 3)", 4)})

    def test_cap(self):
        with pytest.raises(CapExceeded):
            build_perm_graph(alt_generators(6), cap=100)

    def test_spectrum(self, alt4):
        s = spectrum_of_graph(alt4)
        assert s.values[0] == pytest.approx(3.0)
        assert s.degree == 3


class TestAltWords:
    """Tests for the embedded Alt(n) cycle words"""

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_embedded_word(self, datasets, n):
        g = build_perm_graph(alt_generators(n))
        report = verify_perm_cycle(g, alt_word(datasets, n))
        assert report.accepted
        assert report.visited == g.order

    def test_truncated_word(self, datasets, alt5):
        report = verify_perm_cycle(alt5, alt_word(datasets, 5)[:-1])
        assert not report.accepted

    def test_unknown_generator_in_word(self, alt4):
        with pytest.raises(UnknownGenerator):
            verify_perm_cycle(alt4, ["x1", "x7"])

    def test_search_alt4(self, alt4):
        c = find_on_graph(alt4)
        assert len(c) == 12
        assert verify_cycle(alt4, c).accepted

    def test_lift_alt5(self, alt5):
        c = lift_search(alt5, alt5.label_of("x4"))
        assert c is not None
        assert verify_cycle(alt5, c).accepted


class TestRelations:
    """Tests for the commuting and involution relation checks"""

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_commuting(self, n):
        report = commuting_relations_check(alt_generators(n))
        assert report.passed
        assert len(report.relations) == 2 + max(n - 5, 0)

    def test_commuting_needs_five(self):
        with pytest.raises(RangeError):
            commuting_relations_check(alt_generators(4))

    def test_missing_generator(self):
        gens = alt_generators(5)
        del gens["x1"]
        with pytest.raises(UnknownGenerator):
            commuting_relations_check(gens)

    def test_theorem_one_graph(self):
        gens = theorem_one_generators()
        g = build_perm_graph(gens)
        assert g.order == 8
        c = find_on_graph(g)
        assert verify_cycle(g, c).accepted

    def test_involution_failure(self):
        report = involution_relations_check(
            Permutation.from_cycles("(1 2 3)", 4),
            Permutation.from_cycles("(3 4)", 4),
            Permutation.from_cycles("(1 3)(2 4)", 4),
        )
        assert not report.passed
        assert report.errors[0].startswith("a^2 = e fails")


class TestReconcileMap:
    """Tests for reconcile_hamiltonian_map on the Alt(4) listing"""

    @pytest.fixture
    def labels(self):
        names, _ = alt4_listing()
        return {k: Permutation.from_cycles(v, 4) for k, v in names.items()}

    def test_printed_listing(self, datasets, alt4, labels, caplog):
        _, printed = alt4_listing()
        with caplog.at_level(logging.WARNING, logger="src.core.perm_cayley"):
            report = reconcile_hamiltonian_map(alt4, alt_word(datasets, 4), printed, labels)
        assert report.passed
        assert [c["read_as"] for c in report.corrections] == ["a8", "a12"]
        assert report.normalized[4:6] == ["a8", "a12"]
        assert caplog.text.count("bare integer") == 2

    def test_swapped_entries(self, datasets, alt4, labels):
        _, printed = alt4_listing()
        swapped = list(printed)
        swapped[1], swapped[2] = swapped[2], swapped[1]
        report = reconcile_hamiltonian_map(alt4, alt_word(datasets, 4), swapped, labels)
        assert not report.passed
        assert [m["position"] for m in report.mismatches] == [2, 3]

    def test_unknown_label(self, datasets, alt4, labels):
        with pytest.raises(ParseError):
            reconcile_hamiltonian_map(alt4, alt_word(datasets, 4), ["a1", "z"], labels)
