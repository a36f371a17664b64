"""
Weylham - Hamiltonian Cycle Tests
Purpose: Verification, closed forms, products and the search strategies
Version: 1.0.0
Date: 2026-10-19
"""

import logging
import multiprocessing
import random
import threading
import time

import pytest

from src.core import hamilton
from src.core.families import parse_family
from src.core.groupoid_graph import build_graph
from src.core.hamilton import (
    backtrack_search,
    cycle_walk,
    find,
    find_on_graph,
    lift_search,
    product_cycle,
    rank2_cycle,
    reverse_cycle,
    verify_cycle,
)
from src.core.perm_cayley import build_perm_graph, theorem_one_generators
from src.errors import BudgetExceeded, ComponentMismatch, NoCycleFound, NotReducible, RankError
from src.parsers.parser_factory import parse_cycle
from src.state.schemas import CycleWord, SearchConfig, SearchMethod


@pytest.fixture(scope="module")
def word_1(datasets):
    return parse_cycle(datasets["cycle-nr1"].payload)


@pytest.fixture(scope="module")
def word_2(datasets):
    return parse_cycle(datasets["cycle-nr2"].payload)


class TestVerifyCycle:
    """Tests for verify_cycle"""

    def test_embedded_words(self, graph_1, graph_2, word_1, word_2):
        for g, c in ((graph_1, word_1), (graph_2, word_2)):
            report = verify_cycle(g, c)
            assert report.accepted
            assert report.visited == g.order
            assert report.failed_step is None

    def test_short_closed_walk(self, graph_1):
        report = verify_cycle(graph_1, CycleWord(word=(1, 1)))
        assert not report.accepted
        assert report.returns_to_start
        assert not report.length_matches
        assert report.failed_step == 2

    def test_revisit(self, graph_1):
        report = verify_cycle(graph_1, CycleWord(word=(1,) * 24))
        assert not report.all_distinct
        assert report.failed_step == 2

    def test_label_out_of_range(self, graph_1):
        report = verify_cycle(graph_1, CycleWord(word=(2, 4)))
        assert report.failed_step == 2
        assert "outside" in report.message

    def test_bad_start(self, graph_1, word_1):
        report = verify_cycle(graph_1, CycleWord(start=99, word=word_1.word))
        assert not report.accepted
        assert report.failed_step == 0

    def test_one_letter_changed(self, graph_2, word_2):
        word = list(word_2.word)
        word[5] = 3 if word[5] != 3 else 2
        assert not verify_cycle(graph_2, CycleWord(word=tuple(word))).accepted

    def test_reverse(self, graph_2, word_2):
        reversed_word = reverse_cycle(graph_2, word_2)
        assert reversed_word.word == tuple(reversed(word_2.word))
        assert verify_cycle(graph_2, reversed_word).accepted


class TestClosedForms:
    """Tests for rank2_cycle, cycle_walk and product_cycle"""

    @pytest.mark.parametrize("family,length", [("a:1", 2), ("a:2", 6), ("b:2", 8), ("g2", 12)])
    def test_rank2(self, family, length):
        g = build_graph(parse_family(family))
        c = rank2_cycle(g)
        assert len(c) == length
        assert verify_cycle(g, c).accepted

    def test_rank2_rejects_rank3(self, graph_1):
        with pytest.raises(RankError):
            rank2_cycle(graph_1)

    def test_cycle_walk(self, a2):
        g = build_graph(a2)
        assert verify_cycle(g, cycle_walk(g)).accepted

    def test_cycle_walk_needs_two_regular(self, graph_1):
        with pytest.raises(RankError):
            cycle_walk(graph_1)

    def test_product(self):
        system = parse_family("a:1+a:2")
        g = build_graph(system)
        c = find(system, g, SearchConfig(method=SearchMethod.PRODUCT))
        assert len(c) == 12
        assert verify_cycle(g, c).accepted

    def test_product_of_rank2_squares(self):
        system = parse_family("a:1+a:1+a:1")
        g = build_graph(system)
        c = find(system, g, SearchConfig(method=SearchMethod.PRODUCT))
        assert len(c) == 8
        assert verify_cycle(g, c).accepted

    def test_product_overlap(self):
        with pytest.raises(NotReducible):
            product_cycle(CycleWord(word=(1, 1)), CycleWord(word=(1, 1)), (1,), (1,))

    def test_product_odd_second_length(self):
        with pytest.raises(ComponentMismatch):
            product_cycle(CycleWord(word=(1, 1)), CycleWord(word=(1, 2, 1)), (1,), (2, 3))

    def test_product_on_irreducible(self, r_hat_1, graph_1):
        with pytest.raises(NotReducible):
            find(r_hat_1, graph_1, SearchConfig(method=SearchMethod.PRODUCT))

    def test_product_of_random_component_pairs(self):
        rng = random.Random(2026)
        pool = ["a:1", "a:2", "b:2", "g2", "a:1+a:1"]
        systems = {f: parse_family(f) for f in pool}
        cycles = {f: find(s, build_graph(s)) for f, s in systems.items()}
        graphs = {}
        for _ in range(100):
            left, right = rng.choice(pool), rng.choice(pool)
            if (left, right) not in graphs:
                graphs[left, right] = build_graph(parse_family(f"{left}+{right}"))
            k = systems[left].rank
            first_labels = tuple(range(1, k + 1))
            second_labels = tuple(range(k + 1, k + systems[right].rank + 1))
            h = product_cycle(cycles[left], cycles[right], first_labels, second_labels)
            assert len(h) == len(cycles[left]) * len(cycles[right])
            assert verify_cycle(graphs[left, right], h).accepted, (left, right)


class TestSearch:
    """Tests for find, backtracking and lifting"""

    def test_auto_nr1(self, r_hat_1, graph_1):
        c = find(r_hat_1, graph_1)
        assert len(c) == 24
        assert verify_cycle(graph_1, c).accepted

    def test_backtrack_nr2(self, r_hat_2, graph_2):
        c = find(r_hat_2, graph_2, SearchConfig(method=SearchMethod.BACKTRACK))
        assert verify_cycle(graph_2, c).accepted

    def test_deterministic_repeats(self, graph_2):
        cfg = SearchConfig(method=SearchMethod.BACKTRACK, deterministic=True)
        assert backtrack_search(graph_2, cfg) == backtrack_search(graph_2, cfg)

    def test_seeded_search(self, graph_2):
        cfg = SearchConfig(method=SearchMethod.BACKTRACK, deterministic=False, seed=7)
        c = backtrack_search(graph_2, cfg)
        assert c is not None
        assert verify_cycle(graph_2, c).accepted

    def test_lift_splits_a1_off_a2(self):
        g = build_graph(parse_family("a:1+a:2"))
        c = lift_search(g, 1)
        assert c is not None
        assert len(c) == 12
        assert verify_cycle(g, c).accepted

    def test_lift_on_involution_group(self):
        g = build_perm_graph(theorem_one_generators())
        assert lift_search(g, g.label_of("a")) is None
        c = lift_search(g, g.label_of("c"))
        assert c is not None
        assert verify_cycle(g, c).accepted

    def test_find_on_graph_lift(self):
        g = build_perm_graph(theorem_one_generators())
        c = find_on_graph(g, SearchConfig(method=SearchMethod.LIFT))
        assert len(c) == 8
        assert verify_cycle(g, c).accepted

    def test_lift_without_splice_logs_no_family(self, caplog):
        g = build_graph(parse_family("a:1"))
        with caplog.at_level(logging.ERROR, logger="src.core.hamilton"):
            with pytest.raises(NoCycleFound):
                find_on_graph(g, SearchConfig(method=SearchMethod.LIFT))
        assert "No label family splices" in caplog.text
        assert "Search space exhausted" not in caplog.text

    def test_budget(self, r_hat_2, graph_2):
        with pytest.raises(BudgetExceeded):
            find(r_hat_2, graph_2, SearchConfig(time_budget=1e-9))

    def test_product_components_share_budget(self, monkeypatch):
        original = hamilton.find
        budgets = []

        def recording_find(system, g, cfg=None):
            budgets.append(cfg.time_budget)
            return original(system, g, cfg)

        monkeypatch.setattr(hamilton, "find", recording_find)
        system = parse_family("a:1+a:2")
        c = original(system, build_graph(system), SearchConfig(method=SearchMethod.PRODUCT, time_budget=5))
        assert len(c) == 12
        assert len(budgets) == 2
        assert budgets[0] < 5
        assert budgets[1] <= budgets[0]

    def test_stop_event_ends_backtracking(self, graph_2, monkeypatch):
        monkeypatch.setattr(hamilton, "BUDGET_CHECK_INTERVAL", 1)
        adj = hamilton._adjacency(hamilton._full_view(graph_2), SearchConfig())
        deadline = time.monotonic() + 60
        stop = threading.Event()
        assert hamilton._backtrack_local(adj, [0], deadline, stop) is not None
        stop.set()
        assert hamilton._backtrack_local(adj, [0], deadline, stop) is None

    def test_parallel_search_sets_stop_event(self, graph_2):
        adj = hamilton._adjacency(hamilton._full_view(graph_2), SearchConfig())
        stop = multiprocessing.get_context().Event()
        cycle = hamilton._parallel_backtrack(adj, 2, time.monotonic() + 60, stop)
        assert cycle is not None
        assert sorted(cycle) == list(range(graph_2.order))
        assert stop.is_set()

    def test_parallel_seeded_search(self, graph_2):
        cfg = SearchConfig(method=SearchMethod.BACKTRACK, deterministic=False, seed=3, threads=2)
        c = backtrack_search(graph_2, cfg)
        assert c is not None
        assert verify_cycle(graph_2, c).accepted

    @pytest.mark.slow
    @pytest.mark.parametrize("family,order", [("b:3", 48), ("c:3", 48), ("phi:3:1,2", 40)])
    def test_larger_systems(self, family, order):
        system = parse_family(family)
        g = build_graph(system)
        c = find(system, g, SearchConfig(time_budget=120))
        assert len(c) == order
        assert verify_cycle(g, c).accepted
