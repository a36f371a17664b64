"""
Weylham - Pipeline Integration Tests
Purpose: The six-stage LCEL pipeline and its stage nodes
Version: 1.0.0
Date: 2026-10-19
"""

import pytest

from src.errors import BudgetExceeded
from src.nodes import (
    build_system_graph,
    compute_spectrum,
    generate_report,
    ingest_system,
    search_config,
    validate_system,
    verify_supplied_cycle,
)
from src.pipeline import create_weylham_pipeline, initialize_pipeline_state, run_pipeline
from src.state.schemas import CycleWord, SearchMethod


class TestPipelineIntegration:
    """Integration tests for the complete pipeline"""

    def test_create_pipeline(self):
        """Pipeline can be created"""
        assert create_weylham_pipeline() is not None

    def test_pipeline_initialization(self):
        """Initial state carries the input and empty error lists"""
        state = initialize_pipeline_state({"roots": "ch-rank3-nr1"})

        assert state["roots"] == "ch-rank3-nr1"
        assert "pipeline_started_at" in state
        assert state["current_stage"] == "S.1"
        assert state["errors"] == []
        assert state["warnings"] == []

    def test_embedded_system_with_cycle(self):
        """Nr. 1 with its embedded word passes every stage"""
        result = run_pipeline({"roots": "ch-rank3-nr1", "cycle": "cycle-nr1", "top": 2})
        summary = result["summary"]

        assert result["current_stage"] == "COMPLETE"
        assert summary["passed"]
        assert summary["graph"] == {"vertices": 24, "edges": 36, "quotient_classes": 1}
        assert summary["cycle"]["accepted"]
        assert summary["spectrum"]["lambda"] == [3.0, 2.4142136]

    def test_search_branch(self):
        """Without a word the cycle stage searches"""
        result = run_pipeline({"family": "a:1+a:2"})

        assert result["summary"]["passed"]
        assert result["summary"]["cycle"]["length"] == 12
        assert result["cycle_report"].accepted

    def test_failed_validation_skips_graph(self, tmp_path):
        """A non-FGRS goes straight to the report"""
        path = tmp_path / "bad.txt"
        path.write_text("rank: 2\n1\n2\n1^2 2\n")
        result = run_pipeline({"roots": str(path)})

        assert not result["summary"]["passed"]
        assert "graph" not in result
        assert "graph" not in result["summary"]
        assert result["summary"]["errors"]

    def test_summary_is_stable(self):
        """Two runs give identical summaries"""
        first = run_pipeline({"roots": "ch-rank3-nr2", "method": "backtrack"})["summary"]
        second = run_pipeline({"roots": "ch-rank3-nr2", "method": "backtrack"})["summary"]
        assert first == second

    def test_search_errors_propagate(self):
        with pytest.raises(BudgetExceeded):
            run_pipeline({"roots": "ch-rank3-nr2", "time_budget": 1e-9})


class TestIngestion:
    """Tests for S.1: Ingestion"""

    def test_family(self):
        assert ingest_system({"family": "g2"})["system"].rank == 2

    def test_cycle_loaded(self):
        state = ingest_system({"roots": "ch-rank3-nr2", "cycle": "cycle-nr2"})
        assert len(state["cycle_word"]) == 32

    @pytest.mark.parametrize("state", [{}, {"roots": "ch-rank3-nr1", "family": "a:3"}])
    def test_source_count(self, state):
        with pytest.raises(ValueError):
            ingest_system(state)


class TestValidationAndGraph:
    """Tests for S.2 and S.3"""

    def test_validation_records_errors(self):
        state = validate_system({"system": ingest_system({"family": "a:2"})["system"], "errors": []})
        assert state["validation"].passed
        assert state["errors"] == []

    def test_graph_stage(self, r_hat_2):
        state = build_system_graph({"system": r_hat_2})
        assert state["graph"].order == 32
        assert len(state["quotient"]) == 4
        assert len(state["cartan_scheme"].objects) == 4


class TestCycleAndSpectrum:
    """Tests for S.4 and S.5"""

    def test_search_config_defaults(self):
        cfg = search_config({"method": None, "seed": None})
        assert cfg.method == SearchMethod.AUTO
        assert cfg.time_budget == 60.0
        assert cfg.seed == 0

    def test_search_config_env(self, monkeypatch):
        monkeypatch.setenv("WEYLHAM_TIME_BUDGET", "5")
        monkeypatch.setenv("WEYLHAM_SEED", "11")
        cfg = search_config({"seed": 3})
        assert cfg.time_budget == 5.0
        assert cfg.seed == 3

    def test_rejected_word_is_an_error(self, graph_1):
        state = verify_supplied_cycle({"graph": graph_1, "cycle_word": CycleWord(word=(1, 1)), "errors": []})
        assert not state["cycle_report"].accepted
        assert state["errors"]

    def test_spectrum_stage(self, graph_2):
        state = compute_spectrum({"graph": graph_2, "top": 3})
        assert len(state["spectrum_report"]["lambda"]) == 3


class TestReport:
    """Tests for S.6: Report"""

    def test_report_without_graph(self):
        state = generate_report({"errors": ["boom"], "warnings": []})
        assert state["current_stage"] == "COMPLETE"
        assert state["summary"]["passed"] is False
        assert state["summary"]["system"]["rank"] is None
