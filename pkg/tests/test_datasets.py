"""
Weylham - Dataset and Survey Table Tests
Purpose: Embedded datasets, lookup order and the polars survey table
Version: 1.0.0
Date: 2026-10-19
"""

import json
import logging

import polars as pl
import pytest

from src.core.groupoid_graph import build_graph
from src.core.hamilton import verify_cycle
from src.errors import DatasetNotFound
from src.knowledge.datasets import (
    alt4_listing,
    embedded_datasets,
    has_ch_data,
    list_datasets,
    resolve,
)
from src.parsers.parser_factory import parse_cycle, parse_roots
from src.utils.dataframe_utils import (
    export_frame_to_csv,
    export_frame_to_json,
    survey_frame,
    survey_statistics,
    validate_survey_frame,
)
from tests.conftest import ch_data_available


class TestEmbeddedDatasets:
    """Tests for the datasets shipped under knowledge/"""

    def test_counts(self):
        assert len(list_datasets("roots")) == 2
        assert len(list_datasets("cycle")) == 58
        assert list_datasets("alt-word") == ["alt4-word", "alt5-word", "alt6-word"]

    def test_cycle_lengths_match_headers(self, datasets):
        for dataset_id in list_datasets("cycle"):
            dataset = datasets[dataset_id]
            assert len(parse_cycle(dataset.payload)) == dataset.metadata["length"], dataset_id

    def test_rank4_ids(self):
        assert "cycle-rank4-nr4" in list_datasets("cycle")

    def test_shared_word_warning(self, caplog):
        embedded_datasets.cache_clear()
        with caplog.at_level(logging.WARNING, logger="src.knowledge.datasets"):
            data = embedded_datasets()
        assert data["cycle-nr13"].payload == data["cycle-nr14"].payload
        assert "cycle-nr14 carries the same word as cycle-nr13" in caplog.text

    def test_alt4_listing(self):
        labels, printed = alt4_listing()
        assert len(labels) == 12
        assert labels["a1"] == "()"
        assert printed[4:6] == ["8", "12"]


class TestResolve:
    """Tests for resolve's lookup order"""

    def test_embedded_id(self):
        assert resolve("ch-rank3-nr1").kind == "roots"

    def test_basename_fallback(self):
        assert resolve("data/ch-rank3-nr2").id == "ch-rank3-nr2"

    def test_file_first(self, roots_file, r_hat_2):
        dataset = resolve(roots_file, kind="roots")
        assert dataset.metadata["path"] == str(roots_file)
        assert parse_roots(dataset.payload).roots == r_hat_2.roots

    def test_data_dir(self, tmp_path, monkeypatch):
        (tmp_path / "ch-rank3-nr7.txt").write_text("rank: 1\n1\n")
        monkeypatch.setenv("WEYLHAM_DATA_DIR", str(tmp_path))
        assert resolve("ch-rank3-nr7").payload == "rank: 1\n1\n"
        assert has_ch_data(3, 7)

    def test_missing(self, monkeypatch):
        monkeypatch.delenv("WEYLHAM_DATA_DIR", raising=False)
        with pytest.raises(DatasetNotFound):
            resolve("ch-rank3-nr9")
        assert not has_ch_data(3, 9)

    @pytest.mark.parametrize("number", [1, 2])
    def test_embedded_words_verify(self, number):
        system = parse_roots(resolve(f"ch-rank3-nr{number}").payload)
        word = parse_cycle(resolve(f"cycle-nr{number}").payload)
        assert verify_cycle(build_graph(system), word).accepted

    @pytest.mark.integration
    @pytest.mark.parametrize("number", range(3, 56))
    def test_external_words_verify(self, number):
        if not ch_data_available(3, number):
            pytest.skip(f"ch-rank3-nr{number} not under WEYLHAM_DATA_DIR")
        system = parse_roots(resolve(f"ch-rank3-nr{number}").payload)
        word = parse_cycle(resolve(f"cycle-nr{number}").payload)
        assert verify_cycle(build_graph(system), word).accepted


class TestSurveyFrame:
    """Tests for the polars survey table"""

    @pytest.fixture
    def rows(self):
        return [
            {"id": "cycle-nr2", "rank": 3, "number": 2, "length": 32, "vertices": 32,
             "status": "verified", "accepted": True, "lambda2": 2.5615528,
             "table_lambda2": 2.5615528, "lambda2_matches": True, "ramanujan": True},
            {"id": "cycle-nr1", "rank": 3, "number": 1, "length": 24, "vertices": 24,
             "status": "verified", "accepted": True, "lambda2": 2.4142136,
             "table_lambda2": 2.4142136, "lambda2_matches": True, "ramanujan": True},
            {"id": "cycle-nr3", "rank": 3, "number": 3, "length": 40, "status": "skipped"},
        ]

    def test_sorted_with_nulls(self, rows):
        df = survey_frame(rows)
        assert df["id"].to_list() == ["cycle-nr1", "cycle-nr2", "cycle-nr3"]
        assert df["accepted"][2] is None

    def test_empty(self):
        df = survey_frame([])
        assert df.is_empty()
        assert validate_survey_frame(df)["warnings"] == ["survey is empty"]

    def test_quality_report(self, rows):
        report = validate_survey_frame(survey_frame(rows))
        assert report["passed"]
        assert len(report["warnings"]) == 1
        assert report["metrics"]["accepted"] == 2
        assert report["metrics"]["by_rank"] == {3: 3}

    def test_rejections_fail(self, rows):
        rows[0]["accepted"] = False
        rows[1]["lambda2_matches"] = False
        report = validate_survey_frame(survey_frame(rows))
        assert not report["passed"]
        assert len(report["errors"]) == 2

    def test_statistics(self, rows):
        stats = survey_statistics(survey_frame(rows))
        assert stats["total"] == 3
        assert stats["checked"] == 2
        assert stats["max_lambda2"] == pytest.approx(2.5615528)

    def test_exports(self, rows, tmp_path):
        df = survey_frame(rows)
        export_frame_to_csv(df, tmp_path / "survey.csv")
        export_frame_to_json(df, tmp_path / "survey.json")
        assert pl.read_csv(tmp_path / "survey.csv").height == 3
        assert json.loads((tmp_path / "survey.json").read_text())[0]["id"] == "cycle-nr1"
