"""
Weylham - DataFrame Utilities
Purpose: Polars tables for the survey of embedded cycle words and spectra
Version: 1.0.0
Date: 2026-10-19

This module provides utilities for:
- Building the survey table from per-dataset result rows
- Quality checks over a survey (rejected words, lambda_2 disagreements)
- Summary statistics
- CSV/JSON export helpers
"""

from pathlib import Path
from typing import Any, Dict, List
import json

import polars as pl

SURVEY_SCHEMA: Dict[str, Any] = {
    "id": pl.Utf8,
    "rank": pl.Int64,
    "number": pl.Int64,
    "length": pl.Int64,
    "vertices": pl.Int64,
    "status": pl.Utf8,
    "accepted": pl.Boolean,
    "lambda2": pl.Float64,
    "table_lambda2": pl.Float64,
    "lambda2_matches": pl.Boolean,
    "ramanujan": pl.Boolean,
}


# ============================================================================
# SURVEY TABLES
# ============================================================================

def survey_frame(rows: List[Dict[str, Any]]) -> pl.DataFrame:
    """
    Survey rows as a DataFrame with a fixed schema, sorted by rank and number.

    Missing keys become nulls, so rows for skipped datasets (no root data)
    only need id, rank, number, length and status.

    Example:
        >>> df = survey_frame([{"id": "cycle-nr1", "rank": 3, "number": 1, "length": 24,
        ...                     "status": "verified", "accepted": True}])
        >>> df["accepted"][0]
        True
    """
    if not rows:
        return pl.DataFrame(schema=SURVEY_SCHEMA)
    normalized = [{key: row.get(key) for key in SURVEY_SCHEMA} for row in rows]
    df = pl.DataFrame(normalized, schema=SURVEY_SCHEMA)
    return df.sort(["rank", "number"])


def validate_survey_frame(df: pl.DataFrame) -> Dict[str, Any]:
    """
    Quality report over a survey table.

    Errors: rejected words, length headers that differ from the vertex count,
    lambda_2 values off the table. Warnings: skipped datasets.
    """
    report: Dict[str, Any] = {
        "total_rows": len(df),
        "passed": True,
        "errors": [],
        "warnings": [],
        "metrics": {},
    }
    if len(df) == 0:
        report["warnings"].append("survey is empty")
        return report

    rejected = df.filter(pl.col("accepted") == False)  # noqa: E712
    if len(rejected) > 0:
        report["errors"].append(f"{len(rejected)} cycle words rejected: {rejected['id'].to_list()}")

    wrong_length = df.filter(pl.col("vertices").is_not_null() & (pl.col("vertices") != pl.col("length")))
    if len(wrong_length) > 0:
        report["errors"].append(f"length header differs from |V| for {wrong_length['id'].to_list()}")

    off_table = df.filter(pl.col("lambda2_matches") == False)  # noqa: E712
    if len(off_table) > 0:
        report["errors"].append(f"lambda_2 off the table for {off_table['id'].to_list()}")

    skipped = df.filter(pl.col("status") == "skipped")
    if len(skipped) > 0:
        report["warnings"].append(f"{len(skipped)} datasets skipped for lack of root data")

    report["passed"] = not report["errors"]
    report["metrics"] = survey_statistics(df)
    return report


def survey_statistics(df: pl.DataFrame) -> Dict[str, Any]:
    if len(df) == 0:
        return {"total": 0}
    checked = df.filter(pl.col("accepted").is_not_null())
    return {
        "total": len(df),
        "checked": len(checked),
        "accepted": int(checked["accepted"].sum()) if len(checked) else 0,
        "ramanujan": int(df["ramanujan"].fill_null(False).sum()),
        "max_lambda2": df["lambda2"].max(),
        "by_rank": {
            int(row["rank"]): int(row["count"])
            for row in df.group_by("rank").agg(pl.len().alias("count")).sort("rank").to_dicts()
        },
    }


# ============================================================================
# EXPORT UTILITIES - JSON & CSV
# ============================================================================

def export_frame_to_json(df: pl.DataFrame, output_path: Path) -> None:
    with open(output_path, "w", encoding="utf-8") as f:
        json.dump(df.to_dicts(), f, indent=2, ensure_ascii=False, default=str)


def export_frame_to_csv(df: pl.DataFrame, output_path: Path) -> None:
    df.write_csv(output_path)


__all__ = [
    "SURVEY_SCHEMA",
    "survey_frame",
    "validate_survey_frame",
    "survey_statistics",
    "export_frame_to_json",
    "export_frame_to_csv",
]
