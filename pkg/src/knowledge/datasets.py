"""
Weylham - Embedded Datasets
Purpose: Resolve dataset ids to text from knowledge/*.yaml or WEYLHAM_DATA_DIR
Version: 1.0.0
Date: 2026-10-19

Lookup order for a reference such as `data/ch-rank3-nr5`:
1. an existing file at that path
2. an embedded id equal to the reference or to its basename
3. <WEYLHAM_DATA_DIR>/<basename>, <basename>.txt or <basename>.json

Embedded ids:
- ch-rank3-nr1, ch-rank3-nr2         root systems in ch-notation
- cycle-nr1 ... cycle-nr55           rank-3 cycle words
- cycle-rank4-nr4, -nr8, -nr10       rank-4 cycle words
- alt4-word, alt5-word, alt6-word    Alt(n) words
"""

from functools import lru_cache
from pathlib import Path
from typing import Any, Optional, Union
import logging

import yaml

from src.errors import DatasetNotFound
from src.state.schemas import EmbeddedDataset
from src.utils.settings import get_settings

logger = logging.getLogger(__name__)

KNOWLEDGE_DIR = Path(__file__).parent.parent.parent / "knowledge"
DATA_SUFFIXES = ("", ".txt", ".json")


def _load_yaml(name: str) -> dict[str, Any]:
    path = KNOWLEDGE_DIR / name
    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


def _cycle_id(entry: dict[str, Any]) -> str:
    if entry["rank"] == 3:
        return f"cycle-nr{entry['number']}"
    return f"cycle-rank{entry['rank']}-nr{entry['number']}"


@lru_cache(maxsize=1)
def embedded_datasets() -> dict[str, EmbeddedDataset]:
    """All datasets shipped under knowledge/, keyed by id."""
    out: dict[str, EmbeddedDataset] = {}

    for entry in _load_yaml("root_systems.yaml").get("systems", []):
        out[entry["id"]] = EmbeddedDataset(
            id=entry["id"],
            kind="roots",
            payload=entry["text"],
            metadata={"name": entry.get("name"), "identified_as": entry.get("identified_as", [])},
        )

    words: dict[str, str] = {}
    for entry in _load_yaml("cycle_words.yaml").get("words", []):
        dataset_id = _cycle_id(entry)
        payload = " ".join(entry["word"].split())
        if payload in words.values():
            twin = next(k for k, v in words.items() if v == payload)
            logger.warning(f"{dataset_id} carries the same word as {twin}")
        words[dataset_id] = payload
        out[dataset_id] = EmbeddedDataset(
            id=dataset_id,
            kind="cycle",
            payload=payload,
            metadata={"rank": entry["rank"], "number": entry["number"], "length": entry["length"]},
        )

    alt = _load_yaml("alt_words.yaml")
    for entry in alt.get("words", []):
        dataset_id = f"alt{entry['n']}-word"
        out[dataset_id] = EmbeddedDataset(
            id=dataset_id,
            kind="alt-word",
            payload=" ".join(entry["word"].split()),
            metadata={"n": entry["n"], "length": entry["length"]},
        )

    logger.debug(f"Loaded {len(out)} embedded datasets from {KNOWLEDGE_DIR}")
    return out


def alt4_listing() -> tuple[dict[str, str], list[Any]]:
    """Vertex labels a1..a12 of Alt(4) in cycle notation, and the printed map f(1..12)."""
    alt = _load_yaml("alt_words.yaml")
    return dict(alt["alt4_labels"]), list(alt["alt4_printed_map"])


def list_datasets(kind: Optional[str] = None) -> list[str]:
    return sorted(k for k, d in embedded_datasets().items() if kind is None or d.kind == kind)


def _from_data_dir(name: str) -> Optional[Path]:
    data_dir = get_settings().data_dir
    if data_dir is None:
        return None
    for suffix in DATA_SUFFIXES:
        candidate = Path(data_dir) / f"{name}{suffix}"
        if candidate.is_file():
            return candidate
    return None


def resolve(reference: Union[str, Path], kind: Optional[str] = None) -> EmbeddedDataset:
    """
    Resolve a path or dataset id to its text.

    Args:
        reference: File path, embedded id, or a name under WEYLHAM_DATA_DIR
        kind: Kind recorded for datasets read from files

    Returns:
        EmbeddedDataset whose payload is the text to parse

    Raises:
        DatasetNotFound: nothing matches
    """
    path = Path(reference)
    if path.is_file():
        return EmbeddedDataset(
            id=path.stem, kind=kind or "file", payload=path.read_text(encoding="utf-8"),
            metadata={"path": str(path)},
        )

    embedded = embedded_datasets()
    for key in (str(reference), path.name, path.stem):
        if key in embedded:
            return embedded[key]

    found = _from_data_dir(path.name)
    if found is not None:
        logger.info(f"Reading {reference} from {found}")
        return EmbeddedDataset(
            id=path.name, kind=kind or "file", payload=found.read_text(encoding="utf-8"),
            metadata={"path": str(found)},
        )

    raise DatasetNotFound(
        f"{reference} is neither a file, an embedded dataset nor present under WEYLHAM_DATA_DIR",
        witness=str(reference),
    )


def has_ch_data(rank: int, number: int) -> bool:
    """True when ch-rank<rank>-nr<number> resolves to embedded or user-supplied data."""
    try:
        resolve(f"ch-rank{rank}-nr{number}")
    except DatasetNotFound:
        return False
    return True


__all__ = [
    "KNOWLEDGE_DIR",
    "embedded_datasets",
    "alt4_listing",
    "list_datasets",
    "resolve",
    "has_ch_data",
]
