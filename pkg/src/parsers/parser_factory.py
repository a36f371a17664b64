"""
Weylham - Parser Factory
Purpose: Text formats for root systems, cycle words, Alt(n) words and super data
Version: 1.0.0
Date: 2026-10-19

Formats:
- ch-notation: `rank: n` header, one positive root per line, tokens `k` or `k^e`
- roots JSON: {"rank": n, "positive_roots": [[...], ...], "name": ...}
- cycle JSON: {"start": 0, "word": [3, 1, 3, ...]}
- cycle text: `s_3 s_1 s_2 ...` (whitespace or newline separated)
- Alt word text: `x2 x3 x1 ...`
- super JSON: {"matrix": [["0", "1"], ...], "odd": [1, 2]}
"""

from pathlib import Path
from typing import Any, Callable, Optional, Union
import json
import logging
import re

from pydantic import ValidationError

from src.core.root_core import from_positive_roots
from src.errors import ParseError
from src.state.schemas import CycleWord, RootFormat, RootSystem, SuperDatum

logger = logging.getLogger(__name__)

_HEADER_RE = re.compile(r"^rank\s*:\s*(\d+)$", re.IGNORECASE)
_TOKEN_RE = re.compile(r"^(\d+)(?:\^(-?\d+))?$")
_CYCLE_TOKEN_RE = re.compile(r"^s_?(\d+)$")
_ALT_TOKEN_RE = re.compile(r"^x(\d+)$")


def _load_json(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{what}: invalid JSON at line {e.lineno}: {e.msg}") from e


# ============================================================================
# ROOT SYSTEMS
# ============================================================================

def parse_ch_notation(text: str, rank: Optional[int] = None, name: Optional[str] = None) -> RootSystem:
    """
    Parse positive roots written as index tokens, `1 2^2 3` = a1 + 2 a2 + a3.

    Lines may also be separated by commas. `#` starts a comment.

    Args:
        text: ch-notation text
        rank: Rank to use when the text has no `rank:` header
        name: Optional system name

    Raises:
        ParseError: missing header, malformed token or index outside 1..rank
        RankMismatch / DuplicateRoot: as from_positive_roots

    Example:
        >>> parse_ch_notation("rank: 2\\n1\\n2\\n1 2").rank
        2
    """
    lines = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0]
        lines.extend(part.strip() for part in body.split(","))
    lines = [line for line in lines if line]

    if lines and (header := _HEADER_RE.match(lines[0])):
        rank = int(header.group(1))
        lines = lines[1:]
    if rank is None:
        raise ParseError("ch-notation needs a `rank: n` header")
    if rank < 1:
        raise ParseError(f"rank must be positive, got {rank}")

    positives = []
    for lineno, line in enumerate(lines, start=1):
        vec = [0] * rank
        for token in line.split():
            match = _TOKEN_RE.match(token)
            if match is None:
                raise ParseError(f"root {lineno}: malformed token {token!r}", witness=token)
            k = int(match.group(1))
            if not 1 <= k <= rank:
                raise ParseError(f"root {lineno}: index {k} outside 1..{rank}", witness=token)
            vec[k - 1] += int(match.group(2)) if match.group(2) is not None else 1
        positives.append(vec)

    system = from_positive_roots(rank, positives, name=name)
    logger.debug(f"Parsed {len(positives)} positive roots of rank {rank}")
    return system


def parse_roots_json(text: str, name: Optional[str] = None) -> RootSystem:
    """Parse {"rank": n, "positive_roots": [[...]], "name": optional}."""
    data = _load_json(text, "roots")
    if not isinstance(data, dict) or "rank" not in data or "positive_roots" not in data:
        raise ParseError("roots JSON needs fields 'rank' and 'positive_roots'")
    rank = data["rank"]
    if not isinstance(rank, int) or rank < 1:
        raise ParseError(f"'rank' must be a positive integer, got {rank!r}")
    positives = data["positive_roots"]
    if not isinstance(positives, list) or not all(
        isinstance(v, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in v)
        for v in positives
    ):
        raise ParseError("'positive_roots' must be an array of integer arrays")
    return from_positive_roots(rank, positives, name=data.get("name", name))


def detect_root_format(text: str) -> RootFormat:
    return RootFormat.JSON if text.lstrip().startswith("{") else RootFormat.CH_NOTATION


def parse_roots(
    text: str, fmt: Optional[Union[RootFormat, str]] = None, name: Optional[str] = None
) -> RootSystem:
    """
    Parse a root system in either format; the format is sniffed when omitted.

    Raises:
        ParseError: malformed text or unknown format
    """
    fmt = RootFormat(fmt) if fmt is not None else detect_root_format(text)
    parsers: dict[RootFormat, Callable[..., RootSystem]] = {
        RootFormat.CH_NOTATION: parse_ch_notation,
        RootFormat.JSON: parse_roots_json,
    }
    return parsers[fmt](text, name=name)


# ============================================================================
# CYCLE WORDS
# ============================================================================

def parse_cycle_json(text: str) -> CycleWord:
    data = _load_json(text, "cycle")
    if not isinstance(data, dict) or "word" not in data:
        raise ParseError("cycle JSON needs a 'word' field")
    try:
        return CycleWord(start=data.get("start", 0), word=tuple(data["word"]))
    except (ValidationError, TypeError) as e:
        raise ParseError(f"invalid cycle word: {e}") from e


def parse_cycle_text(text: str) -> CycleWord:
    """Read `s_3 s_1 s_2 ...`; `s3` and bare integers are accepted too."""
    word = []
    for token in text.replace(",", " ").split():
        match = _CYCLE_TOKEN_RE.match(token) or re.match(r"^(\d+)$", token)
        if match is None:
            raise ParseError(f"malformed cycle token {token!r}", witness=token)
        label = int(match.group(1))
        if label < 1:
            raise ParseError(f"generator labels are 1-based, got {token!r}", witness=token)
        word.append(label)
    if not word:
        raise ParseError("empty cycle word")
    return CycleWord(word=tuple(word))


def parse_cycle(text: str) -> CycleWord:
    return parse_cycle_json(text) if text.lstrip().startswith("{") else parse_cycle_text(text)


def format_cycle_text(c: CycleWord) -> str:
    return " ".join(f"s_{label}" for label in c.word)


def format_cycle_json(c: CycleWord) -> str:
    return json.dumps({"start": c.start, "word": list(c.word)}) + "\n"


# ============================================================================
# ALT WORDS AND SUPER DATA
# ============================================================================

def parse_alt_word(text: str) -> list[str]:
    """Whitespace-separated generator names `x1 x2 ...`."""
    names = []
    for token in text.split():
        if _ALT_TOKEN_RE.match(token) is None:
            raise ParseError(f"malformed generator token {token!r}", witness=token)
        names.append(token)
    if not names:
        raise ParseError("empty generator word")
    return names


def parse_super_datum(text: str) -> SuperDatum:
    """{"matrix": [[...]], "odd": [...]} with "p/q" strings or integers as entries."""
    data = _load_json(text, "super datum")
    if not isinstance(data, dict) or "matrix" not in data:
        raise ParseError("super JSON needs a 'matrix' field")
    try:
        return SuperDatum(matrix=data["matrix"], odd=frozenset(data.get("odd", [])))
    except (ValidationError, TypeError) as e:
        raise ParseError(f"invalid super datum: {e}") from e


# ============================================================================
# FILE DISPATCH
# ============================================================================

PARSERS: dict[str, Callable[[str], Any]] = {
    "roots": parse_roots,
    "cycle": parse_cycle,
    "alt-word": parse_alt_word,
    "super": parse_super_datum,
}


def parse_text(kind: str, text: str) -> Any:
    """
    Route text to the parser for `kind` (roots, cycle, alt-word or super).

    Raises:
        ParseError: unknown kind or malformed text
    """
    parser = PARSERS.get(kind)
    if parser is None:
        raise ParseError(f"unknown input kind {kind!r}; expected one of {sorted(PARSERS)}")
    return parser(text)


def parse_file(kind: str, path: Union[str, Path]) -> Any:
    path = Path(path)
    logger.info(f"Parsing {kind} from {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    return parse_text(kind, text)


__all__ = [
    "parse_ch_notation",
    "parse_roots_json",
    "detect_root_format",
    "parse_roots",
    "parse_cycle_json",
    "parse_cycle_text",
    "parse_cycle",
    "format_cycle_text",
    "format_cycle_json",
    "parse_alt_word",
    "parse_super_datum",
    "PARSERS",
    "parse_text",
    "parse_file",
]
