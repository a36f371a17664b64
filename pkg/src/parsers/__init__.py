"""
Weylham - Parsers
Purpose: Text formats for roots, cycle words, Alt(n) words and super data
"""

from .parser_factory import (
    format_cycle_json,
    format_cycle_text,
    parse_alt_word,
    parse_ch_notation,
    parse_cycle,
    parse_file,
    parse_roots,
    parse_super_datum,
    parse_text,
)

__all__ = [
    "format_cycle_json",
    "format_cycle_text",
    "parse_alt_word",
    "parse_ch_notation",
    "parse_cycle",
    "parse_file",
    "parse_roots",
    "parse_super_datum",
    "parse_text",
]
