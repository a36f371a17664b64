"""
Weylham - Parser Tests
Purpose: ch-notation, roots JSON, cycle words, Alt words and super data
Version: 1.0.0
Date: 2026-10-19
"""

from fractions import Fraction
import json

import pytest

from src.errors import DuplicateRoot, ParseError, RankMismatch
from src.parsers.parser_factory import (
    detect_root_format,
    format_cycle_json,
    format_cycle_text,
    parse_alt_word,
    parse_ch_notation,
    parse_cycle,
    parse_file,
    parse_roots,
    parse_roots_json,
    parse_super_datum,
    parse_text,
)
from src.state.schemas import CycleWord, RootFormat
from tests.conftest import R_HAT_1_TEXT


class TestChNotation:
    """Tests for parse_ch_notation"""

    def test_nr1(self, r_hat_1):
        system = parse_ch_notation(R_HAT_1_TEXT)
        assert system.rank == 3
        assert system.roots == r_hat_1.roots

    def test_exponents(self):
        system = parse_ch_notation("rank: 2\n1\n2\n1 2\n1 2^2")
        assert (1, 2) in system.roots
        assert (-1, -2) in system.roots

    def test_commas_and_comments(self):
        system = parse_ch_notation("rank: 2  # B_2\n1, 2, 1 2, 1 2^2\n")
        assert len(system.positive_roots) == 4

    def test_rank_argument(self):
        assert parse_ch_notation("1\n2\n1 2", rank=2).rank == 2

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_ch_notation("1\n2\n1 2")

    @pytest.mark.parametrize("text", ["rank: 2\n1\n3", "rank: 2\n1\nb", "rank: 2\n1\n2^x"])
    def test_bad_tokens(self, text):
        with pytest.raises(ParseError):
            parse_ch_notation(text)

    def test_duplicate(self):
        with pytest.raises(DuplicateRoot):
            parse_ch_notation("rank: 2\n1\n2\n1 2\n2 1")


class TestRootsJson:
    """Tests for the JSON root format and format detection"""

    def test_json(self, r_hat_2):
        text = json.dumps({"rank": 3, "positive_roots": sorted(map(list, r_hat_2.positive_roots))})
        assert parse_roots_json(text).roots == r_hat_2.roots

    def test_name(self):
        text = '{"rank": 1, "positive_roots": [[1]], "name": "A1"}'
        assert parse_roots(text).name == "A1"

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            parse_roots_json('{"rank": 2, "positive_roots": [[1, 0], [1]]}')

    @pytest.mark.parametrize(
        "text",
        [
            "{",
            '{"rank": 2}',
            '{"rank": 0, "positive_roots": [[1]]}',
            '{"rank": 1, "positive_roots": [[true]]}',
            '{"rank": 1, "positive_roots": [[1.5]]}',
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_roots_json(text)

    def test_detection(self):
        assert detect_root_format('  {"rank": 1}') == RootFormat.JSON
        assert detect_root_format(R_HAT_1_TEXT) == RootFormat.CH_NOTATION

    def test_explicit_format(self, r_hat_1):
        assert parse_roots(R_HAT_1_TEXT, fmt="ch-notation").roots == r_hat_1.roots


class TestCycleWords:
    """Tests for cycle word text and JSON"""

    @pytest.mark.parametrize("text", ["s_3 s_1 s_2", "s3 s1 s2", "3 1 2", "s_3,s_1,\ns_2"])
    def test_text_forms(self, text):
        assert parse_cycle(text).word == (3, 1, 2)

    def test_json(self):
        c = parse_cycle('{"start": 4, "word": [1, 2, 1, 2]}')
        assert c.start == 4
        assert c.word == (1, 2, 1, 2)

    def test_json_default_start(self):
        assert parse_cycle('{"word": [1, 1]}').start == 0

    @pytest.mark.parametrize("text", ["", "s_0 s_1", "t_1", '{"start": 0}', '{"word": [0, 1]}'])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_cycle(text)

    def test_formatting(self):
        c = CycleWord(start=0, word=(3, 1, 2))
        assert format_cycle_text(c) == "s_3 s_1 s_2"
        assert format_cycle_json(c) == '{"start": 0, "word": [3, 1, 2]}\n'
        assert parse_cycle(format_cycle_json(c)) == c


class TestOtherFormats:
    """Tests for Alt words, super data and the kind dispatch"""

    def test_alt_word(self):
        assert parse_alt_word("x2 x3\nx1") == ["x2", "x3", "x1"]

    @pytest.mark.parametrize("text", ["", "x1 y2", "x"])
    def test_bad_alt_word(self, text):
        with pytest.raises(ParseError):
            parse_alt_word(text)

    def test_super_datum(self):
        datum = parse_super_datum('{"matrix": [["0", "1"], [1, "-2/3"]], "odd": [1]}')
        assert datum.entry(2, 2) == Fraction(-2, 3)
        assert datum.odd == frozenset({1})

    @pytest.mark.parametrize(
        "text",
        ['{"odd": [1]}', '{"matrix": [[0, 1], [2, 0]]}', '{"matrix": [[0]], "odd": [2]}'],
    )
    def test_bad_super_datum(self, text):
        with pytest.raises(ParseError):
            parse_super_datum(text)

    def test_dispatch(self):
        assert parse_text("alt-word", "x1 x2") == ["x1", "x2"]
        with pytest.raises(ParseError):
            parse_text("graph", "{}")

    def test_parse_file(self, roots_file, r_hat_2):
        assert parse_file("roots", roots_file).roots == r_hat_2.roots

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            parse_file("roots", tmp_path / "absent.txt")
