"""Tests for the complex literal grammar used by the CLI and JSON files."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.errors import LiteralParseError
from src.sphere.literals import format_complex, is_infinity_token, parse_complex, split_literal_list


@pytest.mark.parametrize(
    "text, expected",
    [
        ("-6", -6 + 0j),
        ("-2+1.4142135623730951i", complex(-2.0, 1.4142135623730951)),
        ("1i", 1j),
        ("i", 1j),
        ("-i", -1j),
        ("+2.5i", 2.5j),
        ("3-i", 3 - 1j),
        (".5", 0.5 + 0j),
        ("1e-3-2.5e2i", complex(1e-3, -250.0)),
    ],
)
def test_parse_complex_accepts_grammar(text, expected):
    assert parse_complex(text) == expected


@pytest.mark.parametrize(
    "text", ["", "abc", "2+", "1+2j", "inf", "1 + 2i", "--1", "i2", "1e999", "1-1e999i", "1e400i"])
def test_parse_complex_rejects_malformed(text):
    with pytest.raises(LiteralParseError):
        parse_complex(text)


def test_parse_error_is_a_value_error():
    with pytest.raises(ValueError):
        parse_complex("nope")


def test_infinity_tokens():
    assert is_infinity_token("inf")
    assert is_infinity_token(" Infinity ")
    assert is_infinity_token("∞")
    assert not is_infinity_token("0")


def test_format_complex_forms():
    assert format_complex(-6) == "-6.0"
    assert format_complex(1j) == "1.0i"
    assert format_complex(-2 + 1.5j) == "-2.0+1.5i"
    assert format_complex(3 - 0.25j) == "3.0-0.25i"
    assert format_complex(0) == "0.0"


def test_format_complex_cleans_roundoff_only_when_asked():
    z = complex(1.0, 1e-17)
    assert format_complex(z) == "1.0"
    assert format_complex(z, clean=False) == "1.0+1e-17i"


@given(st.complex_numbers(allow_nan=False, allow_infinity=False))
def test_unclean_format_parses_back_exactly(z):
    assert parse_complex(format_complex(z, clean=False)) == z


def test_split_literal_list():
    assert split_literal_list("inf, 0,1,-2+1i") == ["inf", "0", "1", "-2+1i"]
    with pytest.raises(LiteralParseError):
        split_literal_list("0,,1")
