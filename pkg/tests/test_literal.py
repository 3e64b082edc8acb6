from fractions import Fraction

import pytest
from hypothesis import given

from cl2 import Cl2Element, element
from cl2.algebra import render
from cl2.literal import LiteralSyntaxError, parse

from conftest import elements


@pytest.mark.parametrize("text,expected", [
    ("1+e2", element(1, 0, 1)),
    ("1-e1+2e3", element(1, -1, 0, 2)),
    ("-1+e1+e2+e3", element(-1, 1, 1, 1)),
    ("0", element()),
    ("e3", element(0, 0, 0, 1)),
    ("1/2 + 2/5e1 + 3/10e2", element(Fraction(1, 2), Fraction(2, 5), Fraction(3, 10))),
    ("0.5e1", element(0, Fraction(1, 2))),
    (".25", element(Fraction(1, 4))),
    ("e1 + e1 - 3", element(-3, 2)),
    ("  2 + 4 e1 + 5e2 ", element(2, 4, 5)),
    ("+3e2", element(0, 0, 3)),
])
def test_parse(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize("text,position", [
    ("", 0),
    ("1+", 2),
    ("1++e1", 2),
    ("e4", 0),
    ("1 + x", 4),
    ("2e1e2", 3),
    ("1/0", 2),
    ("1.5/2", 0),
])
def test_parse_errors(text, position):
    with pytest.raises(LiteralSyntaxError) as info:
        parse(text)
    assert info.value.position == position


def test_whitespace_is_insignificant():
    assert parse("3 4") == parse("34")
    assert parse("1 / 2 e 1") == element(0, Fraction(1, 2))


@given(elements)
def test_render_round_trip(a):
    assert parse(render(a)) == a


def test_render_examples():
    assert render(element(Fraction(1, 4), 0, Fraction(1, 4))) == "1/4+1/4e2"
    assert render(element(0, -1)) == "-e1"
    assert render(Cl2Element()) == "0"
    assert render(element(0, 0, 0, Fraction(-3, 2))) == "-3/2e3"
