"""Element expression parser."""

import random

import pytest

from skewpbw.errors import ParseError
from skewpbw.expr import parse_literal
from skewpbw.fixtures import DESCRIPTIONS, fixture


@pytest.mark.parametrize("text, expected", [
    ("1 + 2*x1", "1 + 2*x1"),
    ("x1*x1 - x1^2", "0"),
    ("-(1 + x1)", "3 + 3*x1"),
    ("2*x1^2 + 3", "3 + 2*x1^2"),
    ("(x1 + 1)^2", "1 + 2*x1 + x1^2"),
    ("#3 * x1", "3*x1"),
])
def test_parse_zmod4(z4, text, expected):
    assert z4.parse(text).to_text() == expected


def test_precedence(z4):
    assert z4.parse("1 + 2*x1^2") == z4.parse("1 + (2*(x1^2))")
    assert z4.parse("-x1^2") == -(z4.x(1) ** 2)
    assert z4.parse("2 - 1 - 1").is_zero()


def test_matrix_literals(ut):
    f = ut.parse("[[0,1],[0,0]] + [[0,1],[0,0]]*x1")
    assert (f * f).is_zero()
    assert ut.parse("x1*[[1,1],[0,1]]").to_text() == "[[0,1],[0,0]] + x1"


@pytest.mark.parametrize("text, offset", [
    ("x1 + * 2", 5),
    ("", 0),
    ("(1 + x1", 7),
    ("1 + y", 4),
    ("x7", 0),
    ("1 + é", 4),
    ("2 ^", 3),
    ("x1 x1", 3),
])
def test_parse_errors_carry_offsets(z4, text, offset):
    with pytest.raises(ParseError) as err:
        z4.parse(text)
    assert err.value.offset == offset


def test_offsets_are_bytes(z4):
    with pytest.raises(ParseError) as err:
        z4.parse("é")
    assert err.value.offset == 0
    with pytest.raises(ParseError) as err:
        z4.parse("1 + [é]")
    assert err.value.offset == len("1 + [".encode())


def test_bad_matrix_literal(ut):
    with pytest.raises(ParseError):
        ut.parse("[[1,0],[1,1]]")


def test_parse_literal():
    assert parse_literal("[[1,-1],[0,2]]") == [[1, -1], [0, 2]]
    assert parse_literal("#5") == "#5"
    with pytest.raises(ParseError):
        parse_literal("1 2")


@pytest.mark.parametrize("name", sorted(DESCRIPTIONS))
def test_round_trip(name):
    spec = fixture(name)
    rng = random.Random(name)
    for _ in range(100):
        f = spec.random_element(rng, 3)
        assert spec.parse(f.to_text()) == f
