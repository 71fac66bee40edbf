"""
Polynomial grammar and error offsets.
"""

from fractions import Fraction

import pytest

from src.algebra.errors import InputError, PolynomialSyntaxError
from src.algebra.polynomial import Polynomial
from src.cli.polynomial_parser import parse_polynomial, tokenize

XY = ["x", "y"]


def test_examples():
    x = Polynomial.variable(XY, "x")
    y = Polynomial.variable(XY, "y")
    assert parse_polynomial("x^3 - y^2", XY) == x ** 3 - y ** 2
    assert parse_polynomial("1/2*x", XY) == x.scale(Fraction(1, 2))

    gens = ["x", "y", "z"]
    X, Y, Z = (Polynomial.variable(gens, g) for g in gens)
    assert parse_polynomial("x*y*(x+y)*(x*z+y)", gens) == X * Y * (X + Y) * (X * Z + Y)


def test_precedence():
    x = Polynomial.variable(XY, "x")
    assert parse_polynomial("-x^2", XY) == -(x ** 2)
    assert parse_polynomial("2^3", XY) == 8
    assert parse_polynomial("x/2 + 1/3", XY) == x.scale(Fraction(1, 2)) + Fraction(1, 3)
    assert parse_polynomial("  x  -  - x ", XY) == x.scale(2)


@pytest.mark.parametrize("text, offset", [
    ("2x", 1),
    ("x (y)", 2),
    ("x + w", 4),
    ("x^", 2),
    ("x^y", 2),
    ("x / y", 4),
    ("x / 0", 4),
    ("(x + y", 6),
    ("x $ y", 2),
    ("", 0),
    ("x +", 3),
])
def test_syntax_errors_report_offsets(text, offset):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_polynomial(text, XY)
    assert info.value.offset == offset


def test_offsets_count_bytes():
    # the no-break space is two bytes in UTF-8
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_polynomial("\u00a0x + w", XY)
    assert info.value.offset == 6


def test_syntax_error_is_input_error():
    with pytest.raises(InputError):
        parse_polynomial("x +* y", XY)


def test_variable_list_validation():
    with pytest.raises(InputError):
        parse_polynomial("x", [])
    with pytest.raises(InputError):
        parse_polynomial("x", ["x", "x"])
    with pytest.raises(InputError):
        parse_polynomial("x", ["1x"])


def test_tokenize_end_offset():
    tokens = tokenize("x + 1 ")
    assert [t.kind for t in tokens] == ["name", "op", "int", "end"]
    assert tokens[-1].offset == 6
