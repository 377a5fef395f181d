import pytest

from superchar.polyio import (
    PolyParseError,
    format_poly,
    parse_poly,
    poly_from_json,
    poly_to_json,
)
from conftest import P, alg


@pytest.mark.parametrize("text", [
    "x1^1/2*y1^-1/2 - x1^-1/2*y1^1/2",
    "-y1 + 1 - y1^-1",
    "0",
    "3*x1^2*x2^-1 - x2",
])
def test_canonical_text_round_trip(text):
    a = alg("gl(2|1)")
    f = P(a, text)
    assert P(a, format_poly(f)) == f
    assert format_poly(P(a, format_poly(f))) == format_poly(f)


def test_json_round_trip():
    a = alg("osp(3|2)")
    f = P(a, "(1 - y1/x1)*(x1^1/2 + y1^-3)")
    js = poly_to_json(f)
    assert poly_from_json(js) == f
    assert P(a, js) == f
    assert poly_to_json(poly_from_json(js)) == js


def test_rational_exponent_forms():
    a = alg("gl(1|1)")
    assert P(a, "x1^(1/2)") == P(a, "x1^1/2") == P(a, "x1**(1/2)")
    assert P(a, "x1^-1") == P(a, "1/x1")


def test_division_by_polynomial_is_exact():
    a = alg("gl(2|1)")
    assert P(a, "(1 - y1^2/x1^2)/(1 - y1/x1)") == P(a, "1 + y1/x1")
    with pytest.raises(Exception):
        P(a, "1/(1 + x1)")


def test_g3_x3_is_inverse_product():
    a = alg("G(3)")
    assert P(a, "x3") == P(a, "x1^-1*x2^-1")


def test_parse_errors():
    a = alg("gl(1|1)")
    for bad in ["x1+", "x2", "y1^", "(x1", "x1 $ y1", "z1"]:
        with pytest.raises(PolyParseError):
            P(a, bad)


def test_formatting_is_deterministic():
    f = parse_poly("y1 + x1 - 2", 1, 1)
    assert format_poly(f) == "x1 + y1 - 2"
