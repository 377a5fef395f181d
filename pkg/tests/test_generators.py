from fractions import Fraction

import pytest
import sympy as sp

from superchar.dshom import build_ds
from superchar.generators import (
    GeneratingSeries,
    TwistedElement,
    chi_series,
    exc_image_elements,
    exc_image_membership,
    gens_hk,
    gl_twisted_image,
    gl_units,
    image_generators,
    verify_generator_transfer,
)
from superchar.rootdata import AlgebraError, parse_root, parse_roots
from superchar.superring import is_in_JG, membership
from superchar.weightlat import Weight
from superchar.weylchar import build_tilde, char_irrep
from conftest import P, alg, symbols_for, to_sympy


def test_hk_examples():
    a = alg("gl(1|1)")
    assert gens_hk(a, 2) == [P(a, "y1 - x1"), P(a, "y1^2 - x1*y1")]
    b = alg("osp(1|2)")
    assert gens_hk(b, 1) == [P(b, "1 - y1 - y1^-1")]
    for name in ["gl(2|1)", "osp(3|2)", "osp(4|2)"]:
        assert chi_series(alg(name)).expand(0)[0] == alg(name).one()


def _chi_sympy(a):
    xs, ys = symbols_for(a)
    t = sp.Symbol("t")
    if a.family in ("gl", "sl"):
        num = sp.prod([1 - x * t for x in xs])
        den = sp.prod([1 - y * t for y in ys])
    else:
        num = sp.prod([(1 - y * t) * (1 - t / y) for y in ys])
        den = sp.prod([(1 - x * t) * (1 - t / x) for x in xs])
        if a.family == "ospB":
            den *= 1 - t
    return num / den, t


@pytest.mark.parametrize("name", ["gl(1|1)", "gl(2|1)", "gl(1|2)", "osp(1|2)", "osp(3|2)", "osp(4|2)", "osp(2|2)"])
def test_hk_against_sympy_series(name):
    a = alg(name)
    chi, t = _chi_sympy(a)
    series = sp.series(chi, t, 0, 5).removeO()
    hs = gens_hk(a, 4)
    for k, h in enumerate(hs, 1):
        assert sp.expand(series.coeff(t, k) - to_sympy(h, a)) == 0


@pytest.mark.parametrize("name", ["gl(2|1)", "sl(3|2)", "osp(3|2)", "osp(4|2)", "osp(2|4)"])
def test_hk_are_group_ring_members(name):
    a = alg(name)
    for h in gens_hk(a, 4):
        assert is_in_JG(a, h)


@pytest.mark.parametrize("src,roots", [
    ("gl(3|2)", "e3-d1"), ("osp(5|4)", "e2-d1"), ("sl(3|2)", "e3-d1"), ("osp(2|4)", "e1-d1"),
])
def test_transfer_examples(src, roots):
    a = alg(src)
    assert verify_generator_transfer(a, parse_roots(roots, a), 4)
    assert verify_generator_transfer(a, parse_roots(roots, a), 0)


def test_units():
    a = alg("gl(2|1)")
    u, ui = gl_units(a)
    assert u * ui == a.one()
    with pytest.raises(AlgebraError):
        gl_units(alg("osp(3|2)"))


def test_twist_examples():
    a = alg("gl(2|1)")
    B = [parse_root("e2-d1", a)]
    img = gl_twisted_image(a, B, TwistedElement(Fraction(1, 2), a.one()))
    assert img.expand() == P(build_ds(a, B).target, "x1^1/2")
    plain = gl_twisted_image(a, B, TwistedElement(Fraction(0), gens_hk(a, 1)[0]))
    assert plain.expand() == build_ds(a, B).apply(gens_hk(a, 1)[0])
    base = P(a, "(1 - x1/y1)*(1 - x2/y1)")
    odd = gl_twisted_image(a, B, TwistedElement(Fraction(1, 3), base, Fraction(1, 4)))
    assert odd.expand().is_zero()


def test_g3_elements():
    a = alg("G(3)")
    d, gens = image_generators(a)
    el = exc_image_elements(a)
    t = d.target
    assert t.equal(d.apply(el["w"]), P(t, "x1/x2 + x2/x1"))
    assert d.apply(el["P"]).is_zero()
    adj = char_irrep(build_tilde(t), Weight((1, -1), ()))
    assert t.equal(d.apply(el["w"]) + t.one(), adj)


def test_f4_elements():
    a = alg("F(4)")
    d, gens = image_generators(a)
    el = exc_image_elements(a)
    t = d.target
    assert d.apply(el["Q"]).is_zero()
    for k in (1, 2):
        expect = P(t, " + ".join(f"x{i}^{2 * k}*x{j}^{-2 * k}" for i in range(1, 4) for j in range(1, 4) if i != j))
        assert t.equal(d.apply(el[f"w{k}"]), expect)


@pytest.mark.parametrize("alpha", ["1/2", "2/3", "3"])
def test_d21a_elements(alpha):
    a = alg(f"D(2,1;{alpha})")
    d, gens = image_generators(a)
    el = exc_image_elements(a)
    assert d.apply(el["Q"]).is_zero()
    for f in el.values():
        assert membership(a, f).member


def test_exceptional_members_everywhere():
    for name in ["G(3)", "F(4)"]:
        a = alg(name)
        for f in exc_image_elements(a).values():
            assert membership(a, f).member


def test_image_membership_examples():
    a = alg("G(3)")
    d, _ = image_generators(a)
    t = d.target
    res = exc_image_membership(a, P(t, "x1^2 + x2^2"))
    assert res.member and res.expression == "w"
    assert not exc_image_membership(a, P(t, "x1^2 + x2^-2"))
    res = exc_image_membership(a, P(t, "x1 + x1^-1"))
    assert not res.member and res.certificate is not None
    assert exc_image_membership(a, P(t, "7")).member
    for name in ["F(4)", "D(2,1;2/3)"]:
        b = alg(name)
        assert exc_image_membership(b, image_generators(b)[0].target.one() * 7).member


def test_series_object_truncation():
    s = GeneratingSeries(1, 0, (), (Weight((1,), ()),))
    assert [str(p) for p in s.expand(3)] == ["1", "x1", "x1^2", "x1^3"]
