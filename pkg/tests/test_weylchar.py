import itertools

import pytest

from superchar.weightlat import Weight
from superchar.weylchar import (
    NotDominant,
    build_even,
    build_tilde,
    char_decompose,
    char_irrep,
    char_recombine,
    is_integral_dominant,
    weyl_dimension,
)
from superchar.superring import is_w_invariant
from conftest import P, alg


def test_tilde_root_systems():
    a = alg("gl(2|1)")
    assert set(build_tilde(a).pos_roots) == {Weight.parse("1,-1|0", 2, 1)}
    b = alg("osp(3|2)")
    assert set(build_tilde(b).pos_roots) == {Weight.parse("1|0", 1, 1), Weight.parse("0|1", 1, 1)}
    c = alg("osp(4|2)")
    assert set(build_tilde(c).pos_roots) == set(c.pos_even_roots)


def test_char_irrep_examples():
    a = alg("gl(2|1)")
    t = build_tilde(a)
    assert char_irrep(t, Weight.zero(2, 1)) == a.one()
    assert char_irrep(t, Weight.parse("1,0|0", 2, 1)) == P(a, "x1 + x2")
    b = alg("osp(3|2)")
    assert char_irrep(build_tilde(b), Weight.parse("0|1", 1, 1)) == P(b, "y1 + 1 + y1^-1")


def test_char_irrep_rejects_non_dominant():
    a = alg("gl(2|1)")
    with pytest.raises(NotDominant):
        char_irrep(build_tilde(a), Weight.parse("0,1|0", 2, 1))


def test_decompose_examples():
    a = alg("gl(2|1)")
    t = build_tilde(a)
    got = char_decompose(t, P(a, "(x1 + x2)^2"))
    assert got == {Weight.parse("2,0|0", 2, 1): 1, Weight.parse("1,1|0", 2, 1): 1}
    assert char_decompose(t, a.zero()) == {}
    mu = Weight.parse("3,-1|2", 2, 1)
    assert char_decompose(t, char_irrep(t, mu)) == {mu: 1}


def _dominant(t, rng=range(0, 3)):
    a = t.algebra
    for c in itertools.product(rng, repeat=a.m + a.n):
        mu = Weight.from_coords(c, a.m)
        if is_integral_dominant(t, mu):
            yield mu


@pytest.mark.parametrize("name", ["gl(2|1)", "osp(3|2)", "osp(4|2)", "osp(2|4)", "osp(5|2)", "sl(3|1)"])
def test_dimension_formula_and_invariance(name):
    a = alg(name)
    t = build_tilde(a)
    for mu in _dominant(t):
        ch = char_irrep(t, mu)
        assert ch.eval_at_one() == weyl_dimension(t, mu)
        assert a.normalize(ch).coefficient(a.normalize_weight(mu)) == 1
        assert is_w_invariant(a, ch)


@pytest.mark.parametrize("name", ["gl(2|1)", "osp(3|2)", "osp(4|2)"])
def test_tensor_products_positive(name):
    a = alg(name)
    t = build_tilde(a)
    ws = list(_dominant(t, range(0, 2)))
    for mu, nu in itertools.product(ws, repeat=2):
        prod = char_irrep(t, mu) * char_irrep(t, nu)
        dec = char_decompose(t, prod)
        assert all(c > 0 for c in dec.values())
        assert sum(c * weyl_dimension(t, k) for k, c in dec.items()) == weyl_dimension(t, mu) * weyl_dimension(t, nu)
        assert a.equal(char_recombine(t, dec), prod)


def test_even_datum_for_gl():
    a = alg("gl(2|2)")
    e = build_even(a)
    assert set(e.pos_roots) == set(a.pos_even_roots)
