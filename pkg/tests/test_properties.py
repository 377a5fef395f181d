"""Randomized algebraic laws (hypothesis)."""


from hypothesis import given, settings, strategies as st

from superchar.polyio import format_poly, parse_poly, poly_from_json, poly_to_json
from superchar.weightlat import Weight
from conftest import alg

GL21 = alg("gl(2|1)")

exps = st.fractions(min_value=-3, max_value=3, max_denominator=2)
weights = st.tuples(exps, exps, exps).map(lambda c: Weight.from_coords(c, 2))
polys = st.dictionaries(weights, st.integers(-5, 5), max_size=5).map(
    lambda d: sum((GL21.mono(w, c) for w, c in d.items()), GL21.zero()))


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == GL21.zero()


@given(polys)
def test_text_and_json_round_trip(f):
    assert parse_poly(format_poly(f), 2, 1) == f
    assert poly_from_json(poly_to_json(f)) == f


@settings(deadline=None)
@given(polys, polys)
def test_exact_division_recovers_factor(f, g):
    if g.is_zero():
        return
    assert (f * g).exact_divide(g, GL21.order) == f


@settings(deadline=None)
@given(polys)
def test_eval_at_one_is_ring_map(f):
    g = GL21.mono(Weight.parse("1,0|-1", 2, 1)) - GL21.one()
    assert (f * g).eval_at_one() == f.eval_at_one() * g.eval_at_one()


@given(polys, st.integers(-3, 3))
def test_substitution_is_ring_map(f, c):
    from superchar.weightlat import SubstitutionRule
    r = SubstitutionRule(1, (0, 0, 1))
    g = f * c + f * f
    assert g.substitute([r]) == f.substitute([r]) * c + f.substitute([r]) * f.substitute([r])


@given(weights, weights)
def test_leading_term_of_product(u, v):
    f = GL21.mono(u) + GL21.mono(u - Weight.parse("1,-1|0", 2, 1)) * 3
    g = GL21.mono(v) - GL21.mono(v - Weight.parse("0,1|-1", 2, 1))
    assert (f * g).leading_term(GL21.order) == (u + v, 1)


@given(weights)
def test_weyl_action_is_ring_map(w):
    f = GL21.mono(w) + GL21.mono(w * 2) * 3
    for s in GL21.weyl_elements:
        assert s.act_poly(f * f) == s.act_poly(f) * s.act_poly(f)
