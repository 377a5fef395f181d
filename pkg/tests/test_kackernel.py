import itertools

import pytest

from superchar.generators import gens_hk
from superchar.kackernel import (
    NotInKernel,
    iso_factor,
    kac_k,
    kac_k_alternating,
    kac_k_untwisted,
    kernel_decompose,
    kernel_member,
    sch_kac,
)
from superchar.rootdata import AlgebraError, parse_root, parse_weight
from superchar.superring import membership
from superchar.weightlat import Weight
from superchar.weylchar import NotDominant, build_tilde, is_integral_dominant
from conftest import P, alg


def lams(a, hi=3):
    t = build_tilde(a)
    for c in itertools.product(range(hi), repeat=a.m + a.n):
        mu = Weight.from_coords(c, a.m)
        if is_integral_dominant(t, mu):
            yield a.normalize_weight(mu + a.rho_iso)


def test_gl11_example():
    a = alg("gl(1|1)")
    k = kac_k(a, parse_weight("1/2|-1/2", a))
    assert k == P(a, "x1^1/2*y1^-1/2 - x1^-1/2*y1^1/2")


def test_gl21_rho_iso_example():
    a = alg("gl(2|1)")
    k = kac_k(a, a.rho_iso)
    assert k == P(a, "(x1*x2)^1/2*y1^-1*(1 - y1/x1)*(1 - y1/x2)")
    assert a.equal(kac_k_alternating(a, a.rho_iso), k)


def test_sch_kac_examples():
    a = alg("gl(2|1)")
    zero = parse_weight("0,0|0", a)
    assert sch_kac(a, zero) == P(a, "(1 - y1/x1)*(1 - y1/x2)")
    b = alg("gl(1|1)")
    assert sch_kac(b, parse_weight("0|0", b)) == P(b, "1 - y1/x1")
    for lam in [parse_weight("2,1|-3", a), parse_weight("0,-1|1", a)]:
        assert sch_kac(a, lam).eval_at_one() == 0
    with pytest.raises(AlgebraError):
        sch_kac(alg("osp(3|2)"), parse_weight("0|0", alg("osp(3|2)")))


def test_sch_kac_relation_to_k():
    a = alg("gl(2|1)")
    zero = parse_weight("0,0|0", a)
    s = sch_kac(a, zero)
    assert a.equal(s, a.mono(-a.rho_iso) * kac_k(a, a.rho_iso))
    assert kernel_decompose(a, s).coeffs == {zero: 1}
    assert a.equal(s, kac_k(a, zero))


def test_kernel_member_examples():
    a = alg("gl(2|1)")
    B = [parse_root("e2-d1", a)]
    assert kernel_member(a, B, kac_k(a, a.rho_iso))
    assert not kernel_member(a, B, gens_hk(a, 1)[0])
    assert kernel_member(a, B, a.zero())


def test_decompose_examples():
    a = alg("gl(2|1)")
    l1 = a.rho_iso
    l2 = a.rho_iso + parse_weight("1,-1|0", a)
    f = kac_k(a, l1) * 2 + kac_k(a, l2) * 3
    assert kernel_decompose(a, f).coeffs == {l1: 2, l2: 3}
    assert kernel_decompose(a, kac_k(a, l2)).coeffs == {l2: 1}


def test_decompose_errors():
    a = alg("gl(2|1)")
    with pytest.raises(NotInKernel) as e:
        kernel_decompose(a, P(a, "x1"))
    assert e.value.reason == "not W-invariant"
    with pytest.raises(NotInKernel) as e:
        kernel_decompose(a, gens_hk(a, 1)[0])
    assert e.value.reason == "not divisible by the isotropic factor"
    with pytest.raises(NotInKernel) as e:
        kernel_decompose(a, kac_k(a, a.rho_iso + parse_weight("1/2,1/2|0", a)), mode="group")
    assert e.value.reason == "group lattice violation"
    assert kernel_decompose(a, kac_k(a, a.rho_iso), mode="group").coeffs == {a.rho_iso: 1}


def test_non_dominant_and_exceptional():
    a = alg("gl(2|1)")
    with pytest.raises(NotDominant):
        kac_k(a, parse_weight("0,1|0", a))
    with pytest.raises(AlgebraError):
        kac_k(alg("G(3)"), alg("G(3)").rho)


@pytest.mark.parametrize("name", ["gl(2|1)", "gl(2|2)", "sl(3|2)", "osp(1|2)", "osp(3|2)", "osp(4|2)", "osp(2|2)", "osp(2|4)"])
def test_routes_agree_and_triangular(name):
    a = alg(name)
    for lam in lams(a):
        k = kac_k(a, lam)
        assert a.equal(k, kac_k_alternating(a, lam))
        assert a.normalize(k).leading_term(a.order) == (lam, 1)
        assert membership(a, k).member


def test_untwisted_product_differs_only_for_B_type():
    for name, differs in [("osp(3|2)", True), ("osp(1|2)", True), ("osp(4|2)", False), ("gl(2|2)", False)]:
        a = alg(name)
        mism = sum(not a.equal(kac_k(a, lam), kac_k_untwisted(a, lam)) for lam in lams(a))
        assert (mism > 0) == differs


def test_osp12_twist_is_visible():
    a = alg("osp(1|2)")
    delta = parse_weight("|1", a)
    assert kac_k(a, delta) == P(a, "y1 - 1 + y1^-1")
    assert kac_k_untwisted(a, delta) == P(a, "y1 + 1 + y1^-1")


def test_completeness_for_random_products():
    a = alg("osp(4|2)")
    t = build_tilde(a)
    from superchar.weylchar import char_irrep
    mus = [mu for mu in (Weight.from_coords(c, a.m) for c in itertools.product(range(2), repeat=3))
           if is_integral_dominant(t, mu)]
    for mu, nu in itertools.product(mus, repeat=2):
        f = iso_factor(a) * char_irrep(t, mu) * char_irrep(t, nu)
        dec = kernel_decompose(a, f)
        assert a.equal(dec.recombine(), f)
        assert kernel_member(a, [parse_root("e2-d1", a)], f)
