"""Seeded property suites shared by ``superchar verify`` and the tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .corpus import random_member
from .dshom import DsMap, _representative, build_ds
from .generators import exc_image_elements, exc_image_membership, image_generators, verify_generator_transfer
from .kackernel import kac_k, kernel_decompose, kernel_member
from .rootdata import CLASSICAL, AlgebraDatum, iso_set_validate
from .superring import membership
from .weightlat import Weight
from .weylchar import build_tilde, is_integral_dominant


@dataclass
class SuiteReport:
    name: str
    algebra: str
    seed: int | None
    checks: int = 0
    failures: int = 0
    first_counterexample: str | None = None
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def record(self, passed: bool, what: str = "") -> None:
        self.checks += 1
        if not passed:
            self.failures += 1
            if self.first_counterexample is None:
                self.first_counterexample = what

    def to_dict(self) -> dict:
        return {"suite": self.name, "algebra": self.algebra, "seed": self.seed,
                "checks": self.checks, "failures": self.failures,
                "first_counterexample": self.first_counterexample, **self.details}


def default_roots(a: AlgebraDatum, k: int = 1) -> list[Weight]:
    """A valid isotropic set of size k: e_{m-i} - d_{1+i} style for classical."""
    if a.family not in CLASSICAL:
        return [_representative(a)]
    roots = []
    for i in range(k):
        r = a.m - 1 - i
        w = a.weight(tuple(1 if j == r else 0 for j in range(a.m)), tuple(-1 if j == i else 0 for j in range(a.n)))
        roots.append(a.normalize_weight(w))
    iso_set_validate(a, roots)
    return roots


def realization_check(a: AlgebraDatum, d: DsMap, f) -> bool:
    """ds agrees with literal substitution at the representative followed by projection."""
    if d.conj is None:
        return d.target.equal(d.apply(f), d.project(a.normalize(f).substitute(d.rules)))
    return True


def homomorphism_suite(a: AlgebraDatum, roots=None, seed: int = 0, count: int = 50) -> SuiteReport:
    rng = random.Random(seed)
    roots = roots or default_roots(a)
    d = build_ds(a, roots)
    t = d.target
    rep = SuiteReport("homomorphism", str(a), seed)
    for i in range(count):
        f, g = random_member(a, rng), random_member(a, rng)
        df, dg = d.apply(f), d.apply(g)
        rep.record(t.equal(d.apply(f + g), df + dg), f"pair {i}: additivity")
        rep.record(t.equal(d.apply(f * g), df * dg), f"pair {i}: multiplicativity")
        rep.record(df.eval_at_one() == a.normalize(f).eval_at_one(), f"pair {i}: superdimension")
        rep.record(realization_check(a, d, f), f"pair {i}: substitution realization")
    return rep


def transfer_suite(a: AlgebraDatum, roots=None, K: int = 5) -> SuiteReport:
    roots = roots or default_roots(a)
    rep = SuiteReport("transfer", str(a), None, details={"K": K})
    res = verify_generator_transfer(a, roots, K)
    rep.record(res.ok, str(res.witness))
    return rep


def exceptional_suite(a: AlgebraDatum, seed: int = 0, count: int = 10) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("exceptional", str(a), seed)
    d, gens = image_generators(a)
    for name, el in exc_image_elements(a).items():
        mem = membership(a, el)
        rep.record(mem.member, f"{name} not in J_g: {mem.witness}")
    for i in range(count):
        f = random_member(a, rng)
        img = d.apply(f)
        rep.record(membership(a, f).member, f"sample {i} not in J_g")
        res = exc_image_membership(a, img)
        rep.record(res.member, f"sample {i}: image {img} not in the generated ring")
    return rep


def random_tilde_dominant(a: AlgebraDatum, rng: random.Random, lo: int = -2, hi: int = 3):
    t = build_tilde(a)
    while True:
        mu = Weight.from_coords([rng.randint(lo, hi) for _ in range(a.m + a.n)], a.m)
        if is_integral_dominant(t, mu):
            return a.normalize_weight(mu)


def kernel_suite(a: AlgebraDatum, roots=None, seed: int = 0, count: int = 20) -> SuiteReport:
    rng = random.Random(seed)
    roots = roots or default_roots(a)
    rep = SuiteReport("kernel", str(a), seed)
    for i in range(count):
        coeffs: dict[Weight, int] = {}
        for _ in range(rng.randint(1, 3)):
            lam = a.normalize_weight(random_tilde_dominant(a, rng, 0, 2) + a.rho_iso)
            coeffs[lam] = coeffs.get(lam, 0) + rng.choice([-3, -2, -1, 1, 2, 3])
        coeffs = {k: v for k, v in coeffs.items() if v}
        f = a.zero()
        for lam, c in coeffs.items():
            f = f + kac_k(a, lam) * c
        rep.record(kernel_member(a, roots, f), f"combination {i} not in the kernel")
        got = kernel_decompose(a, f).coeffs if not f.is_zero() else {}
        rep.record(got == coeffs, f"combination {i}: decomposed to {got}")
    return rep
