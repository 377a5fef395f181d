"""Seeded random elements of supercharacter rings for property checks."""

from __future__ import annotations

import random

from .generators import all_generators, exc_image_elements
from .rootdata import AlgebraDatum
from .weightlat import LaurentPoly, Weight


def orbit_sum(a: AlgebraDatum, w: Weight) -> LaurentPoly:
    orbit = {g.act(w) for g in a.weyl_elements}
    f = a.zero()
    for v in orbit:
        f = f + a.mono(v)
    return f


def random_classical_member(a: AlgebraDatum, rng: random.Random, K: int = 3,
                            max_terms: int = 3, max_factors: int = 2) -> LaurentPoly:
    """Integer combination of products of generators h_k (plus gl units)."""
    gens = all_generators(a, K)
    f = a.zero()
    for _ in range(rng.randint(1, max_terms)):
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        term = a.one()
        for _ in range(rng.randint(1, max_factors)):
            term = term * rng.choice(gens)
        f = f + term * c
    return a.normalize(f)


def _random_small_weight(a: AlgebraDatum, rng: random.Random, bound: int = 1) -> Weight:
    return Weight.from_coords([rng.randint(-bound, bound) for _ in range(a.m + a.n)], a.m)


def random_exceptional_member(a: AlgebraDatum, rng: random.Random) -> LaurentPoly:
    """g(w...) + P*h with P the vanishing factor and h a W-orbit sum."""
    el = exc_image_elements(a)
    if a.family == "G3":
        ws, vanish = [el["w"]], el["P"]
    elif a.family == "F4":
        ws, vanish = [el["w1"], el["w2"]], el["Q"]
    else:
        ws, vanish = [el["w_alpha"]], el["Q"]
    g = LaurentPoly.const(rng.randint(-3, 3), a.m, a.n, a.denom)
    for w in ws:
        g = g + w * rng.randint(-2, 2)
    if rng.random() < 0.5:
        g = g + ws[0] * ws[-1] * rng.choice([-1, 1])
    h = orbit_sum(a, _random_small_weight(a, rng)) * rng.choice([-2, -1, 1, 2])
    return g + vanish * h


def random_member(a: AlgebraDatum, rng: random.Random) -> LaurentPoly:
    if a.family in ("G3", "F4", "D21a"):
        return random_exceptional_member(a, rng)
    return random_classical_member(a, rng)
