"""Weyl character formula for the reductive algebras g~ and g_0."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootdata import CLASSICAL, AlgebraDatum, AlgebraError
from .weightlat import LaurentPoly, Weight


class NotDominant(ValueError):
    pass


@dataclass(frozen=True)
class TildeDatum:
    """Positive roots and rho of g~ (or of g_0), sharing W with the ambient algebra."""

    algebra: AlgebraDatum
    pos_roots: tuple[Weight, ...]
    rho_tilde: Weight
    system: str = "g_tilde"

    @property
    def weyl(self):
        return self.algebra.weyl_elements


def build_tilde(a: AlgebraDatum) -> TildeDatum:
    if a.family not in CLASSICAL:
        raise AlgebraError(f"g~ is only built for gl, sl and osp, not {a}")
    return TildeDatum(a, a.tilde_pos_roots, a.rho_tilde, "g_tilde")


def build_even(a: AlgebraDatum) -> TildeDatum:
    return TildeDatum(a, a.pos_even_roots, a.rho0, "g0")


def coroot_pairings(t: TildeDatum, mu: Weight) -> list[Fraction]:
    a = t.algebra
    return [2 * a.form(mu, al) / a.form(al, al) for al in t.pos_roots]


def is_integral_dominant(t: TildeDatum, mu: Weight) -> bool:
    return all(c >= 0 and c.denominator == 1 for c in coroot_pairings(t, mu))


def _alternating_sum(t: TildeDatum, nu: Weight) -> LaurentPoly:
    a = t.algebra
    out: dict[Weight, int] = {}
    for w in t.weyl:
        k = w.act(nu)
        out[k] = out.get(k, 0) + w.sign
    f = a.zero()
    for k, c in out.items():
        if c:
            f = f + a.mono(k, c)
    return a.normalize(f)


@lru_cache(maxsize=None)
def weyl_denominator(t: TildeDatum) -> LaurentPoly:
    return _alternating_sum(t, t.rho_tilde)


@lru_cache(maxsize=4096)
def char_irrep(t: TildeDatum, mu: Weight) -> LaurentPoly:
    """ch L(mu) as alternating sum over W divided exactly by the Weyl denominator."""
    if not is_integral_dominant(t, mu):
        raise NotDominant(f"{mu} is not integral dominant for the {t.system} system of {t.algebra}")
    a = t.algebra
    num = _alternating_sum(t, mu + t.rho_tilde)
    return num.exact_divide(weyl_denominator(t), a.order)


def weyl_dimension(t: TildeDatum, mu: Weight) -> Fraction:
    a = t.algebra
    d = Fraction(1)
    for al in t.pos_roots:
        d *= a.form(mu + t.rho_tilde, al) / a.form(t.rho_tilde, al)
    return d


def char_decompose(t: TildeDatum, g: LaurentPoly, max_steps: int = 100000, char_fn=None) -> dict[Weight, int]:
    """Peel off highest weights greedily; keys are dominant weights.

    ``char_fn(mu)`` replaces ``char_irrep(t, mu)`` when given; it must have
    leading term e^mu with coefficient 1.
    """
    char_fn = char_fn or (lambda mu: char_irrep(t, mu))
    a = t.algebra
    g = a.normalize(g)
    out: dict[Weight, int] = {}
    steps = 0
    while not g.is_zero():
        mu, c = g.leading_term(a.order)
        if not is_integral_dominant(t, mu):
            raise NotDominant(f"leading weight {mu} of the remainder is not dominant")
        out[mu] = out.get(mu, 0) + c
        g = g - char_fn(mu) * c
        steps += 1
        if steps > max_steps:
            raise RuntimeError("character decomposition did not terminate")
    return {k: v for k, v in out.items() if v}


def char_recombine(t: TildeDatum, coeffs: dict[Weight, int]) -> LaurentPoly:
    f = t.algebra.zero()
    for mu, c in coeffs.items():
        f = f + char_irrep(t, mu) * c
    return f
