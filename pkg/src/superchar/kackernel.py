"""The basis k(lambda) of Ker ds_x and decomposition of kernel elements."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .dshom import build_ds
from .rootdata import CLASSICAL, AlgebraDatum, AlgebraError
from .superring import is_w_invariant
from .weightlat import LaurentPoly, NotDivisible, Weight, one_minus
from .weylchar import NotDominant, build_even, build_tilde, char_decompose, char_irrep, is_integral_dominant


class NotInKernel(ValueError):
    """A kernel decomposition failed; ``reason`` says which step."""

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


def _check_family(a: AlgebraDatum):
    if a.family not in CLASSICAL:
        raise AlgebraError(f"the kernel basis is only implemented for gl, sl and osp, not {a}")


@lru_cache(maxsize=None)
def iso_factor(a: AlgebraDatum) -> LaurentPoly:
    """e^{rho_iso} * prod over positive isotropic alpha of (1 - e^{-alpha})."""
    f = a.mono(a.rho_iso)
    for al in a.iso_pos:
        f = f * one_minus(-al, a.denom)
    return a.normalize(f)


def _tilde_mu(a: AlgebraDatum, lam: Weight):
    _check_family(a)
    t = build_tilde(a)
    mu = lam - a.rho_iso
    if not is_integral_dominant(t, mu):
        raise NotDominant(f"{lam} - rho_iso = {mu} is not dominant for g~ of {a}")
    return t, mu


def _relative_parity(a: AlgebraDatum, v: Weight) -> int:
    return a.parity(v)


def parity_twist(a: AlgebraDatum, f: LaurentPoly, ref: Weight) -> LaurentPoly:
    """Multiply each term e^nu of f by (-1)^{p(nu - ref)}."""
    out = {}
    for e, c in f.terms.items():
        out[e] = -c if _relative_parity(a, f.weight_of(e) - ref) else c
    return f._new(out)


def tilde_char(a: AlgebraDatum, mu: Weight) -> LaurentPoly:
    """Parity-twisted g~ character of highest weight mu.

    For ospB the short roots delta_i of g~ are odd in g, so the twist is
    visible.  It is applied only when the delta part of mu is integral
    (mu in P_0); for half-integral delta parts the twisted sum is not
    W-invariant and the plain character is used.  In every other family all
    roots of g~ are even and this is the plain character.
    """
    ch = char_irrep(build_tilde(a), mu)
    if a.family != "ospB" or any(c.denominator != 1 for c in mu.delta):
        return ch
    return parity_twist(a, ch, mu)


def kac_k(a: AlgebraDatum, lam: Weight) -> LaurentPoly:
    """k(lambda) = e^{rho_iso} prod(1 - e^{-alpha}) * twisted g~ character at lambda - rho_iso."""
    t, mu = _tilde_mu(a, lam)
    return a.normalize(iso_factor(a) * tilde_char(a, mu))


def kac_k_untwisted(a: AlgebraDatum, lam: Weight) -> LaurentPoly:
    """Same product with the ordinary g~ character; differs from k for ospB."""
    t, mu = _tilde_mu(a, lam)
    return a.normalize(iso_factor(a) * char_irrep(t, mu))


def kac_k_alternating(a: AlgebraDatum, lam: Weight) -> LaurentPoly:
    """k(lambda) from the signed alternating sum over W divided by R.

    The sign of ``w`` is ``sgn(w) * (-1)^{p(w(lam+rho) - (lam+rho))}``; the
    difference lies in the root lattice, so its parity is always defined.
    """
    _check_family(a)
    nu = lam + a.rho
    num = a.zero()
    acc: dict[Weight, int] = {}
    for w in a.weyl_elements:
        wn = w.act(nu)
        s = w.sign * (-1) ** _relative_parity(a, wn - nu)
        k = wn - a.rho
        acc[k] = acc.get(k, 0) + s
    for k, c in acc.items():
        if c:
            num = num + a.mono(k, c)
    r0 = a.one()
    for al in a.pos_even_roots:
        r0 = r0 * one_minus(-al, a.denom)
    r1 = a.one()
    for al in a.pos_odd_roots:
        r1 = r1 * one_minus(-al, a.denom)
    return a.normalize(num * r1).exact_divide(a.normalize(r0), a.order)


def sch_kac(a: AlgebraDatum, lam: Weight) -> LaurentPoly:
    """Supercharacter of the Kac module K(lambda) (type I: gl, sl)."""
    if a.family not in ("gl", "sl"):
        raise AlgebraError(f"Kac modules are built for type I algebras gl/sl, not {a}")
    f = char_irrep(build_even(a), lam)
    for b in a.pos_odd_roots:
        f = f * one_minus(-b, a.denom)
    return a.normalize(f)


def kernel_member(a: AlgebraDatum, B, f: LaurentPoly) -> bool:
    d = build_ds(a, B)
    if a.relation is not None:
        # the relation does not survive the literal substitution; restrict to h_x instead
        return d.apply(f).is_zero()
    return d.restrict(f).is_zero()


@dataclass(frozen=True)
class KernelDecomposition:
    algebra: AlgebraDatum
    coeffs: dict = field(hash=False)

    def recombine(self) -> LaurentPoly:
        f = self.algebra.zero()
        for lam, c in self.coeffs.items():
            f = f + kac_k(self.algebra, lam) * c
        return f

    def to_dict(self) -> dict:
        return {str(k): v for k, v in sorted(self.coeffs.items(), key=lambda kv: kv[0].coords, reverse=True)}


def kernel_decompose(a: AlgebraDatum, f: LaurentPoly, mode: str = "algebra") -> KernelDecomposition:
    _check_family(a)
    if mode not in ("algebra", "group"):
        raise ValueError(f"unknown mode {mode!r}")
    f = a.normalize(f)
    w = is_w_invariant(a, f)
    if not w.ok:
        raise NotInKernel("not W-invariant", f"fails under {w.witness}")
    try:
        q = f.exact_divide(iso_factor(a), a.order)
    except NotDivisible as exc:
        raise NotInKernel("not divisible by the isotropic factor", str(exc)) from None
    try:
        parts = char_decompose(build_tilde(a), q, char_fn=lambda mu: tilde_char(a, mu))
    except NotDominant as exc:
        raise NotInKernel("non-dominant peeling step", str(exc)) from None
    coeffs = {a.normalize_weight(mu + a.rho_iso): c for mu, c in parts.items()}
    if mode == "group":
        for lam in coeffs:
            shifted = a.normalize_weight(lam - a.rho_iso)
            if any(c.denominator != 1 for c in shifted.coords):
                raise NotInKernel("group lattice violation", f"{lam} - rho_iso is not integral")
    return KernelDecomposition(a, coeffs)
