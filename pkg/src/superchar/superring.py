"""Membership in the supercharacter rings J_g and J_G."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rootdata import AlgebraDatum, AlgebraError, Reducer, WeylElement
from .weightlat import LaurentPoly


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class MembershipReport:
    w_invariant: bool
    supersymmetric: bool
    witness: object = None

    @property
    def member(self) -> bool:
        return self.w_invariant and self.supersymmetric

    def to_dict(self) -> dict:
        return {"member": self.member, "w_invariant": self.w_invariant,
                "supersymmetric": self.supersymmetric,
                "witness": None if self.witness is None else str(self.witness)}


def is_w_invariant(a: AlgebraDatum, f: LaurentPoly) -> CheckResult:
    """Check invariance under the simple-reflection generators of W."""
    f = a.normalize(f)
    for w in a.weyl_generators:
        if not a.equal(w.act_poly(f), f):
            return CheckResult(False, w)
    return CheckResult(True)


@dataclass(frozen=True)
class SupersymmetryWitness:
    root: object
    class_rep: tuple
    pairing: Fraction
    coefficient_sum: int

    def __str__(self) -> str:
        return (f"t-dependent: along isotropic root {self.root} the terms congruent to "
                f"{list(map(str, self.class_rep))} (pairing {self.pairing}) sum to {self.coefficient_sum}")


def _strata(a: AlgebraDatum, f: LaurentPoly, beta) -> dict:
    vecs = [beta.coords]
    if a.relation is not None:
        vecs.append(a.relation.coords)
    red = Reducer(vecs)
    out: dict[tuple, list] = {}
    for e, c in f.terms.items():
        lam = f.weight_of(e)
        key = red.reduce(lam.coords)
        tau = a.form(lam, beta)
        slot = out.setdefault(key, [tau, 0])
        slot[1] += c
    return out


def is_supersymmetric(a: AlgebraDatum, f: LaurentPoly) -> CheckResult:
    """t-independence of f along every positive isotropic root.

    Moving along the direction dual to an isotropic root beta inside the
    hyperplane beta = 0 multiplies ``e^lam`` by ``t^{(lam, beta)}``.  Terms
    congruent modulo beta restrict to the same function on the hyperplane and
    share ``(lam, beta)``, so f is t-independent iff each class with nonzero
    pairing has zero coefficient sum.
    """
    f = a.normalize(f)
    for beta in a.iso_pos:
        for key, (tau, s) in _strata(a, f, beta).items():
            if tau != 0 and s != 0:
                return CheckResult(False, SupersymmetryWitness(beta, key, tau, s))
    return CheckResult(True)


def membership(a: AlgebraDatum, f: LaurentPoly) -> MembershipReport:
    w = is_w_invariant(a, f)
    s = is_supersymmetric(a, f)
    witness = None
    if not w.ok:
        witness = f"not W-invariant under {w.witness}"
    elif not s.ok:
        witness = s.witness
    return MembershipReport(w.ok, s.ok, witness)


def _sign_flip(a: AlgebraDatum, i: int) -> WeylElement:
    em = tuple(tuple((-1 if r == i else 1) if r == c else 0 for c in range(a.m)) for r in range(a.m))
    dm = tuple(tuple(int(r == c) for c in range(a.n)) for r in range(a.n))
    return WeylElement(em, dm, -1)


def is_in_JG(a: AlgebraDatum, f: LaurentPoly) -> CheckResult:
    """Membership in the supergroup ring: integral lattice plus J_g conditions."""
    if a.family not in ("gl", "sl", "ospB", "ospC", "ospD"):
        raise AlgebraError(f"group rings are only described for gl, sl and osp, not {a}")
    g = a.normalize(f)
    if not g.is_integral():
        return CheckResult(False, "non-integral exponents (outside the group lattice)")
    if a.family in ("ospB", "ospC", "ospD"):
        for i in range(a.m):
            w = _sign_flip(a, i)
            if not a.equal(w.act_poly(g), g):
                return CheckResult(False, f"not invariant under x{i + 1} -> 1/x{i + 1}")
    rep = membership(a, g)
    if not rep.member:
        return CheckResult(False, rep.witness)
    return CheckResult(True)
