"""The ring homomorphism ds_x on supercharacters, realized by substitution."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .rootdata import (
    CLASSICAL,
    AlgebraDatum,
    AlgebraError,
    IsoSet,
    WeylElement,
    build_algebra,
    iso_set_validate,
)
from .weightlat import LaurentPoly, SubstitutionRule, Weight


class DsError(ValueError):
    pass


def _representative(a: AlgebraDatum) -> Weight:
    if a.family == "F4":
        return a.weight((1, 1, 1), (-1,))
    if a.family == "G3":
        return a.weight((-1, -1), (1,))
    if a.family == "D21a":
        return a.weight((1, -1, -1))
    raise AlgebraError(f"no fixed representative root for {a}")


def _pivot(a: AlgebraDatum, beta: Weight) -> int:
    """Coordinate eliminated by the rule for ``beta``."""
    if a.family in ("F4", "G3"):
        return a.m
    if a.family == "D21a":
        return 0
    nz = [i for i, c in enumerate(beta.eps) if c]
    if len(nz) != 1 or abs(beta.eps[nz[0]]) != 1:
        raise DsError(f"{beta} is not of the form +-eps_r +- delta_s")
    return nz[0]


def rule_for(a: AlgebraDatum, beta: Weight) -> SubstitutionRule:
    """Substitution realizing the hyperplane beta = 0."""
    i = _pivot(a, beta)
    bi = beta.coords[i]
    rep = [Fraction(int(j == i)) - c / bi for j, c in enumerate(beta.coords)]
    return SubstitutionRule(i, tuple(rep))


def _target_of(a: AlgebraDatum, k: int) -> AlgebraDatum:
    fam = a.family
    if fam in ("gl", "sl"):
        return build_algebra(fam, a.m - k, a.n - k)
    if fam == "ospB":
        return build_algebra("ospB", a.m - k, a.n - k)
    if fam in ("ospC", "ospD"):
        mm = a.m - k
        return build_algebra("ospC" if mm == 1 else "ospD", mm, a.n - k)
    if fam == "F4":
        return build_algebra("sl", 3, 0)
    if fam == "G3":
        return build_algebra("sl", 2, 0)
    if fam == "D21a":
        return build_algebra("torus", 2, 0)
    raise AlgebraError(f"ds is not defined for {a}")


@dataclass(frozen=True)
class DsMap:
    """ds_x for x in the span of root vectors of ``B``.

    ``rules`` realize the restriction to beta_1 = ... = beta_k = 0; ``keep``
    lists the surviving source coordinates in target order.  For exceptional
    algebras and a non-representative root, ``conj`` maps the representative
    onto the chosen root, and ``apply`` pulls back along it.
    """

    source: AlgebraDatum
    B: IsoSet
    target: AlgebraDatum
    rules: tuple[SubstitutionRule, ...]
    keep: tuple[int, ...]
    conj: WeylElement | None = None
    rep_rules: tuple[SubstitutionRule, ...] = ()

    def restrict(self, f: LaurentPoly) -> LaurentPoly:
        """Literal substitution along ``rules`` (no relabeling)."""
        return f.substitute(self.rules)

    def project(self, f: LaurentPoly) -> LaurentPoly:
        keep = self.keep
        m_t = self.target.m
        p = f.map_exponents(lambda e: tuple(e[i] for i in keep), m_t, self.target.n)
        return self.target.normalize(p)

    def apply(self, f: LaurentPoly) -> LaurentPoly:
        f = self.source.normalize(f)
        if self.conj is not None:
            inv = _inverse(self.source, self.conj)
            return self.project(inv.act_poly(f).substitute(self.rep_rules))
        return self.project(self.restrict(f))

    def map_weight(self, w: Weight) -> Weight:
        if self.conj is not None:
            raise DsError("weights are only transported for classical algebras")
        v = w.coords
        for r in self.rules:
            c = v[r.index]
            v = tuple(x + c * y if j != r.index else Fraction(0) for j, (x, y) in enumerate(zip(v, r.replacement)))
        return Weight.from_coords([v[i] for i in self.keep], self.target.m)

    def __str__(self) -> str:
        return f"ds[{self.source} -> {self.target} along {self.B}]"


def _inverse(a: AlgebraDatum, w: WeylElement) -> WeylElement:
    for u in a.weyl_elements:
        if (u * w).is_identity():
            return u
    raise AlgebraError("Weyl element has no inverse in the enumerated group")


def build_ds(a: AlgebraDatum, B: IsoSet | Sequence[Weight]) -> DsMap:
    if not isinstance(B, IsoSet):
        B = iso_set_validate(a, B)
    else:
        B = iso_set_validate(a, B.roots)
    k = len(B)
    target = _target_of(a, k)
    if a.family in CLASSICAL:
        rules = tuple(rule_for(a, b) for b in B)
        drop = set()
        for b in B:
            drop.update(i for i, c in enumerate(b.coords) if c)
        keep = tuple(i for i in range(a.m + a.n) if i not in drop)
        return DsMap(a, B, target, rules, keep)
    if k != 1:
        raise DsError(f"{a} has defect 1; B must be a single root")
    beta = B.roots[0]
    rep = _representative(a)
    rep_rule = (rule_for(a, rep),)
    keep = tuple(i for i in range(a.m + a.n) if i != _pivot(a, rep))
    conj = None
    if beta != rep:
        conj = next((w for w in a.weyl_elements if w.act(rep) == beta), None)
        if conj is None:
            raise DsError(f"{beta} is not W-conjugate to {rep}")
    return DsMap(a, B, target, (rule_for(a, beta),), keep, conj, rep_rule)


def ds_apply(d: DsMap, f: LaurentPoly) -> LaurentPoly:
    return d.apply(f)


def iterate_ds(a: AlgebraDatum, roots: Sequence[Weight], f: LaurentPoly):
    """Apply single-root maps one at a time, transporting later roots."""
    cur_alg, cur = a, f
    pending = list(roots)
    while pending:
        beta = pending.pop(0)
        d = build_ds(cur_alg, [beta])
        cur = d.apply(cur)
        pending = [d.map_weight(b) for b in pending]
        cur_alg = d.target
    return cur_alg, cur


def ds_compose_check(a: AlgebraDatum, B: IsoSet | Sequence[Weight], f: LaurentPoly) -> bool:
    """One-shot ds equals every ordering of the iterated single-root maps."""
    roots = tuple(B.roots if isinstance(B, IsoSet) else B)
    d = build_ds(a, roots)
    one_shot = d.apply(f)
    for perm in permutations(roots):
        tgt, g = iterate_ds(a, perm, f)
        if tgt.family != d.target.family or (tgt.m, tgt.n) != (d.target.m, d.target.n):
            return False
        if not d.target.equal(g, one_shot):
            return False
    return True
