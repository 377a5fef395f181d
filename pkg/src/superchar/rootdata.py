"""Root data, invariant forms and Weyl groups of the supported superalgebras.

Coordinates follow the eps/delta basis with two exceptions:

* ``G3`` stores only eps_1, eps_2; eps_3 is ``-eps_1 - eps_2``.
* ``F4`` stores half-vectors eps_i/2 and delta/2, so the variables
  ``x_i = e^{eps_i/2}`` and ``y = e^{delta/2}`` have unit exponents.

``torus`` is a rank-r abelian algebra with no roots; it receives the image
of ds for D(2,1;alpha).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product as iproduct
from typing import Iterator, Sequence

from .weightlat import LatticeError, LaurentPoly, MonomialOrder, Weight

FAMILIES = ("gl", "sl", "ospB", "ospC", "ospD", "D21a", "F4", "G3", "torus")
CLASSICAL = ("gl", "sl", "ospB", "ospC", "ospD")
EXCEPTIONAL = ("D21a", "F4", "G3")

DEFAULT_WEYL_BOUND = 10**5


class AlgebraError(ValueError):
    """Invalid algebra parameters or an unsupported operation for a family."""


class WeylGroupTooLarge(RuntimeError):
    pass


F = Fraction


def _diag(vals) -> tuple[tuple[Fraction, ...], ...]:
    k = len(vals)
    return tuple(tuple(F(vals[i]) if i == j else F(0) for j in range(k)) for i in range(k))


class Reducer:
    """Reduce rational vectors modulo the span of a fixed set of vectors."""

    def __init__(self, vectors: Sequence[Sequence[Fraction]]):
        rows: list[tuple[int, list[Fraction]]] = []
        for v in vectors:
            v = [F(c) for c in v]
            for p, r in rows:
                if v[p]:
                    c = v[p]
                    v = [a - c * b for a, b in zip(v, r)]
            piv = next((i for i in range(len(v) - 1, -1, -1) if v[i]), None)
            if piv is None:
                continue
            c = v[piv]
            v = [a / c for a in v]
            rows = [(p, [a - r[piv] * b for a, b in zip(r, v)]) for p, r in rows]
            rows.append((piv, v))
        self.rows = rows

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> tuple[Fraction, ...]:
        v = [F(c) for c in v]
        for p, r in self.rows:
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, r)]
        return tuple(v)


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element acting blockwise by integer matrices.

    For the classical families the blocks are signed permutation matrices.
    ``sign`` is ``(-1)^{l(w)}``, the determinant of the action.
    """

    eps_matrix: tuple[tuple[int, ...], ...]
    delta_matrix: tuple[tuple[int, ...], ...]
    sign: int

    @property
    def m(self) -> int:
        return len(self.eps_matrix)

    @property
    def n(self) -> int:
        return len(self.delta_matrix)

    @staticmethod
    def _signed_perm(mat):
        out = []
        for row in mat:
            nz = [(j, c) for j, c in enumerate(row) if c]
            if len(nz) != 1 or nz[0][1] not in (1, -1):
                return None
            out.append(nz[0][1] * (nz[0][0] + 1))
        return tuple(out)

    @property
    def eps_perm(self):
        """Signed permutation (1-based, image of row i) or None."""
        return self._signed_perm(self.eps_matrix)

    @property
    def delta_perm(self):
        return self._signed_perm(self.delta_matrix)

    @cached_property
    def _sparse(self):
        rows = []
        for i, row in enumerate(self.eps_matrix):
            rows.append(tuple((j, c) for j, c in enumerate(row) if c))
        m = self.m
        for row in self.delta_matrix:
            rows.append(tuple((m + j, c) for j, c in enumerate(row) if c))
        return tuple(rows)

    def act_vector(self, v: Sequence):
        return tuple(sum(c * v[j] for j, c in row) for row in self._sparse)

    def act(self, w: Weight) -> Weight:
        return Weight.from_coords(self.act_vector(w.coords), self.m)

    def act_poly(self, f: LaurentPoly) -> LaurentPoly:
        sp = self._sparse
        return f.map_exponents(lambda e: tuple([sum(c * e[j] for j, c in row) for row in sp]))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(_matmul(self.eps_matrix, other.eps_matrix),
                           _matmul(self.delta_matrix, other.delta_matrix),
                           self.sign * other.sign)

    def is_identity(self) -> bool:
        return all(all(c == (i == j) for j, c in enumerate(row)) for i, row in enumerate(self.eps_matrix)) and \
            all(all(c == (i == j) for j, c in enumerate(row)) for i, row in enumerate(self.delta_matrix))

    def __str__(self) -> str:
        ep, dp = self.eps_perm, self.delta_perm
        if ep is not None and dp is not None:
            return f"w(eps:{list(ep)}, delta:{list(dp)})"
        return f"w(eps:{[list(r) for r in self.eps_matrix]}, delta:{[list(r) for r in self.delta_matrix]})"


def _matmul(a, b):
    if not a:
        return ()
    k = len(b[0]) if b else 0
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(k)) for i in range(len(a)))


def _identity(k):
    return tuple(tuple(int(i == j) for j in range(k)) for i in range(k))


@dataclass(frozen=True)
class IsoSet:
    roots: tuple[Weight, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __str__(self) -> str:
        return "{" + "; ".join(map(str, self.roots)) + "}"


@dataclass(frozen=True, eq=True)
class AlgebraDatum:
    family: str
    m: int
    n: int
    gram_eps: tuple[tuple[Fraction, ...], ...]
    gram_delta: tuple[tuple[Fraction, ...], ...]
    pos_even_roots: tuple[Weight, ...]
    pos_odd_roots: tuple[Weight, ...]
    height: tuple[int, ...]
    alpha: Fraction | None = None
    relation: Weight | None = None
    denom: int = 2
    label: str = field(default="", compare=False)

    def __str__(self) -> str:
        return self.label or f"{self.family}({self.m}|{self.n})"

    # -- form ----------------------------------------------------------------

    def form(self, a: Weight, b: Weight) -> Fraction:
        s = F(0)
        for i, ai in enumerate(a.eps):
            if ai:
                row = self.gram_eps[i]
                s += ai * sum(row[j] * bj for j, bj in enumerate(b.eps))
        for i, ai in enumerate(a.delta):
            if ai:
                row = self.gram_delta[i]
                s += ai * sum(row[j] * bj for j, bj in enumerate(b.delta))
        return s

    # -- roots ---------------------------------------------------------------

    @cached_property
    def pos_roots(self) -> tuple[Weight, ...]:
        return self.pos_even_roots + self.pos_odd_roots

    @cached_property
    def roots(self) -> frozenset[Weight]:
        return frozenset(self.pos_roots) | frozenset(-a for a in self.pos_roots)

    @cached_property
    def even_roots(self) -> frozenset[Weight]:
        return frozenset(self.pos_even_roots) | frozenset(-a for a in self.pos_even_roots)

    @cached_property
    def odd_roots(self) -> frozenset[Weight]:
        return frozenset(self.pos_odd_roots) | frozenset(-a for a in self.pos_odd_roots)

    @cached_property
    def iso_pos(self) -> tuple[Weight, ...]:
        return tuple(b for b in self.pos_odd_roots if self.form(b, b) == 0)

    @cached_property
    def iso_roots(self) -> frozenset[Weight]:
        return frozenset(self.iso_pos) | frozenset(-b for b in self.iso_pos)

    def is_root(self, v: Weight) -> bool:
        return v in self.roots

    @cached_property
    def rho0(self) -> Weight:
        return _half_sum(self.pos_even_roots, self.m, self.n)

    @cached_property
    def rho1(self) -> Weight:
        return _half_sum(self.pos_odd_roots, self.m, self.n)

    @cached_property
    def rho(self) -> Weight:
        return self.rho0 - self.rho1

    @cached_property
    def rho_iso(self) -> Weight:
        return _half_sum(self.iso_pos, self.m, self.n)

    @cached_property
    def tilde_pos_roots(self) -> tuple[Weight, ...]:
        odd = self.odd_roots
        keep = [a for a in self.pos_even_roots if (a * F(1, 2)) not in odd]
        keep += [a for a in self.pos_odd_roots if self.form(a, a) != 0]
        return tuple(keep)

    @cached_property
    def rho_tilde(self) -> Weight:
        return _half_sum(self.tilde_pos_roots, self.m, self.n)

    @property
    def defect(self) -> int:
        if self.family in ("gl", "sl"):
            return min(self.m, self.n)
        if self.family in ("ospB", "ospC", "ospD"):
            return min(self.m, self.n)
        if self.family in EXCEPTIONAL:
            return 1
        return 0

    # -- lattice helpers -----------------------------------------------------

    @cached_property
    def order(self) -> MonomialOrder:
        return MonomialOrder.for_roots(self.height, self.pos_roots)

    @cached_property
    def _relation_reducer(self) -> Reducer | None:
        return Reducer([self.relation.coords]) if self.relation is not None else None

    def normalize(self, f: LaurentPoly) -> LaurentPoly:
        """Canonical representative modulo the relation (sl-type algebras)."""
        if self.relation is None:
            return f
        s = self.relation.scaled(1)
        piv = max(i for i, c in enumerate(s) if c)
        sp = s[piv]

        def fn(e):
            c = e[piv]
            if not c:
                return e
            if c % sp:
                raise LatticeError("relation elimination left the lattice")
            k = c // sp
            return tuple(x - k * y for x, y in zip(e, s))

        return f.map_exponents(fn)

    def normalize_weight(self, w: Weight) -> Weight:
        if self._relation_reducer is None:
            return w
        return Weight.from_coords(self._relation_reducer.reduce(w.coords), self.m)

    def equal(self, f: LaurentPoly, g: LaurentPoly) -> bool:
        return self.normalize(f - g).is_zero()

    def zero(self) -> LaurentPoly:
        return LaurentPoly.zero(self.m, self.n, self.denom)

    def one(self) -> LaurentPoly:
        return LaurentPoly.const(1, self.m, self.n, self.denom)

    def mono(self, w: Weight, coef: int = 1) -> LaurentPoly:
        from math import lcm

        return LaurentPoly.monomial(w, coef, lcm(self.denom, w.min_denom()))

    def weight(self, eps=(), delta=()) -> Weight:
        eps = tuple(eps) + (0,) * (self.m - len(eps))
        delta = tuple(delta) + (0,) * (self.n - len(delta))
        return Weight(eps, delta)

    def variable_names(self) -> list[str]:
        return [f"x{i + 1}" for i in range(self.m)] + [f"y{j + 1}" for j in range(self.n)]

    def parity(self, v: Weight) -> int:
        return parity(v, self)

    # -- Weyl group ----------------------------------------------------------

    def _reflection_blocks(self):
        eps_refl, delta_refl = [], []
        for a in self.pos_even_roots:
            if any(a.delta) and any(a.eps):
                raise AlgebraError(f"even root {a} mixes blocks")
            aa = self.form(a, a)
            if any(a.eps):
                eps_refl.append(self._reflection(a.eps, self.gram_eps, aa))
            else:
                delta_refl.append(self._reflection(a.delta, self.gram_delta, aa))
        return eps_refl, delta_refl

    @staticmethod
    def _reflection(alpha, gram, aa):
        k = len(alpha)
        # (e_j, alpha) for each basis vector
        pair = [sum(gram[j][t] * alpha[t] for t in range(k)) for j in range(k)]
        cols = []
        for j in range(k):
            c = 2 * pair[j] / aa
            cols.append([F(int(i == j)) - c * alpha[i] for i in range(k)])
        mat = []
        for i in range(k):
            row = []
            for j in range(k):
                v = cols[j][i]
                if v.denominator != 1:
                    raise AlgebraError("reflection is not integral in stored coordinates")
                row.append(int(v))
            mat.append(tuple(row))
        return tuple(mat)

    @cached_property
    def _weyl_blocks(self):
        eps_refl, delta_refl = self._reflection_blocks()
        return (_closure(eps_refl, self.m, DEFAULT_WEYL_BOUND * 10),
                _closure(delta_refl, self.n, DEFAULT_WEYL_BOUND * 10))

    @cached_property
    def weyl_generators(self) -> tuple[WeylElement, ...]:
        eps_refl, delta_refl = self._reflection_blocks()
        ie, idl = _identity(self.m), _identity(self.n)
        gens = [WeylElement(r, idl, -1) for r in dict.fromkeys(eps_refl)]
        gens += [WeylElement(ie, r, -1) for r in dict.fromkeys(delta_refl)]
        return tuple(gens)

    def weyl_order(self) -> int:
        a, b = self._weyl_blocks
        return len(a) * len(b)

    @cached_property
    def weyl_elements(self) -> tuple[WeylElement, ...]:
        return tuple(weyl_group(self, None))


def _closure(gens, k, bound):
    ident = _identity(k)
    seen = {ident: 1}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            s = seen[g]
            for r in gens:
                h = _matmul(r, g)
                if h not in seen:
                    seen[h] = -s
                    nxt.append(h)
                    if len(seen) > bound:
                        raise WeylGroupTooLarge(f"Weyl group block exceeds {bound} elements")
        frontier = nxt
    return list(seen.items())


def _half_sum(roots, m, n) -> Weight:
    s = Weight.zero(m, n)
    for a in roots:
        s = s + a
    return s * F(1, 2)


def weyl_group(a: AlgebraDatum, max_size: int | None = DEFAULT_WEYL_BOUND) -> Iterator[WeylElement]:
    """Enumerate W exactly once per element; raise if |W| exceeds ``max_size``."""
    eb, db = a._weyl_blocks
    if max_size is not None and len(eb) * len(db) > max_size:
        raise WeylGroupTooLarge(f"|W| = {len(eb) * len(db)} exceeds bound {max_size}")
    for (me, se), (md, sd) in iproduct(eb, db):
        yield WeylElement(me, md, se * sd)


def weyl_act(w: WeylElement, lam: Weight) -> Weight:
    return w.act(lam)


def parity(v: Weight, a: AlgebraDatum | None = None) -> int:
    """Linear parity: delta-coordinate sum mod 2 (eps sum for D(2,1;alpha))."""
    if a is not None and a.family == "D21a":
        s = sum(v.eps, F(0))
    else:
        s = sum(v.delta, F(0))
    if s.denominator != 1:
        raise ValueError(f"parity undefined for {v}: coordinate sum {s} is not integral")
    return int(s) % 2


def is_dominant(a: AlgebraDatum, lam: Weight, system: str = "g0") -> bool:
    if system == "g0":
        roots = a.pos_even_roots
    elif system == "g_tilde":
        roots = a.tilde_pos_roots
    else:
        raise ValueError(f"unknown positive system {system!r}")
    return all(2 * a.form(lam, al) / a.form(al, al) >= 0 for al in roots)


def coroot_pairings(a: AlgebraDatum, lam: Weight, system: str = "g0") -> list[Fraction]:
    roots = a.pos_even_roots if system == "g0" else a.tilde_pos_roots
    return [2 * a.form(lam, al) / a.form(al, al) for al in roots]


def iso_set_validate(a: AlgebraDatum, roots: Sequence[Weight]) -> IsoSet:
    roots = tuple(roots)
    for b in roots:
        if b not in a.roots:
            raise AlgebraError(f"{b} is not a root of {a}")
        if b not in a.odd_roots or a.form(b, b) != 0:
            raise AlgebraError(f"{b} is not isotropic")
    for i, b in enumerate(roots):
        for c in roots[i + 1:]:
            if b == c or b == -c:
                raise AlgebraError(f"{b} and {c} coincide up to sign")
            if a.form(b, c) != 0:
                raise AlgebraError(f"{b} and {c} are not orthogonal: pairing {a.form(b, c)}")
            if (b + c) in a.roots or (b - c) in a.roots:
                raise AlgebraError(f"{b} and {c} differ or sum to a root")
    if Reducer([b.coords for b in roots]).rank != len(roots):
        raise AlgebraError("roots are linearly dependent")
    if len(roots) > a.defect:
        raise AlgebraError(f"{len(roots)} roots exceed the defect {a.defect} of {a}")
    return IsoSet(roots)


# -- construction ------------------------------------------------------------

def _w(m, n, pairs) -> Weight:
    c = [F(0)] * (m + n)
    for i, v in pairs:
        c[i] += v
    return Weight.from_coords(c, m)


def _gl_roots(m, n):
    E = lambda i: i
    D = lambda j: m + j
    even = [_w(m, n, [(E(i), 1), (E(j), -1)]) for i in range(m) for j in range(i + 1, m)]
    even += [_w(m, n, [(D(i), 1), (D(j), -1)]) for i in range(n) for j in range(i + 1, n)]
    odd = [_w(m, n, [(E(i), 1), (D(j), -1)]) for i in range(m) for j in range(n)]
    return even, odd


def _osp_roots(m, n, odd_so):
    E = lambda i: i
    D = lambda j: m + j
    even = []
    for i in range(m):
        for j in range(i + 1, m):
            even.append(_w(m, n, [(E(i), 1), (E(j), -1)]))
            even.append(_w(m, n, [(E(i), 1), (E(j), 1)]))
    if odd_so:
        even += [_w(m, n, [(E(i), 1)]) for i in range(m)]
    for i in range(n):
        for j in range(i + 1, n):
            even.append(_w(m, n, [(D(i), 1), (D(j), -1)]))
            even.append(_w(m, n, [(D(i), 1), (D(j), 1)]))
    even += [_w(m, n, [(D(i), 2)]) for i in range(n)]
    odd = []
    if odd_so:
        odd += [_w(m, n, [(D(i), 1)]) for i in range(n)]
    for i in range(n):
        for j in range(m):
            odd.append(_w(m, n, [(D(i), 1), (E(j), -1)]))
            odd.append(_w(m, n, [(D(i), 1), (E(j), 1)]))
    return even, odd


def _positive_part(roots, height):
    out = []
    for r in roots:
        h = sum(c * x for c, x in zip(height, r.coords))
        if h == 0:
            raise AlgebraError(f"height functional vanishes on root {r}")
        if h > 0:
            out.append(r)
    return out


def build_algebra(family: str, m: int = 0, n: int = 0, alpha=None) -> AlgebraDatum:
    """Build the root datum of one algebra with its distinguished positive system."""
    if family not in FAMILIES:
        raise AlgebraError(f"unknown family {family!r}")
    if m < 0 or n < 0:
        raise AlgebraError("ranks must be nonnegative")
    if family in ("gl", "sl"):
        if family == "sl" and m == n:
            raise AlgebraError("sl(m|n) requires m != n")
        even, odd = _gl_roots(m, n)
        height = tuple(m + n - i for i in range(m)) + tuple(n - j for j in range(n))
        rel = None
        if family == "sl":
            rel = Weight((1,) * m, (-1,) * n)
            # Shift by the root-annihilating functional (1,...,1) so the
            # height kills the relation and descends to the quotient.
            hs = sum(height[:m]) - sum(height[m:])
            sgn = 1 if m > n else -1
            height = tuple(abs(m - n) * h - sgn * hs for h in height)
        return AlgebraDatum(family, m, n, _diag([1] * m), _diag([-1] * n), tuple(even), tuple(odd),
                            height, relation=rel, label=f"{family}({m}|{n})")
    if family in ("ospB", "ospC", "ospD"):
        if family == "ospC" and m != 1:
            raise AlgebraError("ospC is osp(2|2n); use m = 1")
        if family == "ospD" and m == 1:
            family = "ospC"
        even, odd = _osp_roots(m, n, family == "ospB")
        height = tuple(m - j for j in range(m)) + tuple(m + n - i for i in range(n))
        M = 2 * m + 1 if family == "ospB" else 2 * m
        return AlgebraDatum(family, m, n, _diag([1] * m), _diag([-1] * n), tuple(even), tuple(odd),
                            height, label=f"osp({M}|{2 * n})")
    if family == "torus":
        return AlgebraDatum("torus", m, 0, _diag([1] * m), (), (), (), (1,) * m, label=f"torus({m})")
    if family == "D21a":
        if alpha is None:
            raise AlgebraError("D(2,1;alpha) needs alpha")
        try:
            alpha = F(alpha)
        except (TypeError, ValueError):
            raise AlgebraError(f"alpha must be rational, got {alpha!r}") from None
        if alpha in (0, -1):
            raise AlgebraError("alpha must not be 0 or -1")
        g = _diag([-(1 + alpha) / 2, F(1, 2), alpha / 2])
        even = [_w(3, 0, [(i, 2)]) for i in range(3)]
        odd = [_w(3, 0, [(0, 1), (1, s2), (2, s3)]) for s2 in (1, -1) for s3 in (1, -1)]
        return AlgebraDatum("D21a", 3, 0, g, (), tuple(even), tuple(odd), (4, 1, 1), alpha=alpha,
                            denom=1, label=f"D(2,1;{alpha})")
    if family == "F4":
        # coordinates e'_i = eps_i/2, d' = delta/2
        g_e = _diag([F(1, 4)] * 3)
        g_d = _diag([F(-3, 4)])
        height = (3, 2, 1, 10)
        allr = []
        for i in range(3):
            for j in range(i + 1, 3):
                for s1, s2 in iproduct((2, -2), repeat=2):
                    allr.append(_w(3, 1, [(i, s1), (j, s2)]))
            allr += [_w(3, 1, [(i, 2)]), _w(3, 1, [(i, -2)])]
        allr += [_w(3, 1, [(3, 2)]), _w(3, 1, [(3, -2)])]
        even = _positive_part(allr, height)
        odd_all = [_w(3, 1, [(3, sd), (0, s1), (1, s2), (2, s3)])
                   for sd, s1, s2, s3 in iproduct((1, -1), repeat=4)]
        odd = _positive_part(odd_all, height)
        return AlgebraDatum("F4", 3, 1, g_e, g_d, tuple(even), tuple(odd), height, label="F(4)")
    if family == "G3":
        # stored eps_1, eps_2 with eps_3 = -eps_1 - eps_2
        g_e = ((F(2), F(-1)), (F(-1), F(2)))
        g_d = ((F(-2),),)
        height = (2, 1, 10)
        eps = [_w(2, 1, [(0, 1)]), _w(2, 1, [(1, 1)]), _w(2, 1, [(0, -1), (1, -1)])]
        short = eps + [-e for e in eps]
        long_ = [eps[i] - eps[j] for i in range(3) for j in range(3) if i != j]
        dl = _w(2, 1, [(2, 1)])
        even = _positive_part(short + long_ + [dl * 2, dl * -2], height)
        odd_all = [s * e + t * dl for e in eps for s in (1, -1) for t in (1, -1)] + [dl, -dl]
        odd = _positive_part(odd_all, height)
        return AlgebraDatum("G3", 2, 1, g_e, g_d, tuple(even), tuple(odd), height, label="G(3)")
    raise AlgebraError(f"unsupported family {family!r}")


def osp(M: int, N: int) -> AlgebraDatum:
    """osp(M|N) with N even."""
    if N % 2 or M < 0 or N < 0:
        raise AlgebraError(f"osp({M}|{N}) needs a nonnegative M and an even N")
    n = N // 2
    if M % 2:
        return build_algebra("ospB", M // 2, n)
    if M == 2:
        return build_algebra("ospC", 1, n)
    return build_algebra("ospD", M // 2, n)


def super_dims(a: AlgebraDatum) -> tuple[int, int]:
    """(M, N) of osp(M|N); (m, n) otherwise."""
    if a.family == "ospB":
        return 2 * a.m + 1, 2 * a.n
    if a.family in ("ospC", "ospD"):
        return 2 * a.m, 2 * a.n
    return a.m, a.n


# -- parsing -----------------------------------------------------------------

_ALG_RE = re.compile(r"^\s*(gl|sl|osp)\s*\(\s*(\d+)\s*\|\s*(\d+)\s*\)\s*$", re.I)
_D21_RE = re.compile(r"^\s*D\s*\(\s*2\s*,\s*1\s*[;,]\s*([-+]?\d+(?:/\d+)?)\s*\)\s*$", re.I)


def parse_algebra(text: str) -> AlgebraDatum:
    s = text.strip()
    mt = _ALG_RE.match(s)
    if mt:
        fam, a, b = mt.group(1).lower(), int(mt.group(2)), int(mt.group(3))
        if fam == "osp":
            return osp(a, b)
        return build_algebra(fam, a, b)
    mt = _D21_RE.match(s)
    if mt:
        return build_algebra("D21a", alpha=F(mt.group(1)))
    compact = s.replace(" ", "").upper()
    if compact == "F(4)":
        return build_algebra("F4")
    if compact == "G(3)":
        return build_algebra("G3")
    raise AlgebraError(f"cannot parse algebra {text!r}")


_TERM_RE = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*([ed])(\d+)")


def _parse_linear(text: str):
    """Parse a signed combination like ``e1-d2`` into {('e',1): 1, ('d',2): -1}."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty root")
    out: dict[tuple[str, int], Fraction] = {}
    pos = 0
    while pos < len(s):
        mt = _TERM_RE.match(s, pos)
        if not mt or mt.start() != pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        sign = -1 if mt.group(1) == "-" else 1
        if pos and not mt.group(1):
            raise ValueError(f"missing sign in {text!r}")
        c = F(mt.group(2)) if mt.group(2) else F(1)
        key = (mt.group(3), int(mt.group(4)))
        out[key] = out.get(key, F(0)) + sign * c
        pos = mt.end()
    return out


def _standard_to_stored(a: AlgebraDatum, eps: dict[int, Fraction], delta: dict[int, Fraction]) -> Weight:
    if a.family == "G3":
        if set(eps) - {1, 2, 3} or set(delta) - {1}:
            raise ValueError("G(3) coordinates are e1,e2,e3,d1")
        e3 = eps.get(3, F(0))
        return Weight((eps.get(1, 0) - e3, eps.get(2, 0) - e3), (delta.get(1, 0),))
    if any(i < 1 or i > a.m for i in eps) or any(j < 1 or j > a.n for j in delta):
        raise ValueError(f"index out of range for {a}")
    w = Weight(tuple(eps.get(i + 1, 0) for i in range(a.m)), tuple(delta.get(j + 1, 0) for j in range(a.n)))
    if a.family == "F4":
        w = w * 2
    return w


def parse_root(text: str, a: AlgebraDatum) -> Weight:
    """Parse ``e1-d1``, ``d2+e1``, ``1/2(e1+e2+e3-d1)`` (standard eps/delta basis)."""
    s = text.strip()
    mt = re.match(r"^([+-]?\d+(?:/\d+)?)\s*\*?\s*\((.*)\)$", s)
    scale = F(1)
    if mt:
        scale, s = F(mt.group(1)), mt.group(2)
    lin = _parse_linear(s)
    eps = {i: c * scale for (k, i), c in lin.items() if k == "e"}
    delta = {i: c * scale for (k, i), c in lin.items() if k == "d"}
    w = _standard_to_stored(a, eps, delta)
    if w not in a.roots:
        raise AlgebraError(f"{text!r} is not a root of {a}")
    return w


def parse_roots(text: str, a: AlgebraDatum) -> list[Weight]:
    return [parse_root(t, a) for t in text.split(";") if t.strip()]


def parse_weight(text: str, a: AlgebraDatum) -> Weight:
    """Parse ``a1,...,am|b1,...,bn`` in the standard basis of ``a``."""
    left, sep, right = text.partition("|")
    eps = [F(t) for t in left.split(",") if t.strip()]
    delta = [F(t) for t in right.split(",") if t.strip()]
    if a.family == "G3" and len(eps) == 2:
        eps.append(F(0))
    expect_m = 3 if a.family == "G3" else a.m
    if len(eps) != expect_m or len(delta) != a.n or (a.n and not sep):
        raise ValueError(f"weight {text!r} does not match {a}")
    return _standard_to_stored(a, dict(enumerate(eps, 1)), dict(enumerate(delta, 1)))


def format_root(w: Weight, a: AlgebraDatum) -> str:
    if a.family == "F4":
        w = w * F(1, 2)
    parts = []
    for name, cs in (("e", w.eps), ("d", w.delta)):
        for i, c in enumerate(cs, 1):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}"
            parts.append(f"{sign}{coef}{name}{i}")
    s = "".join(parts).lstrip("+")
    return s or "0"


def format_weight(w: Weight, a: AlgebraDatum) -> str:
    """Inverse of ``parse_weight`` (G(3) prints the two stored coordinates)."""
    if a.family == "F4":
        w = w * F(1, 2)
    return str(w)
