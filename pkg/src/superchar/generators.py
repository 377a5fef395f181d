"""Generators h_k of J_G, their transfer under ds, and exceptional images."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import ceil, lcm

from .dshom import DsError, DsMap, build_ds
from .rootdata import AlgebraDatum, AlgebraError
from .superring import CheckResult
from .weightlat import LaurentPoly, Weight


@dataclass(frozen=True)
class GeneratingSeries:
    """prod(1 - e^num_i t) / prod(1 - e^den_j t) as a truncated series in t."""

    m: int
    n: int
    numerator_factors: tuple[Weight, ...]
    denominator_factors: tuple[Weight, ...]
    denom: int = 2

    def expand(self, K: int) -> list[LaurentPoly]:
        one = LaurentPoly.const(1, self.m, self.n, self.denom)
        series = [one] + [LaurentPoly.zero(self.m, self.n, self.denom)] * K
        for w in self.numerator_factors:
            mono = LaurentPoly.monomial(w, 1, self.denom)
            series = [series[k] - (mono * series[k - 1] if k else 0) for k in range(K + 1)]
        for w in self.denominator_factors:
            # multiply by sum_j e^{jw} t^j, i.e. s_k += e^w s_{k-1} cumulatively
            mono = LaurentPoly.monomial(w, 1, self.denom)
            out = [series[0]]
            for k in range(1, K + 1):
                out.append(series[k] + mono * out[k - 1])
            series = out
        return series


def chi_series(a: AlgebraDatum, inverse: bool = False) -> GeneratingSeries:
    m, n = a.m, a.n
    sgn = -1 if inverse else 1
    xs = [Weight.basis(m, n, i, sgn) for i in range(m)]
    ys = [Weight.basis(m, n, m + j, sgn) for j in range(n)]
    zero = Weight.zero(m, n)
    if a.family in ("gl", "sl"):
        return GeneratingSeries(m, n, tuple(xs), tuple(ys), a.denom)
    if a.family in ("ospB", "ospC", "ospD"):
        num = tuple(v for y in ys for v in (y, -y))
        den = tuple(v for x in xs for v in (x, -x))
        if a.family == "ospB":
            den = (zero,) + den
        return GeneratingSeries(m, n, num, den, a.denom)
    raise AlgebraError(f"no generating series for {a}")


def gens_hk(a: AlgebraDatum, K: int, inverse: bool = False) -> list[LaurentPoly]:
    """[h_1, ..., h_K] read off chi_G(t); ``inverse`` uses x_i^-1, y_j^-1 (gl/sl)."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    if inverse and a.family not in ("gl", "sl"):
        raise AlgebraError("inverse generators are only listed for gl and sl")
    return [a.normalize(h) for h in chi_series(a, inverse).expand(K)[1:]]


def gl_units(a: AlgebraDatum) -> tuple[LaurentPoly, LaurentPoly]:
    if a.family != "gl":
        raise AlgebraError("units are only listed for gl")
    w = Weight((1,) * a.m, (-1,) * a.n)
    u = a.mono(w)
    return u, u ** -1


def all_generators(a: AlgebraDatum, K: int) -> list[LaurentPoly]:
    gens = gens_hk(a, K)
    if a.family in ("gl", "sl"):
        gens += gens_hk(a, K, inverse=True)
    if a.family == "gl":
        gens += list(gl_units(a))
    return gens


def verify_generator_transfer(a: AlgebraDatum, B, K: int) -> CheckResult:
    """ds maps h_k of g to h_k of g_x for k <= K (and the inverse/unit variants)."""
    d = build_ds(a, B)
    t = d.target
    pairs = [("h", gens_hk(a, K), gens_hk(t, K))]
    if a.family in ("gl", "sl"):
        pairs.append(("h_inv", gens_hk(a, K, True), gens_hk(t, K, True)))
    if a.family == "gl":
        pairs.append(("unit", list(gl_units(a)), list(gl_units(t))))
    for name, src, tgt in pairs:
        for k, (f, g) in enumerate(zip(src, tgt), 1):
            if not t.equal(d.apply(f), g):
                return CheckResult(False, f"{name}_{k}: ds gives {d.apply(f)}, expected {g}")
    return CheckResult(True)


# -- gl twists ---------------------------------------------------------------

@dataclass(frozen=True)
class TwistedElement:
    """(x_1...x_m)^a (y_1...y_n)^b * base with b defaulting to -a."""

    a: Fraction
    base: LaurentPoly
    b: Fraction | None = None

    @property
    def b_value(self) -> Fraction:
        return -Fraction(self.a) if self.b is None else Fraction(self.b)

    def twist(self) -> LaurentPoly:
        m, n = self.base.m, self.base.n
        w = Weight((Fraction(self.a),) * m, (self.b_value,) * n)
        return LaurentPoly.monomial(w, 1, lcm(self.base.denom, w.min_denom()))

    def expand(self) -> LaurentPoly:
        return self.twist() * self.base


def gl_twisted_image(a: AlgebraDatum, B, t: TwistedElement) -> TwistedElement:
    """Image of a twisted element; components with a + b not integral map to 0."""
    if a.family != "gl":
        raise AlgebraError("twisted components are described for gl only")
    d = build_ds(a, B)
    full = d.apply(t.expand())
    aa, bb = Fraction(t.a), t.b_value
    if (aa + bb).denominator != 1:
        if not full.is_zero():
            raise DsError(f"twisted element with a + b = {aa + bb} did not vanish")
        return TwistedElement(aa, d.target.zero(), bb)
    # move the integral part of a + b into the base, then transport the base
    shift = Weight((0,) * a.m, (aa + bb,) * a.n)
    base = t.base * a.mono(shift)
    image = TwistedElement(aa, d.apply(base))
    if not d.target.equal(image.expand(), full):
        raise DsError("twist is not preserved by ds")
    return image


# -- exceptional algebras ----------------------------------------------------

def _vars(a: AlgebraDatum):
    xs = [LaurentPoly.variable(i, a.m, a.n, 1, a.denom) for i in range(a.m)]
    ys = [LaurentPoly.variable(a.m + j, a.m, a.n, 1, a.denom) for j in range(a.n)]
    return xs, ys


def _sym(p: LaurentPoly) -> LaurentPoly:
    return p + p ** -1


def exc_image_elements(a: AlgebraDatum) -> dict[str, LaurentPoly]:
    if a.family == "G3":
        (x1, x2), (y,) = _vars(a)
        x3 = (x1 * x2) ** -1
        u = [_sym(x1), _sym(x2), _sym(x3)]
        v = _sym(y)
        w = v * v - v * (u[0] + u[1] + u[2] + 1) + u[0] * u[1] + u[0] * u[2] + u[1] * u[2]
        P = (v - u[0]) * (v - u[1]) * (v - u[2])
        return {"w": w, "P": P}
    if a.family == "F4":
        xs, (y,) = _vars(a)
        X = xs[0] * xs[1] * xs[2]
        v = _sym(y)
        Q = v - _sym(X)
        for xi in xs:
            Q = Q * (v - _sym(X * xi ** -2))
        out = {}
        for k in (1, 2):
            wk = LaurentPoly.const(2, a.m, a.n, a.denom)
            for i in range(3):
                wk = wk + _sym(xs[i] ** (2 * k))
                for j in range(3):
                    if i != j:
                        wk = wk + xs[i] ** (2 * k) * xs[j] ** (-2 * k)
                for j in range(i + 1, 3):
                    wk = wk + _sym((xs[i] * xs[j]) ** (2 * k))
            prod = _sym(y ** k)
            for xi in xs:
                prod = prod * _sym(xi ** k)
            wk = wk + _sym(y ** (2 * k)) - prod
            out[f"w{k}"] = wk
        out["Q"] = Q
        return out
    if a.family == "D21a":
        x1, x2, x3 = _vars(a)[0]
        u = [_sym(x1), _sym(x2), _sym(x3)]
        Q = u[0] * u[0] + u[1] * u[1] + u[2] * u[2] - u[0] * u[1] * u[2] - 4
        p, q = a.alpha.numerator, a.alpha.denominator
        S = _quantum(x2, p) * _quantum(x3, q)
        z = x2 ** p * x3 ** -q
        w_alpha = -(u[0] - _sym(x2 * x3)) * S + _sym(z)
        return {"Q": Q, "w_alpha": w_alpha}
    raise AlgebraError(f"no exceptional image elements for {a}")


def _quantum(x: LaurentPoly, p: int) -> LaurentPoly:
    """(x^p - x^-p) / (x - x^-1) as a Laurent polynomial."""
    sgn = 1 if p > 0 else -1
    p = abs(p)
    out = LaurentPoly.zero(x.m, x.n, x.denom)
    for j in range(p):
        out = out + x ** (p - 1 - 2 * j)
    return out * sgn


def image_generators(a: AlgebraDatum) -> tuple[DsMap, dict[str, LaurentPoly]]:
    """The ds map at the representative root and the generators of its image."""
    from .dshom import _representative

    d = build_ds(a, [_representative(a)])
    el = exc_image_elements(a)
    if a.family == "G3":
        return d, {"w": d.apply(el["w"])}
    if a.family == "F4":
        return d, {"w1": d.apply(el["w1"]), "w2": d.apply(el["w2"])}
    return d, {"w": d.apply(el["w_alpha"])}


@dataclass(frozen=True)
class ImageMembership:
    member: bool
    expression: str | None = None
    certificate: LaurentPoly | None = None

    def __bool__(self) -> bool:
        return self.member


def _spread(f: LaurentPoly) -> int:
    return max((max(abs(c) for c in e) for e in f.terms), default=0)


def exc_image_membership(a: AlgebraDatum, g: LaurentPoly) -> ImageMembership:
    """Decide g in Z[generators] by exact linear algebra over generator monomials."""
    d, gens = image_generators(a)
    t = d.target
    g = t.normalize(g)
    names = list(gens)
    polys = [t.normalize(gens[nm]) for nm in names]
    units = [max(1, _spread(p)) for p in polys]
    budget = ceil(_spread(g) / min(units)) + 2
    exps = [e for e in iproduct(*[range(budget + 1)] * len(names))
            if sum(k * u for k, u in zip(e, units)) <= _spread(g) + 2 * min(units) or sum(e) == 0]
    cols = []
    cache: dict[tuple, LaurentPoly] = {}
    for e in exps:
        p = t.one()
        for k, base in zip(e, polys):
            if k:
                p = p * base ** k
        cache[e] = t.normalize(p)
        cols.append(cache[e])
    sol = _solve_integer(cols, g)
    if sol is None:
        return ImageMembership(False, None, g)
    expr = _format_expression(names, exps, sol)
    return ImageMembership(True, expr)


def _solve_integer(cols, target):
    """Exact solve of sum c_i cols[i] = target; None if no integral solution."""
    keys = set(target.terms)
    denom = lcm(target.denom, *[c.denom for c in cols]) if cols else target.denom
    cols = [c.with_denom(denom) for c in cols]
    target = target.with_denom(denom)
    for c in cols:
        keys.update(c.terms)
    keys = sorted(keys)
    rows = [[Fraction(c.terms.get(k, 0)) for c in cols] + [Fraction(target.terms.get(k, 0))] for k in keys]
    ncol = len(cols)
    piv_cols = []
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][-1]:
            return None
    sol = [Fraction(0)] * ncol
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][-1]
    if any(s.denominator != 1 for s in sol):
        return None
    return [int(s) for s in sol]


def _format_expression(names, exps, sol) -> str:
    terms = []
    for e, c in sorted(zip(exps, sol), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0]))):
        if not c:
            continue
        mono = "*".join(nm if k == 1 else f"{nm}^{k}" for nm, k in zip(names, e) if k)
        mag = abs(c)
        body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
        terms.append((c < 0, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] else "") + terms[0][1]
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out
