"""Sparse Laurent polynomials over a rational weight lattice.

A monomial ``e^mu`` is keyed by the exponent vector of ``mu`` in the
``eps_1..eps_m, delta_1..delta_n`` basis, stored as integers scaled by the
polynomial's lattice denominator.  Variables are named ``x1..xm`` (for the
eps coordinates) and ``y1..yn`` (for the delta coordinates).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Sequence


class LatticeError(ValueError):
    """An exponent fell outside the lattice allowed by the denominator."""


class ShapeError(ValueError):
    """Operands live over different numbers of variables."""


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder."""


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class Weight:
    """A vector in h* written in the eps/delta basis."""

    eps: tuple[Fraction, ...]
    delta: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "eps", tuple(_frac(c) for c in self.eps))
        object.__setattr__(self, "delta", tuple(_frac(c) for c in self.delta))

    @classmethod
    def from_coords(cls, coords: Sequence, m: int) -> "Weight":
        coords = tuple(coords)
        return cls(coords[:m], coords[m:])

    @classmethod
    def zero(cls, m: int, n: int) -> "Weight":
        return cls((0,) * m, (0,) * n)

    @classmethod
    def basis(cls, m: int, n: int, index: int, coef=1) -> "Weight":
        coords = [0] * (m + n)
        coords[index] = coef
        return cls.from_coords(coords, m)

    @classmethod
    def parse(cls, text: str, m: int, n: int) -> "Weight":
        """Parse ``a1,...,am|b1,...,bn`` (rational entries)."""
        left, sep, right = text.partition("|")
        if not sep and n:
            raise ValueError(f"weight {text!r} lacks the '|' separator")
        eps = [Fraction(s.strip()) for s in left.split(",") if s.strip()]
        delta = [Fraction(s.strip()) for s in right.split(",") if s.strip()]
        if len(eps) != m or len(delta) != n:
            raise ShapeError(f"weight {text!r} does not have shape ({m}|{n})")
        return cls(tuple(eps), tuple(delta))

    @property
    def m(self) -> int:
        return len(self.eps)

    @property
    def n(self) -> int:
        return len(self.delta)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return self.eps + self.delta

    def _check(self, other: "Weight"):
        if self.m != other.m or self.n != other.n:
            raise ShapeError(f"weights of shape ({self.m}|{self.n}) and ({other.m}|{other.n})")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight.from_coords([a + b for a, b in zip(self.coords, other.coords)], self.m)

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight.from_coords([a - b for a, b in zip(self.coords, other.coords)], self.m)

    def __neg__(self) -> "Weight":
        return Weight.from_coords([-a for a in self.coords], self.m)

    def __mul__(self, c) -> "Weight":
        c = _frac(c)
        return Weight.from_coords([c * a for a in self.coords], self.m)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def scaled(self, denom: int) -> tuple[int, ...]:
        out = []
        for c in self.coords:
            v = c * denom
            if v.denominator != 1:
                raise LatticeError(f"weight {self} is not in (1/{denom})Z^{self.m + self.n}")
            out.append(int(v))
        return tuple(out)

    def min_denom(self) -> int:
        d = 1
        for c in self.coords:
            d = lcm(d, c.denominator)
        return d

    def __str__(self) -> str:
        return ",".join(map(str, self.eps)) + "|" + ",".join(map(str, self.delta))


@dataclass(frozen=True)
class MonomialOrder:
    """Height-graded order on exponents with a lexicographic tie-break.

    ``height`` must pair strictly positively with every positive root of the
    algebra it is built for, so that ``e^{-alpha} < 1`` for positive alpha.
    """

    height: tuple[int, ...]

    @classmethod
    def for_roots(cls, height: Sequence[int], positive_roots: Iterable[Weight]) -> "MonomialOrder":
        height = tuple(int(h) for h in height)
        for alpha in positive_roots:
            if sum(h * c for h, c in zip(height, alpha.coords)) <= 0:
                raise ValueError(f"height {height} is not positive on root {alpha}")
        return cls(height)

    def key(self, exps: Sequence[int]):
        return (sum(h * e for h, e in zip(self.height, exps)), tuple(exps))

    def weight_key(self, w: Weight):
        return (sum(h * c for h, c in zip(self.height, w.coords)), w.coords)


@dataclass(frozen=True)
class SubstitutionRule:
    """Replace variable ``index`` by the monomial ``e^replacement``.

    ``replacement`` is an unscaled rational exponent vector with a zero at
    ``index``.
    """

    index: int
    replacement: tuple[Fraction, ...]

    def __post_init__(self):
        rep = tuple(_frac(c) for c in self.replacement)
        if rep[self.index] != 0:
            raise ValueError("replacement monomial must not involve the eliminated variable")
        object.__setattr__(self, "replacement", rep)


class LaurentPoly:
    """Finitely supported map from lattice points to nonzero integers.

    Instances are treated as immutable; every operation returns a new object.
    """

    __slots__ = ("m", "n", "denom", "terms", "_hash")

    def __init__(self, m: int, n: int, terms=None, denom: int = 2):
        if denom < 1:
            raise ValueError("denominator must be positive")
        self.m = m
        self.n = n
        self.denom = denom
        self.terms: dict[tuple[int, ...], int] = {}
        self._hash = None
        if terms:
            nv = m + n
            for e, c in terms.items():
                if len(e) != nv:
                    raise ShapeError(f"exponent {e} does not have {nv} entries")
                if c:
                    self.terms[tuple(e)] = int(c)

    # -- construction -------------------------------------------------------

    @classmethod
    def zero(cls, m: int, n: int, denom: int = 2) -> "LaurentPoly":
        return cls(m, n, None, denom)

    @classmethod
    def const(cls, c: int, m: int, n: int, denom: int = 2) -> "LaurentPoly":
        return cls(m, n, {(0,) * (m + n): c}, denom)

    @classmethod
    def monomial(cls, w: Weight, coef: int = 1, denom: int | None = None) -> "LaurentPoly":
        if denom is None:
            denom = lcm(2, w.min_denom())
        return cls(w.m, w.n, {w.scaled(denom): coef}, denom)

    @classmethod
    def variable(cls, index: int, m: int, n: int, power=1, denom: int = 2) -> "LaurentPoly":
        w = Weight.basis(m, n, index, power)
        return cls(m, n, {w.scaled(denom): 1}, denom)

    def _new(self, terms, denom=None) -> "LaurentPoly":
        p = LaurentPoly.__new__(LaurentPoly)
        p.m, p.n, p.denom, p.terms, p._hash = self.m, self.n, denom or self.denom, terms, None
        return p

    # -- basic queries ------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self.m + self.n

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def weight_of(self, exps: Sequence[int]) -> Weight:
        return Weight.from_coords([Fraction(e, self.denom) for e in exps], self.m)

    def items(self) -> Iterator[tuple[Weight, int]]:
        """(weight, coefficient) pairs in canonical (descending lex) order."""
        for e in self.sorted_exponents():
            yield self.weight_of(e), self.terms[e]

    def sorted_exponents(self) -> list[tuple[int, ...]]:
        return sorted(self.terms, reverse=True)

    def coefficient(self, w: Weight) -> int:
        try:
            key = w.scaled(self.denom)
        except LatticeError:
            return 0
        return self.terms.get(key, 0)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def is_integral(self) -> bool:
        """True iff every exponent is an integer (the group lattice)."""
        return all(c % self.denom == 0 for e in self.terms for c in e)

    # -- denominators -------------------------------------------------------

    def with_denom(self, denom: int) -> "LaurentPoly":
        if denom == self.denom:
            return self
        if denom % self.denom == 0:
            f = denom // self.denom
            return self._new({tuple(c * f for c in e): v for e, v in self.terms.items()}, denom)
        out = {}
        for e, v in self.terms.items():
            key = []
            for c in e:
                num = c * denom
                if num % self.denom:
                    raise LatticeError(f"exponent {Fraction(c, self.denom)} not in (1/{denom})Z")
                key.append(num // self.denom)
            out[tuple(key)] = v
        return self._new(out, denom)

    def reduced(self) -> "LaurentPoly":
        """Same polynomial over the smallest denominator dividing ``denom``."""
        g = self.denom
        for e in self.terms:
            for c in e:
                g = gcd(g, c)
                if g == 1:
                    return self
        return self.with_denom(self.denom // g) if g > 1 else self

    def _align(self, other: "LaurentPoly"):
        if self.m != other.m or self.n != other.n:
            raise ShapeError(f"shapes ({self.m}|{self.n}) and ({other.m}|{other.n}) differ")
        if self.denom == other.denom:
            return self, other
        d = lcm(self.denom, other.denom)
        return self.with_denom(d), other.with_denom(d)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.m, self.n, self.denom)
        return NotImplemented

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return a._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self._new({})
            return self._new({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._align(other)
        if len(a.terms) < len(b.terms):
            a, b = b, a
        out: dict[tuple[int, ...], int] = {}
        get = out.get
        bitems = list(b.terms.items())
        for e1, c1 in a.terms.items():
            for e2, c2 in bitems:
                e = tuple([x + y for x, y in zip(e1, e2)])
                out[e] = get(e, 0) + c1 * c2
        return a._new({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return self._new({tuple(-x * -k for x in e): c ** (-k)})
        result = LaurentPoly.const(1, self.m, self.n, self.denom)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.m, self.n, self.denom)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.m != other.m or self.n != other.n:
            return False
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self):
        if self._hash is None:
            r = self.reduced()
            self._hash = hash((self.m, self.n, r.denom, frozenset(r.terms.items())))
        return self._hash

    # -- maps on exponents --------------------------------------------------

    def map_exponents(self, fn, m: int | None = None, n: int | None = None) -> "LaurentPoly":
        """Apply ``fn`` to every scaled exponent vector and re-collect terms."""
        out: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            k = fn(e)
            out[k] = out.get(k, 0) + c
        p = LaurentPoly.__new__(LaurentPoly)
        p.m = self.m if m is None else m
        p.n = self.n if n is None else n
        p.denom, p._hash = self.denom, None
        p.terms = {e: c for e, c in out.items() if c}
        return p

    def shift(self, w: Weight) -> "LaurentPoly":
        """Multiply by the monomial ``e^w``."""
        return self * LaurentPoly.monomial(w, 1, lcm(self.denom, w.min_denom()))

    def substitute(self, rules: Sequence[SubstitutionRule]) -> "LaurentPoly":
        """Apply the rules in order, each eliminating one variable."""
        p = self
        for rule in rules:
            p = p._substitute_one(rule)
        return p

    def _substitute_one(self, rule: SubstitutionRule) -> "LaurentPoly":
        i, rep = rule.index, rule.replacement
        if len(rep) != self.nvars:
            raise ShapeError("replacement vector has the wrong length")
        nz = [(j, r) for j, r in enumerate(rep) if r]

        def fn(e):
            c = e[i]
            if not c:
                return e
            out = list(e)
            out[i] = 0
            for j, r in nz:
                v = c * r
                if v.denominator != 1:
                    raise LatticeError(
                        f"substitution produces exponent {v / self.denom} outside (1/{self.denom})Z")
                out[j] += int(v)
            return tuple(out)

        return self.map_exponents(fn)

    # -- evaluation and orders ---------------------------------------------

    def eval_at_one(self) -> int:
        return sum(self.terms.values())

    def leading_term(self, order: MonomialOrder) -> tuple[Weight, int]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return self.weight_of(e), self.terms[e]

    def exact_divide(self, d: "LaurentPoly", order: MonomialOrder) -> "LaurentPoly":
        """Return ``q`` with ``self == q * d``; raise NotDivisible otherwise."""
        f, d = self._align(d)
        if not d.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not f.terms:
            return f._new({})
        nv = f.nvars
        key = order.key
        lt_d = max(d.terms, key=key)
        c_d = d.terms[lt_d]
        # Newton polytope of q is pinned by those of f and d, coordinatewise.
        lo = [min(e[i] for e in f.terms) - min(e[i] for e in d.terms) for i in range(nv)]
        hi = [max(e[i] for e in f.terms) - max(e[i] for e in d.terms) for i in range(nv)]
        dterms = [(tuple(x - y for x, y in zip(e, lt_d)), c) for e, c in d.terms.items()]

        def neg_key(e):
            h, t = key(e)
            return (-h, tuple(-x for x in t))

        r = dict(f.terms)
        heap = [neg_key(e) + (e,) for e in r]
        heapq.heapify(heap)
        q: dict[tuple[int, ...], int] = {}
        while r:
            *_, e = heapq.heappop(heap)
            c = r.get(e)
            if c is None:
                continue
            qe = tuple(x - y for x, y in zip(e, lt_d))
            if c % c_d or any(not (l <= x <= h) for x, l, h in zip(qe, lo, hi)):
                raise NotDivisible(f"leading remainder term {c}*e^{f.weight_of(e)} cannot be cleared")
            qc = c // c_d
            q[qe] = qc
            for de, dc in dterms:
                t = tuple(x + y for x, y in zip(e, de))
                v = r.get(t, 0) - qc * dc
                if v:
                    if t not in r:
                        heapq.heappush(heap, neg_key(t) + (t,))
                    r[t] = v
                else:
                    r.pop(t, None)
        return f._new(q)

    def __repr__(self) -> str:
        from .polyio import format_poly

        return f"LaurentPoly({self.m}|{self.n}: {format_poly(self)})"

    def __str__(self) -> str:
        from .polyio import format_poly

        return format_poly(self)


# Spec-level operation names.

def poly_add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def poly_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def poly_substitute(f: LaurentPoly, rules: Sequence[SubstitutionRule]) -> LaurentPoly:
    return f.substitute(rules)


def poly_exact_divide(f: LaurentPoly, d: LaurentPoly, order: MonomialOrder) -> LaurentPoly:
    return f.exact_divide(d, order)


def poly_eval_at_one(f: LaurentPoly) -> int:
    return f.eval_at_one()


def leading_term(f: LaurentPoly, order: MonomialOrder) -> tuple[Weight, int]:
    return f.leading_term(order)


def one_minus(w: Weight, denom: int = 2) -> LaurentPoly:
    """The factor ``1 - e^w``."""
    return LaurentPoly.const(1, w.m, w.n, denom) - LaurentPoly.monomial(w, 1, denom)


def product(factors: Iterable[LaurentPoly], m: int, n: int, denom: int = 2) -> LaurentPoly:
    out = LaurentPoly.const(1, m, n, denom)
    for f in factors:
        out = out * f
    return out
