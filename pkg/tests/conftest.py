import sympy as sp

from superchar.polyio import parse_poly_for
from superchar.rootdata import parse_algebra


def alg(text):
    return parse_algebra(text)


def P(a, text):
    return parse_poly_for(text, a)


def symbols_for(a):
    xs = sp.symbols(f"x1:{a.m + 1}", positive=True) if a.m else ()
    ys = sp.symbols(f"y1:{a.n + 1}", positive=True) if a.n else ()
    return tuple(xs), tuple(ys)


def to_sympy(f, a):
    """Independent rendering of a LaurentPoly as a sympy expression."""
    xs, ys = symbols_for(a)
    gens = xs + ys
    expr = sp.Integer(0)
    for w, c in f.items():
        term = sp.Integer(c)
        for g, e in zip(gens, w.coords):
            term *= g ** sp.Rational(e.numerator, e.denominator)
        expr += term
    return expr


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: (int(s.split()[1].rstrip(":").rstrip("abcd")), s)):
            terminalreporter.write_line(line)
