"""Hall-Littlewood polynomials against sympy symmetrization and bialternants."""

import itertools

import pytest
import sympy as sp

from hls_lab.algebra import LaurentPoly, x
from hls_lab.tableaux import HL_T, hall_littlewood, schur

T = sp.Symbol("t")


def xs(n):
    return sp.symbols(f"x1:{n + 1}")


def to_sympy(p: LaurentPoly, n):
    syms = {x(i + 1): s for i, s in enumerate(xs(n))}
    syms[HL_T] = T
    out = 0
    for exps, c in p.terms():
        term = sp.Integer(int(c))
        for v, e in exps.items():
            term *= syms[v] ** e
        out += term
    return sp.expand(out)


def partitions(total, length):
    def gen(rest, top, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for a in range(min(rest, top), 0, -1):
            for tail in gen(rest - a, a, slots - 1):
                yield (a,) + tail

    return list(gen(total, total, length))


def symmetrized(lam, n):
    """``(1 / v_lam(t)) sum_w w(x^lam prod_{i<j} (x_i - t x_j) / (x_i - x_j))``."""
    X = xs(n)
    lam = tuple(lam) + (0,) * (n - len(lam))
    total = 0
    for w in itertools.permutations(range(n)):
        y = [X[w[i]] for i in range(n)]
        term = sp.Mul(*[y[i] ** lam[i] for i in range(n)])
        for i in range(n):
            for j in range(i + 1, n):
                term *= (y[i] - T * y[j]) / (y[i] - y[j])
        total += term
    v = 1
    for m in set(lam):
        k = lam.count(m)
        for i in range(1, k + 1):
            v *= (1 - T**i) / (1 - T)
    return sp.factor(sp.cancel(sp.together(total) / v))


def bialternant(lam, n):
    X = xs(n)
    lam = tuple(lam) + (0,) * (n - len(lam))
    num = sp.Matrix(n, n, lambda i, j: X[j] ** (lam[i] + n - 1 - i)).det()
    den = sp.Matrix(n, n, lambda i, j: X[j] ** (n - 1 - i)).det()
    return sp.expand(sp.cancel(num / den))


def monomial_symmetric(lam, n):
    X = xs(n)
    lam = tuple(lam) + (0,) * (n - len(lam))
    return sp.expand(sum(sp.Mul(*[X[i] ** e for i, e in enumerate(perm)]) for perm in set(itertools.permutations(lam))))


@pytest.mark.parametrize(
    "lam,n", [((2,), 2), ((1, 1), 2), ((3, 1), 2), ((2,), 3), ((2, 1), 3), ((1, 1, 1), 3), ((3, 1), 3), ((2, 2), 3)]
)
def test_matches_symmetrization(lam, n):
    assert sp.expand(to_sympy(hall_littlewood(lam, n), n) - symmetrized(lam, n)) == 0


CASES = [lam for k in range(7) for lam in partitions(k, 3)]


@pytest.mark.parametrize("lam", CASES)
def test_symmetric_and_specializations(lam):
    n = 3
    P = to_sympy(hall_littlewood(lam, n), n)
    X = xs(n)
    for w in itertools.permutations(X):
        assert sp.expand(P.xreplace(dict(zip(X, w))) - P) == 0
    assert sp.expand(P.subs(T, 0) - bialternant(lam, n)) == 0
    assert sp.expand(P.subs(T, 1) - monomial_symmetric(lam, n)) == 0


@pytest.mark.parametrize("lam", CASES)
def test_schur_matches_bialternant(lam):
    assert sp.expand(to_sympy(schur(lam, 3), 3) - bialternant(lam, 3)) == 0
