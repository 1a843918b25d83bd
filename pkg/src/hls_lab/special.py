"""Substitutions of the Hall-Littlewood-Schubert series and the identities they satisfy.

Every specialization is a monomial substitution ``X_C -> q^a * m_C`` into
``HLS_n``, with ``Y -> q^-1`` where the residue field size enters. ``q`` stays
a symbolic variable throughout, and so do ``u = q^-s`` and ``t_i = q^-s_i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable

from .algebra import (
    LaurentPoly,
    RatFunc,
    VarId,
    X,
    XC,
    Y,
    Z,
    Zi,
    gaussian_binomial,
    q,
    rat_equal,
    series_expand,
    t,
    u,
    x,
    y,
)
from .hls import BudgetError, chain_numerator, numerator
from .poset import elements
from .tableaux import _schubert_dim, enumerate_tableaux, leg_polynomial, z_monomial

__all__ = [
    "SubstitutionRecipe",
    "apply_recipe",
    "affine_schubert",
    "affine_recipe",
    "hermite_smith",
    "hermite_smith_recipe",
    "HeckeSeries",
    "hecke",
    "hecke_numerator",
    "igusa",
    "igusa_identity",
    "lattice_zeta_checks",
    "weak_order_zeta",
    "weak_order_identity",
    "quiver_zeta",
    "quiver_recipe",
    "symplectic_integral",
    "bgs_descent_form",
    "littlewood_checks",
    "reciprocity_checks",
    "hecke_palindromic",
    "hs_through_affine",
    "upsilon",
    "hecke_bn_invariance",
    "hecke_vanishing",
]

SPECIAL_BOUND = 4
QUIVER_BOUND = 3
SYMPLECTIC_BOUND = 3

QV = LaurentPoly.var(q)
QINV = LaurentPoly.var(q, -1)


def _check(n: int, bound: int) -> None:
    if n < 1:
        raise ValueError("degree must be positive")
    if n > bound:
        raise BudgetError(f"n={n} exceeds the bound {bound}")


def _full(n: int) -> set[int]:
    return set(range(1, n + 1))


def _xset(C: Iterable[int]) -> LaurentPoly:
    return LaurentPoly.monomial({x(i): 1 for i in C})


def _yset(C: Iterable[int]) -> LaurentPoly:
    return LaurentPoly.monomial({y(i): 1 for i in C})


@dataclass(frozen=True)
class SubstitutionRecipe:
    """``X_C -> image[C]`` for every nonempty ``C``, and ``Y -> y_image``."""

    name: str
    n: int
    images: dict
    y_image: LaurentPoly

    def sigma(self) -> dict[VarId, LaurentPoly]:
        out: dict[VarId, LaurentPoly] = {XC(C): m for C, m in self.images.items()}
        out[Y] = self.y_image
        return out


def apply_recipe(recipe: SubstitutionRecipe) -> RatFunc:
    """Substitute into ``N_n / prod_C (1 - X_C)``."""
    N = numerator(recipe.n)
    sigma = recipe.sigma()
    den = [1 - recipe.images[C] for C in elements(recipe.n)]
    return RatFunc(N.substitute(sigma), den)


# ---------------------------------------------------------------------------
# Lattice counting specializations


def affine_recipe(n: int, kind: str) -> SubstitutionRecipe:
    if kind not in ("intersection", "projection"):
        raise ValueError("kind is 'intersection' or 'projection'")
    full = _full(n)
    images = {}
    for C in elements(n):
        d = _schubert_dim(n, C) if kind == "intersection" else _schubert_dim(n, full - set(C))
        images[C] = QV**d * z_monomial(n, C)
    return SubstitutionRecipe(f"affine-{kind}", n, images, QINV)


def affine_schubert(n: int, kind: str = "intersection") -> RatFunc:
    """Affine Schubert series in ``q`` and ``Z_{i,j}`` (intersection or projection type)."""
    _check(n, SPECIAL_BOUND)
    return apply_recipe(affine_recipe(n, kind))


def hermite_smith_recipe(n: int) -> SubstitutionRecipe:
    images = {}
    for C in elements(n):
        star = [n - i + 1 for i in C]
        images[C] = QV ** _schubert_dim(n, C) * LaurentPoly.var(x(len(C))) * _yset(star)
    return SubstitutionRecipe("hermite-smith", n, images, QINV)


def hermite_smith(n: int) -> RatFunc:
    """Hermite-Smith series in ``q``, ``x_i``, ``y_i``."""
    _check(n, SPECIAL_BOUND)
    return apply_recipe(hermite_smith_recipe(n))


def upsilon(n: int) -> dict[VarId, LaurentPoly]:
    """Monomial map ``Z_{ij} -> y_{n-i}^-j y_{n-i+1}^j`` (``i < n``), ``Z_{nj} -> x_j y_1^j``."""
    out = {}
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            if i == n:
                out[Z(i, j)] = LaurentPoly.monomial({x(j): 1, y(1): j})
            else:
                out[Z(i, j)] = LaurentPoly.monomial({y(n - i): -j, y(n - i + 1): j})
    return out


def hs_through_affine(n: int) -> bool:
    """Hermite-Smith series equals the intersection-type affine series under :func:`upsilon`."""
    _check(n, SPECIAL_BOUND)
    return rat_equal(affine_schubert(n, "intersection").substitute(upsilon(n)), hermite_smith(n))


# ---------------------------------------------------------------------------
# Hecke series


@dataclass
class HeckeSeries:
    n: int
    numerator: LaurentPoly  # H_n^num(Y, x, X)

    def series(self) -> RatFunc:
        """``H^num(q^-1, x, X) / prod_{I subset [n]} (1 - x_I X)``, the empty ``I`` included."""
        den = [1 - LaurentPoly.var(X)] + [1 - _xset(C) * LaurentPoly.var(X) for C in elements(self.n)]
        return RatFunc(self.numerator.substitute({Y: QINV}), den)

    def degree(self) -> int:
        return self.numerator.degree(X)

    def x_coefficients(self) -> dict[int, LaurentPoly]:
        return self.numerator.collect(X)

    def to_json(self) -> dict:
        return {"n": self.n, "numerator": self.numerator.to_json()}


def hecke_numerator(n: int, route: str = "tableau") -> LaurentPoly:
    """``H_n^num(Y, x, X)``.

    ``route="tableau"`` sums ``Phi_T prod_{C in T} x_C X prod_{I not in T} (1 - x_I X)``
    over reduced tableaux; ``route="substitution"`` substitutes ``X_C -> x_C X`` into ``N_n``.
    """
    _check(n, SPECIAL_BOUND)
    xv = LaurentPoly.var(X)
    if route == "substitution":
        return numerator(n).substitute({XC(C): _xset(C) * xv for C in elements(n)})
    if route != "tableau":
        raise ValueError("route is 'tableau' or 'substitution'")
    subs = elements(n)
    factor = {C: 1 - _xset(C) * xv for C in subs}
    total = LaurentPoly()
    for T in enumerate_tableaux(n):
        cols = set(T.columns)
        term = leg_polynomial(T)
        for C in T.columns:
            term = term * _xset(C) * xv
        for C in subs:
            if C not in cols:
                term = term * factor[C]
        total = total + term
    return total


def hecke(n: int, route: str = "tableau") -> HeckeSeries:
    return HeckeSeries(n, hecke_numerator(n, route))


def hecke_vanishing(n: int) -> dict[str, bool]:
    """Degree ``2^n - 2`` and vanishing ``X^1`` and ``X^(2^n - 3)`` coefficients of ``H_n^num``."""
    H = hecke(n, route="substitution")
    coeffs = H.x_coefficients()
    top = 2**n - 2
    return {
        "degree": H.degree() == top,
        "x1_vanishes": 1 not in coeffs,
        "x_top_minus_1_vanishes": (top - 1) not in coeffs,
    }


def hecke_palindromic(n: int) -> bool:
    """``H^num(1/Y, 1/x, 1/X) = (-1)^(n+1) Y^-binom(n,2) (x_1..x_n)^(1 - 2^(n-1)) X^(2 - 2^n) H^num``."""
    H = hecke_numerator(n, route="substitution")
    inv = H.invert_variables([Y, X] + [x(i) for i in range(1, n + 1)])
    exps = {Y: -comb(n, 2), X: 2 - 2**n}
    exps.update({x(i): 1 - 2 ** (n - 1) for i in range(1, n + 1)})
    return inv == H * LaurentPoly.monomial(exps, (-1) ** (n + 1))


def hecke_bn_invariance(n: int) -> dict[str, bool]:
    """Symmetry under permuting ``x`` and under ``x_k -> 1/x_k, X -> x_k X``."""
    H = hecke(n, route="substitution").series()
    xs = [x(i) for i in range(1, n + 1)]
    perm_ok = all(
        rat_equal(H.substitute({xs[i]: LaurentPoly.var(xs[w[i]]) for i in range(n)}), H)
        for w in itertools.permutations(range(n))
    )
    flip_ok = True
    for k in range(n):
        sigma = {xs[k]: LaurentPoly.var(xs[k], -1), X: LaurentPoly.monomial({xs[k]: 1, X: 1})}
        flip_ok = flip_ok and rat_equal(H.substitute(sigma), H)
    return {"permutations": perm_ok, "inversions": flip_ok}


# ---------------------------------------------------------------------------
# Igusa and weak order functions


def igusa(n: int, var: VarId = Y) -> RatFunc:
    """``sum_{I subset [n]} binom(n, I)_Y prod_{i in I} Z_i / (1 - Z_i)``."""
    total = RatFunc(0)
    for k in range(n + 1):
        for I in itertools.combinations(range(1, n + 1), k):
            term = RatFunc(gaussian_binomial(n, I, var))
            for i in I:
                term = term * RatFunc.geometric(LaurentPoly.var(Zi(i))) * LaurentPoly.var(Zi(i))
            total = total + term
    return total


def igusa_identity(n: int) -> bool:
    """``I_n(Y, Z) = HLS_n(Y, (Y^d(n, [n] \\ C) Z_#C)_C)``."""
    _check(n, SPECIAL_BOUND)
    full = _full(n)
    images = {
        C: LaurentPoly.var(Y, _schubert_dim(n, full - set(C))) * LaurentPoly.var(Zi(len(C)))
        for C in elements(n)
    }
    rhs = apply_recipe(SubstitutionRecipe("igusa", n, images, LaurentPoly.var(Y)))
    return rat_equal(igusa(n), rhs)


def lattice_zeta_checks(n: int, bound: int = 6) -> dict[str, bool]:
    """Three forms of the local lattice zeta function against ``prod_{i<n} 1/(1 - q^i u)``.

    Forms: Igusa at ``Z_i = q^(i(n-i)) u^i``; Hermite-Smith at ``x_i = u^i, y = 1``;
    ``HLS_n`` at ``X_C = q^d(n,C) u^#C``. Compared exactly and as ``u``-series to ``bound``.
    """
    _check(n, SPECIAL_BOUND)
    uv = LaurentPoly.var(u)
    target = RatFunc(1, [1 - QV**i * uv for i in range(n)])
    ig = igusa(n).substitute({Y: QINV, **{Zi(i): QV ** (i * (n - i)) * uv**i for i in range(1, n + 1)}})
    hs = hermite_smith(n).substitute({**{x(i): uv**i for i in range(1, n + 1)}, **{y(i): 1 for i in range(1, n + 1)}})
    images = {C: QV ** _schubert_dim(n, C) * uv ** len(C) for C in elements(n)}
    direct = apply_recipe(SubstitutionRecipe("lattice-zeta", n, images, QINV))
    want = series_expand(target, [u], bound)
    out = {}
    for name, f in (("igusa", ig), ("hermite_smith", hs), ("hls", direct)):
        out[name] = rat_equal(f, target) and series_expand(f, [u], bound) == want
    return out


def _subset_chains(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """All strictly increasing chains of nonempty subsets under containment, the empty chain included."""
    subs = elements(n)
    ups = {A: [B for B in subs if len(B) > len(A) and set(A) < set(B)] for A in subs}
    out: list[tuple] = [()]

    def grow(chain):
        out.append(chain)
        for B in ups[chain[-1]]:
            grow(chain + (B,))

    for A in subs:
        grow((A,))
    return out


def weak_order_zeta(n: int) -> RatFunc:
    """``sum over containment chains of prod X_C / (1 - X_C)`` in the fine variables."""
    _check(n, SPECIAL_BOUND)
    subs = elements(n)
    num = chain_numerator(subs, [(ch, 1) for ch in _subset_chains(n)])
    return RatFunc(num, [1 - LaurentPoly.var(XC(C)) for C in subs])


def weak_order_identity(n: int) -> bool:
    """Weak order zeta function equals ``HLS_n(1, X)`` in the fine variables."""
    _check(n, SPECIAL_BOUND)
    return weak_order_zeta(n).num == numerator(n).substitute({Y: 1})


# ---------------------------------------------------------------------------
# Quiver representations


def _v_max(n: int, C: Iterable[int]) -> list[int]:
    C = set(C)
    return [max([c for c in C if c <= i], default=0) for i in range(1, n + 1)]


def _v_count(n: int, C: Iterable[int]) -> list[int]:
    C = set(C)
    return [sum(1 for c in C if c <= i) for i in range(1, n + 1)]


def quiver_recipe(n: int, exponents: str = "max") -> SubstitutionRecipe:
    """``X_C -> q^d(n,C) prod_i t_i^(v_C)_i``.

    ``exponents="max"`` takes ``(v_C)_i`` as the largest member of ``C`` up to ``i``
    (0 if none); ``"count"`` takes the number of such members, which is what
    ``Z_{ij} -> t_i^j`` does to the intersection-type affine series.
    """
    rule: Callable = {"max": _v_max, "count": _v_count}[exponents]
    images = {}
    for C in elements(n):
        v = rule(n, C)
        mono = LaurentPoly.monomial({t(i + 1): e for i, e in enumerate(v) if e})
        images[C] = QV ** _schubert_dim(n, C) * mono
    return SubstitutionRecipe(f"quiver-{exponents}", n, images, QINV)


def quiver_zeta(n: int, exponents: str = "max") -> RatFunc:
    """Substituted series times ``prod_{i<n} zeta_{o^i}(s_i)``, ``zeta_{o^i}(s) = prod_{j<i} 1/(1 - q^j t)``."""
    _check(n, QUIVER_BOUND)
    f = apply_recipe(quiver_recipe(n, exponents))
    extra = [1 - QV**j * LaurentPoly.var(t(i)) for i in range(1, n) for j in range(i)]
    return f * RatFunc(1, extra)


# ---------------------------------------------------------------------------
# Symplectic integral


def symplectic_integral(n: int) -> RatFunc:
    """``1/(1 - u^n) * HLS_n(q^-1, (q^maj(C) u^n)_C)`` with ``u = q^-s``."""
    _check(n, SYMPLECTIC_BOUND)
    un = LaurentPoly.var(u, n)
    images = {C: QV ** sum(C) * un for C in elements(n)}
    f = apply_recipe(SubstitutionRecipe("symplectic", n, images, QINV))
    return f * RatFunc(1, [1 - un])


def bgs_descent_form(n: int) -> RatFunc:
    """``sum_{w in S_n} q^-l(w) prod_{i in Des(w)} X_i / prod_{i=0..n} (1 - X_i)``.

    ``X_i = q^(binom(n+1,2) - binom(i+1,2)) u^n``; ``l`` counts inversions.
    """
    _check(n, SYMPLECTIC_BOUND)
    un = LaurentPoly.var(u, n)
    Xi = [QV ** (comb(n + 1, 2) - comb(i + 1, 2)) * un for i in range(n + 1)]
    num = LaurentPoly()
    for w in itertools.permutations(range(1, n + 1)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])
        term = LaurentPoly.var(q, -inv)
        for i in range(1, n):
            if w[i] < w[i - 1]:
                term = term * Xi[i]
        num = num + term
    return RatFunc(num, [1 - m for m in Xi])


# ---------------------------------------------------------------------------
# Identity checks


def littlewood_checks(n: int, bound: int = 3) -> dict[str, bool]:
    """``HLS_n`` at ``X_C = x_C`` against the Littlewood-type products, at ``Y = 0`` and symbolic ``Y``."""
    _check(n, bound)
    subs = elements(n)
    xs = {XC(C): _xset(C) for C in subs}
    N = numerator(n)
    den = [1 - _xset(C) for C in subs]
    pairs = [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]
    prod_den = [1 - (_xset([j]) if i == 0 else _xset([i, j])) for i, j in pairs]
    schur_rhs = RatFunc(1, prod_den)
    schur_lhs = RatFunc(N.substitute({**xs, Y: 0}), den)
    top = LaurentPoly.const(1)
    for i, j in pairs:
        if i:
            top = top * (1 - LaurentPoly.var(Y) * _xset([i, j]))
    full_lhs = RatFunc(N.substitute(xs), den)
    return {
        "schur_identity": rat_equal(schur_lhs, schur_rhs),
        "x1_product": rat_equal(full_lhs, RatFunc(top, prod_den)),
    }


def _invert_q(f: RatFunc, extra: list[VarId]) -> RatFunc:
    return f.invert_variables([q] + extra)


def reciprocity_checks(n: int) -> dict[str, bool]:
    """Self-reciprocity of both affine Schubert series and of the Hecke series."""
    _check(n, 3)
    zs = [Z(i, j) for i in range(1, n + 1) for j in range(1, i + 1)]
    diag = LaurentPoly.monomial({Z(i, i): 1 for i in range(1, n + 1)})
    factor = QV ** comb(n, 2) * diag * (-1) ** n
    out = {}
    for key, kind in (("affS_in", "intersection"), ("affS_pr", "projection")):
        f = affine_schubert(n, kind)
        out[key] = rat_equal(_invert_q(f, zs), f * factor)
    H = hecke(n, route="substitution").series()
    xs = [x(i) for i in range(1, n + 1)]
    hfac = QV ** comb(n, 2) * LaurentPoly.monomial({**{v: 1 for v in xs}, X: 2}) * (-1) ** (n + 1)
    out["hecke"] = rat_equal(_invert_q(H, xs + [X]), H * hfac)
    return out
