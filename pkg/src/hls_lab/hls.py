"""Hall-Littlewood-Schubert series: construction, coarsening, special values.

The series is a sum over reduced tableaux (chains of the tableau order) of
``Phi_T(Y) * prod_{C in T} X_C / (1 - X_C)``. Over the common denominator
``prod_C (1 - X_C)`` the numerator is multilinear in the ``X_C``; its
coefficient at ``X^S`` is the alternating sum of ``Phi_T`` over chains
``T`` contained in ``S``, computed by a subset Moebius transform.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .algebra import LaurentPoly, RatFunc, VarId, X, XC, Y, _mono, divide_by_one_minus
from .poset import elements
from .tableaux import Tableau, enumerate_tableaux, gale_leq, leg_polynomial, pair_leg_polynomial

__all__ = [
    "HlsSeries",
    "hls_series",
    "numerator",
    "verify_functional_equation",
    "coarsen",
    "coarse_series",
    "special_value_Y",
    "h_vector",
    "HVector",
    "eulerian",
    "chain_weights",
    "linear_coefficients",
    "chain_numerator",
    "BudgetError",
    "DEFAULT_BOUND",
]

DEFAULT_BOUND = 4
# n=5 numerators have up to 2^31 monomials; only chain-level data is offered there.
NUMERATOR_LIMIT = 4


class BudgetError(RuntimeError):
    """Raised when a request exceeds the configured computational bound."""


@dataclass
class HlsSeries:
    n: int
    chains: list[Tableau] = field(repr=False)
    _numerator: LaurentPoly | None = field(default=None, repr=False)

    @property
    def subsets(self) -> tuple[tuple[int, ...], ...]:
        return elements(self.n)

    @property
    def numerator(self) -> LaurentPoly:
        if self._numerator is None:
            self._numerator = numerator(self.n)
        return self._numerator

    def denominator_factors(self) -> list[LaurentPoly]:
        return [1 - LaurentPoly.var(XC(C)) for C in self.subsets]

    def ratfunc(self) -> RatFunc:
        return RatFunc(self.numerator, self.denominator_factors())

    def chain_sum(self, sigma: dict[VarId, LaurentPoly] | None = None) -> RatFunc:
        """The defining sum term by term (no Moebius transform); for cross-checks."""
        total = RatFunc(0)
        for T in self.chains:
            term = RatFunc(leg_polynomial(T))
            for C in T.columns:
                m = LaurentPoly.var(XC(C))
                term = term * RatFunc(m, [1 - m])
            total = total + term
        return total if sigma is None else total.substitute(sigma)

    def to_json(self) -> dict:
        return {"n": self.n, **self.ratfunc().to_json()}


def hls_series(n: int, bound: int = DEFAULT_BOUND) -> HlsSeries:
    if n < 1:
        raise ValueError("degree must be positive")
    if n > bound:
        raise BudgetError(f"n={n} exceeds the bound {bound}; pass a larger bound to opt in")
    return HlsSeries(n, enumerate_tableaux(n))


@functools.lru_cache(maxsize=None)
def numerator(n: int) -> LaurentPoly:
    """The multilinear numerator over ``prod_C (1 - X_C)``."""
    if n > NUMERATOR_LIMIT:
        raise BudgetError(f"the fine numerator for n={n} is beyond the supported size")
    chains = enumerate_tableaux(n)
    return chain_numerator(elements(n), [(T.columns, leg_polynomial(T)) for T in chains])


def chain_numerator(subs, weighted) -> LaurentPoly:
    """Numerator of ``sum w(chain) prod_{C in chain} X_C / (1 - X_C)`` over ``prod_C (1 - X_C)``.

    ``weighted`` lists ``(columns, w)`` with ``w`` a polynomial in ``Y`` (or an int).
    The coefficient at ``X^S`` is the alternating sum of ``w`` over chains inside
    ``S``, obtained by a subset Moebius transform over ``2^len(subs)`` masks.
    """
    index = {C: i for i, C in enumerate(subs)}
    weighted = [(cols, LaurentPoly.coerce(w)) for cols, w in weighted]
    deg = max((w.degree(Y) for _, w in weighted if not w.is_zero()), default=0) + 1
    table = np.zeros((1 << len(subs), deg), dtype=np.int64)
    for cols, w in weighted:
        mask = 0
        for C in cols:
            mask |= 1 << index[C]
        for e, c in enumerate(w.univariate_coeffs(Y)):
            table[mask, e] += c
    # c_S = sum_{T subset S} (-1)^{|S \ T|} a_T
    for b in range(len(subs)):
        bit = 1 << b
        view = table.reshape(-1, 2 * bit, deg)
        view[:, bit:, :] -= view[:, :bit, :]
    assert np.abs(table).max() < 2**62
    terms: dict = {}
    for mask in np.nonzero(table.any(axis=1))[0]:
        mask = int(mask)
        xs = {XC(subs[i]): 1 for i in range(len(subs)) if mask >> i & 1}
        for e, c in enumerate(table[mask]):
            if c:
                exps = dict(xs)
                if e:
                    exps[Y] = e
                terms[_mono(exps)] = int(c)
    return LaurentPoly(terms)


def verify_functional_equation(n: int) -> bool:
    """Check the self-reciprocity of the series after clearing all denominators.

    Inverting ``Y`` and every ``X_C`` and rewriting ``1 - 1/X_C = -(1 - X_C)/X_C``
    turns the claim into ``(-1)^m X_all N(1/Y, 1/X) = (-1)^n Y^-binom(n,2) X_[n] N``
    with ``m = 2^n - 1``.
    """
    N = numerator(n)
    subs = elements(n)
    m = len(subs)
    x_all = LaurentPoly.monomial({XC(C): 1 for C in subs})
    lhs = N.invert_variables([Y] + [XC(C) for C in subs]) * x_all * (-1) ** m
    rhs = N * LaurentPoly.monomial({Y: -comb(n, 2), XC(range(1, n + 1)): 1}) * (-1) ** n
    return lhs == rhs


# ---------------------------------------------------------------------------
# Coarsening


def chain_weights(n: int, y0: int | None = None) -> list:
    """``W[l]`` = sum of ``Phi_T`` over reduced tableaux with ``l`` columns.

    ``Phi`` is multiplicative over adjacent columns, so this is a dynamic
    program over the tableau order. ``y0=None`` keeps ``Y`` symbolic.
    """
    subs = elements(n)
    size = len(subs)
    ups = {a: [b for b in subs if b != a and gale_leq(a, b)] for a in subs}
    order = sorted(subs, key=lambda a: len(ups[a]))

    def weight(a, b):
        p = pair_leg_polynomial(a, b)
        return p if y0 is None else int(p.evaluate({Y: y0}))

    zero = LaurentPoly() if y0 is None else 0
    one = LaurentPoly.const(1) if y0 is None else 1
    f: dict = {}
    for a in order:
        row = [zero] * (size + 1)
        row[1] = one
        for b in ups[a]:
            w = weight(a, b)
            fb = f[b]
            for k in range(1, size):
                if fb[k] != zero:
                    row[k + 1] = row[k + 1] + w * fb[k]
        f[a] = row
    out = [one] + [sum((f[a][k] for a in subs), zero) for k in range(1, size + 1)]
    return out


def _coarse_from_weights(weights: list, m: int) -> tuple[LaurentPoly, int]:
    """Numerator and reduced ``(1 - X)`` exponent of ``sum_l W_l (X/(1-X))^l``."""
    xv = LaurentPoly.var(X)
    one_minus = 1 - xv
    num = LaurentPoly()
    for ell, w in enumerate(weights):
        if (w.is_zero() if isinstance(w, LaurentPoly) else w == 0):
            continue
        num = num + LaurentPoly.coerce(w) * xv**ell * one_minus ** (m - ell)
    exp = m
    while exp > 0:
        q = divide_by_one_minus(num, X)
        if q is None:
            break
        num, exp = q, exp - 1
    return num, exp


def coarsen(s: HlsSeries | int, y0: int | None = None) -> RatFunc:
    """Replace every ``X_C`` by ``X`` (and ``Y`` by ``y0`` if given), then cancel ``(1 - X)`` factors."""
    n = s.n if isinstance(s, HlsSeries) else s
    num, exp = _coarse_from_weights(chain_weights(n, y0), 2**n - 1)
    return RatFunc(num, [1 - LaurentPoly.var(X)] * exp)


def coarse_series(n: int, y0: int | None = None) -> RatFunc:
    return coarsen(n, y0)


def special_value_Y(s: HlsSeries | RatFunc, y0: int) -> RatFunc:
    """Substitute ``Y = y0`` into a fine series or a coarsened one."""
    if y0 not in (0, 1, -1):
        raise ValueError("special values are 0, 1 and -1")
    f = s.ratfunc() if isinstance(s, HlsSeries) else s
    return f.substitute({Y: y0})


@dataclass
class HVector:
    n: int
    y0: int
    coefficients: list[int]
    denominator_exponent: int
    reduced_exponent: int

    @property
    def total(self) -> int:
        return sum(self.coefficients)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "Y": self.y0,
            "h": self.coefficients,
            "denominator_exponent": self.denominator_exponent,
            "reduced_exponent": self.reduced_exponent,
            "h_sum": self.total,
        }


H_VECTOR_BOUNDS = {0: 6, -1: 5}


def h_vector(n: int, y0: int) -> HVector:
    """Numerator coefficients of the coarse series at ``Y = y0`` over ``(1 - X)^binom(n+1, 2)``.

    If cancellation leaves a larger exponent than ``binom(n+1, 2)`` the vector is
    reported over the reduced exponent instead; ``reduced_exponent`` records it.
    """
    if y0 not in H_VECTOR_BOUNDS:
        raise ValueError("h-vectors are offered at Y = 0 and Y = -1")
    if n > H_VECTOR_BOUNDS[y0]:
        raise BudgetError(f"n={n} exceeds the h-vector bound {H_VECTOR_BOUNDS[y0]} at Y={y0}")
    num, exp = _coarse_from_weights(chain_weights(n, y0), 2**n - 1)
    r = comb(n + 1, 2)
    target = max(r, exp)
    num = num * (1 - LaurentPoly.var(X)) ** (target - exp)
    coeffs = num.univariate_coeffs(X)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return HVector(n, y0, coeffs, target, exp)


def eulerian(n: int) -> LaurentPoly:
    """``sum_{w in S_n} X^des(w)`` by direct enumeration."""
    counts: dict[int, int] = {}
    for w in itertools.permutations(range(1, n + 1)):
        d = sum(1 for i in range(n - 1) if w[i + 1] < w[i])
        counts[d] = counts.get(d, 0) + 1
    return sum((LaurentPoly.var(X, d) * c for d, c in counts.items()), LaurentPoly())


def linear_coefficients(N: LaurentPoly) -> list[tuple[dict[VarId, int], int]]:
    """Terms of ``N`` whose ``X``-part is a single ``X_I`` to the first power."""
    out = []
    for exps, c in N.terms():
        xs = [e for v, e in exps.items() if v.head == "X"]
        if xs == [1]:
            out.append((exps, c))
    return out
