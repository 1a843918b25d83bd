"""Brute-force enumeration of finite-index sublattices of Z_p^n.

A lattice is stored as its row-style Hermite normal form: an upper-triangular
integer matrix with ``p^{a_i}`` on the diagonal and each entry above the
diagonal reduced modulo the diagonal entry of its column. Rows generate the
lattice. All normal forms are computed over the integers; every elementary
divisor is a power of ``p`` because the determinant is, so no p-adic
truncation is involved.

Flag conventions. The intersection flag uses ``V_i`` = the last ``i``
coordinates, so ``Lambda cap V_i`` is generated by the last ``i`` rows and its
type is the Smith type of the bottom-right ``i x i`` block. The projection
flag uses the quotient onto the first ``i`` coordinates, whose image is
generated by the top-left ``i x i`` block. If a projection-type comparison
ever fails, projecting onto the last coordinates is the first alternative to
try.
"""

from __future__ import annotations

import functools
import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Iterator, Sequence

from .algebra import LaurentPoly, RatFunc, VarId, Z, q, series_expand, x, y
from .tableaux import (
    Partition,
    Tableau,
    complement_tableau,
    conjugate,
    inc,
    is_horizontal_strip,
    jigsaw,
    leg_polynomial,
    normalize,
    schubert_dims_of_tableau,
    strip_geometry,
    tableau_from_flag,
)

__all__ = [
    "HnfLattice",
    "LatticeRecord",
    "OracleError",
    "BUDGET",
    "lattice_count",
    "enumerate_sublattices",
    "smith_type",
    "intersection_flag",
    "projection_flag",
    "hermite_composition",
    "record",
    "census",
    "Census",
    "fnT_formula",
    "verify_fnT",
    "verify_series_coefficients",
    "count_extensions",
    "extension_formula",
    "subrepresentation_counts",
    "zeta_coefficients",
]

BUDGET = 10**7


class OracleError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class HnfLattice:
    p: int
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise OracleError("HNF matrix must be n x n")
        for i in range(self.n):
            d = rows[i][i]
            if _valuation(d, self.p) is None or self.p ** _valuation(d, self.p) != d:
                raise OracleError(f"diagonal entry {d} is not a power of {self.p}")
            for j in range(self.n):
                v = rows[i][j]
                if j < i and v != 0:
                    raise OracleError("HNF matrix must be upper triangular")
                if j > i and not 0 <= v < rows[j][j]:
                    raise OracleError(f"entry ({i + 1},{j + 1}) is not reduced modulo {rows[j][j]}")

    @classmethod
    def diagonal(cls, p: int, exps: Sequence[int]) -> "HnfLattice":
        n = len(exps)
        return cls(p, n, tuple(tuple(p ** exps[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(_valuation(self.rows[i][i], self.p) for i in range(self.n))

    @property
    def index_exponent(self) -> int:
        return sum(self.exponents)

    def block(self, start: int, size: int) -> list[list[int]]:
        return [list(r[start : start + size]) for r in self.rows[start : start + size]]

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "rows": [list(r) for r in self.rows]}


def _valuation(a: int, p: int) -> int | None:
    if a == 0:
        return None
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def _smith_valuations(rows: Sequence[Sequence[int]], p: int, precision: int) -> list[int]:
    """Valuations of the elementary divisors of a full-rank square matrix, modulo ``p^precision``.

    ``precision`` must exceed the valuation of the determinant.
    """
    mod = p**precision
    A = [[v % mod for v in r] for r in rows]
    k = len(A)
    out = []
    for s in range(k):
        best = None
        for i in range(s, k):
            for j in range(s, k):
                v = _valuation(A[i][j], p)
                if v is not None and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            raise OracleError("matrix is singular modulo the working precision")
        v, i, j = best
        A[s], A[i] = A[i], A[s]
        for r in A:
            r[s], r[j] = r[j], r[s]
        unit = A[s][s] // p**v
        inv = pow(unit, -1, mod)
        A[s] = [(a * inv) % mod for a in A[s]]
        for i in range(s + 1, k):
            f = A[i][s] // p**v
            if f:
                A[i] = [(a - f * b) % mod for a, b in zip(A[i], A[s])]
        for j in range(s + 1, k):
            f = A[s][j] // p**v
            if f:
                for r in A:
                    r[j] = (r[j] - f * r[s]) % mod
        out.append(v)
    return out


def _block_type(L: HnfLattice, start: int, size: int) -> Partition:
    if size == 0:
        return ()
    blk = L.block(start, size)
    det_val = sum(L.exponents[start : start + size])
    return normalize(sorted(_smith_valuations(blk, L.p, det_val + 1), reverse=True))


def smith_type(L: HnfLattice) -> Partition:
    """Elementary-divisor type of ``Z_p^n / Lambda`` as a partition."""
    return _block_type(L, 0, L.n)


def intersection_flag(L: HnfLattice) -> list[Partition]:
    """``[(), lambda^(1), ..., lambda^(n)]`` with ``lambda^(i)`` the type of ``Lambda cap V_i``."""
    return [()] + [_block_type(L, L.n - i, i) for i in range(1, L.n + 1)]


def projection_flag(L: HnfLattice) -> list[Partition]:
    """``[(), lambda_(1), ..., lambda_(n)]`` with ``lambda_(i)`` the type of the image in the first ``i`` coordinates."""
    return [()] + [_block_type(L, 0, i) for i in range(1, L.n + 1)]


def hermite_composition(L: HnfLattice) -> tuple[int, ...]:
    return L.exponents


@dataclass(frozen=True)
class LatticeRecord:
    lattice: HnfLattice
    type: Partition
    intersection: tuple[Partition, ...]
    projection: tuple[Partition, ...]
    intersection_tableau: Tableau
    projection_tableau: Tableau
    delta: tuple[int, ...]


def record(L: HnfLattice) -> LatticeRecord:
    fin = intersection_flag(L)
    fpr = projection_flag(L)
    return LatticeRecord(
        lattice=L,
        type=fin[-1],
        intersection=tuple(fin),
        projection=tuple(fpr),
        intersection_tableau=tableau_from_flag(fin),
        projection_tableau=tableau_from_flag(fpr),
        delta=L.exponents,
    )


# ---------------------------------------------------------------------------
# Enumeration


def _cells(n: int, B: int) -> Iterator[tuple[int, ...]]:
    for total in range(B + 1):
        for cut in itertools.combinations(range(total + n - 1), n - 1):
            parts, prev = [], -1
            for c in cut:
                parts.append(c - prev - 1)
                prev = c
            parts.append(total + n - 2 - prev)
            yield tuple(parts)


def _cell_size(p: int, a: Sequence[int]) -> int:
    return prod(p ** (a[j] * j) for j in range(len(a)))


def lattice_count(n: int, p: int, B: int) -> int:
    """Number of sublattices of index at most ``p^B``."""
    return sum(_cell_size(p, a) for a in _cells(n, B))


def _check_args(n: int, p: int, B: int) -> None:
    if n < 1:
        raise OracleError("dimension must be positive")
    if not _is_prime(p):
        raise OracleError(f"{p} is not prime")
    if B < 0:
        raise OracleError("index exponent must be nonnegative")
    total = lattice_count(n, p, B)
    if total > BUDGET:
        raise OracleError(f"{total} lattices exceed the enumeration budget {BUDGET}")


def _cell_lattices(p: int, a: Sequence[int]) -> Iterator[HnfLattice]:
    n = len(a)
    diag = [p**e for e in a]
    slots = [(i, j) for j in range(n) for i in range(j)]
    ranges = [range(diag[j]) for _, j in slots]
    for vals in itertools.product(*ranges):
        M = [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)]
        for (i, j), v in zip(slots, vals):
            M[i][j] = v
        yield HnfLattice(p, n, tuple(map(tuple, M)))


def enumerate_sublattices(n: int, p: int, B: int, cells: Iterable[Sequence[int]] | None = None) -> Iterator[HnfLattice]:
    """Every sublattice of index at most ``p^B`` exactly once (or only the given diagonal cells)."""
    _check_args(n, p, B if cells is None else 0)
    for a in (_cells(n, B) if cells is None else cells):
        yield from _cell_lattices(p, tuple(a))


# ---------------------------------------------------------------------------
# Census


CensusKey = tuple  # (intersection tableau columns, projection tableau columns, delta, type)


@dataclass
class Census:
    n: int
    p: int
    B: int
    counts: Counter

    def by_intersection(self) -> Counter:
        out: Counter = Counter()
        for (tin, _, _, _), c in self.counts.items():
            out[tin] += c
        return out

    def by_projection(self) -> Counter:
        out: Counter = Counter()
        for (_, tpr, _, _), c in self.counts.items():
            out[tpr] += c
        return out

    def grouped(self, by: str) -> Counter:
        picks = {
            "tableau": lambda k: (k[0], k[1]),
            "delta": lambda k: k[2],
            "type": lambda k: k[3],
            "all": lambda k: k,
        }
        if by not in picks:
            raise OracleError(f"group-by is one of {', '.join(picks)}")
        pick = picks[by]
        out: Counter = Counter()
        for k, c in self.counts.items():
            out[pick(k)] += c
        return out

    def total(self) -> int:
        return sum(self.counts.values())


def _cell_census(args) -> Counter:
    p, a = args
    out: Counter = Counter()
    for L in _cell_lattices(p, a):
        r = record(L)
        out[(r.intersection_tableau.columns, r.projection_tableau.columns, r.delta, r.type)] += 1
    return out


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("HLS_LAB_THREADS", "1")))
    except ValueError:
        return 1


def census(n: int, p: int, B: int, cells: Iterable[Sequence[int]] | None = None) -> Census:
    """Exact counts keyed by (intersection tableau, projection tableau, delta, type)."""
    _check_args(n, p, B if cells is None else 0)
    key = None if cells is None else tuple(tuple(a) for a in cells)
    return Census(n, p, B, Counter(_census_counts(n, p, B, key)))


@functools.lru_cache(maxsize=16)
def _census_counts(n: int, p: int, B: int, cells: tuple | None) -> dict:
    todo = [(p, tuple(a)) for a in (_cells(n, B) if cells is None else cells)]
    total: Counter = Counter()
    workers = _workers()
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_cell_census, todo):
                total.update(part)
    else:
        for job in todo:
            total.update(_cell_census(job))
    return dict(sorted(total.items()))


def fnT_formula(T: Tableau, kind: str = "intersection") -> LaurentPoly:
    """``q^D_n(T) Phi_T(q^-1)`` (intersection) or ``q^compD_n(T) Phi_T(q^-1)`` (projection)."""
    direct, dual = schubert_dims_of_tableau(T, T.n) if T.columns else (0, 0)
    e = direct if kind == "intersection" else dual
    phi = leg_polynomial(T).substitute({VarId("Y"): LaurentPoly.var(q, -1)})
    return phi * LaurentPoly.var(q, e)


def _at(p: int, f: LaurentPoly) -> Fraction:
    return Fraction(f.evaluate({q: p}))


def verify_fnT(n: int, p: int, B: int) -> bool:
    """Census counts per tableau against the closed formulas, plus the complement duality."""
    C = census(n, p, B)
    tin, tpr = C.by_intersection(), C.by_projection()
    for cols, c in tin.items():
        if _at(p, fnT_formula(Tableau(n, cols), "intersection")) != c:
            return False
    for cols, c in tpr.items():
        T = Tableau(n, cols)
        if _at(p, fnT_formula(T, "projection")) != c:
            return False
        comp = complement_tableau(T)
        # comp T has more cells than T; compare with the census only inside the bound
        if sum(map(len, comp.columns)) <= B:
            if tin.get(comp.columns, 0) != c:
                return False
        elif _at(p, fnT_formula(comp, "intersection")) != c:
            return False
    return True


def _weighted_expand(f: RatFunc, weights: dict[VarId, int], bound: int) -> LaurentPoly:
    w = VarId("w")
    sigma = {v: LaurentPoly.monomial({v: 1, w: k}) for v, k in weights.items()}
    return series_expand(f.substitute(sigma), [w], bound).substitute({w: 1})


def _evaluate_q(p: int, f: LaurentPoly) -> dict:
    out: dict = {}
    for exps, c in f.terms():
        e = exps.pop(q, 0)
        key = tuple(sorted((v.name, k) for v, k in exps.items()))
        out[key] = out.get(key, 0) + c * Fraction(p) ** e
    return {k: v for k, v in out.items() if v}


def _census_monomials(C: Census, target: str) -> dict:
    out: dict = {}
    for (tin, tpr, delta, lam), c in C.counts.items():
        if target == "HS":
            exps = {x(j + 1): e for j, e in enumerate(inc(lam, C.n))}
            exps.update({y(i + 1): d for i, d in enumerate(delta)})
        else:
            cols = tin if target == "affS_in" else tpr
            flag = _flag(Tableau(C.n, cols))
            exps = {}
            for i in range(1, C.n + 1):
                for j, e in enumerate(inc(flag[i], i), start=1):
                    exps[Z(i, j)] = e
        key = tuple(sorted((v.name, k) for v, k in exps.items() if k))
        out[key] = out.get(key, 0) + c
    return out


def _flag(T: Tableau) -> list[Partition]:
    from .tableaux import flag_of_partitions

    return flag_of_partitions(T)


def verify_series_coefficients(n: int, p: int, B: int, target: str) -> bool:
    """Expand the specialized series to index ``p^B`` and compare every coefficient with the census.

    The grading is the index exponent: ``Z_{n,j}`` and ``x_j`` carry weight ``j``,
    ``y_i`` weight 1, every other variable weight 0.
    """
    from .special import affine_schubert, hermite_smith

    if target == "affS_in":
        f = affine_schubert(n, "intersection")
    elif target == "affS_pr":
        f = affine_schubert(n, "projection")
    elif target == "HS":
        f = hermite_smith(n)
    else:
        raise OracleError("target is affS_in, affS_pr or HS")
    if target == "HS":
        weights = {y(i): 1 for i in range(1, n + 1)}
    else:
        weights = {Z(n, j): j for j in range(1, n + 1)}
    series = _evaluate_q(p, _weighted_expand(f, weights, B))
    counts = _census_monomials(census(n, p, B), target)
    return series == {k: Fraction(v) for k, v in counts.items()}


def zeta_coefficients(n: int, p: int, B: int) -> list[int]:
    """Number of sublattices of index exactly ``p^k`` for ``k = 0..B``."""
    _check_args(n, p, B)
    out = [0] * (B + 1)
    for a in _cells(n, B):
        out[sum(a)] += _cell_size(p, a)
    return out


# ---------------------------------------------------------------------------
# Extensions


def extension_formula(lam: Sequence[int], mu: Sequence[int], n: int, kind: str = "intersection") -> LaurentPoly:
    """``q^gap prod_{a in J} (1 - q^-inc_a(mu'))``; the projection case uses the jigsaw pair."""
    if kind == "projection":
        lam, mu = jigsaw(lam, mu, n)
    geo = strip_geometry(lam, mu, n)
    mc = conjugate(mu)
    inc_mc = inc(mc, max(len(mc), max(geo.cols, default=0)))
    out = LaurentPoly.var(q, geo.gap)
    for a in geo.cols:
        out = out * (1 - LaurentPoly.var(q, -inc_mc[a - 1]))
    return out


def count_extensions(n: int, p: int, base: HnfLattice, lam: Sequence[int], kind: str = "intersection") -> int:
    """Lattices ``Lambda`` of type ``lam`` whose intersection with (or image in) the rank ``n-1`` member is ``base``."""
    if base.n != n - 1 or base.p != p:
        raise OracleError("base lattice must have rank n-1 over the same prime")
    lam = normalize(lam)
    mu = smith_type(base) if n > 1 else ()
    if len(lam) > n or not is_horizontal_strip(lam, mu):
        return 0
    extra = sum(lam) - sum(mu)
    if extra < 0:
        return 0
    if p ** (extra * (n - 1)) > BUDGET:
        raise OracleError("extension enumeration exceeds the budget")
    d = p**extra
    count = 0
    if kind == "intersection":
        ranges = [range(base.rows[j][j]) for j in range(n - 1)]
        for top in itertools.product(*ranges):
            rows = [(d,) + tuple(top)] + [(0,) + r for r in base.rows]
            if smith_type(HnfLattice(p, n, tuple(rows))) == lam:
                count += 1
    elif kind == "projection":
        for col in itertools.product(range(d), repeat=n - 1):
            rows = [r + (c,) for r, c in zip(base.rows, col)] + [(0,) * (n - 1) + (d,)]
            if smith_type(HnfLattice(p, n, tuple(rows))) == lam:
                count += 1
    else:
        raise OracleError("kind is 'intersection' or 'projection'")
    return count


# ---------------------------------------------------------------------------
# Subrepresentations of the dual star quiver


def subrepresentation_counts(n: int, p: int, B: int) -> Counter:
    """Finite-index subrepresentations ``(Lambda; Lambda_1, ..., Lambda_{n-1})`` with ``Lambda_i <= Lambda cap V_i``.

    Keyed by the index exponents ``(e_1, ..., e_n)`` with ``e_i = log_p [V_i : Lambda_i]``
    and ``e_n = log_p [Z_p^n : Lambda]``; truncated at total exponent ``B``. The
    inner sublattices are enumerated as sublattices of ``Z_p^i``, since
    ``Lambda cap V_i`` is free of rank ``i``.
    """
    _check_args(n, p, B)
    inner = {i: zeta_coefficients(i, p, B) for i in range(1, n)}
    out: Counter = Counter()
    for L in enumerate_sublattices(n, p, B):
        flag = intersection_flag(L)
        base = [sum(flag[i]) for i in range(1, n + 1)]
        if sum(base) > B:
            continue
        slack = B - sum(base)
        ranges = [range(slack + 1)] * (n - 1)
        for ks in itertools.product(*ranges):
            if sum(ks) > slack:
                continue
            mult = prod(inner[i + 1][k] for i, k in enumerate(ks))
            out[tuple(b + k for b, k in zip(base, ks)) + (base[-1],)] += mult
    return out


def verify_quiver(n: int, p: int, B: int, exponents: str = "count") -> bool:
    """Quiver zeta function expanded to total ``t``-degree ``B`` against :func:`subrepresentation_counts`."""
    from .algebra import t
    from .special import quiver_zeta

    f = quiver_zeta(n, exponents)
    ts = [t(i) for i in range(1, n + 1)]
    series = _evaluate_q(p, series_expand(f, ts, B))
    want = {}
    for e, c in subrepresentation_counts(n, p, B).items():
        key = tuple(sorted((t(i + 1).name, k) for i, k in enumerate(e) if k))
        want[key] = Fraction(c)
    return series == want
