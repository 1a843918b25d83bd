"""Partitions, column-stored tableaux, and the statistics attached to them.

Partitions are plain tuples of nonnegative ints with trailing zeros removed.
Functions that need an ambient length take it explicitly and pad.

A tableau of degree ``n`` is a sequence of columns, each a sorted tuple of
labels in ``[1..n]``; adjacent columns must satisfy the Gale condition.
"""

from __future__ import annotations

import functools
import itertools
import json
import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence

from .algebra import LaurentPoly, VarId, Y, Z, x as xvar

__all__ = [
    "Partition",
    "normalize",
    "conjugate",
    "inc",
    "partition_utils",
    "is_horizontal_strip",
    "StripGeometry",
    "strip_geometry",
    "jigsaw",
    "gale_leq",
    "Tableau",
    "TableauError",
    "flag_of_partitions",
    "tableau_from_flag",
    "leg_polynomial",
    "pair_leg_polynomial",
    "complement_tableau",
    "dual_tableau",
    "schubert_dim",
    "schubert_dims_of_tableau",
    "z_monomial",
    "GTPattern",
    "gt_bijection",
    "gt_inverse",
    "psi_polynomial",
    "dyck_word",
    "dyck_polynomial",
    "phantom_factor",
    "hall_littlewood",
    "schur",
    "enumerate_tableaux",
    "HL_T",
]

Partition = tuple  # tuple[int, ...], weakly decreasing, no trailing zeros

# The Hall-Littlewood parameter.
HL_T = VarId("t")

_RUNS = re.compile(r"0+|1+")


class TableauError(ValueError):
    """Raised for malformed partitions, tableaux, patterns or Dyck words."""


# ---------------------------------------------------------------------------
# Partitions


def normalize(parts: Iterable[int]) -> Partition:
    p = list(parts)
    if any(a < 0 for a in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise TableauError(f"{tuple(p)} is not a partition")
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _pad(lam: Sequence[int], length: int) -> tuple[int, ...]:
    if len(normalize(lam)) > length:
        raise TableauError(f"{tuple(lam)} has more than {length} parts")
    return tuple(lam[:length]) + (0,) * (length - len(lam))


def _part(lam: Sequence[int], i: int) -> int:
    """1-based part access with implicit trailing zeros."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def conjugate(lam: Sequence[int]) -> Partition:
    lam = normalize(lam)
    if not lam:
        return ()
    return tuple(sum(1 for a in lam if a >= j) for j in range(1, lam[0] + 1))


def inc(lam: Sequence[int], length: int | None = None) -> tuple[int, ...]:
    """Increment vector ``(l1-l2, ..., l_{n-1}-l_n, l_n)`` for ambient length ``n``."""
    n = len(normalize(lam)) if length is None else length
    p = _pad(lam, n)
    return tuple(p[i] - (p[i + 1] if i + 1 < n else 0) for i in range(n))


def partition_utils(lam: Sequence[int], length: int | None = None) -> dict:
    lam = normalize(lam)
    n = len(lam) if length is None else length
    return {
        "partition": lam,
        "size": sum(lam),
        "conjugate": conjugate(lam),
        "inc": inc(lam, n),
        # sum of (i-1)*lam_i, the usual n(lam) statistic
        "weighted_size": sum(i * a for i, a in enumerate(lam)),
    }


def is_horizontal_strip(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``mu`` inside ``lam`` with at most one cell of ``lam - mu`` per column."""
    lam, mu = normalize(lam), normalize(mu)
    if len(mu) > len(lam):
        return False
    # interlacing lam_1 >= mu_1 >= lam_2 >= mu_2 >= ...
    return all(_part(lam, i) >= _part(mu, i) >= _part(lam, i + 1) for i in range(1, len(lam) + 1))


@dataclass(frozen=True)
class StripGeometry:
    corners: tuple[tuple[int, int], ...]
    rows: tuple[int, ...]  # first coordinates of the corners
    cols: tuple[int, ...]  # second coordinates of the corners
    valuation: Partition
    gap_partition: Partition
    gap: int


def _check_pair(lam: Sequence[int], mu: Sequence[int], n: int | None) -> tuple[Partition, Partition, int]:
    lam, mu = normalize(lam), normalize(mu)
    if n is None:
        n = max(len(lam), len(mu) + 1, 1)
    if len(lam) > n or len(mu) > n - 1:
        raise TableauError(f"({lam}, {mu}) does not fit degree {n}")
    if not is_horizontal_strip(lam, mu):
        raise TableauError(f"{lam} - {mu} is not a horizontal strip")
    return lam, mu, n


def strip_geometry(lam: Sequence[int], mu: Sequence[int], n: int | None = None) -> StripGeometry:
    """Corners of ``mu`` left of the strip, plus the valuation and gap partitions."""
    lam, mu, n = _check_pair(lam, mu, n)
    lc, mc = conjugate(lam), conjugate(mu)
    corners = []
    for a in range(1, (mu[0] if mu else 0) + 1):
        if _part(mc, a) == _part(lc, a) and _part(mc, a + 1) < _part(lc, a + 1):
            corners.append((_part(mc, a), a))
    diff = [_part(lam, j) - _part(mu, j) for j in range(1, n + 1)]
    nu = tuple(sum(diff[i:]) for i in range(1, n))  # nu_i = sum_{j>i}
    gamma = tuple(_part(mu, i) - nu[i - 1] for i in range(1, n))
    corners.sort()
    return StripGeometry(
        corners=tuple(corners),
        rows=tuple(c[0] for c in corners),
        cols=tuple(sorted(c[1] for c in corners)),
        valuation=normalize(nu),
        gap_partition=normalize(gamma),
        gap=sum(gamma),
    )


def jigsaw(lam: Sequence[int], mu: Sequence[int], n: int | None = None) -> tuple[Partition, Partition]:
    """Reflect-and-complement both partitions inside the ``n x lam_1`` box."""
    lam, mu, n = _check_pair(lam, mu, n)
    top = _part(lam, 1)
    new_lam = tuple(top - _part(lam, i) for i in range(n, 0, -1))
    new_mu = tuple(top - _part(mu, i) for i in range(n - 1, 0, -1))
    return normalize(new_lam), normalize(new_mu)


# ---------------------------------------------------------------------------
# Tableaux


def gale_leq(A: Sequence[int], B: Sequence[int]) -> bool:
    """True iff ``(A, B)`` can be adjacent columns, ``A`` on the left."""
    if not A or not B:
        raise TableauError("Gale comparison needs nonempty sets")
    A, B = sorted(A), sorted(B)
    return len(A) >= len(B) and all(a <= b for a, b in zip(A, B))


@dataclass(frozen=True)
class Tableau:
    n: int
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cols = tuple(tuple(c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        if self.n < 1:
            raise TableauError("degree must be positive")
        for c in cols:
            if not c:
                raise TableauError("empty column")
            if list(c) != sorted(set(c)) or c[0] < 1 or c[-1] > self.n:
                raise TableauError(f"column {c} is not a strictly increasing subset of [1..{self.n}]")
        for a, b in zip(cols, cols[1:]):
            if not gale_leq(a, b):
                raise TableauError(f"columns {a}, {b} violate the tableau condition")

    # construction ------------------------------------------------------
    @classmethod
    def from_rows(cls, n: int, rows: Sequence[Sequence[int]]) -> "Tableau":
        width = len(rows[0]) if rows else 0
        cols = [tuple(r[j] for r in rows if j < len(r)) for j in range(width)]
        return cls(n, tuple(cols))

    @classmethod
    def from_json(cls, data: str | dict) -> "Tableau":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), tuple(tuple(c) for c in data["columns"]))

    def to_json(self) -> dict:
        return {"n": self.n, "columns": [list(c) for c in self.columns]}

    # views -------------------------------------------------------------
    def __len__(self) -> int:
        return len(self.columns)

    @property
    def shape(self) -> Partition:
        return conjugate(tuple(len(c) for c in self.columns))

    def rows(self) -> list[list[int]]:
        sh = self.shape
        return [[self.columns[j][i] for j in range(sh[i])] for i in range(len(sh))]

    def entry(self, i: int, j: int) -> int | None:
        """Entry in row ``i``, column ``j`` (1-based), or None."""
        if 1 <= j <= len(self.columns) and 1 <= i <= len(self.columns[j - 1]):
            return self.columns[j - 1][i - 1]
        return None

    def weight(self) -> tuple[int, ...]:
        out = [0] * self.n
        for c in self.columns:
            for a in c:
                out[a - 1] += 1
        return tuple(out)

    def restrict(self, k: int) -> "Tableau":
        """Sub-tableau of entries at most ``k`` (empty columns dropped), still of degree n."""
        cols = [tuple(a for a in c if a <= k) for c in self.columns]
        return Tableau(self.n, tuple(c for c in cols if c))

    def multiplicity(self, C: Iterable[int]) -> int:
        key = tuple(sorted(C))
        return sum(1 for c in self.columns if c == key)

    def is_reduced(self) -> bool:
        return len(set(self.columns)) == len(self.columns)

    def __str__(self) -> str:
        return "(" + ", ".join("{" + ",".join(map(str, c)) + "}" for c in self.columns) + ")"


def flag_of_partitions(T: Tableau) -> list[Partition]:
    """``[lambda^(0), ..., lambda^(n)]`` where ``lambda^(k)`` is the shape of entries <= k."""
    out = []
    for k in range(T.n + 1):
        lengths = [sum(1 for a in c if a <= k) for c in T.columns]
        out.append(conjugate([m for m in lengths if m]))
    return out


def tableau_from_flag(flag: Sequence[Sequence[int]]) -> Tableau:
    """Inverse of :func:`flag_of_partitions`; ``flag[0]`` must be empty."""
    flag = [normalize(p) for p in flag]
    n = len(flag) - 1
    if n < 1 or flag[0]:
        raise TableauError("a flag starts at the empty partition and has n >= 1 further members")
    for k in range(1, n + 1):
        if len(flag[k]) > k or not is_horizontal_strip(flag[k], flag[k - 1]):
            raise TableauError(f"flag members {k - 1}, {k} are not a horizontal strip")
    conj = [conjugate(p) for p in flag]
    width = _part(flag[n], 1)
    cols = []
    for j in range(1, width + 1):
        cols.append(tuple(k for k in range(1, n + 1) if _part(conj[k], j) > _part(conj[k - 1], j)))
    return Tableau(n, tuple(cols))


@functools.lru_cache(maxsize=None)
def _pair_legs(left: tuple[int, ...], right: tuple[int, ...]) -> tuple[int, ...]:
    sizes = []
    members = set(left)
    for a, b in zip(left, right):
        if b in members:
            continue
        # b > a here; equality would put b in the left column
        assert a < b, "equal row neighbours must share the label"
        sizes.append(sum(1 for c in left if a <= c <= b))
    return tuple(sizes)


@functools.lru_cache(maxsize=None)
def pair_leg_polynomial(left: tuple[int, ...], right: tuple[int, ...], var: VarId = Y) -> LaurentPoly:
    """Leg polynomial of the two-column tableau ``(left, right)``."""
    out = LaurentPoly.const(1)
    for m in _pair_legs(tuple(left), tuple(right)):
        out = out * (1 - LaurentPoly.var(var, m))
    return out


def leg_polynomial(T: Tableau, var: VarId = Y) -> LaurentPoly:
    out = LaurentPoly.const(1)
    for a, b in zip(T.columns, T.columns[1:]):
        out = out * pair_leg_polynomial(a, b, var)
    return out


def complement_tableau(T: Tableau) -> Tableau:
    full = set(range(1, T.n + 1))
    cols = [tuple(sorted(full - set(c))) for c in reversed(T.columns)]
    return Tableau(T.n, tuple(c for c in cols if c))


def dual_tableau(T: Tableau) -> Tableau:
    """Tableau of the jigsaw-dual flag, computed member by member."""
    flag = flag_of_partitions(T)
    top = _part(flag[T.n], 1)
    dual = [()]
    for i in range(1, T.n + 1):
        dual.append(normalize(top - _part(flag[i], r) for r in range(i, 0, -1)))
    return tableau_from_flag(dual)


def _schubert_dim(n: int, C: Iterable[int]) -> int:
    C = set(C)
    return sum(i for i in range(1, n + 1) if i not in C) - comb(n - len(C) + 1, 2)


def schubert_dim(n: int, C: Iterable[int]) -> int:
    C = set(C)
    if not C:
        raise TableauError("Schubert dimension needs a nonempty set")
    if not C <= set(range(1, n + 1)):
        raise TableauError(f"{sorted(C)} is not a subset of [1..{n}]")
    return _schubert_dim(n, C)


def schubert_dims_of_tableau(T: Tableau, k: int) -> tuple[int, int]:
    """``(D_k, dual D_k)``: summed Schubert dimensions of the columns of ``T`` restricted to ``[k]``."""
    if not 1 <= k <= T.n:
        raise TableauError(f"k={k} outside [1..{T.n}]")
    cols = T.restrict(k).columns
    full = set(range(1, k + 1))
    direct = sum(_schubert_dim(k, c) for c in cols)
    dual = sum(_schubert_dim(k, full - set(c)) for c in cols)
    return direct, dual


def z_monomial(n: int, C: Iterable[int]) -> LaurentPoly:
    """Product of ``Z_{(C(k)+e), k}`` over the gaps after each member ``C(k)``."""
    C = sorted(set(C))
    if not C:
        raise TableauError("Z monomial needs a nonempty set")
    ext = C + [n + 1]
    exps: dict[VarId, int] = {}
    for k in range(1, len(C) + 1):
        for row in range(ext[k - 1], ext[k]):
            v = Z(row, k)
            exps[v] = exps.get(v, 0) + 1
    return LaurentPoly.monomial(exps)


# ---------------------------------------------------------------------------
# Gelfand-Tsetlin patterns


@dataclass(frozen=True)
class GTPattern:
    """Row ``r`` (1-based) has ``r`` entries with ``a[r][s] <= a[r+1][s] <= a[r+1][s+1]``."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n or any(len(r) != i + 1 for i, r in enumerate(rows)):
            raise TableauError("pattern rows must have lengths 1..n")
        for i in range(self.n - 1):
            for j in range(i + 1):
                if not rows[i][j] <= rows[i + 1][j] <= rows[i + 1][j + 1]:
                    raise TableauError(f"pattern entries ({i + 1},{j + 1}) fail interlacing")
        if any(a < 0 for r in rows for a in r):
            raise TableauError("pattern entries must be nonnegative")

    def entry(self, r: int, s: int) -> int:
        return self.rows[r - 1][s - 1]

    def diagonal(self, d: int) -> tuple[int, ...]:
        """Entries ``a_{r, r-d}``, from the top row down."""
        return tuple(self.entry(r, r - d) for r in range(d + 1, self.n + 1))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def gt_bijection(T: Tableau) -> GTPattern:
    flag = flag_of_partitions(T)
    n = T.n
    rows = tuple(tuple(_part(flag[n - r + s], n + 1 - r) for s in range(1, r + 1)) for r in range(1, n + 1))
    return GTPattern(n, rows)


def _pattern_flag(A: GTPattern) -> list[Partition]:
    n = A.n
    flag: list[Partition] = [()]
    for k in range(1, n + 1):
        flag.append(normalize(A.entry(n + 1 - m, k + 1 - m) for m in range(1, k + 1)))
    return flag


def gt_inverse(A: GTPattern) -> Tableau:
    return tableau_from_flag(_pattern_flag(A))


def _flag_psi(flag: Sequence[Partition], var: VarId) -> LaurentPoly:
    """Product of ``1 - var^k`` over values occurring ``k`` times in a member and ``k-1`` times in the next."""
    out = LaurentPoly.const(1)
    for j in range(2, len(flag)):
        shorter = _pad(flag[j - 1], j - 1)
        longer = _pad(flag[j], j)
        for a in set(shorter):
            k = shorter.count(a)
            if longer.count(a) == k - 1:
                out = out * (1 - LaurentPoly.var(var, k))
    return out


def psi_polynomial(A: GTPattern, var: VarId = Y) -> LaurentPoly:
    return _flag_psi(_pattern_flag(A), var)


# ---------------------------------------------------------------------------
# Dyck words


def _pair_word(left: tuple[int, ...], right: tuple[int, ...]) -> str:
    common = set(left) & set(right)
    lo = [a for a in left if a not in common]
    hi = [b for b in right if b not in common]
    tagged = sorted([(a, "0") for a in lo] + [(b, "1") for b in hi])
    return "".join(s for _, s in tagged) + "1" * (len(lo) - len(hi))


def dyck_word(T: Tableau) -> str:
    return "".join(_pair_word(a, b) for a, b in zip(T.columns, T.columns[1:]))


def _bracket_factorial(m: int, var: VarId) -> LaurentPoly:
    out = LaurentPoly.const(1)
    for j in range(1, m + 1):
        out = out * (1 - LaurentPoly.var(var, j))
    return out


def dyck_polynomial(w: str, var: VarId = Y) -> LaurentPoly:
    """Product over peaks of ``[top]! / [valley]!`` with ``[m] = 1 - var^m``."""
    height = 0
    for ch in w:
        if ch not in "01":
            raise TableauError(f"letter {ch!r} is not 0 or 1")
        height += 1 if ch == "0" else -1
        if height < 0:
            raise TableauError(f"{w!r} dips below zero")
    if height:
        raise TableauError(f"{w!r} is unbalanced")
    out = LaurentPoly.const(1)
    level = 0
    for run in (m.group() for m in _RUNS.finditer(w)):
        if run[0] == "0":
            level += len(run)
            continue
        top = level
        level -= len(run)
        # [top]!/[level]! = prod_{j=level+1..top} (1 - var^j)
        for j in range(level + 1, top + 1):
            out = out * (1 - LaurentPoly.var(var, j))
    return out


def phantom_factor(T: Tableau, var: VarId = Y) -> LaurentPoly:
    out = LaurentPoly.const(1)
    for a, b in zip(T.columns, T.columns[1:]):
        out = out * _bracket_factorial(len(a) - len(b), var)
    return out


# ---------------------------------------------------------------------------
# Symmetric functions


def _flags_below(top: Partition, n: int) -> Iterator[list[Partition]]:
    """All flags ``[(), ..., top]`` of length ``n + 1`` with horizontal-strip steps."""

    def down(lam: tuple[int, ...], k: int) -> Iterator[list[Partition]]:
        # lam has k entries (padded); choose mu with k-1 entries interlacing lam
        if k == 0:
            yield [()]
            return
        ranges = [range(lam[i + 1], lam[i] + 1) for i in range(k - 1)]
        for mu in itertools.product(*ranges):
            for rest in down(mu, k - 1):
                yield rest + [normalize(lam)]

    yield from down(_pad(top, n), n)


def hall_littlewood(lam: Sequence[int], n: int, var: VarId = HL_T) -> LaurentPoly:
    """``P_lam(x_1..x_n; var)`` as a sum over patterns with top row ``lam``."""
    lam = normalize(lam)
    if len(lam) > n:
        raise TableauError(f"{lam} has more than {n} parts")
    out = LaurentPoly()
    for flag in _flags_below(lam, n):
        out = out + _flag_psi(flag, var) * _flag_monomial(flag)
    return out


def schur(lam: Sequence[int], n: int) -> LaurentPoly:
    lam = normalize(lam)
    if len(lam) > n:
        raise TableauError(f"{lam} has more than {n} parts")
    out = LaurentPoly()
    for flag in _flags_below(lam, n):
        out = out + _flag_monomial(flag)
    return out


def _flag_monomial(flag: Sequence[Partition]) -> LaurentPoly:
    return LaurentPoly.monomial({xvar(k): sum(flag[k]) - sum(flag[k - 1]) for k in range(1, len(flag))})


# ---------------------------------------------------------------------------
# Enumeration


def enumerate_tableaux(n: int, reduced: bool = True, max_columns: int | None = None) -> list[Tableau]:
    """Reduced mode: every Gale chain once. Bounded mode: every tableau with at most ``max_columns`` columns.

    Output is lexicographic on column sequences, subsets ordered by size then lexicographically.
    """
    if n < 1:
        raise TableauError("degree must be positive")
    if not reduced and (max_columns is None or max_columns < 0):
        raise TableauError("bounded enumeration needs max_columns >= 0")
    subsets = [c for k in range(1, n + 1) for c in itertools.combinations(range(1, n + 1), k)]
    succ = {
        a: [b for b in subsets if gale_leq(a, b) and (not reduced or a != b)] for a in subsets
    }
    limit = max_columns if max_columns is not None else len(subsets)
    out: list[Tableau] = []

    def extend(cols: list[tuple[int, ...]], options: list[tuple[int, ...]]):
        out.append(Tableau(n, tuple(cols)))
        if len(cols) >= limit:
            return
        for c in options:
            cols.append(c)
            extend(cols, succ[c])
            cols.pop()

    extend([], subsets)
    return out

