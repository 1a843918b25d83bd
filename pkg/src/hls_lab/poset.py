"""The tableau (Gale) order on nonempty subsets of [n] and its Bruhat model.

Order direction: ``[n]`` is the minimum and ``{n}`` the maximum. Adjoining the
empty set as a new top element gives the poset that is compared with the
parabolic quotient of the hyperoctahedral group in :func:`bruhat_iso_check`.
"""

from __future__ import annotations

import functools
import itertools
from collections import deque
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Iterable

from .tableaux import Tableau, flag_of_partitions, gale_leq

__all__ = [
    "gale_leq",
    "elements",
    "isolated_intervals",
    "covers",
    "hasse_edges",
    "to_dot",
    "ChainCensus",
    "chain_census",
    "thrall_count",
    "is_maximal_tableau",
    "flag_parts_cover",
    "bruhat_iso_check",
    "PosetError",
]

DEFAULT_CENSUS_BOUND = 6
BRUHAT_BOUND = 4


class PosetError(ValueError):
    pass


Subset = tuple  # tuple[int, ...], sorted


@functools.lru_cache(maxsize=None)
def elements(n: int) -> tuple[Subset, ...]:
    """Nonempty subsets of [n], by size then lexicographically."""
    return tuple(c for k in range(1, n + 1) for c in itertools.combinations(range(1, n + 1), k))


def isolated_intervals(C: Iterable[int]) -> list[tuple[int, int]]:
    """Maximal runs of consecutive integers in ``C`` as ``(a, b)`` pairs."""
    C = sorted(set(C))
    runs: list[tuple[int, int]] = []
    for c in C:
        if runs and runs[-1][1] == c - 1:
            runs[-1] = (runs[-1][0], c)
        else:
            runs.append((c, c))
    return runs


def covers(C: Iterable[int], n: int) -> list[Subset]:
    """Upper covers of ``C``: one per isolated interval, moving its top label up by one.

    A label pushed past ``n`` is dropped.
    """
    C = tuple(sorted(set(C)))
    if not C or C[0] < 1 or C[-1] > n:
        raise PosetError(f"{C} is not a nonempty subset of [1..{n}]")
    if C == (n,):
        raise PosetError(f"{{{n}}} is the top element and has no upper cover")
    out = []
    for _, b in isolated_intervals(C):
        moved = (set(C) - {b}) | ({b + 1} if b < n else set())
        out.append(tuple(sorted(moved)))
    return sorted(out, key=lambda s: (len(s), s))


def _brute_covers(n: int) -> dict[Subset, list[Subset]]:
    """Upper covers from the order relation alone (no elevation rule)."""
    elts = elements(n)
    above = {a: [b for b in elts if b != a and gale_leq(a, b)] for a in elts}
    out = {}
    for a in elts:
        ups = above[a]
        out[a] = [b for b in ups if not any(c != b and gale_leq(c, b) for c in ups)]
    return out


def hasse_edges(n: int, brute: bool = False) -> list[tuple[Subset, Subset]]:
    """Sorted ``(lower, upper)`` cover pairs."""
    if brute:
        cov = _brute_covers(n)
    else:
        cov = {a: (covers(a, n) if a != (n,) else []) for a in elements(n)}
    key = lambda s: (len(s), s)  # noqa: E731
    return sorted(((a, b) for a, bs in cov.items() for b in bs), key=lambda e: (key(e[0]), key(e[1])))


def _label(s: Subset) -> str:
    return "".join(map(str, s))


def to_dot(n: int) -> str:
    lines = [f"digraph T{n} {{", "  rankdir=BT;"]
    for s in elements(n):
        lines.append(f'  "{_label(s)}";')
    for a, b in hasse_edges(n):
        lines.append(f'  "{_label(a)}" -> "{_label(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def thrall_count(n: int) -> int:
    """Number of maximal chains: ``r! * prod_{a<n} a! / prod_{b<=n} (2b-1)!`` with ``r = binom(n+1, 2)``."""
    num = factorial(comb(n + 1, 2))
    for a in range(1, n):
        num *= factorial(a)
    den = 1
    for b in range(1, n + 1):
        den *= factorial(2 * b - 1)
    if num % den:
        raise ArithmeticError("Thrall quotient is not integral")
    return num // den


@dataclass
class ChainCensus:
    n: int
    rank: int
    graded: bool
    maximal_chain_count: int
    thrall_count: int
    chain_counts_by_length: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rank": self.rank,
            "graded": self.graded,
            "maximal_chain_count": self.maximal_chain_count,
            "thrall_count": self.thrall_count,
            "chain_counts_by_length": self.chain_counts_by_length,
        }


def chain_census(n: int, bound: int = DEFAULT_CENSUS_BOUND) -> ChainCensus:
    """Chain statistics of the tableau order, including the empty chain at length 0."""
    if n < 1:
        raise PosetError("degree must be positive")
    if n > bound:
        raise PosetError(f"n={n} exceeds the census bound {bound}")
    elts = elements(n)
    ups = {a: [b for b in elts if b != a and gale_leq(a, b)] for a in elts}
    cov = {a: (covers(a, n) if a != (n,) else []) for a in elts}
    # longest chain up from each element and number of saturated chains to the top
    order = sorted(elts, key=lambda a: len(ups[a]))  # tops first
    height: dict[Subset, int] = {}
    sat: dict[Subset, int] = {}
    lengths: dict[Subset, set[int]] = {}
    for a in order:
        if not cov[a]:
            height[a], sat[a], lengths[a] = 0, 1, {0}
            continue
        height[a] = 1 + max(height[b] for b in cov[a])
        sat[a] = sum(sat[b] for b in cov[a])
        lengths[a] = {1 + h for b in cov[a] for h in lengths[b]}
    bottom = tuple(range(1, n + 1))
    graded = all(len(lengths[a]) == 1 for a in elts)
    # chains by number of elements: f[a][k] = chains with minimum a and k elements
    size = len(elts)
    f: dict[Subset, list[int]] = {}
    for a in order:
        row = [0] * (size + 1)
        row[1] = 1
        for b in ups[a]:
            for k in range(1, size):
                row[k + 1] += f[b][k]
        f[a] = row
    counts = [1] + [sum(f[a][k] for a in elts) for k in range(1, size + 1)]
    while counts and counts[-1] == 0:
        counts.pop()
    return ChainCensus(
        n=n,
        rank=height[bottom],
        graded=graded,
        maximal_chain_count=sat[bottom],
        thrall_count=thrall_count(n),
        chain_counts_by_length=counts,
    )


def is_maximal_tableau(T: Tableau) -> bool:
    """A reduced tableau is maximal when its columns form a saturated bottom-to-top chain."""
    n = T.n
    cols = T.columns
    if not cols or cols[0] != tuple(range(1, n + 1)) or cols[-1] != (n,):
        return False
    return all(b in covers(a, n) for a, b in zip(cols, cols[1:]))


def flag_parts_cover(T: Tableau) -> bool:
    """True iff the parts of all flag members are exactly ``1..binom(n+1, 2)``."""
    flag = flag_of_partitions(T)
    parts = set()
    for i in range(1, T.n + 1):
        lam = flag[i] + (0,) * (i - len(flag[i]))
        parts.update(lam)
    return parts == set(range(1, comb(T.n + 1, 2) + 1))


# ---------------------------------------------------------------------------
# Hyperoctahedral group, brute force
#
# A signed permutation is the tuple (w(1), ..., w(n)) with w(-k) = -w(k).
# Products compose as functions: (u*v)(k) = u(v(k)). Lengths are word lengths
# in the generators s_0 (negate the value at position 1) and s_i (swap i, i+1),
# found by breadth-first search; the Bruhat order is the transitive closure of
# w < w*t over reflections t with l(w*t) > l(w).

Signed = tuple


def _apply(w: Signed, k: int) -> int:
    return w[k - 1] if k > 0 else -w[-k - 1]


def _mul(u: Signed, v: Signed) -> Signed:
    return tuple(_apply(u, a) for a in v)


def _inverse(w: Signed) -> Signed:
    out = [0] * len(w)
    for k, a in enumerate(w, start=1):
        out[abs(a) - 1] = k if a > 0 else -k
    return tuple(out)


def _generators(n: int) -> list[Signed]:
    ident = list(range(1, n + 1))
    gens = []
    s0 = ident.copy()
    s0[0] = -1
    gens.append(tuple(s0))
    for i in range(1, n):
        s = ident.copy()
        s[i - 1], s[i] = s[i], s[i - 1]
        gens.append(tuple(s))
    return gens


def _lengths(n: int) -> dict[Signed, int]:
    ident = tuple(range(1, n + 1))
    gens = _generators(n)
    dist = {ident: 0}
    queue = deque([ident])
    while queue:
        w = queue.popleft()
        for s in gens:
            v = _mul(w, s)
            if v not in dist:
                dist[v] = dist[w] + 1
                queue.append(v)
    return dist


def _bruhat_leq(n: int, length: dict[Signed, int]) -> dict[Signed, set[Signed]]:
    """For each element, the set of elements Bruhat-below or equal to it."""
    gens = _generators(n)
    reflections = set()
    for w in length:
        winv = _inverse(w)
        for s in gens:
            reflections.add(_mul(_mul(w, s), winv))
    up: dict[Signed, list[Signed]] = {w: [] for w in length}
    for w in length:
        for r in reflections:
            v = _mul(w, r)
            if length[v] > length[w]:
                up[w].append(v)
    below: dict[Signed, set[Signed]] = {w: {w} for w in length}
    for w in sorted(length, key=length.get):
        for v in up[w]:
            below[v] |= below[w]
    return below


def _w_word(n: int, I: Iterable[int]) -> Signed:
    gens = _generators(n)
    w_k = [gens[0]]  # w_1 = s_0
    for k in range(1, n):
        w_k.append(_mul(gens[k], w_k[-1]))  # w_{k+1} = s_k w_k
    out = tuple(range(1, n + 1))
    for i in sorted(I):
        out = _mul(out, w_k[i - 1])
    return out


def _g(n: int, I: Iterable[int]) -> tuple[int, ...]:
    I = set(I)
    return tuple(sorted(n - j + 1 for j in range(1, n + 1) if j not in I))


def _extended_leq(A: Subset, B: Subset) -> bool:
    """Tableau order with the empty set adjoined as the top."""
    if not B:
        return True
    if not A:
        return False
    return gale_leq(A, B)


def bruhat_iso_check(n: int) -> bool:
    """Brute-force check that ``I -> w_{g(I)}`` is a poset isomorphism onto the quotient."""
    if n < 1:
        raise PosetError("degree must be positive")
    if n > BRUHAT_BOUND:
        raise PosetError(f"n={n} exceeds the brute-force bound {BRUHAT_BOUND}")
    length = _lengths(n)
    assert len(length) == 2**n * factorial(n)
    gens = _generators(n)
    quotient = {w for w in length if all(length[w] < length[_mul(w, s)] for s in gens[1:])}
    domain = [()] + list(elements(n))
    image = {I: _w_word(n, _g(n, I)) for I in domain}
    if set(image.values()) != quotient or len(quotient) != len(domain):
        return False
    below = _bruhat_leq(n, length)
    for A in domain:
        for B in domain:
            if _extended_leq(A, B) != (image[A] in below[image[B]]):
                return False
    return True

