"""Exact sparse Laurent polynomials and factored rational functions.

Coefficients are Python ints; exponents are signed ints. A rational function
is kept as a numerator over a multiset of geometric factors ``1 - c*m`` and is
never expanded, so equality is decided by cross-multiplication.
"""

from __future__ import annotations

import functools
import itertools
import json
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "VarId",
    "Y",
    "X",
    "XC",
    "Z",
    "Zi",
    "x",
    "y",
    "t",
    "q",
    "u",
    "LaurentPoly",
    "RatFunc",
    "AlgebraError",
    "poly_arith",
    "substitute",
    "rat_equal",
    "series_expand",
    "gaussian_binomial",
    "parse_poly",
    "poly_to_json",
    "poly_from_json",
]


class AlgebraError(ValueError):
    """Raised for ill-posed algebraic requests (bad substitution, bad factor)."""


# Fixed head order for output; everything unknown sorts last by name.
_HEAD_RANK = {"Y": 0, "q": 1, "u": 2, "X": 3, "Z": 4, "x": 5, "y": 6, "t": 7}


@dataclass(frozen=True)
class VarId:
    """A variable name with an integer index payload.

    ``braced`` distinguishes multi-index names rendered as ``X_{1,3}`` or
    ``Z_{3,1}`` from scalar-indexed names such as ``x_1``.
    """

    head: str
    index: tuple[int, ...] = ()
    braced: bool = False

    @property
    def name(self) -> str:
        if not self.index:
            return self.head
        if self.braced:
            return f"{self.head}_{{{','.join(map(str, self.index))}}}"
        return f"{self.head}_{self.index[0]}"

    def sort_key(self) -> tuple:
        return (_HEAD_RANK.get(self.head, 99), self.head, self.braced, len(self.index), self.index)

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"VarId({self.name!r})"

    @classmethod
    def from_name(cls, name: str) -> "VarId":
        m = re.fullmatch(r"([A-Za-z]+)(?:_(?:(\d+)|\{([\d,\s]*)\}))?", name.strip())
        if not m:
            raise AlgebraError(f"cannot parse variable name {name!r}")
        head, scalar, braced = m.groups()
        if scalar is not None:
            return cls(head, (int(scalar),))
        if braced is not None:
            parts = tuple(int(s) for s in braced.split(",") if s.strip())
            return cls(head, parts, True)
        return cls(head)


# Variable constructors used throughout the package.
Y = VarId("Y")
X = VarId("X")
q = VarId("q")
u = VarId("u")


def XC(C: Iterable[int]) -> VarId:
    """The variable attached to a nonempty label set ``C``."""
    key = tuple(sorted(set(C)))
    if not key:
        raise AlgebraError("X_C needs a nonempty set")
    return VarId("X", key, True)


def Z(i: int, j: int) -> VarId:
    if not 1 <= j <= i:
        raise AlgebraError(f"Z_{{{i},{j}}} needs 1 <= j <= i")
    return VarId("Z", (i, j), True)


def Zi(i: int) -> VarId:
    return VarId("Z", (i,))


def x(i: int) -> VarId:
    return VarId("x", (i,))


def y(i: int) -> VarId:
    return VarId("y", (i,))


def t(i: int) -> VarId:
    return VarId("t", (i,))


# ---------------------------------------------------------------------------
# Monomials: sorted tuples of (VarId, nonzero exponent).

Mono = tuple  # tuple[tuple[VarId, int], ...]

_ONE: Mono = ()


@functools.lru_cache(maxsize=None)
def _var_key(v: VarId) -> tuple:
    return v.sort_key()


def _pair_key(p: tuple) -> tuple:
    return _var_key(p[0])


def _mono(exps: Mapping[VarId, int]) -> Mono:
    return tuple(sorted(((v, e) for v, e in exps.items() if e), key=_pair_key))


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        s = d.get(v, 0) + e
        if s:
            d[v] = s
        else:
            del d[v]
    return _mono(d)


def _mono_pow(a: Mono, k: int) -> Mono:
    return tuple((v, e * k) for v, e in a) if k else _ONE


def _mono_degree(a: Mono, grading: frozenset | None = None) -> int:
    if grading is None:
        return sum(e for _, e in a)
    return sum(e for v, e in a if v in grading)


def _mono_order_key(a: Mono) -> tuple:
    # graded lex: total degree, then exponent vectors compared variable by variable
    return (_mono_degree(a), tuple((_var_key(v), -e) for v, e in a))


# ---------------------------------------------------------------------------


Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """Sparse multivariate Laurent polynomial with integer coefficients.

    Immutable by convention: every operation returns a new object.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Mono, int] | None = None):
        self._terms: dict[Mono, int] = {m: c for m, c in (terms or {}).items() if c}
        self._hash: int | None = None

    # construction -----------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({_ONE: c})

    @classmethod
    def var(cls, v: VarId, e: int = 1) -> "LaurentPoly":
        return cls({_mono({v: e}): 1})

    @classmethod
    def monomial(cls, exps: Mapping[VarId, int], coeff: int = 1) -> "LaurentPoly":
        return cls({_mono(exps): coeff})

    @classmethod
    def coerce(cls, other: Scalar) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return cls.const(other)
        if isinstance(other, VarId):
            return cls.var(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to LaurentPoly")

    # inspection -------------------------------------------------------
    def terms(self) -> Iterator[tuple[dict[VarId, int], int]]:
        """Yield ``(exponents, coefficient)`` in the fixed monomial order."""
        for m in sorted(self._terms, key=_mono_order_key):
            yield dict(m), self._terms[m]

    def raw_terms(self) -> dict[Mono, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def variables(self) -> set[VarId]:
        return {v for m in self._terms for v, _ in m}

    def constant_term(self) -> int:
        return self._terms.get(_ONE, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exps: Mapping[VarId, int]) -> int:
        return self._terms.get(_mono(exps), 0)

    def degree(self, v: VarId | None = None) -> int:
        if not self._terms:
            raise AlgebraError("degree of the zero polynomial")
        if v is None:
            return max(_mono_degree(m) for m in self._terms)
        return max(dict(m).get(v, 0) for m in self._terms)

    def min_degree(self, grading: Iterable[VarId]) -> int:
        g = frozenset(grading)
        return min(_mono_degree(m, g) for m in self._terms)

    def univariate_coeffs(self, v: VarId) -> list[int]:
        """Coefficient list in ``v`` (lowest degree 0); the polynomial must be univariate in ``v``."""
        if not self._terms:
            return []
        out: dict[int, int] = {}
        for m, c in self._terms.items():
            d = dict(m)
            e = d.pop(v, 0)
            if d or e < 0:
                raise AlgebraError(f"not a polynomial in {v} alone")
            out[e] = c
        return [out.get(i, 0) for i in range(max(out) + 1)]

    def collect(self, v: VarId) -> dict[int, "LaurentPoly"]:
        """Group by the exponent of ``v``."""
        out: dict[int, dict[Mono, int]] = {}
        for m, c in self._terms.items():
            e = 0
            rest = []
            for w, k in m:
                if w == v:
                    e = k
                else:
                    rest.append((w, k))
            out.setdefault(e, {})[tuple(rest)] = c
        return {e: LaurentPoly(d) for e, d in out.items()}

    # arithmetic -------------------------------------------------------
    def __add__(self, other: Scalar) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        d = dict(self._terms)
        for m, c in other._terms.items():
            s = d.get(m, 0) + c
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return LaurentPoly(d)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({m: c * other for m, c in self._terms.items()}) if other else LaurentPoly()
        other = LaurentPoly.coerce(other)
        d: dict[Mono, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = d.get(m, 0) + c1 * c2
                if s:
                    d[m] = s
                else:
                    d.pop(m, None)
        return LaurentPoly(d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if self.is_monomial():
                (m, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly({_mono_pow(m, k): c ** (-k)})
            raise AlgebraError("negative power of a non-unit")
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # substitution / evaluation ---------------------------------------
    def substitute(self, sigma: Mapping[VarId, Scalar]) -> "LaurentPoly":
        """Replace variables by polynomials; unmapped variables stay as they are.

        A negative power is only allowed when the image is a unit monomial.
        """
        images = {v: LaurentPoly.coerce(w) for v, w in sigma.items()}
        powers: dict[tuple[VarId, int], LaurentPoly] = {}

        def power(v: VarId, e: int) -> LaurentPoly:
            key = (v, e)
            if key not in powers:
                img = images[v]
                if e < 0:
                    if img.is_zero():
                        raise AlgebraError(f"substituting 0 for {v} under a negative exponent")
                    if not img.is_monomial() or abs(next(iter(img._terms.values()))) != 1:
                        raise AlgebraError(f"image of {v} is not invertible in the Laurent ring")
                powers[key] = img ** e
            return powers[key]

        out = LaurentPoly()
        acc: dict[Mono, int] = {}
        for m, c in self._terms.items():
            fixed: dict[VarId, int] = {}
            term = LaurentPoly.const(c)
            for v, e in m:
                if v in images:
                    term = term * power(v, e)
                else:
                    fixed[v] = e
            if fixed:
                term = term * LaurentPoly.monomial(fixed)
            for mm, cc in term._terms.items():
                s = acc.get(mm, 0) + cc
                if s:
                    acc[mm] = s
                else:
                    acc.pop(mm, None)
        out._terms = acc
        return out

    def evaluate(self, values: Mapping[VarId, int | Fraction]) -> Fraction | int:
        """Evaluate at numbers; every variable must be assigned."""
        total: Fraction | int = 0
        for m, c in self._terms.items():
            term: Fraction | int = c
            for v, e in m:
                if v not in values:
                    raise AlgebraError(f"no value for {v}")
                val = values[v]
                term = term * (Fraction(val) ** e if e < 0 else val ** e)
            total += term
        return total

    def truncate(self, grading: Iterable[VarId], bound: int) -> "LaurentPoly":
        g = frozenset(grading)
        return LaurentPoly({m: c for m, c in self._terms.items() if _mono_degree(m, g) <= bound})

    def invert_variables(self, vs: Iterable[VarId]) -> "LaurentPoly":
        """Apply ``v -> 1/v`` for every ``v`` in ``vs`` (exact, exponents negate)."""
        s = frozenset(vs)
        return LaurentPoly({_mono({v: (-e if v in s else e) for v, e in m}): c for m, c in self._terms.items()})

    # presentation -----------------------------------------------------
    def to_json(self) -> list[dict]:
        return poly_to_json(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.terms():
            mono = "*".join(v.name if e == 1 else f"{v.name}^{e}" for v, e in exps.items())
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_latex(self, group_sets: bool = True) -> str:
        return _latex_poly(self, group_sets)


def _latex_var(v: VarId, e: int) -> str:
    if v.head == "X" and v.braced:
        base = "X_{" + "".join(map(str, v.index)) + "}"
    elif v.head == "Z" and v.braced:
        base = "Z_{" + "".join(map(str, v.index)) + "}"
    else:
        base = v.name
    if e == 1:
        return base
    return f"{base}^{{{e}}}" if (e < 0 or e > 9) else f"{base}^{e}"


def _latex_mono(exps: dict[VarId, int], group_sets: bool) -> str:
    sets = [v for v in exps if v.head == "X" and v.braced]
    out = []
    if group_sets and sets and all(exps[v] == 1 for v in sets):
        for v, e in exps.items():
            if v not in sets:
                out.append(_latex_var(v, e))
        labels = "|".join("".join(map(str, v.index)) for v in sets)
        out.append("X_{" + labels + "}")
        return " ".join(out)
    return " ".join(_latex_var(v, e) for v, e in exps.items())


def _latex_poly(p: LaurentPoly, group_sets: bool = True) -> str:
    if p.is_zero():
        return "0"
    chunks = []
    for i, (exps, c) in enumerate(p.terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _latex_mono(exps, group_sets)
        body = mono if (a == 1 and mono) else (f"{a} {mono}".strip() if mono else str(a))
        if i == 0:
            chunks.append(("-" if c < 0 else "") + body)
        else:
            chunks.append(f" {sign} {body}")
    return "".join(chunks)


# ---------------------------------------------------------------------------
# JSON


def poly_to_json(p: LaurentPoly) -> list[dict]:
    return [
        {"coeff": str(c), "exps": {v.name: e for v, e in exps.items()}}
        for exps, c in p.terms()
    ]


def poly_from_json(data: str | list) -> LaurentPoly:
    if isinstance(data, str):
        data = json.loads(data)
    out = LaurentPoly()
    for term in data:
        exps = {VarId.from_name(k): int(e) for k, e in term["exps"].items()}
        out = out + LaurentPoly.monomial(exps, int(term["coeff"]))
    return out


# ---------------------------------------------------------------------------
# Rational functions


Factor = tuple  # (Mono, int): the factor 1 - c*m


class RatFunc:
    """``numerator / prod(1 - c_k * m_k)``.

    Factors are stored as a sorted multiset of ``(monomial, c)`` pairs. A
    factor whose monomial has only nonpositive exponents is rewritten on
    construction via ``1 - c/m = -(c/m)(1 - c*m)`` when ``c`` is a unit, so
    stored factors always have nonnegative exponents.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Scalar, den: Iterable[Factor | LaurentPoly] = ()):
        num = LaurentPoly.coerce(num)
        factors: list[Factor] = []
        for f in den:
            if isinstance(f, LaurentPoly):
                f = _factor_from_poly(f)
            m, c = f
            if c == 0:
                continue
            if not m:
                raise AlgebraError("constant denominator factor")
            exps = [e for _, e in m]
            if all(e <= 0 for e in exps):
                if c not in (1, -1):
                    raise AlgebraError("cannot normalize factor with non-unit coefficient")
                inv = _mono_pow(m, -1)
                num = num * LaurentPoly({inv: -c})
                factors.append((inv, c))
            elif any(e < 0 for e in exps):
                raise AlgebraError("denominator factor with mixed-sign exponents")
            else:
                factors.append((m, c))
        self.num = num
        self.den: tuple[Factor, ...] = tuple(sorted(factors, key=_factor_key))

    @classmethod
    def geometric(cls, m: LaurentPoly) -> "RatFunc":
        """``1 / (1 - m)`` for a monomial ``m`` (with coefficient)."""
        return cls(1, [_factor_from_monomial(m)])

    # arithmetic -------------------------------------------------------
    def __mul__(self, other: "RatFunc | Scalar") -> "RatFunc":
        if isinstance(other, RatFunc):
            return RatFunc(self.num * other.num, self.den + other.den)
        return RatFunc(self.num * LaurentPoly.coerce(other), self.den)

    __rmul__ = __mul__

    def __add__(self, other: "RatFunc | Scalar") -> "RatFunc":
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        a, b = Counter(self.den), Counter(other.den)
        common = a | b
        na = self.num * _den_product(common - a)
        nb = other.num * _den_product(common - b)
        return RatFunc(na + nb, common.elements())

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: "RatFunc | Scalar") -> "RatFunc":
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return rat_equal(self, other)

    __hash__ = None  # equality is semantic

    def denominator(self) -> LaurentPoly:
        return _den_product(Counter(self.den))

    def den_factors(self) -> list[LaurentPoly]:
        return [1 - LaurentPoly({m: c}) for m, c in self.den]

    def variables(self) -> set[VarId]:
        out = self.num.variables()
        for m, _ in self.den:
            out |= {v for v, _ in m}
        return out

    def substitute(self, sigma: Mapping[VarId, Scalar]) -> "RatFunc":
        """Substitute into numerator and factors; each factor image must stay geometric."""
        num = self.num.substitute(sigma)
        den: list[LaurentPoly] = []
        for m, c in self.den:
            img = LaurentPoly({m: c}).substitute(sigma)
            if img.is_zero():
                continue
            den.append(1 - img)
        return RatFunc(num, den)

    def invert_variables(self, vs: Iterable[VarId]) -> "RatFunc":
        vs = list(vs)
        return RatFunc(
            self.num.invert_variables(vs),
            [1 - LaurentPoly({m: c}).invert_variables(vs) for m, c in self.den],
        )

    def cancel_factor(self, f: LaurentPoly) -> "RatFunc":
        """Remove one copy of the denominator factor ``f`` by exact division of the numerator.

        Only univariate ``1 - v`` factors are supported (synthetic division).
        """
        fac = _factor_from_poly(f)
        if fac not in self.den:
            raise AlgebraError("factor not present in denominator")
        (v, e), = fac[0]
        if e != 1 or fac[1] != 1:
            raise AlgebraError("only 1 - v can be cancelled")
        quotient = divide_by_one_minus(self.num, v)
        if quotient is None:
            raise AlgebraError("numerator not divisible")
        den = list(self.den)
        den.remove(fac)
        return RatFunc(quotient, den)

    def __repr__(self) -> str:
        return f"RatFunc({self.num!s} / {' '.join('(' + str(f) + ')' for f in self.den_factors()) or '1'})"

    def to_json(self) -> dict:
        return {
            "numerator": poly_to_json(self.num),
            "denominator_factors": [poly_to_json(LaurentPoly({m: c})) for m, c in self.den],
        }

    def to_latex(self) -> str:
        den = "".join(f"(1 - {_latex_poly(LaurentPoly({m: c}))})" for m, c in self.den) or "1"
        return f"\\dfrac{{{self.num.to_latex()}}}{{{den}}}"


def _factor_key(f: Factor) -> tuple:
    return (_mono_order_key(f[0]), f[1])


def _factor_from_monomial(m: LaurentPoly) -> Factor:
    if not m.is_monomial():
        raise AlgebraError("geometric factor needs a single monomial")
    (mono, c), = m._terms.items()
    return (mono, c)


def _factor_from_poly(f: LaurentPoly) -> Factor:
    """Read ``1 - c*m`` back from a polynomial."""
    terms = f.raw_terms()
    if terms.get(_ONE) != 1 or len(terms) != 2:
        raise AlgebraError(f"{f} is not of the form 1 - c*m")
    (mono, c), = [(m, c) for m, c in terms.items() if m != _ONE]
    return (mono, -c)


def _den_product(factors: Counter) -> LaurentPoly:
    out = LaurentPoly.const(1)
    for (m, c), k in sorted(factors.items(), key=lambda it: _factor_key(it[0])):
        out = out * (1 - LaurentPoly({m: c})) ** k
    return out


def divide_by_one_minus(p: LaurentPoly, v: VarId) -> LaurentPoly | None:
    """Exact quotient ``p / (1 - v)`` or ``None`` when it does not divide.

    Works coefficient-wise in ``v`` over the remaining variables.
    """
    if p.is_zero():
        return LaurentPoly()
    groups = p.collect(v)
    lo, hi = min(groups), max(groups)
    # p = (1 - v) * s  <=>  s_k = s_{k-1} + p_k, and the running sum must vanish past hi
    out: dict[int, LaurentPoly] = {}
    run = LaurentPoly()
    for k in range(lo, hi + 1):
        run = run + groups.get(k, LaurentPoly())
        out[k] = run
    if not out[hi].is_zero():
        return None
    res = LaurentPoly()
    vv = LaurentPoly.var(v)
    for k, coef in out.items():
        if not coef.is_zero():
            res = res + coef * (vv ** k)
    return res


# ---------------------------------------------------------------------------
# Operation-level entry points


def poly_arith(a: Scalar, b: Scalar, op: str) -> LaurentPoly:
    a, b = LaurentPoly.coerce(a), LaurentPoly.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise AlgebraError(f"unknown op {op!r}")


def substitute(p: LaurentPoly | RatFunc, sigma: Mapping[VarId, Scalar]):
    return p.substitute(sigma)


def rat_equal(f: RatFunc, g: RatFunc) -> bool:
    """Cross-multiplication equality; shared factors are cancelled first."""
    a, b = Counter(f.den), Counter(g.den)
    common = a & b
    lhs = f.num * _den_product(b - common)
    rhs = g.num * _den_product(a - common)
    return lhs == rhs


def series_expand(f: RatFunc | LaurentPoly, grading: Iterable[VarId], bound: int) -> LaurentPoly:
    """Power-series expansion truncated at total ``grading`` degree ``bound``."""
    if bound < 0:
        raise AlgebraError("bound must be nonnegative")
    if isinstance(f, LaurentPoly):
        f = RatFunc(f)
    g = frozenset(grading)
    if f.num.is_zero():
        return LaurentPoly()
    low = f.num.min_degree(g)
    room = bound - low
    prod = LaurentPoly.const(1)
    for m, c in f.den:
        d = _mono_degree(m, g)
        if d <= 0:
            raise AlgebraError("denominator factor has no positive grading degree")
        if room < 0:
            break
        geo = {}
        for k in range(room // d + 1):
            geo[_mono_pow(m, k)] = c ** k
        prod = (prod * LaurentPoly(geo)).truncate(g, room)
    return (f.num * prod).truncate(g, bound)


def gaussian_binomial(n: int, I: Iterable[int] | int, var: VarId = Y) -> LaurentPoly:
    """Y-multinomial coefficient ``binom(n, I)``; an int ``I`` gives the plain Gaussian binomial."""
    if isinstance(I, int):
        return _gauss(n, I, var)
    s = sorted(set(I))
    if any(i < 1 or i > n for i in s):
        raise AlgebraError(f"{s} is not a subset of [1..{n}]")
    out = LaurentPoly.const(1)
    top = n
    for k in reversed(s):
        out = out * _gauss(top, k, var)
        top = k
    return out


_GAUSS_CACHE: dict[tuple[int, int, VarId], LaurentPoly] = {}


def _gauss(n: int, k: int, var: VarId) -> LaurentPoly:
    if k < 0 or k > n:
        return LaurentPoly()
    if k == 0 or k == n:
        return LaurentPoly.const(1)
    key = (n, k, var)
    if key not in _GAUSS_CACHE:
        # q-Pascal: [n,k] = [n-1,k-1] + Y^k [n-1,k]
        _GAUSS_CACHE[key] = _gauss(n - 1, k - 1, var) + LaurentPoly.var(var, k) * _gauss(n - 1, k, var)
    return _GAUSS_CACHE[key]


def one_minus(m: Scalar) -> LaurentPoly:
    return 1 - LaurentPoly.coerce(m)


def prod(items: Iterable[Scalar]) -> LaurentPoly:
    out = LaurentPoly.const(1)
    for it in items:
        out = out * it
    return out


# ---------------------------------------------------------------------------
# Parsing of the compact LaTeX-like notation used in tables of results.

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+)"
    r"|(?P<var>[A-Za-z])(?:_(?:\{(?P<bidx>[^}]*)\}|(?P<sidx>\d)))?"
    r"|(?P<op>[-+*()^])"
    r"|(?P<brace>\{-?\d+\})"
    r")"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    text = text.replace("\\cdot", "*").replace("\\,", " ").replace("\\times", "*")
    text = text.replace("−", "-")
    pos, out = 0, []
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise AlgebraError(f"cannot parse near {text[pos:pos + 20]!r}")
        pos = m.end()
        if m.group("num") is not None:
            out.append(("num", m.group("num")))
        elif m.group("var") is not None:
            idx = m.group("bidx") if m.group("bidx") is not None else m.group("sidx")
            out.append(("var", m.group("var") + ("" if idx is None else "\x00" + idx + ("\x01" if m.group("bidx") is not None else ""))))
        elif m.group("op") is not None:
            out.append(("op", m.group("op")))
        else:
            out.append(("num", m.group("brace")[1:-1]))
    return out


def _var_token(tok: str) -> LaurentPoly:
    if "\x00" not in tok:
        return LaurentPoly.var(VarId(tok))
    head, idx = tok.split("\x00")
    braced = idx.endswith("\x01")
    idx = idx.rstrip("\x01")
    if head == "X" and braced:
        # X_{1|2|13} is the product X_{1} X_{2} X_{13}; digits are set elements
        out = LaurentPoly.const(1)
        for block in idx.split("|"):
            elems = [int(s) for s in re.split(r"[,\s]+", block) if s] if "," in block else [int(ch) for ch in block]
            out = out * LaurentPoly.var(XC(elems))
        return out
    if head == "Z" and braced:
        nums = [int(s) for s in idx.split(",")] if "," in idx else [int(ch) for ch in idx]
        if len(nums) == 1:
            return LaurentPoly.var(Zi(nums[0]))
        return LaurentPoly.var(Z(*nums))
    if braced and "," in idx:
        return LaurentPoly.var(VarId(head, tuple(int(s) for s in idx.split(",")), True))
    return LaurentPoly.var(VarId(head, (int(idx),)))


def parse_poly(text: str) -> LaurentPoly:
    """Parse expressions such as ``1 - Y X_{1|2} + q^2 Z_{21}^2 (1 - t_1)``.

    Juxtaposition is multiplication; ``X_{13}`` means the set {1,3};
    ``Z_{21}`` means the pair (2,1).
    """
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        pos += 1
        return toks[pos - 1]

    def expr() -> LaurentPoly:
        total = LaurentPoly()
        sign = 1
        first = True
        while True:
            kind, val = peek()
            if kind == "op" and val in "+-":
                take()
                sign = -1 if val == "-" else 1
            elif not first:
                break
            total = total + term() * sign
            sign = 1
            first = False
            kind, val = peek()
            if not (kind == "op" and val in "+-"):
                break
        return total

    def term() -> LaurentPoly:
        out = LaurentPoly.const(1)
        seen = False
        while True:
            kind, val = peek()
            if kind == "op" and val == "*":
                take()
                continue
            if kind in ("num", "var") or (kind == "op" and val == "("):
                out = out * power()
                seen = True
            else:
                break
        if not seen:
            raise AlgebraError("empty term")
        return out

    def power() -> LaurentPoly:
        base = atom()
        kind, val = peek()
        if kind == "op" and val == "^":
            take()
            k, v = take()
            if k != "num":
                raise AlgebraError("exponent must be an integer")
            return base ** int(v)
        return base

    def atom() -> LaurentPoly:
        kind, val = take()
        if kind == "num":
            return LaurentPoly.const(int(val))
        if kind == "var":
            return _var_token(val)
        if kind == "op" and val == "(":
            inner = expr()
            k, v = take()
            if v != ")":
                raise AlgebraError("unbalanced parenthesis")
            return inner
        raise AlgebraError(f"unexpected token {val!r}")

    result = expr()
    if pos != len(toks):
        raise AlgebraError(f"trailing input near token {toks[pos][1]!r}")
    return result


def parse_factors(text: str) -> list[LaurentPoly]:
    """Split ``(1 - a)(1 - b)...`` into its factors."""
    text = text.replace("\\times", " ")
    out, depth, start = [], 0, None
    for i, ch in enumerate(text):
        if ch == "(":
            if depth == 0:
                start = i + 1
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                out.append(parse_poly(text[start:i]))
    return out


def all_subsets(n: int, nonempty: bool = True) -> list[tuple[int, ...]]:
    """Subsets of [1..n] ordered by size, then lexicographically."""
    lo = 1 if nonempty else 0
    return [c for k in range(lo, n + 1) for c in itertools.combinations(range(1, n + 1), k)]
