"""Reference rational functions transcribed from published tables.

Each entry is a string in the ``parse_poly`` syntax: ``X_{1|23}`` is the
product ``X_{1} X_{2,3}``, ``Z_{21}`` is ``Z_{2,1}``, juxtaposition multiplies.
Entries are kept exactly as printed, including the ones known to disagree
with the computed series; :func:`reference_series` parses them on demand.
"""

from __future__ import annotations

from .algebra import RatFunc, parse_factors, parse_poly

N1 = "1"
N2 = "1 - Y X_{1|2}"
N3 = (
    "1 - X_{1|23}"
    " - Y (X_{1|2} + X_{1|3} + X_{2|3} + X_{2|13} + X_{12|13} + X_{12|23} + X_{13|23} + X_{2|13|23} + X_{1|2|13|23})"
    " + Y (X_{1|2|3} + X_{1|2|13} + X_{1|2|23} + X_{1|3|23} + X_{1|12|23} + X_{1|13|23} + X_{12|13|23})"
    " + Y^2 (X_{1|2|3} + X_{2|3|13} + X_{1|3|13} + X_{2|3|12|13} + X_{3|12|13} + X_{3|12|23} + X_{12|23|13})"
    " - Y^2 (X_{3|12} + X_{1|3|12} + X_{1|2|3|12} + X_{1|2|3|13} + X_{1|3|12|23} + X_{1|12|13|23}"
    " + X_{2|12|13|23} + X_{3|12|13|23})"
    " - Y^3 (X_{2|3|12|13} - X_{1|2|3|12|13|23})"
)

# Affine Schubert series; denominators are products of (1 - monomial).
AFFINE_IN1 = ("1", "(1 - Z_{11})")
AFFINE_IN2 = ("1 - Z_{11} Z_{21}", "(1 - q Z_{11})(1 - Z_{21})(1 - Z_{11} Z_{22})")
AFFINE_PR1 = ("1", "(1 - Z_{11})")
AFFINE_PR2 = ("1 - Z_{11}Z_{21}", "(1 - Z_{11})(1 - qZ_{21})(1 - Z_{11}Z_{22})")
AFFINE_IN3_NUM = (
    '1 - Z_{21}Z_{31}^2 - Z_{11}Z_{22}Z_{31}Z_{32} - Z_{11}Z_{21}^2Z_{32}^2 - q '
    'Z_{11}Z_{21}Z_{31}^2 + Z_{11}Z_{21}Z_{22}Z_{31}Z_{32}^2 - q Z_{11}Z_{21}Z_{22}Z_{32}^2 + '
    'Z_{11}Z_{21}^2Z_{31}^2Z_{32} - q Z_{11}Z_{21}^2Z_{31}Z_{32} + q '
    'Z_{11}Z_{21}Z_{22}Z_{31}^2Z_{32} + q Z_{11}Z_{21}^2Z_{31}^2Z_{32} - '
    'q^2Z_{11}Z_{21}^2Z_{31}Z_{32} + q Z_{11}Z_{21}^2Z_{31}^3 - q^2Z_{11}Z_{21}^2Z_{31}^2 + q '
    'Z_{11}^2Z_{21}Z_{22}Z_{31}Z_{32}^2 + q Z_{11}Z_{21}^3Z_{31}Z_{32}^2 - '
    'q^2Z_{11}^2Z_{21}Z_{22}Z_{32}^2 + q^2Z_{11}Z_{21}^2Z_{31}^3 + q '
    'Z_{11}^2Z_{21}^2Z_{22}Z_{32}^3 - q Z_{11}Z_{21}^3Z_{31}^3Z_{32} + '
    'q^2Z_{11}^2Z_{21}Z_{22}Z_{31}^2Z_{32} + q^2Z_{11}Z_{21}^3Z_{31}^2Z_{32} - q '
    'Z_{11}^2Z_{21}^2Z_{22}Z_{31}Z_{32}^3 + q^2Z_{11}^2Z_{21}^2Z_{22}Z_{32}^3 - q '
    'Z_{11}^2Z_{21}^2Z_{22}Z_{31}^2Z_{32}^2 + q^2Z_{11}^2Z_{21}^2Z_{22}Z_{31}Z_{32}^2 + '
    'q^2Z_{11}^2Z_{21}^3Z_{31}Z_{32}^2 - q^2Z_{11}^2Z_{21}^2Z_{22}Z_{31}^2Z_{32}^2 + '
    'q^3Z_{11}^2Z_{21}^2Z_{22}Z_{31}Z_{32}^2 - q^2Z_{11}^2Z_{21}^3Z_{31}^3Z_{32} + '
    'q^3Z_{11}^2Z_{21}^3Z_{31}^2Z_{32} - q^2Z_{11}^2Z_{21}^3Z_{22}Z_{31}Z_{32}^3 - '
    'q^3Z_{11}^2Z_{21}^2Z_{22}Z_{31}^3Z_{32} - q^3Z_{11}^2Z_{21}^4Z_{31}^2Z_{32}^2 - '
    'q^3Z_{11}^3Z_{21}^3Z_{22}Z_{31}Z_{32}^3 + q^3Z_{11}^3Z_{21}^4Z_{22}Z_{31}^3Z_{32}^3'
)
AFFINE_IN3_DEN = (
    '(1 - Z_{31})(1 - Z_{21}Z_{32})(1 - Z_{11}Z_{22}Z_{33})(1 - q Z_{21}Z_{31})(1 - q '
    'Z_{11}Z_{21}Z_{32}) (1 - q^2Z_{11}Z_{22}Z_{32})(1 - q^2Z_{11}Z_{21}Z_{31})'
)
AFFINE_PR3_NUM = (
    '1 - Z_{11}Z_{22}Z_{31}Z_{32} - Z_{11}Z_{21}^2Z_{31}^2 - q Z_{11}Z_{21}Z_{31}^2 - '
    'q^2Z_{21}Z_{31}^2 - Z_{11}^2Z_{21}Z_{22}Z_{32}^2 - q Z_{11}Z_{21}Z_{22}Z_{32}^2 - q '
    'Z_{11}Z_{21}^2Z_{31}Z_{32} - q^2Z_{11}Z_{21}^2Z_{32}^2 + '
    'Z_{11}^2Z_{21}Z_{22}Z_{31}^2Z_{32} + q Z_{11}Z_{21}Z_{22}Z_{31}^2Z_{32} - '
    'q^2Z_{11}Z_{21}^2Z_{31}Z_{32} + q Z_{11}Z_{21}^2Z_{31}^3 + '
    'Z_{11}^2Z_{21}^2Z_{22}Z_{31}Z_{32}^2 + q Z_{11}^2Z_{21}Z_{22}Z_{31}Z_{32}^2 + '
    'q^2Z_{11}Z_{21}Z_{22}Z_{31}Z_{32}^2 + q^2Z_{11}Z_{21}^2Z_{31}^2Z_{32} + '
    'q^2Z_{11}Z_{21}^2Z_{31}^3 + q Z_{11}^2Z_{21}^2Z_{22}Z_{32}^3 + q '
    'Z_{11}^2Z_{21}^2Z_{22}Z_{31}Z_{32}^2 + q Z_{11}^2Z_{21}^3Z_{31}^2Z_{32} + '
    'q^2Z_{11}Z_{21}^3Z_{31}^2Z_{32} + q^3Z_{11}Z_{21}^2Z_{31}^2Z_{32} + '
    'q^2Z_{11}^2Z_{21}^2Z_{22}Z_{32}^3 - q Z_{11}^2Z_{21}^2Z_{22}Z_{31}^2Z_{32}^2 + '
    'q^2Z_{11}^2Z_{21}^3Z_{31}Z_{32}^2 + q^3Z_{11}Z_{21}^3Z_{31}Z_{32}^2 - q '
    'Z_{11}^2Z_{21}^2Z_{22}Z_{31}^3Z_{32} - q^2Z_{11}^2Z_{21}^2Z_{22}Z_{31}^2Z_{32}^2 - '
    'q^2Z_{11}^2Z_{21}^3Z_{31}^3Z_{32} - q^3Z_{11}Z_{21}^3Z_{31}^3Z_{32} - q '
    'Z_{11}^3Z_{21}^3Z_{22}Z_{31}Z_{32}^3 - q^2Z_{11}^2Z_{21}^3Z_{22}Z_{31}Z_{32}^3 - '
    'q^3Z_{11}^2Z_{21}^2Z_{22}Z_{31}Z_{32}^3 - q^3Z_{11}^2Z_{21}^4Z_{31}^2Z_{32}^2 + '
    'q^3Z_{11}^3Z_{21}^4Z_{22}Z_{31}^3Z_{32}^3'
)
AFFINE_PR3_DEN = (
    '(1 - Z_{11}Z_{22}Z_{33})(1 - Z_{11}Z_{22}Z_{32})(1 - Z_{11}Z_{21}Z_{31})(1 - q '
    'Z_{21}Z_{31})(1 - q^2Z_{31}) (1 - q Z_{11}Z_{21}Z_{32})(1 - q^2Z_{21}Z_{32})'
)

# Hecke numerators H_n^num(Y, x, X).
HECKE1_NUM = "1"
HECKE2_NUM = "1 - Y x_1x_2X^2"
HECKE3_NUM = (
    '1 - x_1x_2x_3X^2 - Y x_2x_3X^2 - Y x_1x_3X^2 - Y x_1x_2X^2 - Y x_1x_2x_3X^2 + Y '
    'x_1x_2x_3X^3 - Y x_1x_2x_3^2X^2 - Y x_1x_2^2x_3X^2 - Y x_1^2x_2x_3X^2 - Y^2x_1x_2x_3X^2 + '
    'Y x_1x_2x_3^2X^3 + Y x_1x_2^2x_3X^3 + Y x_1^2x_2x_3X^3 + Y^2x_1x_2x_3X^3 + Y '
    'x_1x_2^2x_3^2X^3 + Y x_1^2x_2x_3^2X^3 + Y^2x_1x_2x_3^2X^3 + Y x_1^2x_2^2x_3X^3 + '
    'Y^2x_1x_2^2x_3X^3 + Y^2x_1^2x_2x_3X^3 + Y x_1^2x_2^2x_3^2X^3 + Y^2x_1x_2^2x_3^2X^3 + '
    'Y^2x_1^2x_2x_3^2X^3 + Y^2x_1^2x_2^2x_3X^3 - Y x_1^2x_2^2x_3^2X^4 - Y^2x_1x_2^2x_3^2X^4 - '
    'Y^2x_1^2x_2x_3^2X^4 - Y^2x_1^2x_2^2x_3X^4 + Y^2x_1^2x_2^2x_3^2X^3 - Y^2x_1^2x_2^2x_3^2X^4 '
    '- Y^2x_1^2x_2^2x_3^3X^4 - Y^2x_1^2x_2^3x_3^2X^4 - Y^2x_1^3x_2^2x_3^2X^4 - '
    'Y^3x_1^2x_2^2x_3^2X^4 + Y^3x_1^3x_2^3x_3^3X^6'
)

# Hermite-Smith series.
HS1 = ("1", "(1 - x_1y_1)")
HS2 = ("1 - x_1^2y_1y_2", "(1 - x_1y_1)(1 - x_2y_1y_2)(1 - qx_1y_2)")
HS3_NUM = (
    '1 - x_1^2y_1y_2 - x_1x_2y_1y_2y_3 - q x_1^2y_1y_3 - x_2^2y_1^2y_2y_3 - q x_1x_2y_1y_2y_3 -'
    ' q^2x_1^2y_2y_3 - q x_2^2y_1y_2^2y_3 + x_1^2x_2y_1^2y_2y_3 - q^2x_1x_2y_1y_2y_3 + q '
    'x_1^3y_1y_2y_3 - q^2x_2^2y_1y_2y_3^2 + x_1x_2^2y_1^2y_2^2y_3 + q x_1^2x_2y_1y_2^2y_3 + q '
    'x_1^2x_2y_1^2y_2y_3 + q^2x_1^3y_1y_2y_3 + q x_1x_2^2y_1^2y_2y_3^2 + q^2x_1^2x_2y_1y_2y_3^2'
    ' + q x_1x_2^2y_1^2y_2^2y_3 + q^2x_1^2x_2y_1y_2^2y_3 + q x_2^3y_1^2y_2^2y_3^2 + '
    'q^2x_1x_2^2y_1y_2^2y_3^2 + q^2x_1x_2^2y_1^2y_2y_3^2 + q^3x_1^2x_2y_1y_2y_3^2 - q '
    'x_1^3x_2y_1^2y_2^2y_3 + q^2x_2^3y_1^2y_2^2y_3^2 - q x_1^2x_2^2y_1^2y_2^2y_3^2 + '
    'q^3x_1x_2^2y_1y_2^2y_3^2 - q^2x_1^3x_2y_1^2y_2y_3^2 - q x_1x_2^3y_1^3y_2^2y_3^2 - '
    'q^2x_1^2x_2^2y_1^2y_2^2y_3^2 - q^3x_1^3x_2y_1y_2^2y_3^2 - q^2x_1x_2^3y_1^2y_2^3y_3^2 - '
    'q^3x_1^2x_2^2y_1^2y_2^2y_3^2 - q^3x_1x_2^3y_1^2y_2^2y_3^3 + q^3x_1^3x_2^3y_1^3y_2^3y_3^3'
)
HS3_DEN = (
    '(1 - x_1y_1)(1 - x_2y_1y_2)(1 - q x_1y_2)(1 - x_3y_1y_2y_3)(1 - q x_2y_1y_3) (1 - '
    'q^2x_1y_3)(1 - q^2x_2y_2y_3)'
)

# Quiver representation zeta functions in t_i = q^-s_i.
QUIVER1 = ("1", "(1 - t_1)")
QUIVER2 = ("1 - t_1t_2^3", "(1 - t_2)(1 - t_2^2)(1 - t_1t_2^2)(1 - q t_1t_2)")
QUIVER3_NUM = (
    '1 - t_2^2t_3^5 - q t_1t_2t_3^4 - t_1t_2^2t_3^5 - q^2t_1t_2^3t_3^3 - t_1t_2^3t_3^6 - q '
    't_1t_2^3t_3^5 - q^2t_1t_2^3t_3^4 + q t_1t_2^3t_3^6 - q t_1t_2^4t_3^5 + t_1t_2^3t_3^8 + q '
    't_1t_2^3t_3^7 + q^2t_1t_2^3t_3^6 - q^2t_1^2t_2^3t_3^5 + t_1t_2^4t_3^8 + q t_1t_2^4t_3^7 + '
    'q^2t_1^2t_2^3t_3^6 + q t_1^2t_2^3t_3^8 + q^2t_1t_2^5t_3^6 + q t_1t_2^5t_3^8 + '
    'q^2t_1^2t_2^4t_3^7 + q^3t_1^2t_2^4t_3^6 - q t_1t_2^5t_3^9 + q t_1^2t_2^5t_3^8 + '
    'q^2t_1^2t_2^5t_3^7 + q^3t_1^2t_2^5t_3^6 - q^2t_1^2t_2^4t_3^9 + q^2t_1^2t_2^5t_3^8 - q '
    't_1^2t_2^5t_3^{10} - q^2t_1^2t_2^5t_3^9 - q^3t_1^2t_2^5t_3^8 - q t_1^2t_2^5t_3^{11} - '
    'q^3t_1^2t_2^6t_3^9 - q^2t_1^2t_2^7t_3^{10} - q^3t_1^3t_2^6t_3^9 + q^3t_1^3t_2^8t_3^{14}'
)
QUIVER3_DEN = (
    '(1 - t_2)(1 - t_3)(1 - q t_3)(1 - t_3^3)(1 - t_2^2t_3^3)(1 - q t_2^2t_3^2)(1 - '
    'q^2t_1t_2t_3) (1 - t_1t_2^2t_3^3)(1 - q t_1t_2t_3^3)(1 - q^2t_1t_2^2t_3^2)'
)


def _pair(num: str, den: str) -> RatFunc:
    return RatFunc(parse_poly(num), parse_factors(den))


_NUMERATORS = {1: N1, 2: N2, 3: N3}
_HECKE = {1: HECKE1_NUM, 2: HECKE2_NUM, 3: HECKE3_NUM}
_TABLES = {
    "affS_in": {1: AFFINE_IN1, 2: AFFINE_IN2, 3: (AFFINE_IN3_NUM, AFFINE_IN3_DEN)},
    "affS_pr": {1: AFFINE_PR1, 2: AFFINE_PR2, 3: (AFFINE_PR3_NUM, AFFINE_PR3_DEN)},
    "HS": {1: HS1, 2: HS2, 3: (HS3_NUM, HS3_DEN)},
    "quiver": {1: QUIVER1, 2: QUIVER2, 3: (QUIVER3_NUM, QUIVER3_DEN)},
}

TABLE_NAMES = ("hls", "affS_in", "affS_pr", "HS", "hecke", "quiver")


def reference_numerator(n: int):
    """Printed ``N_n`` for ``n <= 3``."""
    return parse_poly(_NUMERATORS[n])


def reference_hecke_numerator(n: int):
    """Printed ``H_n^num`` for ``n <= 3``."""
    return parse_poly(_HECKE[n])


def reference_series(name: str, n: int) -> RatFunc:
    """Printed rational function ``name`` (one of ``affS_in, affS_pr, HS, quiver``) for ``n <= 3``."""
    if name not in _TABLES:
        raise KeyError(f"no table named {name!r}")
    if n not in _TABLES[name]:
        raise KeyError(f"{name} is tabulated for n <= 3 only")
    return _pair(*_TABLES[name][n])
