import pytest

from hls_lab.algebra import LaurentPoly, RatFunc, Z, parse_factors, parse_poly, q, rat_equal, series_expand, t, u
from hls_lab.reference import reference_hecke_numerator, reference_series
from hls_lab.special import (
    affine_schubert,
    bgs_descent_form,
    hecke,
    hecke_bn_invariance,
    hecke_numerator,
    hecke_palindromic,
    hecke_vanishing,
    hermite_smith,
    hs_through_affine,
    igusa_identity,
    lattice_zeta_checks,
    littlewood_checks,
    quiver_recipe,
    quiver_zeta,
    reciprocity_checks,
    symplectic_integral,
    weak_order_identity,
)

SERIES = {
    "affS_in": lambda n: affine_schubert(n, "intersection"),
    "affS_pr": lambda n: affine_schubert(n, "projection"),
    "HS": hermite_smith,
    "quiver": quiver_zeta,
}


@pytest.mark.parametrize(
    "name,n",
    [("affS_in", 1), ("affS_in", 3), ("affS_pr", 1), ("affS_pr", 3), ("HS", 1), ("HS", 2), ("HS", 3), ("quiver", 1)],
)
def test_reference_tables_that_agree(name, n):
    assert rat_equal(SERIES[name](n), reference_series(name, n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hecke_numerator_matches_reference(n):
    assert hecke_numerator(n) == reference_hecke_numerator(n)


def test_affine_series_in_degree_two():
    # the Z11 Z21 coefficients (q and 1) are confirmed by lattice counting in test_oracle
    want_in = RatFunc(
        parse_poly("1 - Z_{11}Z_{21}^2"), parse_factors("(1 - q Z_{11}Z_{21})(1 - Z_{21})(1 - Z_{11}Z_{22})")
    )
    want_pr = RatFunc(
        parse_poly("1 - Z_{11}Z_{21}^2"), parse_factors("(1 - Z_{11}Z_{21})(1 - q Z_{21})(1 - Z_{11}Z_{22})")
    )
    assert rat_equal(affine_schubert(2, "intersection"), want_in)
    assert rat_equal(affine_schubert(2, "projection"), want_pr)
    s = series_expand(affine_schubert(2, "intersection"), [Z(1, 1), Z(2, 1), Z(2, 2)], 2)
    assert s == parse_poly("1 + Z_{21} + Z_{21}^2 + q Z_{11}Z_{21} + Z_{11}Z_{22}")


def test_affine_kind_is_validated():
    with pytest.raises(ValueError):
        affine_schubert(2, "sideways")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hecke_routes_agree(n):
    assert hecke_numerator(n, "tableau") == hecke_numerator(n, "substitution")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hecke_vanishing(n):
    assert all(hecke_vanishing(n).values())


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hecke_palindromic(n):
    assert hecke_palindromic(n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hecke_bn_invariance(n):
    assert hecke_bn_invariance(n) == {"permutations": True, "inversions": True}


def test_hecke_series_denominator_counts_the_empty_set():
    assert len(hecke(2).series().den_factors()) == 4


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hermite_smith_through_affine(n):
    assert hs_through_affine(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_igusa_identity(n):
    assert igusa_identity(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_weak_order_identity(n):
    assert weak_order_identity(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lattice_zeta_three_ways(n):
    assert lattice_zeta_checks(n) == {"igusa": True, "hermite_smith": True, "hls": True}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_littlewood_products(n):
    assert littlewood_checks(n) == {"schur_identity": True, "x1_product": True}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_reciprocity(n):
    assert reciprocity_checks(n) == {"affS_in": True, "affS_pr": True, "hecke": True}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_symplectic_integral_descent_form(n):
    assert rat_equal(symplectic_integral(n), bgs_descent_form(n))


def test_symplectic_integral_degree_one():
    uv = LaurentPoly.var(u)
    qv = LaurentPoly.var(q)
    assert rat_equal(symplectic_integral(1), RatFunc(1, [1 - uv, 1 - qv * uv]))


def test_quiver_exponent_readings():
    mx = quiver_recipe(3, "max").images
    ct = quiver_recipe(3, "count").images
    qv = LaurentPoly.var(q)
    assert mx[(1, 3)] == qv * LaurentPoly.monomial({t(1): 1, t(2): 1, t(3): 3})
    assert ct[(1, 3)] == qv * LaurentPoly.monomial({t(1): 1, t(2): 1, t(3): 2})
    with pytest.raises(KeyError):
        quiver_recipe(2, "min")


def test_quiver_bound():
    from hls_lab.hls import BudgetError

    with pytest.raises(BudgetError):
        quiver_zeta(4)
