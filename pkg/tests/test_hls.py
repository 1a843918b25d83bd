from math import comb

import pytest

from hls_lab.algebra import X, XC, Y, LaurentPoly, RatFunc, rat_equal
from hls_lab.hls import (
    BudgetError,
    chain_weights,
    coarsen,
    eulerian,
    h_vector,
    hls_series,
    linear_coefficients,
    numerator,
    special_value_Y,
    verify_functional_equation,
)
from hls_lab.poset import thrall_count
from hls_lab.reference import reference_numerator

XV = LaurentPoly.var(X)


@pytest.mark.parametrize("n", [1, 2])
def test_numerator_matches_reference(n):
    assert numerator(n) == reference_numerator(n)


def test_small_numerators_explicit():
    assert numerator(1) == 1
    assert numerator(2) == 1 - LaurentPoly.monomial({Y: 1, XC((1,)): 1, XC((2,)): 1})


@pytest.mark.parametrize("n", [1, 2, 3])
def test_numerator_equals_direct_chain_sum(n):
    s = hls_series(n)
    assert rat_equal(s.ratfunc(), s.chain_sum())


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_functional_equation(n):
    assert verify_functional_equation(n)


def test_functional_equation_detects_a_perturbed_numerator(monkeypatch):
    import hls_lab.hls as mod

    real = numerator(2)
    monkeypatch.setattr(mod, "numerator", lambda n: real + LaurentPoly.var(XC((1,))))
    assert not mod.verify_functional_equation(2)


def test_series_bound():
    with pytest.raises(BudgetError):
        hls_series(5)
    with pytest.raises(BudgetError):
        numerator(5)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_no_linear_terms(n):
    assert linear_coefficients(numerator(n)) == []


def test_linear_coefficients_finds_planted_terms():
    N = 1 + LaurentPoly.monomial({Y: 2, XC((1,)): 1}) + LaurentPoly.monomial({XC((1,)): 1, XC((2,)): 1})
    assert linear_coefficients(N) == [({Y: 2, XC((1,)): 1}, 1)]


def test_eulerian_polynomials():
    assert eulerian(3) == 1 + 4 * XV + XV**2
    assert eulerian(4) == 1 + 11 * XV + 11 * XV**2 + XV**3


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_coarse_series_at_y_one_is_eulerian(n):
    assert rat_equal(coarsen(n, 1), RatFunc(eulerian(n), [1 - XV] * n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_coarsening_agrees_with_fine_series(n):
    s = hls_series(n)
    fine = s.ratfunc().substitute({XC(C): XV for C in s.subsets})
    assert rat_equal(fine, coarsen(n))
    for y0 in (0, 1, -1):
        assert rat_equal(special_value_Y(fine, y0), coarsen(n, y0))


def test_special_value_rejects_other_points():
    with pytest.raises(ValueError):
        special_value_Y(coarsen(2), 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_chain_weights_symbolic_and_numeric_agree(n):
    sym = chain_weights(n)
    for y0 in (0, -1, 1):
        assert [int(w.evaluate({Y: y0})) for w in sym] == chain_weights(n, y0)


H_Y0 = {
    1: [1],
    2: [1],
    3: [1, 1],
    4: [1, 5, 5, 1],
    5: [1, 16, 70, 112, 70, 16, 1],
    6: [1, 42, 539, 2948, 7854, 10824, 7854, 2948, 539, 42, 1],
}


@pytest.mark.parametrize("n", sorted(H_Y0))
def test_h_vector_at_y_zero(n):
    h = h_vector(n, 0)
    assert h.coefficients == H_Y0[n]
    assert h.denominator_exponent == comb(n + 1, 2)
    assert h.total == thrall_count(n)
    assert len(h.coefficients) == comb(n - 1, 2) + 1
    assert h.coefficients == h.coefficients[::-1]


H_YM1 = {
    1: [1],
    2: [1, 0, 1],
    3: [1, 1, 6, 6, 1, 1],
    4: [1, 5, 32, 120, 226, 226, 120, 32, 5, 1],
    5: [1, 16, 179, 1568, 8545, 30448, 63979, 83392, 63979, 30448, 8545, 1568, 179, 16, 1],
}


@pytest.mark.parametrize("n", sorted(H_YM1))
def test_h_vector_at_y_minus_one(n):
    h = h_vector(n, -1)
    assert h.coefficients == H_YM1[n]
    assert h.reduced_exponent == comb(n + 1, 2)
    assert h.coefficients == h.coefficients[::-1]
    h1 = h.coefficients[1] if len(h.coefficients) > 1 else 0
    assert h1 == 2**n - 1 - comb(n + 1, 2)


def test_h_vector_sums_at_y_minus_one():
    assert [h_vector(n, -1).total for n in range(1, 6)] == [1, 2, 16, 768, 292864]


def test_h_vector_bounds():
    with pytest.raises(BudgetError):
        h_vector(7, 0)
    with pytest.raises(BudgetError):
        h_vector(6, -1)
    with pytest.raises(ValueError):
        h_vector(3, 1)
