from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motzkin_plateaus.errors import NegativeExponent, NonIntegralResult, NonUnitConstantTerm
from motzkin_plateaus.series import (
    MarkerPoly,
    XSeries,
    Y,
    Z,
    dx,
    integrate_y,
    recip,
    sqrt,
    subst_diagonal,
    subst_y_const,
)

N = 10
x = XSeries.x(N)


# -- strategies -----------------------------------------------------------------

small = st.integers(-4, 4)
marker_polys = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 1)), small, max_size=3
).map(MarkerPoly)


def series(order=6, unit=False):
    coeffs = st.lists(marker_polys, min_size=order + 1, max_size=order + 1)
    if unit:
        coeffs = coeffs.map(lambda cs: [MarkerPoly.const(1)] + cs[1:])
    return coeffs.map(lambda cs: XSeries(cs, order))


# -- MarkerPoly -------------------------------------------------------------------


def test_marker_poly_drops_zeros_and_compares_termwise():
    assert MarkerPoly({(0, 0): 0, (1, 0): 2}) == MarkerPoly({(1, 0): 2})
    assert MarkerPoly({(1, 0): 1}) != MarkerPoly({(0, 1): 1})
    assert MarkerPoly() == 0
    assert not MarkerPoly({(3, 2): 0})


def test_marker_poly_rejects_negative_exponents():
    with pytest.raises(ValueError):
        MarkerPoly({(-1, 0): 1})


def test_marker_poly_arithmetic():
    p = 1 + Y
    assert p * p == MarkerPoly({(0, 0): 1, (1, 0): 2, (2, 0): 1})
    assert (Y - Z) * (Y + Z) == Y * Y - Z * Z
    assert str(36 + 14 * Y + Y * Y) == "36 + 14*y + y^2"


def test_marker_poly_evaluate():
    p = 2 + 3 * Y + Y * Z
    assert p.evaluate(y=1) == 5 + Z
    assert p.evaluate(y=0, z=7) == 2
    assert hash(MarkerPoly.const(5)) == hash(5)


# -- add / mul -------------------------------------------------------------------


def test_add_cancellation():
    assert (1 + x) + (1 - x) == XSeries.const(2, N)


def test_add_identity_and_like_terms():
    a = 1 + 3 * x + x * x * Y
    assert a + XSeries.zero(N) == a
    xy = XSeries.x(N, 1, Y)
    assert xy + xy == XSeries.x(N, 1, 2 * Y)


def test_mul_difference_of_squares():
    assert (1 + x) * (1 - x) == 1 - x * x


def test_mul_identity():
    a = 2 - x + 5 * x**3 * Z
    assert a * XSeries.one(N) == a


def test_geometric_series_times_one_minus_x():
    geometric = XSeries([1] * (N + 1), N)
    assert geometric * (1 - x) == XSeries.one(N)
    assert recip(1 - x) == geometric


def test_mixed_order_truncates_to_minimum():
    a = XSeries([1, 1, 1, 1], 3)
    b = XSeries([1, 1, 1, 1, 1, 1], 5)
    assert (a + b).order == 3
    assert (a * b).order == 3


def test_shift_and_unshift():
    a = 1 + 2 * x
    assert a.shift(3).order == N + 3
    assert a.shift(3).unshift(3) == a
    with pytest.raises(NegativeExponent):
        a.unshift(1)


# -- recip --------------------------------------------------------------------------


def test_recip_of_one():
    assert recip(XSeries.one(N)) == XSeries.one(N)


def test_recip_fibonacci():
    fib = [1, 1]
    while len(fib) < N + 1:
        fib.append(fib[-1] + fib[-2])
    f = recip(1 - x - x * x)
    assert f.integers() == fib
    assert f * (1 - x - x * x) == XSeries.one(N)


def test_recip_negative_unit():
    a = -1 + 3 * x
    assert a * recip(a) == XSeries.one(N)


def test_recip_rejects_non_unit():
    with pytest.raises(NonUnitConstantTerm):
        recip(2 + x)
    with pytest.raises(NonUnitConstantTerm):
        recip(XSeries.const(1 + Y, N))
    with pytest.raises(NonUnitConstantTerm):
        recip(x)


# -- sqrt ---------------------------------------------------------------------------


def test_sqrt_trivial():
    assert sqrt(XSeries.one(N)) == XSeries.one(N)
    assert sqrt((1 + x) * (1 + x)) == 1 + x


def test_sqrt_one_minus_four_x():
    # 1 - 2 * sum_{n>=1} Catalan(n-1) x^n
    catalan = [comb(2 * n, n) // (n + 1) for n in range(N)]
    expected = [1] + [-2 * catalan[n - 1] for n in range(1, N + 1)]
    s = sqrt(1 - 4 * x)
    assert s.integers() == expected
    assert s * s == 1 - 4 * x
    assert s.integers()[:5] == [1, -2, -2, -4, -10]


def test_sqrt_may_be_rational():
    s = sqrt(1 + x)
    assert s.coefficient(1) == Fraction(1, 2)
    assert not s.is_integral()
    with pytest.raises(NonIntegralResult):
        s.to_integral()


def test_sqrt_rejects_bad_constant():
    with pytest.raises(NonUnitConstantTerm):
        sqrt(-1 + x)
    with pytest.raises(NonUnitConstantTerm):
        sqrt(4 + x)


# -- dx -----------------------------------------------------------------------------


def test_dx():
    assert dx(x**3) == XSeries.x(N - 1, 2, 3)
    assert dx(XSeries.const(7 + Y, N)) == XSeries.zero(N - 1)
    assert dx(XSeries.one(0)) == XSeries.zero(0)


def test_dx_of_shifted_series_is_coefficient_times_index():
    a = XSeries([3, 1, 4, 1, 5, 9, 2, 6], 7)
    lifted = a.shift(3)
    d = dx(lifted)
    for n in range(d.order + 1):
        assert d.coefficient(n) == (n + 1) * lifted.coefficient(n + 1)


# -- integrate_y --------------------------------------------------------------------


def test_integrate_y():
    assert integrate_y(XSeries.one(N)) == XSeries.const(Y, N)
    assert integrate_y(XSeries.const(2 * Y, N)) == XSeries.const(Y * Y, N)
    half = integrate_y(XSeries.const(Y, N))
    assert half.coefficient(0, 2) == Fraction(1, 2)


def test_integrate_y_of_plateau_series():
    from motzkin_plateaus.engines import explicit_gf

    g = explicit_gf(1, 8)
    assert integrate_y(g).coefficient(3, 1) == 3  # c_3^0 = 3


# -- substitutions ---------------------------------------------------------------------


def test_subst_y_const():
    xy = XSeries.x(N, 1, Y)
    assert subst_y_const(xy, 0) == XSeries.zero(N)
    assert subst_y_const(xy + XSeries.x(N, 2, Z), 1) == x + XSeries.x(N, 2, Z)


def test_subst_diagonal_monomials():
    m = XSeries.from_polynomial({(3, 1, 0): 1}, N)
    assert subst_diagonal(m, 1) == XSeries.const(Z, N)
    m = XSeries.from_polynomial({(6, 2, 0): 1}, N)
    assert subst_diagonal(m, 1) == XSeries.const(Z * Z, N)
    m = XSeries.from_polynomial({(9, 2, 0): 5}, N)
    assert subst_diagonal(m, 2) == XSeries.x(N, 1, 5 * Z * Z)


def test_subst_diagonal_rejects_short_monomials():
    with pytest.raises(NegativeExponent):
        subst_diagonal(XSeries.from_polynomial({(2, 1, 0): 1}, N), 1)


def test_subst_diagonal_plateau_series_x0_row_is_all_ones():
    from motzkin_plateaus.engines import explicit_gf

    big = subst_diagonal(explicit_gf(1, 30), 1)
    assert big[0] == MarkerPoly({(0, m): 1 for m in range(11)})


# -- rendering ------------------------------------------------------------------------


def test_canonical_rendering():
    s = XSeries.from_polynomial({(0, 0, 0): 1, (1, 0, 0): 1, (2, 0, 0): 2, (3, 0, 0): 3, (3, 1, 0): 1}, 3)
    assert str(s) == "1 + x + 2*x^2 + 3*x^3 + x^3*y"
    assert str(1 - x) == "1 - x"
    assert str(XSeries.zero(3)) == "0"
    assert str(-x + XSeries.x(N, 2, Y * Z)) == "-x + x^2*y*z"
    assert str(XSeries.x(N, 0, Y * Y).render("z")) == "y^2"


# -- properties ---------------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a


@settings(max_examples=60, deadline=None)
@given(series(order=8, unit=True))
def test_recip_and_sqrt_are_inverses(u):
    one = XSeries.one(u.order)
    assert u * recip(u) == one
    assert recip(u) * u == one
    assert sqrt(u) * sqrt(u) == u
    assert sqrt(u * u) == u
    assert sqrt(u).constant_term == 1


@settings(max_examples=60, deadline=None)
@given(series(), series())
def test_product_rule(a, b):
    assert dx(a * b) == dx(a) * b + a * dx(b)


@settings(max_examples=60, deadline=None)
@given(series(), series())
def test_y_equals_one_is_a_ring_homomorphism(a, b):
    assert subst_y_const(a * b, 1) == subst_y_const(a, 1) * subst_y_const(b, 1)
    assert subst_y_const(a + b, 1) == subst_y_const(a, 1) + subst_y_const(b, 1)


@settings(max_examples=60, deadline=None)
@given(
    st.dictionaries(
        st.integers(0, 8).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n // 3))),
        small,
        max_size=5,
    ),
    st.dictionaries(
        st.integers(0, 8).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n // 3))),
        small,
        max_size=5,
    ),
)
def test_subst_diagonal_is_linear_and_multiplicative(t1, t2):
    order = 16
    a = XSeries.from_polynomial({(n, p, 0): c for (n, p), c in t1.items()}, order)
    b = XSeries.from_polynomial({(n, p, 0): c for (n, p), c in t2.items()}, order)
    assert subst_diagonal(a + b, 1) == subst_diagonal(a, 1) + subst_diagonal(b, 1)
    assert subst_diagonal(a * b, 1) == subst_diagonal(a, 1) * subst_diagonal(b, 1)
