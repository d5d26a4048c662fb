import pytest

from motzkin_plateaus.data import PUBLISHED_COUNTS
from motzkin_plateaus.engines import (
    column_gf,
    column_gfs,
    explicit_gf,
    f0_closed,
    functional_residual,
    motzkin_series,
    quadratic_root,
    theorem1_residual,
    theorem2_residual,
)
from motzkin_plateaus.errors import BranchAssertionFailed
from motzkin_plateaus.paths import StatisticSpec, motzkin_numbers, oracle_series
from motzkin_plateaus.series import XSeries, sqrt, subst_y_const
from motzkin_plateaus.tables import PlateauTable, base_column, table_from_recursion


def test_f0_unit_plateaus():
    f = f0_closed(1, 30)
    assert f.integers() == base_column(1, 30)
    assert f.constant_term == 1


@pytest.mark.parametrize("r", [2, 3])
def test_f0_matches_oracle(r):
    oracle = oracle_series(StatisticSpec.plateau(r), 12)
    assert f0_closed(r, 12) == subst_y_const(oracle, 0)


def test_explicit_reproduces_table_1():
    t = PlateauTable.from_series(explicit_gf(1, 14), 1)
    assert t.rows() == list(PUBLISHED_COUNTS)


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_explicit_at_y0_is_f0_and_at_y1_is_motzkin(r):
    g = explicit_gf(r, 25)
    assert subst_y_const(g, 0) == f0_closed(r, 25)
    assert subst_y_const(g, 1).integers() == motzkin_numbers(25)


def test_peak_counts_match_oracle():
    assert explicit_gf(0, 12) == oracle_series(StatisticSpec.plateau(0), 12)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_explicit_matches_recursion(r):
    t = table_from_recursion(r, 40)
    assert PlateauTable.from_series(explicit_gf(r, 40), r) == t


def test_motzkin_series():
    assert motzkin_series(20).integers() == motzkin_numbers(20)


def test_wrong_branch_is_detected():
    x = XSeries.x(10)
    p = 1 - x
    with pytest.raises(BranchAssertionFailed, match="x\\^0"):
        quadratic_root(p + sqrt(p * p - 4 * x * x), "plus branch")
    with pytest.raises(BranchAssertionFailed, match="divisible"):
        quadratic_root(x * x * 3, "odd")


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_functional_equation(r):
    assert functional_residual(r, 30).is_zero()


def test_functional_equation_detects_perturbation():
    g = explicit_gf(1, 30) + XSeries.x(32, 20)
    assert not functional_residual(1, 30, g).is_zero()


def test_columns_small_values():
    cols = column_gfs(1, 3, 14)
    assert cols[1].integers()[:10] == [0, 0, 0, 1, 2, 6, 14, 39, 102, 280]
    assert cols[2].coefficient(6) == 1
    assert cols[3].coefficient(11) == 20
    assert column_gf(1, 2, 14) == cols[2]


@pytest.mark.parametrize("r", [1, 2])
def test_columns_match_table(r):
    t = table_from_recursion(r, 24)
    for p, col in enumerate(column_gfs(r, 5, 24)):
        assert col.integers() == [t[n, p] for n in range(25)]


def test_column_rejects_negative_p():
    with pytest.raises(ValueError):
        column_gf(1, -1, 5)


@pytest.mark.parametrize("r", [1, 2])
def test_integral_form_residual_vanishes(r):
    assert theorem1_residual(r, 24).is_zero()


def test_integral_form_detects_bad_f0():
    bad = f0_closed(1, 24) + XSeries.x(24, 7)
    assert not theorem1_residual(1, 24, f0=bad).is_zero()


def test_integral_form_pmax_too_small():
    with pytest.raises(ValueError):
        theorem1_residual(1, 24, pmax=2)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_diagonal_form_residual_vanishes(r):
    assert theorem2_residual(r, 30).is_zero()


def test_diagonal_form_detects_perturbation():
    g = explicit_gf(1, 30) + XSeries.x(32, 9)
    assert not theorem2_residual(1, 30, g).is_zero()
