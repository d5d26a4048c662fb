import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from motzkin_plateaus.errors import CapExceeded
from motzkin_plateaus.paths import (
    Rule,
    StatisticSpec,
    count_plateaus,
    enumerate_paths,
    is_motzkin,
    motzkin_numbers,
    plateaus,
    weighted_count,
)
from motzkin_plateaus.series import MarkerPoly, Y


def all_words(n):
    return ("".join(w) for w in itertools.product("UHD", repeat=n))


def test_enumerate_small():
    assert enumerate_paths(0) == ("",)
    assert sorted(enumerate_paths(3)) == sorted(["HHH", "HUD", "UDH", "UHD"])
    assert len(enumerate_paths(5)) == 21


def test_enumerate_is_lexicographic_with_u_before_h_before_d():
    key = {"U": 0, "H": 1, "D": 2}
    ps = enumerate_paths(7)
    assert list(ps) == sorted(ps, key=lambda p: [key[c] for c in p])


@pytest.mark.parametrize("n", range(9))
def test_enumerate_matches_filtering_all_words(n):
    # independent route: filter all 3^n words
    assert set(enumerate_paths(n)) == {w for w in all_words(n) if is_motzkin(w)}
    assert len(set(enumerate_paths(n))) == len(enumerate_paths(n))


def test_enumeration_sizes_are_motzkin_numbers():
    m = motzkin_numbers(14)
    assert m[:8] == [1, 1, 2, 4, 9, 21, 51, 127]
    assert [len(enumerate_paths(n)) for n in range(15)] == m


def test_cap():
    with pytest.raises(CapExceeded):
        enumerate_paths(19)
    with pytest.raises(CapExceeded):
        weighted_count(12, StatisticSpec.plateau(1), cap=10)


def test_is_motzkin():
    assert is_motzkin("UHD")
    assert not is_motzkin("DU")
    assert not is_motzkin("UU")
    assert not is_motzkin("UXD")


def test_count_plateaus_examples():
    assert count_plateaus("UHD", 1) == [(0, 1)]
    assert count_plateaus("UHHD", 1) == []
    assert count_plateaus("UHHD", 2) == [(0, 1)]
    assert count_plateaus("UUHDD", 1) == [(1, 2)]
    assert count_plateaus("UDUUDD", 0) == [(0, 1), (3, 2)]


@given(st.integers(0, 10).flatmap(lambda n: st.sampled_from(enumerate_paths(n)) if n else st.just("")))
def test_each_up_step_starts_at_most_one_plateau(path):
    starts = [i for i, _, _ in plateaus(path)]
    assert len(starts) == len(set(starts))
    for i, j, h in plateaus(path):
        assert path[i : i + j + 2] == "U" + "H" * j + "D"
        assert h == path.count("U", 0, i) - path.count("D", 0, i) + 1


def test_weighted_count_table_row_six():
    assert weighted_count(6, StatisticSpec.plateau(1)) == 36 + 14 * Y + Y * Y


def test_weighted_count_peak_free_length_three():
    spec = StatisticSpec(exclusions=frozenset({0}))
    assert weighted_count(3, spec) == MarkerPoly.const(2)


def test_weighted_count_empty_path():
    spec = StatisticSpec((Rule(1), Rule(2, marker="z")), frozenset({5}))
    assert weighted_count(0, spec) == MarkerPoly.const(1)


def test_height_predicate_and_z_marker():
    spec = StatisticSpec((Rule(1, lambda h: h >= 2),))
    # UHD at height 1 is not marked; UUHDD is
    assert weighted_count(3, spec) == MarkerPoly.const(4)
    w5 = weighted_count(5, spec)
    assert w5.coeff(1) == 1
    spec = StatisticSpec((Rule(2, marker="z"),))
    assert weighted_count(4, spec).coeff(0, 1) == 1


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_marker_sum_and_degree_bound(r):
    m = motzkin_numbers(14)
    for n in range(15):
        w = weighted_count(n, StatisticSpec.plateau(r))
        assert w.evaluate(y=1) == m[n]
        assert w.degree_y() <= n // (r + 2)
        assert all(c > 0 for _, c in w.items())
