from collections import Counter

import pytest

from webperm.andre import cycle_count, foata, rlmin
from webperm.combinat import perm_from_str
from webperm.enumeration import (
    cc_distribution,
    entringer,
    entringer_row,
    euler_numbers,
    f,
    f_nk,
    f_row,
    f_witnesses,
    first_letter_counts,
    genocchi,
    seidel_rows,
    verify_conjecture,
    web_count,
)
from webperm.webs import web_table

# the first nine rows of the boustrophedon triangle
SEIDEL_9 = [
    [1],
    [1],
    [1, 1],
    [2, 1],
    [2, 3, 3],
    [8, 6, 3],
    [8, 14, 17, 17],
    [56, 48, 34, 17],
    [56, 104, 138, 155, 155],
]


def test_seidel_rows():
    assert seidel_rows(9) == SEIDEL_9
    assert seidel_rows(7)[6] == [8, 14, 17, 17]
    assert seidel_rows(1) == [[1]]
    with pytest.raises(ValueError):
        seidel_rows(0)


def test_genocchi():
    assert genocchi(9) == [1, 1, 1, 2, 3, 8, 17, 56, 155]


def test_euler_numbers():
    assert euler_numbers(6) == [1, 1, 1, 2, 5, 16, 61]
    assert euler_numbers(8)[7:] == [272, 1385]


def test_entringer_values_and_identities():
    assert entringer_row(4) == [2, 4, 5, 5]
    for n in range(1, 9):
        assert sum(entringer_row(n)) == euler_numbers(n + 1)[n + 1]
        assert entringer(n, 0) == 0
    with pytest.raises(ValueError):
        entringer(3, 4)


def test_entringer_row4_against_reference_table(golden_web_tables):
    # independent oracle: first letters counted straight off the n = 4 rows
    firsts = Counter(perm_from_str(word)[0]
                     for word, *_ in golden_web_tables[4])
    assert [firsts[5 - k] for k in range(1, 5)] == entringer_row(4)


@pytest.mark.parametrize("n", range(1, 7))
def test_web_count_is_zigzag(n):
    assert web_count(n) == euler_numbers(n + 1)[n + 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_first_letter_refinement(n):
    firsts = first_letter_counts(n)
    for k in range(1, n + 1):
        assert firsts.get(n + 1 - k, 0) == entringer(n, k)


def test_f_values_and_witnesses():
    assert [f(n) for n in range(1, 7)] == genocchi(6)
    assert f_witnesses(4) == [(1, 2, 3, 4), (3, 4, 1, 2)]
    assert f_witnesses(5) == [(1, 2, 3, 4, 5), (1, 4, 5, 2, 3), (3, 4, 1, 2, 5)]
    assert (f_nk(5, 1), f_nk(5, 3), f_nk(5, 5)) == (2, 1, 0)
    assert sum(f_row(3).values()) == f(3)
    with pytest.raises(ValueError):
        f_nk(3, 4)


@pytest.mark.parametrize("n", range(1, 7))
def test_f_vanishing(n):
    for k in range(2, n + 1, 2):
        assert f_nk(n, k) == 0
    if n > 1:
        assert f_nk(n, n) == 0


def test_verify_conjecture():
    reports = verify_conjecture(6)
    assert len(reports) == 12
    assert all(r["pass"] for r in reports)
    assert all(set(r) == {"claim", "n", "k", "lhs", "rhs", "pass"}
               for r in reports)
    by_nk = {(r["n"], r["k"]): r for r in reports}
    assert (by_nk[(4, 1)]["lhs"], by_nk[(4, 1)]["rhs"]) == (1, 1)
    assert (by_nk[(4, 3)]["lhs"], by_nk[(4, 3)]["rhs"]) == (1, 1)
    assert (by_nk[(5, 1)]["lhs"], by_nk[(5, 1)]["rhs"]) == (2, 2)
    assert (by_nk[(5, 3)]["lhs"], by_nk[(5, 3)]["rhs"]) == (1, 1)
    assert (by_nk[(1, 1)]["lhs"], by_nk[(1, 1)]["rhs"]) == (1, 1)
    with pytest.raises(ValueError):
        verify_conjecture(0)


def test_cc_distribution():
    assert cc_distribution(3) == {1: 1, 2: 3, 3: 1}
    assert cc_distribution(0) == {0: 1}
    assert sum(cc_distribution(4).values()) == 16


@pytest.mark.parametrize("n", range(1, 7))
def test_cc_distribution_totals_and_foata_equidistribution(n):
    dist = cc_distribution(n)
    assert sum(dist.values()) == euler_numbers(n + 1)[n + 1]
    records = web_table(n)
    assert Counter(cycle_count(r.sigma) for r in records) == Counter(
        rlmin(foata(r.sigma)) for r in records)
