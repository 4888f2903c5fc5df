from math import factorial

import pytest

from combinatorics import golden
from combinatorics.eulerian import (EulerianTable, an_classical, binomial, coeff_recur, coeff_x_recur, en_brute,
                                    en_problems, en_recur, en_star_brute, en_star_recur,
                                    eulerian_numbers_by_enumeration, golden_diff, golden_en)
from combinatorics.poly import UnivariatePolynomial, coeff_x, coeff_xq, eval_q1, parse, shift_x
from core.errors import DomainError, EnumerationCeilingError, InvariantError


@pytest.mark.parametrize('n', range(8))
def test_brute_force_matches_printed(n, printed):
    assert en_brute(n, jobs=1) == printed[n]


@pytest.mark.parametrize('n', range(8))
def test_recurrence_matches_printed(n, printed, table):
    assert en_recur(n, table) == printed[n]


@pytest.mark.parametrize('n', [8])
def test_brute_force_matches_recurrence(n, table):
    assert en_brute(n, jobs=1) == en_recur(n, table)


@pytest.mark.slow
def test_brute_force_matches_recurrence_at_nine(table):
    assert en_brute(9) == en_recur(9, table)


def test_parallel_enumeration_is_deterministic():
    assert en_brute(8, jobs=2) == en_brute(8, jobs=1)


def test_shortcut_enumeration(table):
    assert en_brute(7, jobs=1, shortcut=True) == en_recur(7, table)


@pytest.mark.parametrize(
    'n, expected',
    (
        (3, [1, 4, 1]),
        (4, [1, 11, 11, 1]),
        (5, [1, 26, 66, 26, 1]),
    ),
)
def test_masses_are_eulerian_numbers(n, expected, printed):
    assert eval_q1(printed[n]) == UnivariatePolynomial(expected)


def test_small_cases():
    assert en_brute(0) == 1
    assert en_brute(1) == 1
    assert en_recur(2) == parse("1+x")


def test_ceiling():
    with pytest.raises(EnumerationCeilingError, match="recur"):
        en_brute(25)
    with pytest.raises(EnumerationCeilingError):
        en_brute(6, ceiling=5)


def test_negative_n():
    with pytest.raises(DomainError):
        en_recur(-1)


@pytest.mark.parametrize('n', range(1, 13))
def test_coefficient_recurrence(n, table):
    full = en_recur(n, table)
    for (d, m), c in full.items():
        assert coeff_recur(n, d, m, table) == c
    assert coeff_recur(n, 1, -1, table) == 0


@pytest.mark.parametrize('n', range(1, 11))
def test_row_recurrence(n, table):
    full = en_recur(n, table)
    for d in range(n + 1):
        assert coeff_x_recur(n, d, table) == coeff_x(full, d)


@pytest.mark.parametrize('n', range(1, 9))
def test_star_polynomial(n, table):
    star = en_star_brute(n, jobs=1)
    assert star == en_star_recur(n, table)
    if n >= 2:
        assert star == shift_x(en_recur(n - 1, table))


@pytest.mark.parametrize('k', range(1, 9))
def test_rows_shift_into_star_polynomial(k, table):
    star = en_star_brute(k + 1, jobs=1)
    ek = en_recur(k, table)
    for d in range(k):
        assert coeff_x(ek, d) == coeff_x(star, d + 1)


def test_classical_collapse(table):
    for n in range(16):
        assert eval_q1(en_recur(n, table)) == an_classical(n)
    for n in range(10):
        assert eulerian_numbers_by_enumeration(n) == an_classical(n)


def test_classical_values():
    assert an_classical(1) == UnivariatePolynomial([1])
    assert an_classical(4) == UnivariatePolynomial([1, 11, 11, 1])


@pytest.mark.parametrize('n', range(13))
def test_invariants_hold(n, table):
    assert en_problems(n, en_recur(n, table)) == []
    assert en_recur(n, table).mass == factorial(n)


def test_table_rejects_bad_polynomial():
    fresh = EulerianTable()
    with pytest.raises(InvariantError, match="mass"):
        fresh.insert(3, parse("1+x(q+3)+2x^2"), "test")
    with pytest.raises(InvariantError, match="golden"):
        fresh.insert(3, parse("1+x(2q+2)+x^2"), "test")
    assert 3 not in fresh


def test_table_provenance(table):
    en_recur(4, table)
    assert table.provenance(4) == "recurrence"
    assert table.ns()[:5] == [0, 1, 2, 3, 4]


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(3, 4) == 0
    assert binomial(-1, 0) == 0


def test_printed_transcriptions_up_to_seven_are_exact(table):
    for n in range(golden.AUTHORITATIVE_MAX_N + 1):
        transcription = golden_en(n, table)
        assert transcription.authoritative
        assert transcription.discrepancies == []


def test_printed_e10_typos_are_listed(table):
    transcription = golden_en(10, table)
    assert not transcription.authoritative
    assert any("repeated" in note for note in transcription.parse_notes)
    assert any("missing '+'" in note for note in transcription.parse_notes)
    differing = {(row.d, row.m) for row in transcription.discrepancies}
    assert (1, 7) in differing
    assert (5, 18) in differing


@pytest.mark.parametrize('n', [8, 9, 10])
def test_three_way_diff_runs(n, table):
    rows = golden_diff(n, table)
    for row in rows:
        assert len(row.values) == 3
        assert row.values[0] is None
        assert row.values[1] == coeff_xq(en_recur(n, table), row.d, row.m)


@pytest.mark.parametrize(
    'n',
    (
        8,
        pytest.param(9, marks=pytest.mark.slow),
    ),
)
def test_three_way_diff_brute_column(n, table):
    brute = en_brute(n, jobs=1)
    assert brute == en_recur(n, table)
    rows = golden_diff(n, table, brute=brute)
    assert {(row.d, row.m) for row in rows} == {(row.d, row.m) for row in golden_en(n, table).discrepancies}
    for row in rows:
        assert row.values[0] is not None
        assert row.values[0] == row.values[1]


def test_golden_range():
    with pytest.raises(DomainError):
        golden_en(11)


def test_three_way_diff_with_brute(table):
    assert golden_diff(7, table, brute=en_brute(7, jobs=1)) == []
