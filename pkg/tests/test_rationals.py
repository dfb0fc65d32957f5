import random
from fractions import Fraction
from math import gcd

import pytest

from conesing.errors import SingularMatrixError
from conesing.rationals import (
    RationalMatrix,
    continued_fraction_value,
    format_rational,
    hj_expand,
    is_negative_definite,
    parse_rational,
    solve_linear,
)


def test_parse_and_format_round_trip():
    assert parse_rational("3/2") == Fraction(3, 2)
    assert parse_rational("-7") == Fraction(-7)
    assert parse_rational("−4/5") == Fraction(-4, 5)  # unicode minus
    assert format_rational(Fraction(3, 2)) == "3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"


@pytest.mark.parametrize("bad", ["1.5", "", "a/b", "1/2/3", "2e3"])
def test_parse_rejects_non_rationals(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_hj_expand_examples():
    assert hj_expand(2, 1) == [2]
    # expected chains frozen after checking them with the independent evaluator
    assert continued_fraction_value([2, 3]) == Fraction(5, 3)
    assert hj_expand(5, 3) == [2, 3]
    assert continued_fraction_value([2, 4]) == Fraction(7, 4)
    assert hj_expand(7, 4) == [2, 4]


def test_hj_expand_rejects_bad_input():
    with pytest.raises(ValueError):
        hj_expand(3, 3)
    with pytest.raises(ValueError):
        hj_expand(3, 0)
    with pytest.raises(ValueError):
        hj_expand(6, 4)


def test_hj_round_trip_all_coprime_pairs_up_to_200():
    for alpha in range(2, 201):
        for beta in range(1, alpha):
            if gcd(alpha, beta) != 1:
                continue
            chain = hj_expand(alpha, beta)
            assert all(c >= 2 for c in chain)
            assert continued_fraction_value(chain) == Fraction(alpha, beta)


def test_solve_linear_examples():
    identity = RationalMatrix.from_rows([[1, 0], [0, 1]])
    assert solve_linear(identity, [Fraction(3, 2), -1]) == (Fraction(3, 2), Fraction(-1))
    assert solve_linear(RationalMatrix.from_rows([[-2]]), [-1]) == (Fraction(1, 2),)
    a2 = RationalMatrix.from_rows([[-2, 1], [1, -2]])
    assert solve_linear(a2, [0, 0]) == (Fraction(0), Fraction(0))


def test_solve_linear_random_exact():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 5)
        matrix = RationalMatrix.from_rows(
            [
                [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]
                for _ in range(n)
            ]
        )
        rhs = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]
        try:
            solution = solve_linear(matrix, rhs)
        except SingularMatrixError:
            continue
        for i in range(n):
            assert sum(matrix.at(i, j) * solution[j] for j in range(n)) == rhs[i]


def test_solve_linear_singular_reports_rank():
    singular = RationalMatrix.from_rows([[1, 2], [2, 4]])
    with pytest.raises(SingularMatrixError) as info:
        solve_linear(singular, [1, 2])
    assert info.value.rank == 1


def test_is_negative_definite_examples():
    assert is_negative_definite(RationalMatrix.from_rows([[-2]]))
    assert is_negative_definite(RationalMatrix.from_rows([[-2, 1], [1, -2]]))
    assert not is_negative_definite(RationalMatrix.from_rows([[0]]))
    assert not is_negative_definite(RationalMatrix.from_rows([[2]]))
    # affine A_1: determinant zero
    assert not is_negative_definite(RationalMatrix.from_rows([[-2, 2], [2, -2]]))


def test_is_negative_definite_rejects_non_symmetric():
    with pytest.raises(ValueError):
        is_negative_definite(RationalMatrix.from_rows([[-2, 1], [0, -2]]))


def test_negative_definite_matches_principal_minors_on_random_symmetric():
    def det(rows):
        rows = [row[:] for row in rows]
        n = len(rows)
        result = Fraction(1)
        for k in range(n):
            pivot = next((r for r in range(k, n) if rows[r][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != k:
                rows[k], rows[pivot] = rows[pivot], rows[k]
                result = -result
            result *= rows[k][k]
            for r in range(k + 1, n):
                factor = rows[r][k] / rows[k][k]
                for c in range(k, n):
                    rows[r][c] -= factor * rows[k][c]
        return result

    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(1, 4)
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = Fraction(rng.randint(-4, 4))
            for j in range(i + 1, n):
                value = Fraction(rng.randint(-3, 3))
                rows[i][j] = value
                rows[j][i] = value
        expected = all(
            (-1) ** k * det([row[:k] for row in rows[:k]]) > 0
            for k in range(1, n + 1)
        )
        assert is_negative_definite(RationalMatrix.from_rows(rows)) == expected


def test_rational_field_axioms_on_random_triples():
    rng = random.Random(3)
    for _ in range(200):
        a, b, c = (
            Fraction(rng.randint(-50, 50), rng.randint(1, 30)) for _ in range(3)
        )
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
