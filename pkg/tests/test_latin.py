import time

import numpy as np
import pytest

from incidence_coloring.errors import LatinSquareError
from incidence_coloring.latin import (Intercalate, _nabla_blocks, base8, circulant, decompose_even,
                                      enumerate_latin_squares, find_intercalates, format_square,
                                      has_principal_intercalate, is_latin, latin_square_no_principal,
                                      nabla, nabla_power, normalize_symbols_diag_zero, parse_square,
                                      permute_rows_constant_diagonal, search_intercalate_free)

NABLA_C3 = [
    [0, 1, 2, 3, 4, 5],
    [2, 0, 1, 5, 3, 4],
    [1, 2, 0, 4, 5, 3],
    [4, 3, 5, 0, 1, 2],
    [5, 4, 3, 2, 0, 1],
    [3, 5, 4, 1, 2, 0],
]

# Regression values from exhaustive enumeration.
LATIN_4X4_TOTAL = 576
LATIN_4X4_PER_DIAGONAL = 24


def good(a) -> bool:
    return (is_latin(a) and not np.diagonal(a).any()
            and not find_intercalates(a, principal_only=True))


class TestCirculant:
    def test_order_three(self):
        assert circulant((0, 1, 2)).tolist() == [[0, 1, 2], [2, 0, 1], [1, 2, 0]]

    def test_order_one(self):
        assert circulant((0,)).tolist() == [[0]]

    @pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
    def test_odd_has_no_principal_intercalate(self, n):
        assert not find_intercalates(circulant(range(n)), principal_only=True)


class TestNabla:
    def test_example(self):
        assert nabla(circulant((0, 1, 2))).tolist() == NABLA_C3

    @pytest.mark.parametrize("a", [circulant(range(n)) for n in (1, 3, 5, 7, 9)] + [base8()])
    def test_piecewise_matches_blocks(self, a):
        assert np.array_equal(nabla(a), _nabla_blocks(a))

    @pytest.mark.parametrize("a", [circulant(range(n)) for n in (3, 5, 7, 9)] + [base8()])
    def test_preserves_property(self, a):
        assert good(nabla(a))

    def test_power(self):
        c3 = circulant((0, 1, 2))
        assert np.array_equal(nabla_power(c3, 0), c3)
        assert nabla_power(c3, 1).tolist() == NABLA_C3
        sq = nabla_power(c3, 2)
        assert sq.shape == (12, 12) and good(sq)

    def test_rejects_non_latin(self):
        with pytest.raises(LatinSquareError):
            nabla(np.array([[0, 0], [1, 1]]))


class TestConstruction:
    def test_base8(self):
        assert good(base8())

    @pytest.mark.parametrize("n, expected", [(12, (3, 2)), (6, (3, 1)), (40, (5, 3))])
    def test_decompose_even(self, n, expected):
        assert decompose_even(n) == expected

    @pytest.mark.parametrize("n", [8, 16, 7, 0])
    def test_decompose_even_rejects(self, n):
        with pytest.raises(ValueError):
            decompose_even(n)

    def test_small_cases(self):
        assert latin_square_no_principal(3).tolist() == [[0, 1, 2], [2, 0, 1], [1, 2, 0]]
        assert np.array_equal(latin_square_no_principal(8), base8())
        assert latin_square_no_principal(1).tolist() == [[0]]

    @pytest.mark.parametrize("n", [2, 4, 0])
    def test_impossible_orders(self, n):
        with pytest.raises(LatinSquareError):
            latin_square_no_principal(n)

    def test_sweep(self):
        for n in [*range(1, 64, 2), *range(6, 65, 2)]:
            assert good(latin_square_no_principal(n)), n

    def test_order_512_is_fast(self):
        t0 = time.perf_counter()
        sq = latin_square_no_principal(512)
        assert time.perf_counter() - t0 < 1.0
        assert is_latin(sq) and not has_principal_intercalate(sq)


class TestIntercalates:
    def test_order_two(self):
        found = find_intercalates(np.array([[0, 1], [1, 0]]))
        assert found == [Intercalate((0, 1), (0, 1), (0, 1))]
        assert found[0].principal

    def test_full_scan_counts_every_subsquare_once(self):
        # the Klein group table: every pair of rows meets in two intercalates
        klein = np.array([[i ^ j for j in range(4)] for i in range(4)])
        assert len(find_intercalates(klein)) == 12

    def test_fast_principal_check_agrees(self):
        for sq in enumerate_latin_squares(4, diagonal=0):
            assert has_principal_intercalate(sq) == bool(find_intercalates(sq, principal_only=True))

    def test_every_constant_diagonal_4x4_has_principal_intercalate(self):
        count = 0
        for s in range(4):
            squares = list(enumerate_latin_squares(4, diagonal=s))
            assert len(squares) == LATIN_4X4_PER_DIAGONAL
            assert all(find_intercalates(sq, principal_only=True) for sq in squares)
            count += len(squares)
        assert count == 4 * LATIN_4X4_PER_DIAGONAL
        assert sum(1 for _ in enumerate_latin_squares(4)) == LATIN_4X4_TOTAL

    @pytest.mark.parametrize("n, exists", [(2, False), (3, True), (4, False), (5, True), (6, True), (7, True)])
    def test_intercalate_free_existence(self, n, exists):
        sq = search_intercalate_free(n)
        assert (sq is not None) == exists
        if sq is not None:
            assert is_latin(sq) and not find_intercalates(sq)


class TestNormalisation:
    def test_identity_when_diagonal_zero(self):
        c = circulant(range(5))
        assert np.array_equal(normalize_symbols_diag_zero(c), c)

    def test_swaps_diagonal_symbol(self):
        out = normalize_symbols_diag_zero(circulant((2, 0, 1)))
        assert is_latin(out) and not np.diagonal(out).any()

    def test_permute_rows_identity(self):
        c = circulant(range(5))
        assert np.array_equal(permute_rows_constant_diagonal(c, 0), c)

    def test_permute_rows_shuffled(self):
        rng = np.random.default_rng(1)
        shuffled = circulant(range(5))[rng.permutation(5)]
        out = permute_rows_constant_diagonal(shuffled, 0)
        assert is_latin(out) and not np.diagonal(out).any()
        assert not find_intercalates(out)

    def test_text_round_trip(self):
        sq = latin_square_no_principal(10)
        assert np.array_equal(parse_square(format_square(sq)), sq)

    def test_parse_errors(self):
        with pytest.raises(LatinSquareError):
            parse_square("0 1\n1")
        with pytest.raises(LatinSquareError):
            parse_square("0 a\n1 0")
