import numpy as np
import pytest

from mpcode.conf import Conf
from mpcode.core.const import Metric
from mpcode.modules import Codebook, ErrorMsg, MpCodeError
from mpcode.services import channels, codes, mpcore, oracle

SHIEH_X = (1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6)
SHIEH_Y = (2, 1, 4, 3, 6, 5, 2, 1, 4, 3, 6, 5)


class TestMlDecode:
    def test_noiseless(self, shieh_242_book):
        X = shieh_242_book[7]
        gamma = channels.cost_matrix_awgn(np.array(X.symbols, dtype=float), shieh_242_book.t, 1.0)
        best = oracle.ml_decode_exhaustive(shieh_242_book, gamma)
        assert best.best.x == X.symbols
        assert best.index == 7
        assert best.value == pytest.approx(0.0)
        assert best.tie_set_size == 1

    def test_matches_brute_force(self, full_22_book, rng):
        gamma = rng.normal(size=(2, 4))
        best = oracle.ml_decode_exhaustive(full_22_book, gamma)
        scores = [float(np.sum(gamma * X.X)) for X in full_22_book]
        assert best.value == pytest.approx(min(scores))
        assert best.index == int(np.argmin(scores))

    def test_tie_goes_to_first(self, full_22_book):
        best = oracle.ml_decode_exhaustive(full_22_book, np.zeros((2, 4)))
        assert best.tie_set_size == 6
        assert best.best.x == (1, 1, 2, 2)

    def test_codeword_order_does_not_matter(self, shieh_242, shieh_242_book, rng):
        shuffled = Codebook(shieh_242, [shieh_242_book[int(k)] for k in rng.permutation(len(shieh_242_book))])
        for _ in range(10):
            y = np.array((1, 2, 3, 4, 1, 2, 3, 4), dtype=float) + rng.normal(0, 0.8, size=8)
            gamma = channels.cost_matrix_awgn(y, shieh_242.t, 0.8)
            a = oracle.ml_decode_exhaustive(shieh_242_book, gamma)
            b = oracle.ml_decode_exhaustive(shuffled, gamma)
            assert (b.best.x, b.index, b.tie_set_size) == (a.best.x, a.index, a.tie_set_size)
            assert b.value == pytest.approx(a.value)

            a = oracle.chebyshev_decode_exhaustive(shieh_242_book, y)
            b = oracle.chebyshev_decode_exhaustive(shuffled, y)
            assert (b.best.x, b.index, b.tie_set_size) == (a.best.x, a.index, a.tie_set_size)

    def test_shape_mismatch(self, full_22_book):
        with pytest.raises(MpCodeError) as e:
            oracle.ml_decode_exhaustive(full_22_book, np.zeros((3, 4)))
        assert e.value.code == ErrorMsg.ShapeMismatch["code"]

    def test_empty(self, full_22):
        with pytest.raises(MpCodeError) as e:
            oracle.ml_decode_exhaustive(Codebook(full_22, []), np.zeros((2, 4)))
        assert e.value.code == ErrorMsg.EmptyCodebook["code"]

    def test_cap(self, full_22_book, restore_conf):
        Conf.ORACLE_LIMIT = 5
        with pytest.raises(MpCodeError) as e:
            oracle.ml_decode_exhaustive(full_22_book, np.zeros((2, 4)))
        assert e.value.code == ErrorMsg.OracleTooLarge["code"]


class TestChebyshevDecode:
    def test_shifted_word(self, shieh_263_book):
        best = oracle.chebyshev_decode_exhaustive(shieh_263_book, SHIEH_Y)
        assert best.value == pytest.approx(1.0)
        assert best.best.x == SHIEH_X
        assert best.tie_set_size == 1

    def test_tie(self):
        book = codes.enumerate_codebook(codes.shieh_spec(1, 2, 1))
        best = oracle.chebyshev_decode_exhaustive(book, (1.5, 1.5))
        assert best.tie_set_size == 2
        assert best.index == 0
        assert best.value == pytest.approx(0.5)

    def test_custom_levels(self, full_22_book):
        best = oracle.chebyshev_decode_exhaustive(full_22_book, (10.0, -1.0, 10.0, -1.0), t=(-1, 10))
        assert best.best.x == (2, 1, 2, 1)
        assert best.value == pytest.approx(0.0)

    def test_length_mismatch(self, full_22_book):
        with pytest.raises(MpCodeError) as e:
            oracle.chebyshev_decode_exhaustive(full_22_book, (1.0, 2.0))
        assert e.value.code == ErrorMsg.LengthMismatch["code"]


class TestRadius:
    def test_shieh_corrects_one(self, shieh_263_book):
        assert oracle.error_correction_radius_check(shieh_263_book, (1, 2, 3, 4, 5, 6), Metric.CHEBYSHEV, 3)

    def test_wrong_claim(self, shieh_263_book):
        assert not oracle.error_correction_radius_check(shieh_263_book, (1, 2, 3, 4, 5, 6), Metric.CHEBYSHEV, 2)

    def test_hamming(self):
        book = codes.enumerate_codebook(codes.derangement_spec((2, 2, 2)))
        d = codes.min_distance(book, Metric.HAMMING)
        assert oracle.error_correction_radius_check(book, (1, 2, 3), Metric.HAMMING, d)

    def test_spread_levels(self, shieh_242_book):
        t = (1, 2, 10, 20)
        d = codes.min_distance(shieh_242_book, Metric.CHEBYSHEV, t)
        assert d == 9
        assert oracle.error_correction_radius_check(shieh_242_book, t, Metric.CHEBYSHEV, d)

    def test_radius_words_decode_back(self, shieh_263_book, rng):
        t = (1, 2, 3, 4, 5, 6)
        for _ in range(20):
            X = shieh_263_book[int(rng.integers(len(shieh_263_book)))]
            y = np.array(X.symbols, dtype=float) + rng.uniform(-1.0, 1.0, size=12)
            assert mpcore.chebyshev_distance(X.symbols, y) <= 1
            assert oracle.chebyshev_decode_exhaustive(shieh_263_book, y, t).best.x == X.symbols

    def test_too_small(self):
        book = codes.enumerate_codebook(codes.shieh_spec(1, 2, 2))
        with pytest.raises(MpCodeError) as e:
            oracle.error_correction_radius_check(book, (1, 2), Metric.CHEBYSHEV, 1)
        assert e.value.code == ErrorMsg.CodebookTooSmall["code"]

    def test_unsupported_metric(self, full_22_book):
        with pytest.raises(MpCodeError):
            oracle.error_correction_radius_check(full_22_book, (1, 2), Metric.EUCLIDEAN, 1)
