import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from mpcode.conf import Conf
from mpcode.modules import AwgnChannel, ErrorMsg, MpCodeError, QSymmetricChannel
from mpcode.services import channels, codes, mpcore


class TestSampling:
    def test_awgn_replayable(self):
        x = np.arange(1, 7, dtype=float)
        assert_array_equal(channels.sample_awgn(x, 0.7, 11), channels.sample_awgn(x, 0.7, 11))
        assert not np.array_equal(channels.sample_awgn(x, 0.7, 11), channels.sample_awgn(x, 0.7, 12))

    def test_awgn_moments(self):
        y = channels.sample_awgn(np.zeros(200000), 0.5, 3)
        assert abs(float(y.mean())) < 0.01
        assert float(y.std()) == pytest.approx(0.5, rel=0.01)

    def test_awgn_invalid_sigma(self):
        for sigma in (0, -1.0, float("nan")):
            with pytest.raises(MpCodeError) as e:
                channels.sample_awgn((1.0, 2.0), sigma, 0)
            assert e.value.code == ErrorMsg.InvalidSigma["code"]

    def test_qsc_flip_rate(self):
        x = np.tile(np.arange(1, 5), 25000)
        y = channels.sample_qsc(x, 0.2, 4, 5)
        assert float(np.mean(y != x)) == pytest.approx(0.2, abs=0.01)
        assert y.min() >= 1 and y.max() <= 4

    def test_qsc_moves_uniformly(self):
        x = np.ones(60000, dtype=int)
        y = channels.sample_qsc(x, 0.6, 4, 8)
        moved = y[y != 1]
        counts = np.bincount(moved, minlength=5)[2:]
        assert_allclose(counts / moved.size, 1 / 3, atol=0.02)

    def test_qsc_binary_swaps(self):
        x = np.array([1, 2] * 500)
        y = channels.sample_qsc(x, 0.4, 2, 1)
        changed = y != x
        assert changed.any()
        assert_array_equal(y[changed], 3 - x[changed])

    def test_qsc_noiseless(self):
        x = (1, 3, 2, 2, 3, 1)
        assert_array_equal(channels.sample_qsc(x, 0.0, 3, 9), x)

    def test_qsc_stream_layout_does_not_depend_on_p(self):
        # same seed: positions flipped at p=0.1 are flipped at p=0.3 too
        x = np.ones(5000, dtype=int)
        low = channels.sample_qsc(x, 0.1, 3, 4) != 1
        high = channels.sample_qsc(x, 0.3, 3, 4) != 1
        assert np.all(high[low])

    def test_qsc_symbol_range(self):
        with pytest.raises(MpCodeError) as e:
            channels.sample_qsc((1, 4), 0.1, 3, 0)
        assert e.value.code == ErrorMsg.SymbolOutOfRange["code"]

    def test_channel_objects(self, rng):
        ch = AwgnChannel(0.3)
        assert ch.sample(np.zeros(4), rng).shape == (4,)
        q = QSymmetricChannel(0.1, 3)
        assert q.sample(np.array([1, 2, 3]), rng).shape == (3,)


class TestCosts:
    def test_awgn(self):
        gamma = channels.cost_matrix_awgn((1.5, 0.0, 2.0), (1, 2), 1.0)
        assert_allclose(gamma.gamma, [[0.25, 1.0, 1.0], [0.25, 4.0, 0.0]])

    def test_awgn_received_invalid(self):
        with pytest.raises(MpCodeError) as e:
            channels.cost_matrix_awgn((1.0, float("nan")), (1, 2), 1.0)
        assert e.value.code == ErrorMsg.ReceivedInvalid["code"]

    def test_indicator(self):
        assert channels.indicator_matrix((1, 3, 2), 3).tolist() == [[1, 0, 0], [0, 0, 1], [0, 1, 0]]

    def test_qsc_values(self):
        gamma = channels.cost_matrix_qsc((1, 2), 0.1, 3)
        assert gamma.gamma[0, 0] == pytest.approx(0.10536, abs=1e-5)
        assert gamma.gamma[1, 0] == pytest.approx(2.99573, abs=1e-5)
        assert gamma.gamma[1, 1] == pytest.approx(0.10536, abs=1e-5)

    @pytest.mark.parametrize("p,m", [(0.0, 3), (2 / 3, 3), (0.5, 2), (0.1, 1)])
    def test_qsc_invalid(self, p, m):
        with pytest.raises(MpCodeError) as e:
            channels.cost_matrix_qsc((1,), p, m)
        assert e.value.code == ErrorMsg.InvalidCrossover["code"]

    def test_noiseless_channel_costs_use_floor(self):
        q = QSymmetricChannel(0.0, 3, allow_zero=True)
        gamma = q.cost_matrix((1, 2, 3))
        assert np.all(np.isfinite(gamma.gamma))
        assert q.decoder_p == Conf.QSC_P_FLOOR

    def test_awgn_ranking_matches_correlation(self, shieh_242_book, rng):
        t = shieh_242_book.t
        for _ in range(20):
            y = rng.normal(2.5, 1.5, size=8)
            gamma = channels.cost_matrix_awgn(y, t, 1.0)
            # ||y - tX||^2 = ||y||^2 - 2 <y, tX> + ||tX||^2 and ||tX|| is fixed on M(r)
            totals = [gamma.score(X) + 2 * channels.correlation_score(X, y, t) for X in shieh_242_book]
            assert_allclose(totals, totals[0], atol=1e-9)

    def test_qsc_ranking_matches_hamming(self, full_22_book):
        p, m = 0.2, 2
        y = (2, 1, 1, 2)
        gamma = channels.cost_matrix_qsc(y, p, m)
        hit, miss = -np.log(1 - p), -np.log(p / (m - 1))
        for X in full_22_book:
            d = mpcore.hamming_distance_vectors(X.symbols, y)
            assert gamma.score(X) == pytest.approx(4 * hit + d * (miss - hit))


class TestLikelihood:
    def test_awgn_matches_cost(self, full_22_book):
        sigma = 0.8
        ch = AwgnChannel(sigma)
        y = np.array([0.7, 2.2, 1.1, 1.6])
        gamma = channels.cost_matrix_awgn(y, (1, 2), sigma)
        offset = 4 * 0.5 * np.log(2 * np.pi * sigma ** 2)
        for X in full_22_book:
            x = np.array(X.symbols, dtype=float)
            nll = channels.neg_log_likelihood(ch, y, x)
            assert nll == pytest.approx(gamma.score(X) / (2 * sigma ** 2) + offset)

    def test_qsc_matches_cost(self, full_22_book):
        ch = QSymmetricChannel(0.15, 2)
        y = (1, 1, 2, 1)
        gamma = channels.cost_matrix_qsc(y, 0.15, 2)
        for X in full_22_book:
            assert channels.neg_log_likelihood(ch, y, X.symbols) == pytest.approx(gamma.score(X))


class TestPseudodistance:
    def setup_method(self):
        self.X = mpcore.matrix_from_multipermutation((1, 2), (1, 1))
        self.X_hat = mpcore.matrix_from_multipermutation((2, 1), (1, 1))

    def test_swap(self):
        assert channels.pseudodistance_awgn(self.X, self.X_hat, (1, 2)) == pytest.approx(1 / np.sqrt(2))

    def test_scales_with_t(self):
        base = channels.pseudodistance_awgn(self.X, self.X_hat, (1, 2))
        assert channels.pseudodistance_awgn(self.X, self.X_hat, (3, 6)) == pytest.approx(3 * base)

    def test_integral_equals_half_euclidean(self, shieh_242_book):
        t = shieh_242_book.t
        X = shieh_242_book[0]
        for X_hat in list(shieh_242_book)[1:]:
            u = t.array @ X.X
            v = t.array @ X_hat.X
            half = np.linalg.norm(u - v) / 2
            assert channels.pseudodistance_awgn(X, X_hat, t) == pytest.approx(half)

    def test_undefined(self):
        with pytest.raises(MpCodeError) as e:
            channels.pseudodistance_awgn(self.X, self.X, (1, 2))
        assert e.value.code == ErrorMsg.PseudodistanceUndefined["code"]


class TestUnionBound:
    def setup_method(self):
        self.book = codes.enumerate_codebook(codes.shieh_spec(1, 2, 1))

    def test_two_codewords(self):
        X = self.book[0]
        assert channels.union_bound_awgn(self.book, X, (1, 2), 1.0) == pytest.approx(0.23975, abs=1e-5)

    def test_limits(self):
        X = self.book[0]
        assert channels.union_bound_awgn(self.book, X, (1, 2), 1e-3) < 1e-12
        assert channels.union_bound_awgn(self.book, X, (1, 2), 1e6) == pytest.approx(0.5, abs=1e-5)

    def test_decreasing_in_sigma(self, shieh_242_book):
        X = shieh_242_book[3]
        values = [channels.union_bound_awgn(shieh_242_book, X, shieh_242_book.t, s) for s in (2.0, 1.0, 0.5)]
        assert values[0] > values[1] > values[2]

    def test_not_a_codeword(self, shieh_242_book):
        X = mpcore.matrix_from_multipermutation((1, 1, 2, 2, 3, 3, 4, 4), (2, 2, 2, 2))
        with pytest.raises(MpCodeError) as e:
            channels.union_bound_awgn(shieh_242_book, X, shieh_242_book.t, 1.0)
        assert e.value.code == ErrorMsg.CodewordNotInBook["code"]
