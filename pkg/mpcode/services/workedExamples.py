"""Golden checks for the worked examples: matrices, distances, code sizes and the Chebyshev decode."""
import numpy as np
from mpcode import utils
from mpcode.conf import Conf
from mpcode.core.const import Metric
from mpcode.modules import MpCodeError, PermutationMatrix
from mpcode.services import mpcore, codes, lpdec, oracle

logger = utils.get_logger()

WORD_R = (2, 3, 2, 3)
WORD_X = (2, 1, 4, 1, 2, 3, 4, 4, 2, 3)
WORD_MATRIX = [
    [0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 1, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, 1, 1, 0, 0],
]

REPEATED_S = (1, 1, 2, 2)
BLOCK_SWAP = [
    [0, 1, 0, 0],
    [1, 0, 0, 0],
    [0, 0, 0, 1],
    [0, 0, 1, 0],
]

DERANGEMENTS_222 = {
    (3, 3, 1, 1, 2, 2), (2, 2, 3, 3, 1, 1), (2, 3, 1, 3, 2, 1),
    (2, 3, 1, 3, 1, 2), (2, 3, 3, 1, 2, 1), (2, 3, 3, 1, 1, 2),
    (3, 2, 1, 3, 2, 1), (3, 2, 1, 3, 1, 2), (3, 2, 3, 1, 2, 1),
    (3, 2, 3, 1, 1, 2),
}

SHIEH_X = (1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6)
SHIEH_Y = (2, 1, 4, 3, 6, 5, 2, 1, 4, 3, 6, 5)


class WorkedExamples(object):
    def __init__(self, eps_int=None):
        self.eps_int = Conf.EPS_INT if eps_int is None else eps_int
        self._shieh = None
        self._decode = None
        self.results = []

    @property
    def shieh_book(self):
        if self._shieh is None:
            self._shieh = codes.enumerate_codebook(codes.shieh_spec(2, 6, 3))
        return self._shieh

    @property
    def chebyshev_decode(self):
        if self._decode is None:
            self._decode = lpdec.decode_chebyshev(codes.shieh_spec(2, 6, 3), SHIEH_Y)
        return self._decode

    def check_word_to_matrix(self):
        X = mpcore.matrix_from_multipermutation(WORD_X, WORD_R)
        return X.X.tolist() == WORD_MATRIX and tuple(X.X.sum(axis=1)) == WORD_R

    def check_matrix_to_word(self):
        X = mpcore.matrix_from_multipermutation(WORD_X, WORD_R)
        return tuple(mpcore.vector_from_matrix(X, (1, 2, 3, 4))) == WORD_X

    def check_permutation_distances(self):
        P1 = PermutationMatrix(np.eye(4, dtype=int))
        P2 = PermutationMatrix(BLOCK_SWAP)
        s = np.array(REPEATED_S)
        return (mpcore.hamming_distance_matrices(P1, P2) == 8
                and mpcore.trace_distance(P1, P2) == 8
                and mpcore.hamming_distance_vectors(s @ P1.P, s @ P2.P) == 0)

    def check_repeated_symbols_matrix(self):
        X = mpcore.matrix_from_multipermutation(REPEATED_S, (2, 2))
        return (X.X.tolist() == [[1, 1, 0, 0], [0, 0, 1, 1]]
                and tuple(mpcore.vector_from_matrix(X, (1, 2))) == REPEATED_S)

    def check_derangement_listing(self):
        book = codes.enumerate_codebook(codes.derangement_spec((2, 2, 2), (1, 2, 3)))
        return {X.symbols for X in book} == DERANGEMENTS_222 and len(book) == 10

    def check_shieh_cardinality(self):
        return len(self.shieh_book) == codes.shieh_cardinality(2, 6, 3) == 216

    def check_shieh_min_distance(self):
        return codes.min_distance(self.shieh_book, Metric.CHEBYSHEV) == 3

    def check_shifted_word_distances(self):
        return (mpcore.chebyshev_distance(SHIEH_X, SHIEH_Y) == 1
                and mpcore.hamming_distance_vectors(SHIEH_X, SHIEH_Y) == 12)

    def check_chebyshev_decode(self):
        result = self.chebyshev_decode
        return abs(result.delta - 1.0) <= 1e-6 and result.decoded.x == SHIEH_X

    def check_chebyshev_fractional(self):
        return not lpdec.certificate_check(self.chebyshev_decode.relaxed, self.eps_int)

    def check_chebyshev_radius(self):
        return oracle.error_correction_radius_check(self.shieh_book, (1, 2, 3, 4, 5, 6), Metric.CHEBYSHEV, 3)

    def checks(self):
        return [
            ("word_to_matrix", self.check_word_to_matrix),
            ("matrix_to_word", self.check_matrix_to_word),
            ("permutation_distances", self.check_permutation_distances),
            ("repeated_symbols_matrix", self.check_repeated_symbols_matrix),
            ("derangement_listing", self.check_derangement_listing),
            ("shieh_cardinality", self.check_shieh_cardinality),
            ("shieh_min_distance", self.check_shieh_min_distance),
            ("shifted_word_distances", self.check_shifted_word_distances),
            ("chebyshev_decode", self.check_chebyshev_decode),
            ("chebyshev_fractional", self.check_chebyshev_fractional),
            ("chebyshev_radius", self.check_chebyshev_radius),
        ]

    def run(self):
        self.results = []
        for name, fun in self.checks():
            try:
                ok = bool(fun())
            except MpCodeError as e:
                logger.error("{} raised {}".format(name, e.message))
                ok = False

            if ok:
                logger.success("PASS {}".format(name))
            else:
                logger.error("FAIL {}".format(name))
            self.results.append((name, ok))

        return self.results


def run_worked_examples(eps_int=None):
    return WorkedExamples(eps_int=eps_int).run()
