import numpy as np
from mpcode import utils
from mpcode.conf import Conf
from mpcode.core.const import Metric
from mpcode.modules import MpCodeError, ErrorMsg
from mpcode.modules import InitialVector, Multipermutation, CostMatrix, OracleResult
from mpcode.services.codes import min_distance

logger = utils.get_logger()


def _guard(book):
    if len(book) == 0:
        raise MpCodeError(ErrorMsg.EmptyCodebook)
    if len(book) > Conf.ORACLE_LIMIT:
        raise MpCodeError(ErrorMsg.OracleTooLarge, size=len(book), limit=Conf.ORACLE_LIMIT)


def _vectors(book, t):
    if t is None:
        return book.vectors()
    return InitialVector(t).array[book.symbol_array() - 1]


def _best(book, values):
    """smallest value, ties within ORACLE_TIE_TOL go to the first (lexicographic) codeword"""
    low = float(values.min())
    tied = np.flatnonzero(values <= low + Conf.ORACLE_TIE_TOL)
    k = int(tied[0])
    best = Multipermutation(book[k].symbols, book.spec.r)
    return OracleResult(best, float(values[k]), len(tied), index=k)


def ml_decode_exhaustive(book, gamma, t=None):
    """argmin over the codebook of <Gamma(y), X>"""
    _guard(book)
    if not isinstance(gamma, CostMatrix):
        gamma = CostMatrix(gamma)

    if gamma.shape != (book.spec.m, book.spec.n):
        raise MpCodeError(ErrorMsg.ShapeMismatch,
                          expected="{}x{}".format(book.spec.m, book.spec.n),
                          actual="x".join(map(str, gamma.shape)))

    rows = book.symbol_array() - 1
    values = gamma.gamma[rows, np.arange(book.spec.n)].sum(axis=1)
    return _best(book, values)


def chebyshev_decode_exhaustive(book, y, t=None):
    """argmin over the codebook of d_inf(t X, y)"""
    _guard(book)
    y = np.asarray(y, dtype=float)
    if y.shape != (book.spec.n,):
        raise MpCodeError(ErrorMsg.LengthMismatch, expected=book.spec.n, actual=int(y.size))

    values = np.abs(_vectors(book, t) - y[None, :]).max(axis=1)
    return _best(book, values)


def _distances(received, vectors, metric):
    # received: (p, n), vectors: (k, n) -> (p, k)
    diff = received[:, None, :] - vectors[None, :, :]
    if metric == Metric.HAMMING:
        return np.count_nonzero(diff != 0, axis=2)
    return np.abs(diff).max(axis=2)


def _worst_case_received(vectors, k, radius, metric):
    """for every other codeword, a word within `radius` of codeword k pushed toward it"""
    u = vectors[k]
    others = np.delete(vectors, k, axis=0)
    if metric == Metric.CHEBYSHEV:
        return u + np.clip(others - u, -radius, radius)

    received = np.repeat(u[None, :], len(others), axis=0)
    for row, target in enumerate(others):
        spots = np.flatnonzero(target != u)[:int(radius)]
        received[row, spots] = target[spots]
    return received


def error_correction_radius_check(book, t, metric, claimed_min_distance):
    """
    True iff the minimum distance equals the claim and every worst-case
    word within floor((d - 1) / 2) of a codeword decodes back to it alone.
    """
    if len(book) < 2:
        raise MpCodeError(ErrorMsg.CodebookTooSmall, size=len(book))
    if metric not in (Metric.HAMMING, Metric.CHEBYSHEV):
        raise MpCodeError(ErrorMsg.SpecFileInvalid, reason="radius check metric", metric=str(metric))
    _guard(book)

    d = min_distance(book, metric, t)
    if abs(float(d) - float(claimed_min_distance)) > Conf.ORACLE_TIE_TOL:
        logger.info("claimed distance {} but code has {}".format(claimed_min_distance, d))
        return False

    radius = int(np.floor((d - 1) / 2))
    if radius < 0:
        return False

    vectors = _vectors(book, t)
    for k in range(len(book)):
        received = _worst_case_received(vectors, k, radius, metric)
        dist = _distances(received, vectors, metric)
        own = dist[:, k]
        rivals = np.delete(dist, k, axis=1)
        if np.any(rivals.min(axis=1) <= own):
            logger.info("codeword {} not recovered within radius {}".format(k, radius))
            return False

    logger.debug("radius check ok d={} radius={} size={}".format(d, radius, len(book)))
    return True
