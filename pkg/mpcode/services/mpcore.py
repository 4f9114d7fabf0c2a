"""
Multipermutations, their matrices and the distances between them.

Symbols are 1-based everywhere outside numpy indexing.
"""
import numpy as np
from mpcode import utils
from mpcode.modules import MpCodeError, ErrorMsg
from mpcode.modules import MultiplicityVector, InitialVector, IndexSets, Multipermutation
from mpcode.modules import MultipermutationMatrix, PermutationMatrix

logger = utils.get_logger()


def index_sets(r):
    return IndexSets(r)


def repeated_initial_vector(r, t):
    """s: entry t_i repeated r_i times"""
    r = MultiplicityVector(r)
    t = InitialVector(t)
    if t.m != r.m:
        raise MpCodeError(ErrorMsg.LengthMismatch, expected=r.m, actual=t.m)
    return tuple(float(v) for v in np.repeat(t.array, r.r))


def matrix_from_multipermutation(x, r=None):
    if not isinstance(x, Multipermutation):
        if r is None:
            symbols = [int(v) for v in x]
            if not symbols:
                raise MpCodeError(ErrorMsg.InvalidMultiplicity, x="empty")
            r = np.bincount(np.array(symbols) - 1, minlength=max(symbols)).tolist()
        x = Multipermutation(x, r)
    elif not x.valid:
        raise MpCodeError(ErrorMsg.MultiplicityMismatch, x=str(list(x.x)), r=str(list(x.r.r)))

    X = np.zeros((x.r.m, x.r.n), dtype=np.int8)
    X[x.array - 1, np.arange(x.r.n)] = 1
    return MultipermutationMatrix(X, x.r)


def vector_from_matrix(X, t):
    """t X as a float vector"""
    t = InitialVector(t)
    if t.m != X.m:
        raise MpCodeError(ErrorMsg.LengthMismatch, reason="t does not match the rows of X",
                          expected=X.m, actual=t.m)
    return t.array @ X.X


def multipermutation_from_matrix(X):
    return Multipermutation(X.symbols, X.r)


def _as_vector(v):
    if isinstance(v, Multipermutation):
        return v.array
    return np.asarray(v)


def _as_matrix(X):
    if isinstance(X, MultipermutationMatrix):
        return X.X
    if isinstance(X, PermutationMatrix):
        return X.P
    return np.asarray(X)


def _check_lengths(x, y):
    if x.shape != y.shape:
        raise MpCodeError(ErrorMsg.LengthMismatch, expected=x.size, actual=y.size)


def hamming_distance_vectors(x, y):
    x, y = _as_vector(x), _as_vector(y)
    _check_lengths(x, y)
    return int(np.count_nonzero(x != y))


def hamming_distance_matrices(X, Y):
    X, Y = _as_matrix(X), _as_matrix(Y)
    if X.shape != Y.shape:
        raise MpCodeError(ErrorMsg.ShapeMismatch,
                          expected="x".join(map(str, X.shape)), actual="x".join(map(str, Y.shape)))
    return int(np.count_nonzero(X != Y))


def trace_distance(X, Y):
    """tr(X^T (E - Y)), E the all-ones matrix shaped like X"""
    X, Y = _as_matrix(X), _as_matrix(Y)
    if X.shape != Y.shape:
        raise MpCodeError(ErrorMsg.ShapeMismatch,
                          expected="x".join(map(str, X.shape)), actual="x".join(map(str, Y.shape)))
    E = np.ones(X.shape, dtype=np.int64)
    return int(np.trace(X.astype(np.int64).T @ (E - Y.astype(np.int64))))


def chebyshev_distance(x, y):
    x, y = _as_vector(x).astype(float), _as_vector(y).astype(float)
    _check_lengths(x, y)
    if x.size == 0:
        return 0.0
    return float(np.max(np.abs(x - y)))


def euclidean_distance(x, y):
    x, y = _as_vector(x).astype(float), _as_vector(y).astype(float)
    _check_lengths(x, y)
    return float(np.linalg.norm(x - y))


def canonical_block(r):
    """m x n staircase, ones of row i on I_i"""
    r = MultiplicityVector(r)
    B = np.zeros((r.m, r.n), dtype=np.int8)
    B[IndexSets(r).owner(), np.arange(r.n)] = 1
    return B


def matrix_from_permutation(P, r):
    """X_ij = sum over k in I_i of P_kj, so that s P = t X"""
    r = MultiplicityVector(r)
    P = P if isinstance(P, PermutationMatrix) else PermutationMatrix(P)
    if P.n != r.n:
        raise MpCodeError(ErrorMsg.ShapeMismatch, expected=r.n, actual=P.n)
    return MultipermutationMatrix(canonical_block(r) @ P.P, r)


def permutation_from_matrix(X):
    """
    One permutation matrix P with matrix_from_permutation(P, r) = X: the l-th
    one of row i goes to row min(I_i) + l of P.
    """
    sets = IndexSets(X.r)
    P = np.zeros((X.n, X.n), dtype=np.int8)
    for i in range(X.m):
        cols = np.flatnonzero(X.X[i])
        rows = list(sets.zero_based(i))
        P[rows, cols] = 1
    return PermutationMatrix(P)


def all_multipermutations(r):
    """every word of M(r), lexicographic order, as 1-based symbol tuples"""
    r = MultiplicityVector(r)
    counts = list(r.r)
    word = []

    def walk():
        if len(word) == r.n:
            yield tuple(word)
            return

        for i in range(r.m):
            if counts[i] == 0:
                continue
            counts[i] -= 1
            word.append(i + 1)
            yield from walk()
            word.pop()
            counts[i] += 1

    return walk()
