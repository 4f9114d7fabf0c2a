import numpy as np
from scipy.stats import norm
from mpcode import utils
from mpcode.modules import MpCodeError, ErrorMsg
from mpcode.modules import InitialVector, Multipermutation, MultipermutationMatrix, RelaxedMatrix
from mpcode.modules import AwgnChannel, QSymmetricChannel, CostMatrix

logger = utils.get_logger()


def sample_awgn(x, sigma, seed):
    """y = x + N(0, sigma^2) per coordinate"""
    sigma = AwgnChannel(sigma).sigma
    rng = utils.make_rng(seed)
    x = np.asarray(x, dtype=float)
    return x + rng.normal(0.0, sigma, size=x.shape)


def _symbols(x, m):
    arr = x.array if isinstance(x, Multipermutation) else np.asarray(x)
    if arr.size and (np.any(arr != np.rint(arr)) or arr.min() < 1 or arr.max() > m):
        raise MpCodeError(ErrorMsg.SymbolOutOfRange, m=m)
    return arr.astype(int)


def sample_qsc(x, p, m, seed):
    """keep each symbol w.p. 1 - p, else move it uniformly to one of the other m - 1"""
    channel = QSymmetricChannel(p, m, allow_zero=True)
    x = _symbols(x, channel.m)
    rng = utils.make_rng(seed)

    # both draws happen whatever p is, so the stream layout never depends on p
    flip = rng.random(x.shape) < channel.p
    offset = rng.integers(1, channel.m, size=x.shape)
    moved = (x - 1 + offset) % channel.m + 1
    return np.where(flip, moved, x)


def cost_matrix_awgn(y, t, sigma):
    """gamma_ij = (y_j - t_i)^2"""
    AwgnChannel(sigma)
    t = InitialVector(t)
    y = np.asarray(y, dtype=float)
    if y.ndim != 1 or not np.all(np.isfinite(y)):
        raise MpCodeError(ErrorMsg.ReceivedInvalid, reason="received word must be a finite vector")
    return CostMatrix((y[None, :] - t.array[:, None]) ** 2)


def indicator_matrix(y, m):
    """Y = [e(y_1)^T | ... | e(y_n)^T]"""
    y = _symbols(y, m)
    Y = np.zeros((m, y.size), dtype=np.int8)
    Y[y - 1, np.arange(y.size)] = 1
    return Y


def cost_matrix_qsc(y, p, m):
    """gamma_ij = -log(1 - p) if y_j = i else -log(p / (m - 1))"""
    channel = QSymmetricChannel(p, m)
    Y = indicator_matrix(y, channel.m)
    hit = -np.log1p(-channel.p)
    miss = -np.log(channel.p / (channel.m - 1))
    return CostMatrix(np.where(Y == 1, hit, miss))


def correlation_score(X, y, t):
    """tr((y^T t) X) = <y, t X>"""
    t = InitialVector(t)
    return float(np.asarray(y, dtype=float) @ (t.array @ X.X))


def neg_log_likelihood(channel, y, x):
    """
    Exact -sum_j log Pr(y_j | x_j) with every constant kept. For AWGN x is
    the transmitted vector t X, for the q-SC it is the symbol word.
    """
    if isinstance(channel, AwgnChannel):
        y = np.asarray(y, dtype=float)
        x = np.asarray(x, dtype=float)
        return float(-np.sum(norm.logpdf(y, loc=x, scale=channel.sigma)))

    if isinstance(channel, QSymmetricChannel):
        y = _symbols(y, channel.m)
        x = _symbols(x, channel.m)
        same = np.count_nonzero(x == y)
        diff = x.size - same
        return float(-same * np.log1p(-channel.p) - diff * np.log(channel.p / (channel.m - 1)))

    raise MpCodeError(ErrorMsg.SpecFileInvalid, reason="unknown channel")


def _transmitted(X, t):
    if isinstance(X, MultipermutationMatrix):
        return t.array @ X.X
    if isinstance(X, RelaxedMatrix):
        return t.array @ X.Z
    return t.array @ np.asarray(X, dtype=float)


def pseudodistance_awgn(X, X_hat, t):
    """(||tX||^2 - tX_hat . tX) / ||tX_hat - tX||"""
    t = InitialVector(t)
    u = _transmitted(X, t)
    v = _transmitted(X_hat, t)
    gap = float(np.linalg.norm(v - u))
    if gap == 0.0:
        raise MpCodeError(ErrorMsg.PseudodistanceUndefined)
    return float((u @ u - v @ u) / gap)


def union_bound_awgn(book, X, t, sigma):
    """sum over the other codewords of Q(omega / sigma)"""
    sigma = AwgnChannel(sigma).sigma
    if X not in book:
        raise MpCodeError(ErrorMsg.CodewordNotInBook)

    total = 0.0
    for X_hat in book:
        if X_hat == X:
            continue
        total += float(norm.sf(pseudodistance_awgn(X, X_hat, t) / sigma))
    return total
