import numpy as np
from mpcode.core.const import ChannelType
from .baseInfo import BaseInfo
from . import MpCodeError, ErrorMsg


class AwgnChannel(BaseInfo):
    channel_type = ChannelType.AWGN

    def __init__(self, sigma):
        sigma = float(sigma)
        if not np.isfinite(sigma) or sigma <= 0:
            raise MpCodeError(ErrorMsg.InvalidSigma, sigma=sigma)
        self.sigma = sigma

    @property
    def param(self):
        return self.sigma

    def sample(self, x, rng):
        from mpcode.services.channels import sample_awgn
        return sample_awgn(x, self.sigma, rng)

    def cost_matrix(self, y, t):
        from mpcode.services.channels import cost_matrix_awgn
        return cost_matrix_awgn(y, t, self.sigma)

    def _dump_json(self):
        return {"channel": self.channel_type, "sigma": self.sigma}


class QSymmetricChannel(BaseInfo):
    """
    q-ary symmetric channel over {1,...,m}.

    p = 0 is accepted for sampling only (noiseless link); costs need
    0 < p < (m-1)/m and are built from `decoder_p`.
    """
    channel_type = ChannelType.QSC

    def __init__(self, p, m, allow_zero=False):
        p = float(p)
        m = int(m)
        if m < 2:
            raise MpCodeError(ErrorMsg.InvalidCrossover, reason="alphabet needs two symbols", m=m)

        upper = (m - 1) / m
        lower_ok = p >= 0 if allow_zero else p > 0
        if not (lower_ok and p < upper):
            raise MpCodeError(ErrorMsg.InvalidCrossover, p=p, m=m)

        self.p = p
        self.m = m

    @property
    def param(self):
        return self.p

    @property
    def decoder_p(self):
        from mpcode.conf import Conf
        return max(self.p, Conf.QSC_P_FLOOR)

    def sample(self, x, rng):
        from mpcode.services.channels import sample_qsc
        return sample_qsc(x, self.p, self.m, rng)

    def cost_matrix(self, y, t=None):
        from mpcode.services.channels import cost_matrix_qsc
        return cost_matrix_qsc(y, self.decoder_p, self.m)

    def _dump_json(self):
        return {"channel": self.channel_type, "p": self.p, "m": self.m}


class CostMatrix(BaseInfo):
    """
    gamma[i, j] = -log Pr(y_j | t_i), additive constants and positive scale
    dropped; argmin over codewords of <gamma, X> is unchanged by either.
    """

    def __init__(self, gamma):
        arr = np.array(gamma, dtype=float)
        if arr.ndim != 2:
            raise MpCodeError(ErrorMsg.ShapeMismatch, reason="cost matrix must be m x n")
        if not np.all(np.isfinite(arr)):
            raise MpCodeError(ErrorMsg.ShapeMismatch, reason="cost matrix has non finite entries")

        arr.setflags(write=False)
        self.gamma = arr

    @property
    def shape(self):
        return self.gamma.shape

    def vec(self):
        return self.gamma.reshape(-1, order="F")

    def score(self, X):
        """Gamma(y) vec(X)"""
        arr = X.X if hasattr(X, "X") else X.Z if hasattr(X, "Z") else np.asarray(X)
        return float(np.sum(self.gamma * arr))

    def _dump_json(self):
        return self.gamma.tolist()
