import numpy as np
from .baseInfo import BaseInfo
from . import MpCodeError, ErrorMsg


def _frozen(array, dtype):
    arr = np.array(array, dtype=dtype)
    arr.setflags(write=False)
    return arr


class MultiplicityVector(BaseInfo):
    """r = (r_1,...,r_m); symbol i occurs r_i times, n = sum(r)"""

    def __init__(self, r):
        if isinstance(r, MultiplicityVector):
            r = r.r

        try:
            raw = list(r)
            items = [int(v) for v in raw]
        except (TypeError, ValueError):
            raise MpCodeError(ErrorMsg.InvalidMultiplicity, r=str(r))

        if not items or any(v < 1 for v in items):
            raise MpCodeError(ErrorMsg.InvalidMultiplicity, r=str(raw))

        if any(v != w for v, w in zip(raw, items)):
            raise MpCodeError(ErrorMsg.InvalidMultiplicity, r=str(raw))

        self.r = tuple(items)

    @property
    def m(self):
        return len(self.r)

    @property
    def n(self):
        return sum(self.r)

    def __len__(self):
        return len(self.r)

    def __iter__(self):
        return iter(self.r)

    def __getitem__(self, item):
        return self.r[item]

    def __eq__(self, other):
        if isinstance(other, MultiplicityVector):
            return self.r == other.r
        return False

    def __hash__(self):
        return hash(self.r)

    def _dump_json(self):
        return list(self.r)


class InitialVector(BaseInfo):
    """m pairwise distinct modulation levels"""

    def __init__(self, t):
        if isinstance(t, InitialVector):
            t = t.t

        values = tuple(float(v) for v in t)
        if not values:
            raise MpCodeError(ErrorMsg.LengthMismatch, t="empty")

        if len(set(values)) != len(values):
            raise MpCodeError(ErrorMsg.InitialVectorNotDistinct, t=str(list(values)))

        self.t = values

    @classmethod
    def natural(cls, m):
        """t = (1,...,m)"""
        return cls(range(1, m + 1))

    @property
    def m(self):
        return len(self.t)

    @property
    def array(self):
        return np.array(self.t, dtype=float)

    def __len__(self):
        return len(self.t)

    def __iter__(self):
        return iter(self.t)

    def __eq__(self, other):
        if isinstance(other, InitialVector):
            return self.t == other.t
        return False

    def __hash__(self):
        return hash(self.t)

    def _dump_json(self):
        return list(self.t)


class IndexSets(BaseInfo):
    """I_i = {sum_{l<i} r_l + 1, ..., sum_{l<=i} r_l}, 1-based"""

    def __init__(self, r):
        self.r = MultiplicityVector(r)
        self.sets = []
        start = 1
        for size in self.r:
            self.sets.append(tuple(range(start, start + size)))
            start += size

    def __len__(self):
        return len(self.sets)

    def __getitem__(self, i):
        return self.sets[i]

    def __iter__(self):
        return iter(self.sets)

    def zero_based(self, i):
        """positions of I_{i+1} as 0-based column indices"""
        return range(self.sets[i][0] - 1, self.sets[i][-1])

    def owner(self):
        """row of every position k, 0-based"""
        rows = []
        for i, size in enumerate(self.r):
            rows.extend([i] * size)
        return np.array(rows, dtype=int)

    def _dump_json(self):
        return [list(s) for s in self.sets]


class Multipermutation(BaseInfo):
    """
    Symbol string x in {1,...,m}^n.

    With check=False a word whose symbol counts differ from r is kept and
    flagged through `valid`; rounding output is carried this way.
    """

    def __init__(self, x, r, check=True):
        self.r = MultiplicityVector(r)
        try:
            symbols = tuple(int(v) for v in x)
        except (TypeError, ValueError):
            raise MpCodeError(ErrorMsg.SymbolOutOfRange, x=str(x))

        if len(symbols) != self.r.n:
            raise MpCodeError(ErrorMsg.LengthMismatch, expected=self.r.n, actual=len(symbols))

        for s in symbols:
            if s < 1 or s > self.r.m:
                raise MpCodeError(ErrorMsg.SymbolOutOfRange, symbol=s, m=self.r.m)

        self.x = symbols
        counts = np.bincount(np.array(symbols) - 1, minlength=self.r.m)
        self.valid = tuple(int(c) for c in counts) == self.r.r

        if check and not self.valid:
            raise MpCodeError(ErrorMsg.MultiplicityMismatch,
                              x=str(list(symbols)), r=str(list(self.r.r)))

    @property
    def n(self):
        return len(self.x)

    @property
    def array(self):
        return np.array(self.x, dtype=int)

    def __len__(self):
        return len(self.x)

    def __iter__(self):
        return iter(self.x)

    def __getitem__(self, item):
        return self.x[item]

    def __eq__(self, other):
        if isinstance(other, Multipermutation):
            return self.x == other.x and self.r == other.r
        if isinstance(other, (tuple, list)):
            return self.x == tuple(other)
        return False

    def __lt__(self, other):
        return self.x < other.x

    def __hash__(self):
        return hash((self.x, self.r.r))

    def _dump_json(self):
        return list(self.x)


class MultipermutationMatrix(BaseInfo):
    """Binary m x n matrix, unit column sums, row i sums to r_i. Read only."""

    def __init__(self, X, r=None):
        arr = np.asarray(X)
        if arr.ndim != 2:
            raise MpCodeError(ErrorMsg.InvalidMatrix, reason="not two dimensional")

        if not np.all((arr == 0) | (arr == 1)):
            raise MpCodeError(ErrorMsg.InvalidMatrix, reason="entries outside {0,1}")

        arr = _frozen(arr, np.int8)
        if not np.all(arr.sum(axis=0) == 1):
            raise MpCodeError(ErrorMsg.InvalidMatrix, reason="column sum differs from 1")

        rows = tuple(int(v) for v in arr.sum(axis=1))
        if r is None:
            r = MultiplicityVector(rows)
        else:
            r = MultiplicityVector(r)
            if arr.shape != (r.m, r.n):
                raise MpCodeError(ErrorMsg.ShapeMismatch,
                                  expected="{}x{}".format(r.m, r.n),
                                  actual="{}x{}".format(*arr.shape))
            if rows != r.r:
                raise MpCodeError(ErrorMsg.InvalidMatrix, reason="row sums differ from r")

        self.X = arr
        self.r = r

    @property
    def shape(self):
        return self.X.shape

    @property
    def m(self):
        return self.X.shape[0]

    @property
    def n(self):
        return self.X.shape[1]

    @property
    def symbols(self):
        """1-based row of the one in every column"""
        return tuple(int(i) + 1 for i in np.argmax(self.X, axis=0))

    def vec(self):
        """column-major stacking, entry (i, j) at j*m + i"""
        return self.X.reshape(-1, order="F")

    def __eq__(self, other):
        if isinstance(other, MultipermutationMatrix):
            return self.X.shape == other.X.shape and bool(np.array_equal(self.X, other.X))
        return False

    def __lt__(self, other):
        return self.symbols < other.symbols

    def __hash__(self):
        return hash((self.X.shape, self.X.tobytes()))

    def _dump_json(self):
        return self.X.tolist()


class PermutationMatrix(BaseInfo):
    """n x n binary matrix with exactly one 1 per row and column"""

    def __init__(self, P):
        arr = np.asarray(P)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise MpCodeError(ErrorMsg.InvalidMatrix, reason="permutation matrix must be square")

        if not np.all((arr == 0) | (arr == 1)):
            raise MpCodeError(ErrorMsg.InvalidMatrix, reason="entries outside {0,1}")

        arr = _frozen(arr, np.int8)
        if not (np.all(arr.sum(axis=0) == 1) and np.all(arr.sum(axis=1) == 1)):
            raise MpCodeError(ErrorMsg.InvalidMatrix, reason="not a permutation")

        self.P = arr

    @classmethod
    def from_columns(cls, perm):
        """P[perm[j], j] = 1 for 0-based perm"""
        n = len(perm)
        arr = np.zeros((n, n), dtype=np.int8)
        arr[list(perm), list(range(n))] = 1
        return cls(arr)

    @property
    def n(self):
        return self.P.shape[0]

    @property
    def columns(self):
        """0-based row of the one in every column"""
        return tuple(int(i) for i in np.argmax(self.P, axis=0))

    def __eq__(self, other):
        if isinstance(other, PermutationMatrix):
            return bool(np.array_equal(self.P, other.P))
        return False

    def __hash__(self):
        return hash(self.P.tobytes())

    def _dump_json(self):
        return self.P.tolist()
