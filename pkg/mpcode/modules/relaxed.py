import numpy as np
from mpcode.conf import Conf
from .baseInfo import BaseInfo
from .multiperm import MultiplicityVector, MultipermutationMatrix, PermutationMatrix
from . import MpCodeError, ErrorMsg


class RelaxedMatrix(BaseInfo):
    """
    Real m x n point of the multipermutation polytope.

    Only the shape is checked here; polytope.membership_check tells
    whether conditions (a) to (c) hold.
    """

    def __init__(self, Z, r):
        self.r = MultiplicityVector(r)
        arr = np.array(Z, dtype=float)
        if arr.shape != (self.r.m, self.r.n):
            raise MpCodeError(ErrorMsg.ShapeMismatch,
                              expected="{}x{}".format(self.r.m, self.r.n),
                              actual="x".join(str(v) for v in arr.shape))

        if not np.all(np.isfinite(arr)):
            raise MpCodeError(ErrorMsg.InfeasibleRelaxed, reason="non finite entry")

        arr.setflags(write=False)
        self.Z = arr

    @classmethod
    def from_matrix(cls, X):
        return cls(X.X.astype(float), X.r)

    @property
    def shape(self):
        return self.Z.shape

    def vec(self):
        return self.Z.reshape(-1, order="F")

    def _dump_json(self):
        return self.Z.tolist()


class DoublyStochasticMatrix(BaseInfo):
    def __init__(self, Q, eps=None):
        if eps is None:
            eps = Conf.EPS_FEAS

        arr = np.array(Q, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise MpCodeError(ErrorMsg.ShapeMismatch, reason="doubly stochastic matrix must be square")

        residual = max(float(np.max(np.abs(arr.sum(axis=0) - 1))),
                       float(np.max(np.abs(arr.sum(axis=1) - 1))),
                       float(max(0.0, -arr.min())))
        if residual > eps:
            raise MpCodeError(ErrorMsg.NoPerfectMatching,
                              reason="not doubly stochastic", residual=residual)

        arr.setflags(write=False)
        self.Q = arr

    @property
    def n(self):
        return self.Q.shape[0]

    def _dump_json(self):
        return self.Q.tolist()


class ConvexCombination(BaseInfo):
    """(weight, matrix) terms; weights positive and summing to 1"""

    def __init__(self, terms, eps=None):
        if eps is None:
            eps = Conf.EPS_FEAS

        terms = [(float(w), mat) for w, mat in terms]
        if not terms:
            raise MpCodeError(ErrorMsg.InfeasibleRelaxed, reason="empty convex combination")

        for w, mat in terms:
            if w <= 0:
                raise MpCodeError(ErrorMsg.InfeasibleRelaxed, reason="non positive weight", weight=w)
            if not isinstance(mat, (MultipermutationMatrix, PermutationMatrix)):
                raise MpCodeError(ErrorMsg.InvalidMatrix, reason="term is not a vertex matrix")

        total = sum(w for w, _ in terms)
        if abs(total - 1.0) > eps:
            raise MpCodeError(ErrorMsg.InfeasibleRelaxed, reason="weights do not sum to 1", total=total)

        self.terms = terms

    @property
    def weights(self):
        return [w for w, _ in self.terms]

    @property
    def matrices(self):
        return [mat for _, mat in self.terms]

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def _dump_json(self):
        return [{"weight": w, "matrix": mat.dump_json(flag=False)} for w, mat in self.terms]


class MembershipReport(BaseInfo):
    """Outcome of a polytope membership test; truthy iff every condition holds."""

    def __init__(self, violations):
        # [(condition, worst residual)], condition in "a", "b", "c"
        self.violations = list(violations)

    @property
    def ok(self):
        return not self.violations

    @property
    def conditions(self):
        return [cond for cond, _ in self.violations]

    def __bool__(self):
        return self.ok

    def _dump_json(self):
        return {
            "ok": self.ok,
            "violations": [{"condition": c, "residual": v} for c, v in self.violations],
        }
