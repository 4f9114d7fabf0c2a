import numpy as np
from mpcode.core.const import Relation, LpStatus
from .baseInfo import BaseInfo
from . import MpCodeError, ErrorMsg


class LinearProgram(BaseInfo):
    """minimize objective . x subject to rows and per-variable bounds"""

    def __init__(self, num_vars, objective=None, rows=None, bounds=None):
        self.num_vars = int(num_vars)
        if objective is None:
            objective = np.zeros(self.num_vars)
        self.objective = np.array(objective, dtype=float)
        if self.objective.shape != (self.num_vars,):
            raise MpCodeError(ErrorMsg.LengthMismatch, reason="objective length",
                              expected=self.num_vars, actual=self.objective.size)

        if bounds is None:
            bounds = [(0.0, 1.0)] * self.num_vars
        if len(bounds) != self.num_vars:
            raise MpCodeError(ErrorMsg.LengthMismatch, reason="bounds length",
                              expected=self.num_vars, actual=len(bounds))
        self.bounds = list(bounds)

        self.rows = []
        for coef, relation, rhs in rows or []:
            self.add_row(coef, relation, rhs)

    def add_row(self, coef, relation, rhs):
        coef = {int(k): float(v) for k, v in dict(coef).items() if v != 0}
        for k in coef:
            if k < 0 or k >= self.num_vars:
                raise MpCodeError(ErrorMsg.VariableOutOfRange, var=k, num_vars=self.num_vars)

        if relation not in (Relation.LE, Relation.EQ):
            raise MpCodeError(ErrorMsg.LpFailed, reason="unknown relation", relation=str(relation))

        self.rows.append((coef, relation, float(rhs)))

    def add_variable(self, lo=None, hi=None, cost=0.0):
        """append one column; returns its index"""
        self.num_vars += 1
        self.objective = np.append(self.objective, float(cost))
        self.bounds.append((lo, hi))
        return self.num_vars - 1

    def copy(self):
        lp = LinearProgram(self.num_vars, self.objective.copy(), bounds=list(self.bounds))
        lp.rows = [(dict(coef), rel, rhs) for coef, rel, rhs in self.rows]
        return lp

    def dense(self, relation):
        """(A, b) of every row with the given relation"""
        rows = [(coef, rhs) for coef, rel, rhs in self.rows if rel == relation]
        if not rows:
            return None, None

        A = np.zeros((len(rows), self.num_vars))
        b = np.zeros(len(rows))
        for k, (coef, rhs) in enumerate(rows):
            for var, value in coef.items():
                A[k, var] = value
            b[k] = rhs
        return A, b

    def max_violation(self, values):
        """worst row or bound residual at `values`"""
        x = np.asarray(values, dtype=float)
        worst = 0.0
        for coef, rel, rhs in self.rows:
            lhs = sum(v * x[k] for k, v in coef.items())
            gap = lhs - rhs if rel == Relation.LE else abs(lhs - rhs)
            worst = max(worst, gap)

        for k, (lo, hi) in enumerate(self.bounds):
            if lo is not None:
                worst = max(worst, lo - x[k])
            if hi is not None:
                worst = max(worst, x[k] - hi)
        return worst

    def _dump_json(self):
        return {
            "num_vars": self.num_vars,
            "num_rows": len(self.rows),
            "objective": self.objective.tolist(),
        }


class LpSolution(BaseInfo):
    def __init__(self, status, values=None, objective_value=None, message=""):
        self.status = status
        self.values = None if values is None else np.array(values, dtype=float)
        self.objective_value = None if objective_value is None else float(objective_value)
        self.message = message

    @property
    def optimal(self):
        return self.status == LpStatus.OPTIMAL

    def _dump_json(self):
        return {
            "status": self.status,
            "objective": self.objective_value,
            "values": None if self.values is None else self.values.tolist(),
        }


class DecodeResult(BaseInfo):
    """
    relaxed: LP optimum as a RelaxedMatrix
    certificate: relaxed is 0/1 within the integrality tolerance
    decoded: Multipermutation, may carry valid=False after rounding
    delta: optimal Chebyshev radius, Chebyshev decoder only
    """

    def __init__(self, relaxed, objective, certificate, decoded, delta=None):
        self.relaxed = relaxed
        self.objective = float(objective)
        self.certificate = bool(certificate)
        self.decoded = decoded
        self.delta = None if delta is None else float(delta)

    @property
    def valid(self):
        return self.decoded.valid

    def _dump_json(self):
        item = {
            "objective": self.objective,
            "certified": self.certificate,
            "valid": self.valid,
            "decoded": list(self.decoded.x),
        }
        if self.delta is not None:
            item["delta"] = self.delta
        return item


class OracleResult(BaseInfo):
    def __init__(self, best, value, tie_set_size, index=None):
        self.best = best
        self.value = float(value)
        self.tie_set_size = int(tie_set_size)
        self.index = index

    def _dump_json(self):
        return {
            "best": list(self.best.x),
            "value": self.value,
            "tie_set_size": self.tie_set_size,
            "index": self.index,
        }
