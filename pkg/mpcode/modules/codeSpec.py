import numpy as np
from mpcode.core.const import Relation
from .baseInfo import BaseInfo
from .multiperm import MultiplicityVector, InitialVector, MultipermutationMatrix, PermutationMatrix
from . import MpCodeError, ErrorMsg


class LinearConstraint(BaseInfo):
    """
    One row of A vec(X) <relation> b.

    coefficients maps 0-based (i, j) grid cells to integers; the JSON form
    uses 1-based (i, j) like every other external representation.
    """

    def __init__(self, coefficients, relation, rhs):
        if relation not in (Relation.LE, Relation.EQ):
            raise MpCodeError(ErrorMsg.SpecFileInvalid, reason="unknown relation", relation=str(relation))

        coef = {}
        for (i, j), value in dict(coefficients).items():
            if int(value) != value:
                raise MpCodeError(ErrorMsg.SpecFileInvalid, reason="non integer coefficient")
            if int(i) < 0 or int(j) < 0:
                raise MpCodeError(ErrorMsg.ConstraintOutOfRange, i=int(i) + 1, j=int(j) + 1)
            key = (int(i), int(j))
            coef[key] = coef.get(key, 0) + int(value)

        coef = {k: v for k, v in sorted(coef.items()) if v != 0}
        if not coef:
            raise MpCodeError(ErrorMsg.ConstraintEmpty)

        if int(rhs) != rhs:
            raise MpCodeError(ErrorMsg.SpecFileInvalid, reason="non integer rhs")

        self.coefficients = coef
        self.relation = relation
        self.rhs = int(rhs)

    @classmethod
    def from_terms(cls, terms, relation, rhs):
        """terms: [[i, j, coef], ...] with 1-based i, j"""
        coef = {}
        for i, j, value in terms:
            if int(i) < 1 or int(j) < 1:
                raise MpCodeError(ErrorMsg.ConstraintOutOfRange, i=int(i), j=int(j))
            key = (int(i) - 1, int(j) - 1)
            coef[key] = coef.get(key, 0) + value
        return cls(coef, relation, rhs)

    def in_bounds(self, m, n):
        return all(i < m and j < n for i, j in self.coefficients)

    def lhs(self, X):
        arr = X.X if isinstance(X, MultipermutationMatrix) else X.P if isinstance(X, PermutationMatrix) else X
        return sum(int(c) * int(arr[i, j]) for (i, j), c in self.coefficients.items())

    def holds(self, X):
        value = self.lhs(X)
        if self.relation == Relation.EQ:
            return value == self.rhs
        return value <= self.rhs

    def __eq__(self, other):
        if isinstance(other, LinearConstraint):
            return (self.coefficients, self.relation, self.rhs) == \
                   (other.coefficients, other.relation, other.rhs)
        return False

    def __hash__(self):
        return hash((tuple(self.coefficients.items()), self.relation, self.rhs))

    def _dump_json(self):
        return {
            "terms": [[i + 1, j + 1, c] for (i, j), c in self.coefficients.items()],
            "rel": self.relation,
            "rhs": self.rhs,
        }


class CodeSpec(BaseInfo):
    """Lambda^M(r, A, b, relation, t)"""

    def __init__(self, r, t, constraints=None, name=None):
        self.r = MultiplicityVector(r)
        self.t = InitialVector(t)
        if self.t.m != self.r.m:
            raise MpCodeError(ErrorMsg.LengthMismatch, reason="t and r differ in length",
                              expected=self.r.m, actual=self.t.m)

        self.constraints = list(constraints or [])
        for row in self.constraints:
            if not isinstance(row, LinearConstraint):
                raise MpCodeError(ErrorMsg.SpecFileInvalid, reason="constraint is not a LinearConstraint")
            if not row.in_bounds(self.r.m, self.r.n):
                raise MpCodeError(ErrorMsg.ConstraintOutOfRange, m=self.r.m, n=self.r.n)

        self.name = name

    @property
    def m(self):
        return self.r.m

    @property
    def n(self):
        return self.r.n

    def with_constraints(self, constraints, name=None):
        return CodeSpec(self.r, self.t, self.constraints + list(constraints), name=name or self.name)

    def _dump_json(self):
        item = {
            "r": list(self.r.r),
            "t": list(self.t.t),
            "constraints": [row.dump_json(flag=False) for row in self.constraints],
        }
        if self.name:
            item["name"] = self.name
        return item


class Codebook(BaseInfo):
    """Codewords of a CodeSpec in lexicographic order of their symbol strings."""

    def __init__(self, spec, codewords):
        self.spec = spec
        unique = {}
        for X in codewords:
            unique[X.symbols] = X

        self.codewords = [unique[key] for key in sorted(unique)]
        self._index = {X.symbols: k for k, X in enumerate(self.codewords)}

    @property
    def t(self):
        return self.spec.t

    def __len__(self):
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def __getitem__(self, k):
        return self.codewords[k]

    def __contains__(self, X):
        return self.find(X) is not None

    def find(self, X):
        """index of a matrix, symbol tuple or Multipermutation; None when absent"""
        if isinstance(X, MultipermutationMatrix):
            key = X.symbols
        else:
            key = tuple(int(v) for v in X)
        return self._index.get(key)

    def vectors(self):
        """k x n array of t X for every codeword"""
        t = self.spec.t.array
        if not self.codewords:
            return np.zeros((0, self.spec.n))
        return np.array([t[np.array(X.symbols) - 1] for X in self.codewords])

    def symbol_array(self):
        """k x n array of 1-based symbols"""
        if not self.codewords:
            return np.zeros((0, self.spec.n), dtype=int)
        return np.array([X.symbols for X in self.codewords], dtype=int)

    def _dump_json(self):
        return {
            "size": len(self.codewords),
            "codewords": [list(X.symbols) for X in self.codewords],
        }


class PermutationSpec(BaseInfo):
    """Lambda(A', b, relation, s): the permutation-matrix side of a CodeSpec."""

    def __init__(self, n, s, constraints=None):
        self.n = int(n)
        self.s = tuple(float(v) for v in s)
        if len(self.s) != self.n:
            raise MpCodeError(ErrorMsg.LengthMismatch, expected=self.n, actual=len(self.s))

        self.constraints = list(constraints or [])
        for row in self.constraints:
            if not row.in_bounds(self.n, self.n):
                raise MpCodeError(ErrorMsg.ConstraintOutOfRange, m=self.n, n=self.n)

    def _dump_json(self):
        return {
            "n": self.n,
            "s": list(self.s),
            "constraints": [row.dump_json(flag=False) for row in self.constraints],
        }
