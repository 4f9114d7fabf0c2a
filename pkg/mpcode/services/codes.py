import itertools
from math import factorial
import numpy as np
from scipy.spatial.distance import pdist
from mpcode import utils
from mpcode.conf import Conf
from mpcode.core.const import Relation, Metric, BuiltinSpec
from mpcode.modules import MpCodeError, ErrorMsg
from mpcode.modules import MultiplicityVector, InitialVector, IndexSets, MultipermutationMatrix
from mpcode.modules import PermutationMatrix, LinearConstraint, CodeSpec, Codebook, PermutationSpec
from mpcode.services.mpcore import all_multipermutations, matrix_from_multipermutation
from mpcode.services.mpcore import repeated_initial_vector

logger = utils.get_logger()


def satisfies(X, spec):
    if X.shape != (spec.m, spec.n):
        raise MpCodeError(ErrorMsg.ShapeMismatch,
                          expected="{}x{}".format(spec.m, spec.n), actual="x".join(map(str, X.shape)))
    return all(row.holds(X) for row in spec.constraints)


def derangement_spec(r, t=None):
    """symbol i never sits on I_i"""
    r = MultiplicityVector(r)
    if t is None:
        t = InitialVector.natural(r.m)

    sets = IndexSets(r)
    rows = []
    for i in range(r.m):
        rows.append(LinearConstraint({(i, j): 1 for j in sets.zero_based(i)}, Relation.EQ, 0))

    return CodeSpec(r, t, rows, name=BuiltinSpec.DERANGEMENT)


def _check_divisor(r, m, d):
    if int(r) < 1 or int(m) < 1 or int(d) < 1:
        raise MpCodeError(ErrorMsg.InvalidMultiplicity, r=r, m=m, d=d)
    if int(m) % int(d) != 0:
        raise MpCodeError(ErrorMsg.DivisorInvalid, m=m, d=d)


def shieh_spec(r, m, d, t=None):
    """
    C(r, m, d): r copies of each of m symbols, position j only carries
    symbols i with i = j mod d. Every other cell is pinned by X_ij = 0.
    """
    _check_divisor(r, m, d)
    r, m, d = int(r), int(m), int(d)
    if t is None:
        t = InitialVector.natural(m)

    n = r * m
    rows = []
    for j in range(1, n + 1):
        for i in range(1, m + 1):
            if (i - j) % d != 0:
                rows.append(LinearConstraint({(i - 1, j - 1): 1}, Relation.EQ, 0))

    return CodeSpec([r] * m, t, rows, name=BuiltinSpec.SHIEH)


def shieh_cardinality(r, m, d):
    """((a r)! / (r!)^a)^d with a = m / d"""
    _check_divisor(r, m, d)
    r, m, d = int(r), int(m), int(d)
    a = m // d
    return (factorial(a * r) // factorial(r) ** a) ** d


def exclusion_constraint(Y):
    """sum of X_ij over the ones of Y <= n - 1; only X = Y violates it"""
    cells = {(int(i), int(j)): 1 for i, j in zip(*np.nonzero(Y.X))}
    return LinearConstraint(cells, Relation.LE, Y.n - 1)


def to_permutation_spec(spec):
    """a'_kj = a_ij for every k in I_i; s repeats t_i r_i times"""
    sets = IndexSets(spec.r)
    rows = []
    for row in spec.constraints:
        coef = {}
        for (i, j), c in row.coefficients.items():
            for k in sets.zero_based(i):
                coef[(k, j)] = c
        rows.append(LinearConstraint(coef, row.relation, row.rhs))

    return PermutationSpec(spec.n, repeated_initial_vector(spec.r, spec.t), rows)


def permutation_satisfies(P, pspec):
    if P.n != pspec.n:
        raise MpCodeError(ErrorMsg.ShapeMismatch, expected=pspec.n, actual=P.n)
    return all(row.holds(P) for row in pspec.constraints)


def enumerate_permutation_code(pspec, limit=None):
    """sorted distinct vectors s P over every admissible P in S_n"""
    if limit is None:
        limit = Conf.PERM_ENUM_LIMIT

    size = factorial(pspec.n)
    if size > limit:
        raise MpCodeError(ErrorMsg.EnumerationTooLarge, size=size, limit=limit)

    s = pspec.s
    vectors = set()
    for cols in itertools.permutations(range(pspec.n)):
        P = PermutationMatrix.from_columns(cols)
        if permutation_satisfies(P, pspec):
            vectors.add(tuple(s[k] for k in cols))

    return sorted(vectors)


def multinomial(r):
    r = MultiplicityVector(r)
    total = factorial(r.n)
    for v in r:
        total //= factorial(v)
    return total


class CodebookEnumerator(object):
    """
    Lexicographic depth-first walk over M(r).

    A constraint whose coefficients are all non-negative prunes a branch as
    soon as its partial sum passes the rhs; the rest are checked at the leaves.
    """

    def __init__(self, spec, limit=None):
        self.spec = spec
        self.limit = Conf.ENUM_LIMIT if limit is None else limit
        self.constraints = spec.constraints
        self.monotone = [all(c > 0 for c in row.coefficients.values()) for row in self.constraints]

        # cell_terms[j][i] -> [(constraint index, coefficient)]
        self.cell_terms = [[[] for _ in range(spec.m)] for _ in range(spec.n)]
        for k, row in enumerate(self.constraints):
            for (i, j), c in row.coefficients.items():
                self.cell_terms[j][i].append((k, c))

        self.leaves = 0
        self.pruned = 0

    def _leaf_ok(self, lhs):
        for row, value in zip(self.constraints, lhs):
            if row.relation == Relation.EQ and value != row.rhs:
                return False
            if row.relation == Relation.LE and value > row.rhs:
                return False
        return True

    def run(self):
        size = multinomial(self.spec.r)
        if size > self.limit:
            raise MpCodeError(ErrorMsg.EnumerationTooLarge, size=size, limit=self.limit)

        spec = self.spec
        counts = list(spec.r.r)
        lhs = [0] * len(self.constraints)
        word = []
        found = []

        def walk(j):
            if j == spec.n:
                self.leaves += 1
                if self._leaf_ok(lhs):
                    found.append(tuple(word))
                return

            for i in range(spec.m):
                if counts[i] == 0:
                    continue

                terms = self.cell_terms[j][i]
                blocked = False
                for k, c in terms:
                    lhs[k] += c
                    if self.monotone[k] and lhs[k] > self.constraints[k].rhs:
                        blocked = True

                if blocked:
                    self.pruned += 1
                else:
                    counts[i] -= 1
                    word.append(i + 1)
                    walk(j + 1)
                    word.pop()
                    counts[i] += 1

                for k, c in terms:
                    lhs[k] -= c

        walk(0)
        logger.debug("enumerate {} leaves={} pruned={} codewords={}".format(
            spec.name or "spec", self.leaves, self.pruned, len(found)))

        codewords = [matrix_from_multipermutation(x, spec.r) for x in found]
        return Codebook(spec, codewords)


def enumerate_codebook(spec, limit=None):
    return CodebookEnumerator(spec, limit=limit).run()


def codebook_spec(r, t, targets, limit=None):
    """
    CodeSpec whose codebook is exactly `targets`, one exclusion constraint
    for every word of M(r) outside it.
    """
    if limit is None:
        limit = Conf.ENUM_LIMIT

    r = MultiplicityVector(r)
    size = multinomial(r)
    if size > limit:
        raise MpCodeError(ErrorMsg.EnumerationTooLarge, size=size, limit=limit)

    keep = set()
    for item in targets:
        if isinstance(item, MultipermutationMatrix):
            keep.add(item.symbols)
        else:
            keep.add(tuple(int(v) for v in item))

    rows = []
    for x in all_multipermutations(r):
        if x not in keep:
            rows.append(exclusion_constraint(matrix_from_multipermutation(x, r)))

    return CodeSpec(r, t, rows, name="codebook")


_PDIST_METRIC = {
    Metric.HAMMING: "hamming",
    Metric.CHEBYSHEV: "chebyshev",
    Metric.EUCLIDEAN: "euclidean",
}


def pairwise_distances(book, metric, t=None):
    """condensed pdist over the codeword vectors t X"""
    if metric not in _PDIST_METRIC:
        raise MpCodeError(ErrorMsg.SpecFileInvalid, reason="unknown metric", metric=str(metric))

    if t is None:
        vectors = book.vectors()
    else:
        t = InitialVector(t)
        vectors = t.array[book.symbol_array() - 1]

    dist = pdist(vectors, metric=_PDIST_METRIC[metric])
    if metric == Metric.HAMMING:
        # scipy reports the fraction of differing coordinates
        dist = np.rint(dist * book.spec.n)
    return dist


def min_distance(book, metric, t=None):
    if len(book) < 2:
        raise MpCodeError(ErrorMsg.CodebookTooSmall, size=len(book))

    value = float(pairwise_distances(book, metric, t).min())
    if metric == Metric.HAMMING:
        return int(value)
    return value


def codeword_by_index(book, k):
    k = int(k)
    if k < 0 or k >= len(book):
        raise MpCodeError(ErrorMsg.IndexOutOfRange, index=k, size=len(book))
    return book[k]


def index_of(book, codeword):
    k = book.find(codeword)
    if k is None:
        raise MpCodeError(ErrorMsg.CodewordNotInBook)
    return k
