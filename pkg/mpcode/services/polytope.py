import numpy as np
from mpcode import utils
from mpcode.conf import Conf
from mpcode.modules import MpCodeError, ErrorMsg
from mpcode.modules import MultiplicityVector, MultipermutationMatrix, PermutationMatrix
from mpcode.modules import RelaxedMatrix, DoublyStochasticMatrix, ConvexCombination, MembershipReport
from mpcode.services.mpcore import canonical_block

logger = utils.get_logger()


def _relaxed_array(Z, r):
    if isinstance(Z, RelaxedMatrix):
        return Z.Z, Z.r

    if isinstance(Z, MultipermutationMatrix):
        return Z.X.astype(float), Z.r

    if r is None:
        raise MpCodeError(ErrorMsg.ShapeMismatch, reason="multiplicity vector required")

    r = MultiplicityVector(r)
    arr = np.asarray(Z, dtype=float)
    if arr.shape != (r.m, r.n):
        raise MpCodeError(ErrorMsg.ShapeMismatch,
                          expected="{}x{}".format(r.m, r.n), actual="x".join(map(str, arr.shape)))
    return arr, r


def membership_check(Z, r=None, eps=None):
    """
    Conditions of the multipermutation polytope:
    (a) unit column sums, (b) row i sums to r_i, (c) entries in [0, 1].
    """
    if eps is None:
        eps = Conf.EPS_FEAS

    arr, r = _relaxed_array(Z, r)
    violations = []
    if not np.all(np.isfinite(arr)):
        return MembershipReport([("c", float("inf"))])

    col = float(np.max(np.abs(arr.sum(axis=0) - 1.0)))
    if col > eps:
        violations.append(("a", col))

    row = float(np.max(np.abs(arr.sum(axis=1) - np.array(r.r, dtype=float))))
    if row > eps:
        violations.append(("b", row))

    box = float(max(0.0, -arr.min(), arr.max() - 1.0))
    if box > eps:
        violations.append(("c", box))

    return MembershipReport(violations)


def canonical_sorted_matrix(r):
    """matrix of the sorted word (1,...,1,2,...,2,...)"""
    r = MultiplicityVector(r)
    return MultipermutationMatrix(canonical_block(r), r)


def _require_member(arr, r, eps):
    report = membership_check(arr, r, eps)
    if not report:
        cond, residual = report.violations[0]
        raise MpCodeError(ErrorMsg.InfeasibleRelaxed, condition=cond, residual=residual)


def stochastic_from_relaxed(Z, r=None, eps=None):
    """Q_kj = Z_ij / r_i for every k in I_i"""
    if eps is None:
        eps = Conf.EPS_FEAS

    arr, r = _relaxed_array(Z, r)
    _require_member(arr, r, eps)

    scaled = arr / np.array(r.r, dtype=float)[:, None]
    owner = np.repeat(np.arange(r.m), r.r)
    Q = scaled[owner]

    residual = float(np.max(np.abs(canonical_block(r) @ Q - arr)))
    if residual > eps:
        raise MpCodeError(ErrorMsg.InfeasibleRelaxed, reason="block product differs from Z", residual=residual)

    return DoublyStochasticMatrix(Q, eps=eps)


def _perfect_matching(support):
    """
    Augmenting path matching on a boolean n x n support. Rows are visited
    in index order, columns low index first. Returns row -> column or None.
    """
    n = support.shape[0]
    match_col = [-1] * n
    adj = [np.flatnonzero(support[k]).tolist() for k in range(n)]

    def augment(k, seen):
        for j in adj[k]:
            if seen[j]:
                continue
            seen[j] = True
            if match_col[j] == -1 or augment(match_col[j], seen):
                match_col[j] = k
                return True
        return False

    for k in range(n):
        if not augment(k, [False] * n):
            return None

    perm = [0] * n
    for j, k in enumerate(match_col):
        perm[k] = j
    return perm


def birkhoff_decompose(Q, eps=None):
    """
    Greedy Birkhoff-von Neumann decomposition: match on the support,
    peel off the smallest matched weight, repeat.
    """
    if eps is None:
        eps = Conf.EPS_FEAS

    if not isinstance(Q, DoublyStochasticMatrix):
        Q = DoublyStochasticMatrix(Q, eps=eps)

    n = Q.n
    R = np.array(Q.Q, dtype=float)
    R[R < eps] = 0.0
    terms = []
    max_iter = n * n + 1

    while R.max() > eps:
        if len(terms) >= max_iter:
            raise MpCodeError(ErrorMsg.NoPerfectMatching, reason="iteration limit", iterations=len(terms))

        perm = _perfect_matching(R > eps)
        if perm is None:
            residual = float(R.sum(axis=1).max())
            if residual <= n * eps:
                logger.warning("stop BvN with residual row mass {}".format(residual))
                break
            raise MpCodeError(ErrorMsg.NoPerfectMatching, residual=residual, terms=len(terms))

        rows = np.arange(n)
        alpha = float(R[rows, perm].min())
        R[rows, perm] -= alpha
        R[R < eps] = 0.0
        terms.append((alpha, perm))

    if not terms:
        raise MpCodeError(ErrorMsg.NoPerfectMatching, reason="empty support")

    total = sum(alpha for alpha, _ in terms)
    if abs(total - 1.0) > n * eps:
        logger.warning("normalize BvN weights, total {}".format(total))

    logger.debug("BvN n={} terms={}".format(n, len(terms)))
    return ConvexCombination([(alpha / total, PermutationMatrix.from_columns(_inverse(perm)))
                              for alpha, perm in terms])


def _inverse(perm):
    # perm maps row -> column; from_columns wants column -> row
    inv = [0] * len(perm)
    for k, j in enumerate(perm):
        inv[j] = k
    return inv


def decompose_relaxed(Z, r=None, eps=None):
    """Z = sum_h alpha_h (B P_h), B the sorted block matrix; equal terms merged"""
    if eps is None:
        eps = Conf.EPS_FEAS

    arr, r = _relaxed_array(Z, r)
    Q = stochastic_from_relaxed(arr, r, eps)
    B = canonical_block(r)

    merged = {}
    for alpha, P in birkhoff_decompose(Q, eps):
        X = MultipermutationMatrix(B @ P.P, r)
        if X in merged:
            merged[X] += alpha
        else:
            merged[X] = alpha

    return ConvexCombination([(w, X) for X, w in merged.items()])


def recombine(combination):
    """sum of weight * matrix"""
    total = None
    for w, mat in combination:
        arr = mat.X if isinstance(mat, MultipermutationMatrix) else mat.P
        total = w * arr.astype(float) if total is None else total + w * arr
    return total
