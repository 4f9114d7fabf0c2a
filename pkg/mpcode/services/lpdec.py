"""
LP decoding over the code polytope.

Variables are the entries of X stacked column by column: X_ij is
variable j*m + i. The Chebyshev decoder appends delta (and, during the
refinement pass, one slack e_j per position).
"""
import numpy as np
from scipy.optimize import linprog
from mpcode import utils
from mpcode.conf import Conf
from mpcode.core.const import Relation, LpStatus
from mpcode.modules import MpCodeError, ErrorMsg
from mpcode.modules import Multipermutation, RelaxedMatrix, CostMatrix
from mpcode.modules import LinearProgram, LpSolution, DecodeResult

logger = utils.get_logger()


def var_index(i, j, m):
    return j * m + i


def build_polytope_rows(spec):
    m, n = spec.m, spec.n
    lp = LinearProgram(m * n, bounds=[(0.0, 1.0)] * (m * n))

    for j in range(n):
        lp.add_row({var_index(i, j, m): 1.0 for i in range(m)}, Relation.EQ, 1.0)

    for i in range(m):
        lp.add_row({var_index(i, j, m): 1.0 for j in range(n)}, Relation.EQ, spec.r[i])

    for row in spec.constraints:
        coef = {var_index(i, j, m): float(c) for (i, j), c in row.coefficients.items()}
        lp.add_row(coef, row.relation, row.rhs)

    return lp


_STATUS = {
    0: LpStatus.OPTIMAL,
    2: LpStatus.INFEASIBLE,
    3: LpStatus.UNBOUNDED,
}


def solve_lp(lp):
    A_ub, b_ub = lp.dense(Relation.LE)
    A_eq, b_eq = lp.dense(Relation.EQ)

    res = linprog(lp.objective, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq,
                  bounds=lp.bounds, method="highs",
                  options={
                      "primal_feasibility_tolerance": Conf.EPS_LP,
                      "dual_feasibility_tolerance": Conf.EPS_LP,
                  })

    status = _STATUS.get(res.status, LpStatus.FAILED)
    if status != LpStatus.OPTIMAL:
        logger.debug("LP status {} {}".format(status, res.message))
        return LpSolution(status, message=res.message)

    values = np.array(res.x, dtype=float)
    lo = np.array([-np.inf if b[0] is None else b[0] for b in lp.bounds])
    hi = np.array([np.inf if b[1] is None else b[1] for b in lp.bounds])
    values = np.clip(values, lo, hi)

    residual = lp.max_violation(values)
    if residual > Conf.EPS_LP:
        logger.warning("LP residual {} above tolerance {}".format(residual, Conf.EPS_LP))

    logger.debug("LP vars={} rows={} objective={}".format(lp.num_vars, len(lp.rows), res.fun))
    return LpSolution(status, values, float(lp.objective @ values), message=res.message)


def _require_optimal(sol):
    if sol.status == LpStatus.INFEASIBLE:
        raise MpCodeError(ErrorMsg.LpInfeasible)
    if sol.status == LpStatus.UNBOUNDED:
        raise MpCodeError(ErrorMsg.LpUnbounded)
    if sol.status != LpStatus.OPTIMAL:
        raise MpCodeError(ErrorMsg.LpFailed, reason=sol.message)


def _relaxed_from_values(values, spec):
    m, n = spec.m, spec.n
    Z = np.clip(values[:m * n].reshape((m, n), order="F"), 0.0, 1.0)
    return RelaxedMatrix(Z, spec.r)


def _relaxed_array(Z):
    if isinstance(Z, RelaxedMatrix):
        return Z.Z, Z.r
    return np.asarray(Z, dtype=float), None


def certificate_check(Z, eps_int=None):
    """every entry within eps_int of 0 or 1"""
    if eps_int is None:
        eps_int = Conf.EPS_INT

    arr, _ = _relaxed_array(Z)
    gap = np.minimum(np.abs(arr), np.abs(arr - 1.0))
    return bool(gap.max() <= eps_int) if arr.size else True


def round_solution(Z, r=None, eps_int=None):
    """
    x_j = argmax_i Z_ij. Entries within eps_int of the column maximum count
    as tied and the smallest row wins. Counts are not repaired.
    """
    if eps_int is None:
        eps_int = Conf.EPS_INT

    arr, rz = _relaxed_array(Z)
    r = rz if r is None else r
    if r is None:
        raise MpCodeError(ErrorMsg.ShapeMismatch, reason="multiplicity vector required")

    top = arr.max(axis=0)
    symbols = np.argmax(arr >= top[None, :] - eps_int, axis=0) + 1
    word = Multipermutation(symbols.tolist(), r, check=False)
    if not word.valid:
        logger.debug("rounded word {} breaks the multiplicity vector".format(list(word.x)))
    return word


def decode_memoryless(spec, gamma):
    """min <Gamma(y), X> over the code polytope"""
    if not isinstance(gamma, CostMatrix):
        gamma = CostMatrix(gamma)

    if gamma.shape != (spec.m, spec.n):
        raise MpCodeError(ErrorMsg.ShapeMismatch,
                          expected="{}x{}".format(spec.m, spec.n), actual="x".join(map(str, gamma.shape)))

    lp = build_polytope_rows(spec)
    lp.objective = gamma.vec().astype(float)
    sol = solve_lp(lp)
    _require_optimal(sol)

    relaxed = _relaxed_from_values(sol.values, spec)
    certificate = certificate_check(relaxed)
    decoded = round_solution(relaxed)
    return DecodeResult(relaxed, sol.objective_value, certificate, decoded)


def _add_deviation_rows(lp, spec, y, slack_of):
    """t X_j - y_j <= slack and y_j - t X_j <= slack for every position"""
    m = spec.m
    t = spec.t.t
    for j in range(spec.n):
        tx = {var_index(i, j, m): t[i] for i in range(m)}
        slack = slack_of(j)

        up = dict(tx)
        up[slack] = -1.0
        lp.add_row(up, Relation.LE, y[j])

        down = {k: -v for k, v in tx.items()}
        down[slack] = -1.0
        lp.add_row(down, Relation.LE, -y[j])


def decode_chebyshev(spec, y):
    """
    min delta s.t. -delta <= t X - y <= delta over the code polytope,
    then round. With Conf.CHEBYSHEV_REFINE a second LP keeps delta at its
    optimum and minimises sum_j |(t X)_j - y_j|, which pins down the X that
    gets rounded.
    """
    y = np.asarray(y, dtype=float)
    if y.ndim != 1 or y.size != spec.n:
        raise MpCodeError(ErrorMsg.LengthMismatch, expected=spec.n, actual=int(y.size))
    if not np.all(np.isfinite(y)):
        raise MpCodeError(ErrorMsg.ReceivedInvalid, reason="non finite entry")

    lp = build_polytope_rows(spec)
    delta = lp.add_variable(lo=0.0, hi=None, cost=1.0)
    base = lp.copy()
    _add_deviation_rows(lp, spec, y, lambda j: delta)

    sol = solve_lp(lp)
    _require_optimal(sol)
    delta_star = float(sol.values[delta])
    values = sol.values

    if Conf.CHEBYSHEV_REFINE:
        refine = base
        refine.objective[delta] = 0.0
        slacks = [refine.add_variable(lo=0.0, hi=None, cost=1.0) for _ in range(spec.n)]
        # 留出求解器可行性容差的余量
        refine.add_row({delta: 1.0}, Relation.LE, delta_star + Conf.EPS_FEAS_LP)
        _add_deviation_rows(refine, spec, y, lambda j: delta)
        _add_deviation_rows(refine, spec, y, lambda j: slacks[j])

        sol2 = solve_lp(refine)
        if sol2.optimal:
            values = sol2.values
            logger.debug("chebyshev refinement l1={}".format(sol2.objective_value))
        else:
            logger.warning("chebyshev refinement {}, keep min-delta vertex".format(sol2.status))

    relaxed = _relaxed_from_values(values, spec)
    certificate = certificate_check(relaxed)
    decoded = round_solution(relaxed)
    return DecodeResult(relaxed, delta_star, certificate, decoded, delta=delta_star)
