"""Coset integer programs bounding P(n,3), solved exactly.

The model for (n, shape) is: maximize sum x_i subject to M x <= |H| * 1,
x >= 0 integer, where M is the coset-action matrix of shape and |H| the
Young subgroup order.  Any code of minimum Kendall distance >= 3 projects to
a feasible point (coordinate i = codewords in coset i), so the optimum is a
certified upper bound on the code size.

Everything in the certified path is arbitrary-precision integer / rational
arithmetic.  The root relaxation and its Gomory cut rounds run on the exact
simplex of :mod:`kendall_codes.exactlp`; the branch-and-bound descent uses a
fast float LP (:mod:`kendall_codes.boxlp`) only as a guide, converting its
duals into integer multipliers whose weak-duality bound is evaluated
exactly, so no pruning decision ever rests on floating point.  Models whose
right-hand side is too large for that conversion fall back to exact simplex
node relaxations.  All node and branching rules are deterministic, so
results are reproducible.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

import numpy as np

from kendall_codes import young
from kendall_codes.exactlp import ExactSimplex, INFEASIBLE, OPTIMAL
from kendall_codes.perms import Code, inverse, sphere_packing_bound
from kendall_codes.young import ActionMatrix, build_action_matrix, check_partition

PROVEN_OPTIMAL = "proven-optimal"
INCUMBENT_ONLY = "incumbent-only"


@dataclass(frozen=True)
class IlpModel:
    """max 1.x  s.t.  matrix x <= rhs * 1,  x >= 0 integer."""

    n: int
    shape: tuple[int, ...]
    dim: int
    matrix: tuple[tuple[int, ...], ...]
    rhs: int

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]


@dataclass(frozen=True)
class LpSolution:
    status: str
    value: Fraction | None
    point: tuple[Fraction, ...] | None


@dataclass(frozen=True)
class IlpResult:
    optimum: int
    argmax: tuple[int, ...]
    nodes_explored: int
    status: str  # proven-optimal | incumbent-only
    dual_bound: Fraction


@dataclass
class SolveConfig:
    time_limit: float | None = None  # seconds
    threads: int = 1  # accepted for interface compatibility; solve is serial
    cut_rounds: int = 5
    cuts_per_round: int = 8
    #: largest integer coefficient a root cut may have before it is discarded
    cut_coefficient_cap: int = 10**6
    #: seed the incumbent with a float MILP heuristic (verified exactly)
    float_heuristic: bool = True
    heuristic_node_limit: int = 100_000
    #: force exact-simplex node bounds (auto-selected from magnitudes if None)
    exact_nodes: bool | None = None


def build_coset_ilp(n: int, shape,
                    limit: int = young.DENSE_TABLOID_LIMIT) -> IlpModel:
    shape = check_partition(shape)
    action = build_action_matrix(n, shape, limit)
    return IlpModel(
        n=n,
        shape=shape,
        dim=action.dim,
        matrix=tuple(tuple(row) for row in action.to_dense()),
        rhs=young.young_subgroup_order(shape),
    )


def model_from_action(action: ActionMatrix, rhs: int) -> IlpModel:
    return IlpModel(n=action.n, shape=action.shape, dim=action.dim,
                    matrix=tuple(tuple(row) for row in action.to_dense()),
                    rhs=rhs)


def feasible(model: IlpModel, x) -> bool:
    """True iff x >= 0 and M x <= rhs componentwise."""
    x = list(x)
    if len(x) != model.dim:
        raise ValueError(f"expected {model.dim} coordinates, got {len(x)}")
    if any(v < 0 for v in x):
        return False
    for row in model.matrix:
        if sum(a * v for a, v in zip(row, x)) > model.rhs:
            return False
    return True


def lp_relax(model: IlpModel,
             extra_rows: list[tuple[list[Fraction], Fraction]] | None = None) -> LpSolution:
    """Exact rational optimum of the LP relaxation."""
    a_rows = model.rows()
    b = [model.rhs] * model.dim
    for coeffs, rhs in extra_rows or []:
        a_rows.append(list(coeffs))
        b.append(rhs)
    sx = ExactSimplex(a_rows, b, [1] * model.dim)
    status = sx.solve()
    if status != OPTIMAL:
        return LpSolution(status=status, value=None, point=None)
    return LpSolution(status=OPTIMAL, value=sx.value(), point=tuple(sx.point()))


def _greedy_ascent(model: IlpModel, x: list[int],
                   extra_rows=None) -> list[int]:
    """Round up coordinates as far as feasibility allows, lowest index first."""
    rows = model.rows()
    rhs = [model.rhs] * model.dim
    for coeffs, beta in extra_rows or []:
        rows.append(list(coeffs))
        rhs.append(beta)
    slack = [rhs[i] - sum(a * v for a, v in zip(rows[i], x))
             for i in range(len(rows))]
    if any(s < 0 for s in slack):
        return x
    improved = True
    while improved:
        improved = False
        for j in range(model.dim):
            inc = None
            for i, row in enumerate(rows):
                a = row[j]
                if a > 0:
                    cap = Fraction(slack[i]) / Fraction(a)
                    room = cap.numerator // cap.denominator
                    inc = room if inc is None else min(inc, room)
            if inc is not None and inc > 0:
                x[j] += inc
                for i, row in enumerate(rows):
                    slack[i] -= row[j] * inc
                improved = True
    return x


def _heuristic_incumbent(model: IlpModel, lp_point, extra_rows=None) -> list[int]:
    x = [int(v.numerator // v.denominator) if isinstance(v, Fraction) else int(v)
         for v in lp_point]
    # flooring stays feasible for the base model (M >= 0) but extra rows may
    # have negative coefficients; _greedy_ascent bails out if infeasible
    rows = model.rows()
    rhs = [model.rhs] * model.dim
    for coeffs, beta in extra_rows or []:
        rows.append(list(coeffs))
        rhs.append(beta)
    for row, beta in zip(rows, rhs):
        if sum(a * v for a, v in zip(row, x)) > beta:
            return [0] * model.dim
    return _greedy_ascent(model, x, extra_rows)


def _solve_node(model: IlpModel, cut_rows, bound_rows):
    a_rows = model.rows()
    b = [model.rhs] * model.dim
    for coeffs, beta in cut_rows:
        a_rows.append(list(coeffs))
        b.append(beta)
    for coeffs, beta in bound_rows:
        a_rows.append(list(coeffs))
        b.append(beta)
    sx = ExactSimplex(a_rows, b, [1] * model.dim)
    sx.set_original(a_rows, b)
    status = sx.solve()
    return sx, status


#: scaling factor turning float duals into certified integer multipliers
_DUAL_SCALE = 1 << 36
#: above this right-hand side, float duals are too lossy; nodes switch to
#: the exact simplex (correctness never depends on this, only pruning power)
_FLOAT_SAFE_RHS = 10**9


def _propagate(mat: np.ndarray, b: np.ndarray, l: np.ndarray, u: np.ndarray):
    """Tighten u from the row activities at l (exact, int64).

    Rows are nonnegative, so l itself never moves and one pass reaches the
    fixpoint: x_j <= l_j + (b_i - mat_i.l) / mat_ij for every row i with
    mat_ij > 0.  Returns None when l already violates a row.
    """
    tot = mat @ l
    if (tot > b).any():
        return None
    big = np.int64(1) << 55
    caps = np.where(mat > 0,
                    (b[:, None] - tot[:, None] + mat * l[None, :])
                    // np.maximum(mat, 1), big)
    newu = np.minimum(u, caps.min(axis=0))
    if (newu < l).any():
        return None
    return l, newu


def _certified_bound(y, mat: np.ndarray, rhs: int, l, u):
    """Exact scaled upper bound from (possibly sloppy) float duals.

    For any integer Y >= 0, S.1'x <= Y'b + sum_j max over [l_j, u_j] of
    (S - Y'M)_j x_j with S the scale; only integer arithmetic touches the
    result, so the bound is valid no matter how bad y is.  Returns
    (scaled bound, coefficient list).
    """
    Y = np.rint(np.clip(y, 0.0, 100.0) * _DUAL_SCALE).astype(np.int64)
    # column sums of mat are n, so the matvec stays far below 2**63
    coef = (_DUAL_SCALE - Y @ mat).tolist()
    lo = l.tolist()
    hi = u.tolist()
    bound = int(Y.sum()) * rhs
    bound += sum(c * h if c > 0 else c * lo_j
                 for c, lo_j, h in zip(coef, lo, hi))
    return bound, coef


def _verify_integer(model: IlpModel, x) -> bool:
    return all(v >= 0 for v in x) and all(
        sum(a * v for a, v in zip(row, x)) <= model.rhs
        for row in model.matrix)


def _milp_heuristic(model: IlpModel, u0, node_limit: int):
    """Float MILP as an incumbent heuristic; the candidate is only adopted
    after an exact feasibility check, so this stays outside the certified
    path."""
    from scipy.optimize import Bounds, LinearConstraint, milp
    mat = np.array(model.matrix, dtype=float)
    try:
        res = milp(-np.ones(model.dim),
                   constraints=LinearConstraint(mat, ub=np.full(model.dim,
                                                                float(model.rhs))),
                   integrality=np.ones(model.dim),
                   bounds=Bounds(0.0, np.asarray(u0, dtype=float)),
                   options={"node_limit": node_limit})
    except Exception:
        return None
    if res.x is None:
        return None
    cand = [int(round(v)) for v in res.x]
    if _verify_integer(model, cand):
        return cand
    return None


def _bb_float(model: IlpModel, l0, u0, best_value: int, best_point,
              deadline: float | None):
    """Depth-first branch and bound: float LPs for guidance, exact integer
    arithmetic for every pruning decision.

    Per node: propagate bounds, solve the box LP warm-started from the
    parent basis, certify the dual bound exactly, apply exact reduced-cost
    fixing against the incumbent, branch by reliability pseudocosts (the
    first evaluations of a variable are strong-branch probes, later ones use
    the learned per-unit objective degradation; lowest index on ties).
    Returns (best, point, nodes, open_bound) where open_bound is None iff
    the tree was exhausted.
    """
    from kendall_codes.boxlp import BoxSimplex
    from scipy.optimize import linprog

    mat = np.array(model.matrix, dtype=np.int64)
    dim = model.dim
    b = np.full(dim, model.rhs, dtype=np.int64)
    box = BoxSimplex(mat, b, np.ones(dim))
    bounds_T = (best_value + 1) * _DUAL_SCALE
    nodes = 0
    # pseudocost accumulators: per-unit LP objective drop, down and up
    pcd = np.zeros(dim)
    pcd_n = np.zeros(dim)
    pcu = np.zeros(dim)
    pcu_n = np.zeros(dim)
    sb_budget = 3000  # strong-branch probe pairs across the whole tree
    # stack entries: bounds, warm basis, exact scaled estimate, and the
    # branch that created the node (variable, direction, parent LP value,
    # fractional part) for pseudocost updates
    stack = [(np.asarray(l0, dtype=np.int64), np.asarray(u0, dtype=np.int64),
              None, None, None)]
    while stack:
        l, u, warm, est, pinfo = stack.pop()
        if est is not None and est < bounds_T:
            continue
        if deadline is not None and time.monotonic() > deadline:
            open_scaled = [e for _l, _u, _w, e, _p in stack if e is not None]
            if est is not None:
                open_scaled.append(est)
            top = max(open_scaled, default=bounds_T)
            return best_value, best_point, nodes, Fraction(top, _DUAL_SCALE)
        prop = _propagate(mat, b, l, u)
        if prop is None:
            continue
        l, u = prop
        sol = box.solve(l, u, warm=warm)
        if sol is not None:
            x, y = sol[0], sol[1]
            warm_out = sol[3]
        else:
            res = linprog(-np.ones(dim), A_ub=mat, b_ub=b,
                          bounds=np.column_stack([l, u]), method="highs")
            x, y = res.x, np.maximum(-res.ineqlin.marginals, 0.0)
            warm_out = None
        obj = float(x.sum())
        if pinfo is not None:
            pj, went_up, pobj, f = pinfo
            gain = max(pobj - obj, 0.0)
            if went_up:
                pcu[pj] += gain / max(1.0 - f, 1e-6)
                pcu_n[pj] += 1.0
            else:
                pcd[pj] += gain / max(f, 1e-6)
                pcd_n[pj] += 1.0
        bound, coef = _certified_bound(y, mat, model.rhs, l, u)
        if bound < bounds_T:
            continue
        # exact reduced-cost fixing: shrinking variable j's box costs |coef_j|
        # per unit, so units beyond slack // |coef_j| cannot beat the incumbent
        slack = bound - bounds_T
        ll = l.tolist()
        uu = u.tolist()
        for j, c in enumerate(coef):
            if c > 0:
                ll[j] = max(ll[j], uu[j] - slack // c)
            elif c < 0:
                uu[j] = min(uu[j], ll[j] - slack // c)
        l = np.array(ll, dtype=np.int64)
        u = np.array(uu, dtype=np.int64)
        prop = _propagate(mat, b, l, u)
        if prop is None:
            continue
        l, u = prop
        nodes += 1
        xc = np.clip(x, l, u)
        frac = np.abs(xc - np.rint(xc))
        frac[l == u] = 0.0
        if float(frac.max()) < 1e-7:
            cand = np.rint(xc).astype(np.int64)
            if (cand >= l).all() and (cand <= u).all() and (mat @ cand <= b).all():
                value = int(cand.sum())
                if value > best_value:
                    best_value = value
                    best_point = [int(v) for v in cand]
                    bounds_T = (best_value + 1) * _DUAL_SCALE
                continue
            # clamping broke feasibility; fall back to the raw LP point
            frac = np.abs(x - np.rint(x))
            frac[l == u] = 0.0
            if float(frac.max()) < 1e-7:
                j = int(np.argmax(u - l))
                if u[j] == l[j]:
                    continue
                frac = frac.copy()
                frac[j] = 0.5
        cands = [int(j) for j in np.where(frac > 1e-7)[0]]

        def probe(lc, uc):
            pr = _propagate(mat, b, lc, uc)
            if pr is None:
                return obj  # the child is infeasible, full objective drop
            s = box.solve(pr[0], pr[1], warm=warm_out, max_iter=150)
            if s is None:
                return 0.0
            return max(obj - s[2], 0.0)

        if sb_budget > 0:
            shortlist = sorted(cands, key=lambda j: (-frac[j], j))[:8]
            for j in shortlist:
                if sb_budget <= 0:
                    break
                if pcd_n[j] > 0.0 and pcu_n[j] > 0.0:
                    continue
                sp = min(max(int(np.floor(xc[j])), int(l[j])), int(u[j]) - 1)
                f = min(max(float(xc[j]) - sp, 1e-6), 1.0 - 1e-6)
                ud = u.copy()
                ud[j] = sp
                lu = l.copy()
                lu[j] = sp + 1
                pcd[j] += probe(l, ud) / f
                pcd_n[j] += 1.0
                pcu[j] += probe(lu, u) / (1.0 - f)
                pcu_n[j] += 1.0
                sb_budget -= 1
        avg_d = float(pcd.sum() / pcd_n.sum()) if pcd_n.sum() > 0 else 1.0
        avg_u = float(pcu.sum() / pcu_n.sum()) if pcu_n.sum() > 0 else 1.0
        best_score = -1.0
        j = cands[0]
        for k in cands:
            f = float(xc[k] - np.floor(xc[k]))
            rate_d = pcd[k] / pcd_n[k] if pcd_n[k] > 0 else avg_d
            rate_u = pcu[k] / pcu_n[k] if pcu_n[k] > 0 else avg_u
            score = max(rate_d * f, 1e-9) * max(rate_u * (1.0 - f), 1e-9)
            if score > best_score:
                best_score = score
                j = k
        split = int(np.floor(xc[j]))
        split = min(max(split, int(l[j])), int(u[j]) - 1)
        fpart = min(max(float(xc[j]) - split, 1e-6), 1.0 - 1e-6)
        base = bound - (coef[j] * int(u[j]) if coef[j] > 0 else coef[j] * int(l[j]))
        down_est = base + (coef[j] * split if coef[j] > 0 else coef[j] * int(l[j]))
        up_est = base + (coef[j] * int(u[j]) if coef[j] > 0
                         else coef[j] * (split + 1))
        ud = u.copy()
        ud[j] = split
        lu = l.copy()
        lu[j] = split + 1
        stack.append((l, ud, warm_out, down_est, (j, False, obj, fpart)))
        stack.append((lu, u, warm_out, up_est, (j, True, obj, fpart)))
    return best_value, best_point, nodes, None


def _bb_exact(model: IlpModel, l0, u0, best_value: int, best_point,
              deadline: float | None):
    """Depth-first branch and bound with exact simplex node relaxations.

    Used when the right-hand side is so large that scaled float duals lose
    more than a unit of objective.  Same tree rules as _bb_float, minus the
    reduced-cost fixing (no duals are extracted from the exact solver)."""
    mat = np.array(model.matrix, dtype=np.int64)
    dim = model.dim
    b = np.full(dim, model.rhs, dtype=np.int64)
    a_rows = model.rows()
    nodes = 0
    stack = [(np.asarray(l0, dtype=np.int64), np.asarray(u0, dtype=np.int64),
              None)]
    u_root = np.asarray(u0, dtype=np.int64)
    while stack:
        l, u, est = stack.pop()
        if est is not None and est <= best_value:
            continue
        if deadline is not None and time.monotonic() > deadline:
            tops = [e for *_rest, e in stack if e is not None]
            if est is not None:
                tops.append(est)
            top = max(tops, default=best_value)
            return best_value, best_point, nodes, Fraction(top)
        prop = _propagate(mat, b, l, u)
        if prop is None:
            continue
        l, u = prop
        rows = list(a_rows)
        rhs = [model.rhs] * dim
        for j in range(dim):
            if u[j] < u_root[j]:
                row = [0] * dim
                row[j] = 1
                rows.append(row)
                rhs.append(int(u[j]))
            if l[j] > 0:
                row = [0] * dim
                row[j] = -1
                rows.append(row)
                rhs.append(-int(l[j]))
        sx = ExactSimplex(rows, rhs, [1] * dim)
        if sx.solve() != OPTIMAL:
            continue
        value = sx.value()
        if value.numerator // value.denominator <= best_value:
            continue
        nodes += 1
        point = sx.point()
        j_frac = None
        f_best = Fraction(0)
        for j, v in enumerate(point):
            f = v - (v.numerator // v.denominator)
            if f > f_best:
                f_best = f
                j_frac = j
        if j_frac is None:
            cand = [int(v) for v in point]
            cand_val = sum(cand)
            if cand_val > best_value:
                best_value = cand_val
                best_point = cand
            continue
        split = point[j_frac].numerator // point[j_frac].denominator
        floor_bound = value.numerator // value.denominator
        ud = u.copy()
        ud[j_frac] = split
        lu = l.copy()
        lu[j_frac] = split + 1
        stack.append((l, ud, floor_bound))
        stack.append((lu, u, floor_bound))
    return best_value, best_point, nodes, None


def ilp_solve(model: IlpModel, config: SolveConfig | None = None) -> IlpResult:
    """Certified branch-and-bound for the coset integer program.

    The root relaxation (plus optional Gomory cut rounds) runs on the exact
    rational simplex.  The descent solves a float LP per node for speed, but
    converts its duals into integer multipliers whose weak-duality bound is
    evaluated in exact arithmetic; all pruning, bound fixing, and incumbent
    updates are exact, so the result is a proof.  Deterministic: depth-first
    with fixed child order, most-fractional branching (lowest index on
    ties).  On time limit the result carries status ``incumbent-only`` and a
    valid dual bound instead of failing.
    """
    config = config or SolveConfig()
    start = time.monotonic()
    deadline = None if config.time_limit is None else start + config.time_limit

    def timed_out() -> bool:
        return deadline is not None and time.monotonic() > deadline

    # root relaxation and cut rounds, exact
    cut_rows: list[tuple[list[Fraction], Fraction]] = []
    sx, status = _solve_node(model, cut_rows, [])
    if status != OPTIMAL:
        raise ValueError(f"root LP unexpectedly {status}")
    for _ in range(config.cut_rounds):
        if all(v.denominator == 1 for v in sx.point()) or timed_out():
            break
        new_cuts = [
            (coeffs, rhs) for coeffs, rhs in sx.gomory_cuts(config.cuts_per_round)
            if max(abs(v) for v in _scaled_ints(coeffs, rhs)) <= config.cut_coefficient_cap
        ]
        if not new_cuts:
            break
        cut_rows.extend(new_cuts)
        sx, status = _solve_node(model, cut_rows, [])
        if status != OPTIMAL:  # cuts keep the zero vector feasible
            raise AssertionError("cut LP became infeasible")
    root_dual = sx.value()

    # incumbents: exact rounding ascent, then the float MILP heuristic
    incumbent = _heuristic_incumbent(model, sx.point())
    best_value = sum(incumbent)
    best_point = list(incumbent)
    u0 = [model.rhs // model.matrix[j][j] for j in range(model.dim)]
    if config.float_heuristic:
        cand = _milp_heuristic(model, u0, config.heuristic_node_limit)
        if cand is not None and sum(cand) > best_value:
            best_value = sum(cand)
            best_point = cand

    if root_dual.numerator // root_dual.denominator <= best_value:
        return IlpResult(optimum=best_value, argmax=tuple(best_point),
                         nodes_explored=0, status=PROVEN_OPTIMAL,
                         dual_bound=Fraction(best_value))

    use_exact = (config.exact_nodes if config.exact_nodes is not None
                 else model.rhs > _FLOAT_SAFE_RHS)
    descend = _bb_exact if use_exact else _bb_float
    best_value, best_point, nodes, open_bound = descend(
        model, [0] * model.dim, u0, best_value, best_point, deadline)

    if open_bound is None:
        return IlpResult(optimum=best_value, argmax=tuple(best_point),
                         nodes_explored=nodes, status=PROVEN_OPTIMAL,
                         dual_bound=Fraction(best_value))
    dual = min(root_dual, max(open_bound, Fraction(best_value)))
    return IlpResult(optimum=best_value, argmax=tuple(best_point),
                     nodes_explored=nodes, status=INCUMBENT_ONLY,
                     dual_bound=dual)


def _scaled_ints(coeffs, rhs) -> list[int]:
    from math import lcm
    den = lcm(*(Fraction(v).denominator for v in list(coeffs) + [rhs]))
    return [int(Fraction(v) * den) for v in list(coeffs) + [rhs]]


# ---------------------------------------------------------------------------
# code projections and theorem checks

def code_projection(code: Code, shape) -> list[int]:
    """Coordinate i counts codewords whose coset (tabloid image) has index i.

    Projects the inverse of each codeword.  Metric neighbours of c are c
    followed by an adjacent transposition t; on inverses that reads t
    followed by c^-1, which moves the coset c^-1 H the same way the model
    matrix moves tabloids.  Inversion preserves pairwise distances, so the
    inverse code has the same minimum distance and the projection of any
    distance-3 code satisfies the coset constraints.
    """
    shape = check_partition(shape)
    if young.partition_n(shape) != code.n:
        raise ValueError("shape and code have different n")
    ref = young.reference_tabloid(shape)
    index = {t: i for i, t in enumerate(young.enumerate_tabloids(shape))}
    counts = [0] * len(index)
    for c in code.members:
        counts[index[young.act(ref, inverse(c))]] += 1
    return counts


def analytic_prime_bound(p: int) -> int:
    """P(p,3) <= (p-1)! - ceil(p/3) + 2 for primes p >= 11."""
    if p < 11 or not _is_prime(p):
        raise ValueError(f"analytic bound requires a prime p >= 11, got {p}")
    return factorial(p - 1) - _ceil_div(p, 3) + 2


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def systemineq_check(x, p: int) -> tuple[bool, bool, bool]:
    """Evaluate the three structural claims on a feasible vector of the
    p x p tridiagonal system M x <= (p-1)! * 1.

    1. at least ceil(p/3) coordinates are <= (p-1)!/p;
    2. with sum x = (p-1)! - k, at least p - k - 2 coordinates attain max x;
    3. sum x <= (p-1)! - ceil(p/3) + 2.

    Raises if x is infeasible for the tridiagonal model.
    """
    model = model_from_action(young.tridiagonal_reference(p), factorial(p - 1))
    x = [int(v) for v in x]
    if not feasible(model, x):
        raise ValueError("vector is not feasible for the tridiagonal system")
    bound = Fraction(factorial(p - 1), p)
    claim1 = sum(1 for v in x if v <= bound) >= _ceil_div(p, 3)
    k = factorial(p - 1) - sum(x)
    xmax = max(x)
    claim2 = sum(1 for v in x if v == xmax) >= p - k - 2
    claim3 = sum(x) <= factorial(p - 1) - _ceil_div(p, 3) + 2
    return claim1, claim2, claim3


def random_feasible(p: int, seed: int, rounds: int = 200) -> list[int]:
    """Random coordinate ascent from 0 inside the tridiagonal polytope."""
    rng = random.Random(seed)
    model = model_from_action(young.tridiagonal_reference(p), factorial(p - 1))
    rows = model.rows()
    x = [0] * p
    slack = [model.rhs] * p
    for _ in range(rounds):
        j = rng.randrange(p)
        room = None
        for i, row in enumerate(rows):
            a = row[j]
            if a > 0:
                cap = slack[i] // a
                room = cap if room is None else min(room, cap)
        if room and room > 0:
            inc = rng.randint(1, room)
            x[j] += inc
            for i, row in enumerate(rows):
                slack[i] -= row[j] * inc
    return x


# ---------------------------------------------------------------------------
# LP-format export / import

def lp_format_lines(model: IlpModel):
    yield "Maximize"
    yield " obj: " + " + ".join(f"x{i + 1}" for i in range(model.dim))
    yield "Subject To"
    for i, row in enumerate(model.matrix):
        terms = " + ".join(f"{a} x{j + 1}" for j, a in enumerate(row) if a != 0)
        yield f" c{i + 1}: {terms} <= {model.rhs}"
    yield "Bounds"
    for i in range(model.dim):
        yield f" x{i + 1} >= 0"
    yield "General"
    yield " " + " ".join(f"x{i + 1}" for i in range(model.dim))
    yield "End"


def export_lp(model: IlpModel, destination) -> None:
    """Write the model in LP text format (byte-deterministic)."""
    with open(destination, "w") as fh:
        for line in lp_format_lines(model):
            fh.write(line + "\n")


def parse_lp(lines, n: int | None = None, shape=None) -> IlpModel:
    """Parse the subset of LP format written by :func:`export_lp`."""
    section = None
    rows: dict[int, dict[int, int]] = {}
    rhs_values = set()
    dim = 0
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        lowered = line.lower()
        if lowered in ("maximize", "subject to", "bounds", "general", "end"):
            section = lowered
            continue
        if section == "maximize":
            for tok in line.split(":", 1)[-1].replace("+", " ").split():
                dim = max(dim, int(tok.lstrip("x")) )
        elif section == "subject to":
            label, body = line.split(":", 1)
            idx = int(label.strip().lstrip("c")) - 1
            expr, rhs = body.split("<=")
            rhs_values.add(int(rhs.strip()))
            row: dict[int, int] = {}
            for term in expr.split("+"):
                coeff_txt, var_txt = term.split()
                row[int(var_txt.lstrip("x")) - 1] = int(coeff_txt)
            rows[idx] = row
    if len(rhs_values) != 1:
        raise ValueError("expected a single common right-hand side")
    matrix = tuple(
        tuple(rows.get(i, {}).get(j, 0) for j in range(dim))
        for i in range(len(rows))
    )
    return IlpModel(n=n or dim, shape=tuple(shape) if shape else (dim - 1, 1),
                    dim=dim, matrix=matrix, rhs=rhs_values.pop())


def export_matrix(action: ActionMatrix, destination, fmt: str = "matrixmarket") -> None:
    if fmt == "matrixmarket":
        young.write_matrix_market(action.entries, destination)
    elif fmt == "json":
        import json
        with open(destination, "w") as fh:
            json.dump(young.matrix_json_dense(action), fh, indent=1, sort_keys=True)
            fh.write("\n")
    else:
        raise ValueError(f"unknown matrix format {fmt!r}")


# ---------------------------------------------------------------------------
# bound reports

@dataclass(frozen=True)
class BoundEntry:
    method: str  # sphere-packing | analytic-prime | ilp | literature
    value: int
    provenance: str
    shape: tuple[int, ...] | None = None


@dataclass(frozen=True)
class BoundReport:
    n: int
    d: int
    entries: tuple[BoundEntry, ...]

    def minimum(self) -> BoundEntry:
        return min(self.entries, key=lambda e: (e.value, e.method))

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "entries": [
                {
                    "method": e.method,
                    **({"shape": list(e.shape)} if e.shape else {}),
                    "value": str(e.value),
                    "provenance": e.provenance,
                }
                for e in self.entries
            ],
            "minimum": str(self.minimum().value),
        }


def _lit(expr: str, value: int, source: str) -> tuple[int, str]:
    return value, f"{expr} ({source})"


#: published upper bounds on P(n,3) (the literature table is data, not a
#: claim this solver re-derives); values are stored evaluated
_LITERATURE_UB = {
    6: [(factorial(5) - 1, "5!-1, ball-intersection bound"),
        (116, "5!-4, coset integer program, shape (2,2,2)")],
    7: [(factorial(6) - 1, "6!-1, ball-intersection bound"),
        (716, "6!-4, coset integer program, shape (5,1,1)")],
    11: [(factorial(10) - 1, "10!-1, ball-intersection bound"),
         (factorial(10) - 10, "10!-10, coset integer program, shape (9,2)")],
    13: [(factorial(12) - 1, "12!-1, ball-intersection bound"),
         (factorial(12) - 12, "12!-12, coset integer program, shape (11,2)")],
    14: [(factorial(13), "13!, sphere packing"),
         (factorial(13) - 1, "13!-1, no 1-perfect code (coset matrix (6,6,2) invertible)")],
    15: [(factorial(14), "14!, sphere packing"),
         (factorial(14) - 1, "14!-1, no 1-perfect code (irreducible constituents invertible)")],
    17: [(factorial(16) - 1, "16!-1, ball-intersection bound"),
         (factorial(16) - 5, "16!-5, coset integer program, shape (16,1)")],
}

#: published lower bounds on P(n,3) (context only; constructions out of scope)
_LITERATURE_LB = {
    6: 102,
    7: 588,
    11: factorial(11) // 20,
    13: factorial(13) // 24,
    14: 2 * factorial(12),
    15: factorial(15) // 28,
    17: 2 * factorial(15),
}


def literature_upper_bounds(n: int) -> list[tuple[int, str]]:
    out = list(_LITERATURE_UB.get(n, []))
    if n >= 19 and _is_prime(n):
        out.append((factorial(n - 1) - 1, "(n-1)!-1, ball-intersection bound"))
        out.append((factorial(n - 1) - _ceil_div(n, 3) + 2,
                    "(n-1)!-ceil(n/3)+2, analytic prime bound"))
    return out


def bound_report(n: int, shapes=None, config: SolveConfig | None = None) -> BoundReport:
    """Aggregate sphere-packing, analytic, ILP and literature bounds on P(n,3)."""
    if n < 3:
        raise ValueError("bound reports need n >= 3")
    entries = [BoundEntry(method="sphere-packing", value=sphere_packing_bound(n),
                          provenance="(n-1)! = n!/|B_1|")]
    if n >= 11 and _is_prime(n):
        entries.append(BoundEntry(method="analytic-prime",
                                  value=analytic_prime_bound(n),
                                  provenance="(p-1)! - ceil(p/3) + 2"))
    for shape in shapes or []:
        model = build_coset_ilp(n, shape)
        result = ilp_solve(model, config)
        if result.status == PROVEN_OPTIMAL:
            entries.append(BoundEntry(method="ilp", shape=tuple(shape),
                                      value=result.optimum,
                                      provenance="coset integer program, proven optimal"))
        else:
            dual = result.dual_bound
            entries.append(BoundEntry(method="ilp", shape=tuple(shape),
                                      value=dual.numerator // dual.denominator,
                                      provenance="coset integer program, dual bound (time limit)"))
    for value, source in literature_upper_bounds(n):
        entries.append(BoundEntry(method="literature", value=value, provenance=source))
    return BoundReport(n=n, d=3, entries=tuple(entries))
