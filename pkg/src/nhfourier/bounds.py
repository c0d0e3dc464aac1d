"""Lower bounds on the smallest singular value, each evaluated with an explicit
hypothesis checklist: well-separated nodes (cube and ball), the
super-resolution multiscale estimates, their clump corollaries, and the local
hyperplane bounds for the continuous operator.

Inapplicability is a value, not an error: every report records which
hypothesis failed, so parameter sweeps can see exactly where each estimate
holds.  When no scale tau is supplied, a geometric grid of scales is scanned
and the report with the largest lower bound is returned.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetError, MinorantError, NoDecompositionError, NotClumpsError
from .geometry import (PointSet, detect_clumps, local_hyperplane_decomposition,
                       local_sparsity, min_separation, neighborhood, wrap_torus)
from .lattice import FrequencyDomain, lattice_count, unit_ball_volume, volume
from .specfun import c_alpha, c_alpha_thresholds

DISCRETE = "discrete"
CONTINUOUS = "continuous"

BETA_MIN = 1.0 / (2.0 * math.log(2.0))

_EPS = 1e-12

THEOREMS = ("wellsep_cube", "wellsep_ball", "sr_cube", "sr_ball",
            "clump_cube", "clump_ball", "hyper_cube", "hyper_ball")


@dataclass(frozen=True)
class Hypothesis:
    name: str
    required: str
    actual: float | str
    passed: bool


@dataclass(frozen=True)
class BoundReport:
    theorem: str
    operator: str
    applicable: bool
    hypotheses: tuple
    lower: float
    upper: float | None = None
    constants: dict = field(default_factory=dict)
    reason: str | None = None

    def to_json(self) -> str:
        return json.dumps({
            "theorem": self.theorem,
            "operator": self.operator,
            "applicable": self.applicable,
            "hypotheses": [
                {"name": h.name, "required": h.required,
                 "actual": h.actual, "pass": h.passed}
                for h in self.hypotheses
            ],
            "lower": self.lower,
            "upper": self.upper,
            "constants": {k: (v if isinstance(v, str) else float(v))
                          for k, v in self.constants.items()},
            "reason": self.reason,
        })


def _finish(theorem, operator, hyps, lower, upper=None, constants=None, reason=None):
    ok = all(h.passed for h in hyps)
    return BoundReport(theorem=theorem, operator=operator, applicable=ok,
                       hypotheses=tuple(hyps),
                       lower=lower if ok else 0.0,
                       upper=upper if ok else None,
                       constants=constants or {}, reason=reason)


def _measure(shape: str, radius: float, d: int, operator: str) -> float:
    dom = FrequencyDomain(shape=shape, m=max(radius, _EPS), d=d,
                          mode="discrete" if operator == DISCRETE else "continuous")
    return float(lattice_count(dom)) if operator == DISCRETE else volume(dom)


def _ball_ratio(radius: float, d: int) -> float:
    """|B_r| / |B_r|_* computed exactly by enumeration of the count."""
    count = lattice_count(FrequencyDomain(shape="ball", m=radius, d=d))
    return unit_ball_volume(d) * radius ** d / count


def multiscale_product(X: PointSet, k: int, scale: float, q: float) -> float:
    """prod over 0 < |x_j - x_k|_q <= scale of |x_j - x_k|_q / scale.

    Every factor lies in (0, 1]; an empty product is 1.
    """
    if scale <= 0:
        raise ValueError("scale must be positive")
    diff = X.points - X.points[k]
    if X.space == "torus":
        diff = wrap_torus(diff)
    diff = np.abs(diff)
    if math.isinf(q):
        dist = diff.max(axis=1)
    elif q == 1:
        dist = diff.sum(axis=1)
    elif q == 2:
        dist = np.sqrt((diff * diff).sum(axis=1))
    else:
        dist = (diff ** q).sum(axis=1) ** (1.0 / q)
    sel = (dist > 0) & (dist <= scale)
    return float(np.prod(dist[sel] / scale)) if sel.any() else 1.0


def _min_multiscale_product(X: PointSet, scale: float, q: float) -> float:
    return min(multiscale_product(X, k, scale, q) for k in range(X.size))


# ---------------------------------------------------------------------------
# well-separated bounds


def wellsep_cube(X: PointSet, m: float, beta: float | None = None,
                 operator: str = DISCRETE) -> BoundReport:
    """Separation beta*d/m in l^inf gives sigma_min >= sqrt((2-e^{1/(2 beta)}) |Q_m|)."""
    d = X.dimension
    if d < 2:
        raise ValueError("dimension must be >= 2")
    if m < 1:
        raise ValueError("need m >= 1")
    sep = min_separation(X, math.inf) if X.size >= 2 else math.inf
    if beta is None:
        beta = max(BETA_MIN, m * sep / d if math.isfinite(sep) else BETA_MIN)
    if beta < BETA_MIN - _EPS:
        raise ValueError(f"beta must be >= 1/(2 log 2) = {BETA_MIN:.6f}")
    hyps = [Hypothesis("separation", f"Delta_inf >= beta*d/m = {beta * d / m:.6g}",
                       sep, sep >= beta * d / m - _EPS)]
    lo_factor = 2.0 - math.exp(1.0 / (2.0 * beta))
    hi_factor = math.exp(1.0 / (2.0 * beta))
    V = _measure("cube", m, d, operator)
    lower = math.sqrt(max(lo_factor, 0.0) * V)
    upper = math.sqrt(hi_factor * V)
    return _finish("wellsep_cube", operator, hyps, lower, upper,
                   constants={"beta": beta, "separation": sep,
                              "minorant_factor": lo_factor, "measure": V})


def wellsep_ball(X: PointSet, m: float, alpha: float | None = None,
                 operator: str = DISCRETE) -> BoundReport:
    """Separation alpha/m in l^2 gives sigma_min >= sqrt(c(alpha) m^d)."""
    d = X.dimension
    if d < 2:
        raise ValueError("dimension must be >= 2")
    if m <= 0:
        raise ValueError("need m > 0")
    lo, _ = c_alpha_thresholds(d)
    sep = min_separation(X, 2) if X.size >= 2 else math.inf
    if alpha is None:
        cap = m * sep if math.isfinite(sep) else lo * 8.0
        if cap <= lo:
            alpha = lo * (1.0 + 1e-9)
        else:
            grid = np.linspace(lo * (1.0 + 1e-9), cap, 64)
            alpha = float(max(grid, key=lambda a: c_alpha(a, d)))
    if alpha <= lo:
        raise MinorantError(
            f"alpha={alpha} <= {lo:.6f}: no nontrivial minorant exists")
    hyps = [Hypothesis("separation", f"Delta_2 >= alpha/m = {alpha / m:.6g}",
                       sep, sep >= alpha / m - _EPS)]
    cval = c_alpha(alpha, d)
    lower = math.sqrt(cval * m ** d)
    return _finish("wellsep_ball", operator, hyps, lower,
                   constants={"alpha": alpha, "separation": sep, "c_alpha": cval})


# ---------------------------------------------------------------------------
# super-resolution multiscale bounds


def _sr_cube_at(X, m, tau, beta, operator):
    d, s = X.dimension, X.size
    nu = local_sparsity(X, tau, math.inf)
    if beta is None:
        beta = max(BETA_MIN, tau * m / (2.0 * d * nu))
    hyps = [
        Hypothesis("samples", "m >= 4s", m, m >= 4 * s - _EPS),
        Hypothesis("scale", f"0 < tau <= 1/(4d) = {1 / (4 * d):.6g}",
                   tau, 0 < tau <= 1 / (4 * d) + _EPS),
        Hypothesis("density", f"2 beta d nu / tau = {2 * beta * d * nu / tau:.6g} <= m",
                   m, 2 * beta * d * nu / tau <= m + _EPS),
    ]
    g_factor = 1.0 - 0.5 * math.exp(1.0 / (2.0 * beta))
    V = _measure("cube", m / (2.0 * nu), d, operator)
    prod = _min_multiscale_product(X, nu / m, 1)
    lower = math.sqrt(2.0 / s) * max(g_factor, 0.0) ** (nu / 2.0) * math.sqrt(V) * prod
    return _finish("sr_cube", operator, hyps, lower,
                   constants={"nu": nu, "tau": tau, "beta": beta,
                              "product": prod, "measure": V})


def _sr_ball_at(X, m, tau, alpha, operator):
    d, s = X.dimension, X.size
    lo, _ = c_alpha_thresholds(d)
    nu = local_sparsity(X, tau, 2)
    gate = tau * m / (2.0 * nu)

    def build(a):
        hyps = [
            Hypothesis("samples", f"m >= 4 s sqrt(d) = {4 * s * math.sqrt(d):.6g}",
                       m, m >= 4 * s * math.sqrt(d) - _EPS),
            Hypothesis("scale", f"0 < tau <= 1/(4 sqrt(d)) = {1 / (4 * math.sqrt(d)):.6g}",
                       tau, 0 < tau <= 1 / (4 * math.sqrt(d)) + _EPS),
            Hypothesis("density", f"2 alpha nu / tau = {2 * a * nu / tau:.6g} <= m",
                       m, 2 * a * nu / tau <= m + _EPS),
        ]
        cval = c_alpha(a, d)
        ratio = _ball_ratio(a / tau, d)
        V = _measure("ball", m / (2.0 * nu), d, operator)
        prod = _min_multiscale_product(X, nu / m, 2)
        # (c/|B_1|)^{nu/2} and the 2^{-(nu-1)/2} quantization cost follow the
        # constituent estimates; see the decisions ledger on the constant's
        # printed orientation.
        pref = (cval / unit_ball_volume(d)) ** (nu / 2.0) * ratio ** (nu / 2.0)
        lower = (pref * 2.0 ** (-(nu - 1) / 2.0) * math.sqrt(V) * prod
                 / math.sqrt(s))
        return _finish("sr_ball", operator, hyps, lower,
                       constants={"nu": nu, "tau": tau, "alpha": a,
                                  "c_alpha": cval, "ball_ratio": ratio,
                                  "product": prod, "measure": V})

    if alpha is not None:
        if alpha <= lo:
            raise MinorantError(
                f"alpha={alpha} <= {lo:.6f}: no nontrivial minorant exists")
        return build(alpha)
    if gate <= lo:
        return build(lo * (1.0 + 1e-9))
    grid = np.linspace(lo * (1.0 + 1e-9), gate, 24)
    reports = [build(float(a)) for a in grid]
    return max(reports, key=lambda rep: rep.lower)


def _tau_scan(X, m, cap, base, evaluate):
    """Geometric tau grid in (0, cap]; best applicable report wins."""
    taus = []
    t = base
    while t < cap:
        taus.append(t)
        t *= 2.0
    taus.append(cap)
    reports = [evaluate(t) for t in taus]
    applicable = [r for r in reports if r.applicable]
    if applicable:
        return max(applicable, key=lambda rep: rep.lower)
    return max(reports, key=lambda rep: sum(h.passed for h in rep.hypotheses))


def sr_cube(X: PointSet, m: float, tau: float | None = None,
            beta: float | None = None, operator: str = DISCRETE) -> BoundReport:
    """Multiscale lower bound for arbitrary nodes, samples in the cube Q_m."""
    d = X.dimension
    if d < 2:
        raise ValueError("dimension must be >= 2")
    if beta is not None and beta < BETA_MIN - _EPS:
        raise ValueError(f"beta must be >= 1/(2 log 2) = {BETA_MIN:.6f}")
    if tau is not None:
        return _sr_cube_at(X, m, tau, beta, operator)
    return _tau_scan(X, m, 1 / (4 * d), 2.0 * BETA_MIN * d / m,
                     lambda t: _sr_cube_at(X, m, t, beta, operator))


def sr_ball(X: PointSet, m: float, tau: float | None = None,
            alpha: float | None = None, operator: str = DISCRETE) -> BoundReport:
    """Multiscale lower bound for arbitrary nodes, samples in the ball B_m."""
    d = X.dimension
    if d < 2:
        raise ValueError("dimension must be >= 2")
    lo, _ = c_alpha_thresholds(d)
    if tau is not None:
        return _sr_ball_at(X, m, tau, alpha, operator)
    return _tau_scan(X, m, 1 / (4 * math.sqrt(d)), 2.0 * lo / m,
                     lambda t: _sr_ball_at(X, m, t, alpha, operator))


# ---------------------------------------------------------------------------
# clump corollaries


def _clump_cube_value(s, d, lam, m, beta, delta, operator):
    g_factor = max(1.0 - 0.5 * math.exp(1.0 / (2.0 * beta)), 0.0)
    V = _measure("cube", m / (2.0 * lam), d, operator)
    gap = 1.0 if lam == 1 else (m * delta / lam) ** (lam - 1)
    return math.sqrt(2.0 / s) * g_factor ** (lam / 2.0) * math.sqrt(V) * gap


def _clump_ball_value(s, d, lam, m, alpha, tau, delta, operator):
    cval = c_alpha(alpha, d)
    ratio = _ball_ratio(alpha / tau, d)
    V = _measure("ball", m / (2.0 * lam), d, operator)
    gap = 1.0 if lam == 1 else (m * delta / lam) ** (lam - 1)
    pref = (cval / unit_ball_volume(d)) ** (lam / 2.0) * ratio ** (lam / 2.0)
    return pref * 2.0 ** (-(lam - 1) / 2.0) * math.sqrt(V) * gap / math.sqrt(s)


def _clump_cube_at(X, m, tau, beta, operator):
    d, s = X.dimension, X.size
    try:
        clumps = detect_clumps(X, tau, math.inf)
    except NotClumpsError as err:
        hyp = Hypothesis("clumps", f"clump configuration at (inf, {tau:.6g})",
                         str(err), False)
        return _finish("clump_cube", operator, [hyp], 0.0, reason=str(err))
    lam = clumps.lam
    if beta is None:
        beta = max(BETA_MIN, tau * m / (2.0 * d * lam))
    delta = min_separation(X, 1) if s >= 2 else None
    hyps = [
        Hypothesis("clumps", f"clump configuration at (inf, {tau:.6g})",
                   f"lambda={lam}", True),
        Hypothesis("samples", "m >= 4s", m, m >= 4 * s - _EPS),
        Hypothesis("gap", f"Delta_1 <= lambda/m = {lam / m:.6g}",
                   delta if delta is not None else "n/a",
                   delta is None or delta <= lam / m + _EPS),
        Hypothesis("scale",
                   f"2 beta d lambda/m = {2 * beta * d * lam / m:.6g} <= tau "
                   f"<= 1/(4d) = {1 / (4 * d):.6g}",
                   tau,
                   2 * beta * d * lam / m - _EPS <= tau <= 1 / (4 * d) + _EPS),
    ]
    lower = _clump_cube_value(s, d, lam, m, beta, delta or 0.0, operator)
    return _finish("clump_cube", operator, hyps, lower,
                   constants={"lambda": lam, "tau": tau, "beta": beta,
                              "delta": delta if delta is not None else math.nan})


def _clump_ball_at(X, m, tau, alpha, operator):
    d, s = X.dimension, X.size
    lo, _ = c_alpha_thresholds(d)
    try:
        clumps = detect_clumps(X, tau, 2)
    except NotClumpsError as err:
        hyp = Hypothesis("clumps", f"clump configuration at (2, {tau:.6g})",
                         str(err), False)
        return _finish("clump_ball", operator, [hyp], 0.0, reason=str(err))
    lam = clumps.lam
    delta = min_separation(X, 2) if s >= 2 else None

    def build(a):
        hyps = [
            Hypothesis("clumps", f"clump configuration at (2, {tau:.6g})",
                       f"lambda={lam}", True),
            Hypothesis("samples", f"m >= 4 s sqrt(d) = {4 * s * math.sqrt(d):.6g}",
                       m, m >= 4 * s * math.sqrt(d) - _EPS),
            Hypothesis("gap", f"Delta_2 <= lambda/m = {lam / m:.6g}",
                       delta if delta is not None else "n/a",
                       delta is None or delta <= lam / m + _EPS),
            Hypothesis("scale",
                       f"2 alpha lambda/m = {2 * a * lam / m:.6g} <= tau "
                       f"<= 1/(4 sqrt(d)) = {1 / (4 * math.sqrt(d)):.6g}",
                       tau,
                       2 * a * lam / m - _EPS <= tau <= 1 / (4 * math.sqrt(d)) + _EPS),
        ]
        lower = _clump_ball_value(s, d, lam, m, a, tau, delta or 0.0, operator)
        return _finish("clump_ball", operator, hyps, lower,
                       constants={"lambda": lam, "tau": tau, "alpha": a,
                                  "c_alpha": c_alpha(a, d),
                                  "delta": delta if delta is not None else math.nan})

    if alpha is not None:
        if alpha <= lo:
            raise MinorantError(
                f"alpha={alpha} <= {lo:.6f}: no nontrivial minorant exists")
        return build(alpha)
    gate = tau * m / (2.0 * lam)
    if gate <= lo:
        return build(lo * (1.0 + 1e-9))
    grid = np.linspace(lo * (1.0 + 1e-9), gate, 24)
    return max((build(float(a)) for a in grid), key=lambda rep: rep.lower)


def clump_cube(X: PointSet, m: float, tau: float | None = None,
               beta: float | None = None, operator: str = DISCRETE) -> BoundReport:
    """Clump corollary for the cube: lower bound with the (m delta/lambda)^(lambda-1) gap term."""
    if X.dimension < 2:
        raise ValueError("dimension must be >= 2")
    if beta is not None and beta < BETA_MIN - _EPS:
        raise ValueError(f"beta must be >= 1/(2 log 2) = {BETA_MIN:.6f}")
    d = X.dimension
    if tau is not None:
        return _clump_cube_at(X, m, tau, beta, operator)
    return _tau_scan(X, m, 1 / (4 * d), 2.0 * BETA_MIN * d / m,
                     lambda t: _clump_cube_at(X, m, t, beta, operator))


def clump_ball(X: PointSet, m: float, tau: float | None = None,
               alpha: float | None = None, operator: str = DISCRETE) -> BoundReport:
    """Clump corollary for the ball."""
    if X.dimension < 2:
        raise ValueError("dimension must be >= 2")
    d = X.dimension
    lo, _ = c_alpha_thresholds(d)
    if tau is not None:
        return _clump_ball_at(X, m, tau, alpha, operator)
    return _tau_scan(X, m, 1 / (4 * math.sqrt(d)), 2.0 * lo / m,
                     lambda t: _clump_ball_at(X, m, t, alpha, operator))


# ---------------------------------------------------------------------------
# hyperplane bounds (continuous operator only)


def _node_decompositions(X, tau, p, r_max):
    """Cover of every node's tau-neighborhood; the interpolants need the whole
    neighborhood covered, so the decomposition scale is tau itself."""
    decs = []
    for k in range(X.size):
        if neighborhood(X, k, tau, p).size <= 1:
            decs.append(None)
            continue
        decs.append(local_hyperplane_decomposition(X, k, tau, p, r_max=r_max))
    return decs


def _hyper_at(theorem, X, m, tau, param, operator, r_max):
    d, s = X.dimension, X.size
    cube = theorem == "hyper_cube"
    p = math.inf if cube else 2
    nu = local_sparsity(X, tau, p)
    if cube:
        beta = param if param is not None else max(BETA_MIN, tau * m / (2.0 * d * nu))
        gate = 2 * beta * d * nu / tau
        cap = 1 / (4 * d)
        sample_req = 4 * s
    else:
        lo, _ = c_alpha_thresholds(d)
        if param is not None:
            alpha = param
        else:
            gate_max = tau * m / (2.0 * nu)
            if gate_max <= lo:
                alpha = lo * (1.0 + 1e-9)
            else:
                grid = np.linspace(lo * (1.0 + 1e-9), gate_max, 24)
                alpha = float(max(grid, key=lambda a: (c_alpha(a, d)
                                                       * _ball_ratio(a / tau, d))))
        gate = 2 * alpha * nu / tau
        cap = 1 / (4 * math.sqrt(d))
        sample_req = 4 * s * math.sqrt(d)
    try:
        decs = _node_decompositions(X, tau, p, r_max)
    except (BudgetError, NoDecompositionError) as err:
        hyp = Hypothesis("decomposition", "hyperplane cover of each neighborhood",
                         str(err), False)
        return _finish(theorem, operator, [hyp], 0.0, reason=str(err))
    r = max((dec.r for dec in decs if dec is not None), default=0)
    all_dists = [dist for dec in decs if dec is not None for dist in dec.distances]
    eta = min(all_dists) if all_dists else math.nan
    # per-node construction cap: every plane distance <= (r_k + 1)/(2m)
    cap_ratio = max((dist * 2.0 * m / (dec.r + 1)
                     for dec in decs if dec is not None
                     for dist in dec.distances), default=0.0)
    hyps = [
        Hypothesis("samples", f"m >= {sample_req:.6g}", m, m >= sample_req - _EPS),
        Hypothesis("scale", f"0 < tau <= {cap:.6g}", tau, 0 < tau <= cap + _EPS),
        Hypothesis("density", f"{gate:.6g} <= m", m, gate <= m + _EPS),
        Hypothesis("eta", "plane distances <= (r_k+1)/(2m) at every node",
                   cap_ratio, cap_ratio <= 1.0 + _EPS),
    ]
    V = _measure("cube" if cube else "ball", m / (2.0 * r + 2.0), d, operator)
    if r == 0:
        tail = 1.0
    else:
        tail = 2.0 ** (-r / 2.0) * (2.0 * m * eta / (r + 1.0)) ** r
    if cube:
        g_factor = max(1.0 - 0.5 * math.exp(1.0 / (2.0 * beta)), 0.0)
        lower = math.sqrt(2.0 / s) * g_factor ** (nu / 2.0) * math.sqrt(V) * tail
        constants = {"nu": nu, "tau": tau, "beta": beta, "r": r, "eta": eta,
                     "measure": V}
    else:
        cval = c_alpha(alpha, d)
        ratio = _ball_ratio(alpha / tau, d)
        pref = (cval / unit_ball_volume(d)) ** (nu / 2.0) * ratio ** (nu / 2.0)
        lower = pref * math.sqrt(V) * tail / math.sqrt(s)
        constants = {"nu": nu, "tau": tau, "alpha": alpha, "c_alpha": cval,
                     "ball_ratio": ratio, "r": r, "eta": eta, "measure": V}
    return _finish(theorem, operator, hyps, lower, constants=constants)


def hyper_cube(X: PointSet, m: float, tau: float | None = None,
               beta: float | None = None, operator: str = CONTINUOUS,
               r_max: int = 12) -> BoundReport:
    """Hyperplane lower bound, samples in the cube; continuous operator only."""
    if operator != CONTINUOUS:
        raise ValueError("hyperplane bounds are stated for the continuous operator")
    d = X.dimension
    if d < 2:
        raise ValueError("dimension must be >= 2")
    if tau is not None:
        return _hyper_at("hyper_cube", X, m, tau, beta, operator, r_max)
    return _tau_scan(X, m, 1 / (4 * d), 2.0 * BETA_MIN * d / m,
                     lambda t: _hyper_at("hyper_cube", X, m, t, beta, operator, r_max))


def hyper_ball(X: PointSet, m: float, tau: float | None = None,
               alpha: float | None = None, operator: str = CONTINUOUS,
               r_max: int = 12) -> BoundReport:
    """Hyperplane lower bound, samples in the ball; continuous operator only."""
    if operator != CONTINUOUS:
        raise ValueError("hyperplane bounds are stated for the continuous operator")
    d = X.dimension
    if d < 2:
        raise ValueError("dimension must be >= 2")
    lo, _ = c_alpha_thresholds(d)
    if tau is not None:
        return _hyper_at("hyper_ball", X, m, tau, alpha, operator, r_max)
    return _tau_scan(X, m, 1 / (4 * math.sqrt(d)), 2.0 * lo / m,
                     lambda t: _hyper_at("hyper_ball", X, m, t, alpha, operator, r_max))


_EVALUATORS = {
    "wellsep_cube": wellsep_cube,
    "wellsep_ball": wellsep_ball,
    "sr_cube": sr_cube,
    "sr_ball": sr_ball,
    "clump_cube": clump_cube,
    "clump_ball": clump_ball,
    "hyper_cube": hyper_cube,
    "hyper_ball": hyper_ball,
}


def evaluate_bound(name: str, X: PointSet, m: float, operator: str = DISCRETE,
                   **params) -> BoundReport:
    """Dispatch by theorem name; unknown names are a config error."""
    if name not in _EVALUATORS:
        raise ValueError(f"unknown bound {name!r}; choose from {sorted(_EVALUATORS)}")
    if name.startswith("hyper"):
        params.setdefault("operator", CONTINUOUS)
        return _EVALUATORS[name](X, m, **params)
    return _EVALUATORS[name](X, m, operator=operator, **params)
