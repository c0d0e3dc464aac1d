"""Delta sweeps, log-log slope fits, and the two reproduction tables.

A sweep measures sigma_min across a geometric delta grid, evaluates any
requested lower bounds per record, and marks records below the numerical
floor so slope fits can exclude them.  sigma_min is measured by direct SVD of
the tall matrix (discrete) or from the closed-form Gram (continuous): the
Gram route cannot certify ratios below sqrt(machine epsilon), while the deep
super-resolution regime reaches sigma_min/sigma_max ~ 1e-12.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field

import numpy as np

from . import bounds as bounds_mod
from .geometry import generic_exponents
from .lattice import FrequencyDomain
from .operators import CONDITION_FLOOR, gram, sigma_extremes, sigma_extremes_direct
from .scenarios import RNG_ALGORITHM, ScenarioSpec, generate_scenario
from .specfun import (c_alpha_interior_limit, c_alpha_plateau,
                      c_alpha_thresholds)

DEFAULT_DELTAS = {"min": 1e-3, "max": 1e-1, "count": 24}

# fit window where the decay exponents have settled but sigma_min is still
# far above the SVD floor
EXPONENT_WINDOW = (1e-3, 1e-2)


def geometric_grid(dmin: float, dmax: float, count: int) -> np.ndarray:
    """Strictly decreasing geometric grid from dmax down to dmin."""
    if not 0 < dmin < dmax:
        raise ValueError("need 0 < min < max")
    if count < 2:
        raise ValueError("need at least two grid points")
    return np.geomspace(dmax, dmin, count)


@dataclass(frozen=True)
class SweepRecord:
    delta: float
    sigma_min: float
    sigma_max: float
    floor_hit: bool
    bounds: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)
    error: str | None = None


def _measure_sigma(spec: ScenarioSpec, X) -> tuple:
    domain = FrequencyDomain(shape=spec.shape, m=spec.m, d=spec.d,
                             mode=spec.mode, rho=spec.rho)
    if spec.mode == "discrete":
        smin, smax = sigma_extremes_direct(domain, X)
    else:
        rep = sigma_extremes(gram(domain, X))
        smin, smax = rep.sigma_min, rep.sigma_max
    return smin, smax


def sweep(spec: ScenarioSpec, deltas, bound_names=(), trial: int = 0,
          bound_params=None) -> list:
    """One SweepRecord per delta, errors recorded per record, never aborting."""
    deltas = np.asarray(deltas, dtype=float)
    if deltas.size >= 2 and not np.all(np.diff(deltas) < 0):
        raise ValueError("delta grid must be strictly decreasing")
    operator = spec.mode
    params = dict(bound_params or {})
    records = []
    for delta in deltas:
        meta = {"lambda": spec.lam, "d": spec.d, "m": spec.m,
                "seed": spec.seed, "trial": trial, "rng": RNG_ALGORITHM}
        try:
            X = generate_scenario(spec, float(delta), trial=trial)
            smin, smax = _measure_sigma(spec, X)
            floor = smax > 0 and smin / smax < CONDITION_FLOOR
            bvals = {}
            for name in bound_names:
                rep = bounds_mod.evaluate_bound(name, X, spec.m,
                                                operator=operator,
                                                **params.get(name, {}))
                bvals[name] = (rep.applicable, rep.lower)
            records.append(SweepRecord(delta=float(delta), sigma_min=smin,
                                       sigma_max=smax, floor_hit=floor,
                                       bounds=bvals, metadata=meta))
        except Exception as err:  # per-record, by contract
            records.append(SweepRecord(delta=float(delta), sigma_min=math.nan,
                                       sigma_max=math.nan, floor_hit=True,
                                       metadata=meta, error=str(err)))
    return records


def fit_slope(records, window: tuple) -> tuple:
    """Least-squares slope of log sigma_min against log delta inside the window.

    Floor hits and errored records are excluded; requires >= 4 usable points.
    Returns (slope, r_squared).
    """
    lo, hi = window
    pts = [(r.delta, r.sigma_min) for r in records
           if not r.floor_hit and r.error is None and lo <= r.delta <= hi
           and r.sigma_min > 0]
    if len(pts) < 4:
        raise ValueError(f"only {len(pts)} usable records in window {window}")
    x = np.log(np.array([p[0] for p in pts]))
    y = np.log(np.array([p[1] for p in pts]))
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    sst = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 - float(np.sum(resid ** 2)) / sst if sst > 0 else 1.0
    return float(slope), r2


def records_to_csv(records, bound_names=()) -> str:
    """Deterministic CSV: delta, sigma_min, floor_hit, then (applicable, lower) pairs."""
    buf = io.StringIO()
    cols = ["delta", "sigma_min", "floor_hit"]
    for name in bound_names:
        cols += [f"{name}_applicable", f"{name}_lower"]
    buf.write(",".join(cols) + "\n")
    for r in records:
        row = [f"{r.delta:.12g}", f"{r.sigma_min:.12g}", str(int(r.floor_hit))]
        for name in bound_names:
            ok, lower = r.bounds.get(name, (False, 0.0))
            row += [str(int(ok)), f"{lower:.12g}"]
        buf.write(",".join(row) + "\n")
    return buf.getvalue()


# ---------------------------------------------------------------------------
# tables


def table_prelim() -> str:
    """CSV of the scaled first Bessel zeros and both sqrt(c) candidates, d=2..10.

    The plateau column evaluates the constant extension at the right endpoint;
    the interior-limit column is the open-interval formula's limit there (a
    factor sqrt(d) apart).  They are both reported because neither reproduces
    the historical third table row; see the package README.
    """
    buf = io.StringIO()
    buf.write("d,first_zero_over_pi,second_zero_over_pi,"
              "sqrt_c_plateau,sqrt_c_interior_limit\n")
    for d in range(2, 11):
        lo, hi = c_alpha_thresholds(d)
        buf.write(f"{d},{lo:.4f},{hi:.4f},"
                  f"{math.sqrt(c_alpha_plateau(d)):.4f},"
                  f"{math.sqrt(c_alpha_interior_limit(d)):.4f}\n")
    return buf.getvalue()


def _slope_mode(slopes) -> int:
    rounded = [int(round(s)) for s in slopes]
    values, counts = np.unique(rounded, return_counts=True)
    return int(values[np.argmax(counts)])


@dataclass(frozen=True)
class ExponentRow:
    lam: int
    d: int
    slopes: tuple
    mode: int
    gamma: int
    r: int


def exponent_experiment(d: int, lams, m: float = 20.0, trials: int = 5,
                        seed: int = 2024, window: tuple = EXPONENT_WINDOW,
                        grid_count: int = 10) -> list:
    """Fitted decay exponents of generic dilations, per lambda, mode over trials."""
    deltas = geometric_grid(window[0], window[1], grid_count)
    rows = []
    for lam in lams:
        slopes = []
        for trial in range(trials):
            spec = ScenarioSpec(kind="generic", m=m, d=d, lam=lam, seed=seed)
            recs = sweep(spec, deltas, trial=trial)
            slope, _ = fit_slope(recs, window)
            slopes.append(slope)
        gamma, r = generic_exponents(lam, d)
        rows.append(ExponentRow(lam=lam, d=d, slopes=tuple(slopes),
                                mode=_slope_mode(slopes), gamma=gamma, r=r))
    return rows


def table_exponents(d: int, lam_max: int, trials: int = 5, seed: int = 2024,
                    m: float = 20.0) -> str:
    """CSV of fitted exponent modes against gamma(lambda, d) and r(lambda, d)."""
    rows = exponent_experiment(d, range(2, lam_max + 1), m=m, trials=trials,
                               seed=seed)
    buf = io.StringIO()
    buf.write("lambda,d,slope_mode,gamma,r,matches_gamma,matches_r,slopes\n")
    for row in rows:
        slopes = ";".join(f"{s:.3f}" for s in row.slopes)
        buf.write(f"{row.lam},{row.d},{row.mode},{row.gamma},{row.r},"
                  f"{int(row.mode == row.gamma)},{int(row.mode == row.r)},"
                  f"{slopes}\n")
    return buf.getvalue()
