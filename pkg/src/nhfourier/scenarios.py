"""Scenario generators for the decay experiments: points on a line, triangle
and parabola vertices, dilations of a seeded generic draw, clump grids, and
custom point lists.

Randomness comes from a named generator (numpy PCG64); per-trial streams are
derived from SeedSequence(seed, spawn_key=(trial,)) so execution order cannot
change the draws.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import EUCLIDEAN, TORUS, PointSet

RNG_ALGORITHM = "PCG64"

KINDS = ("line", "triangle", "parabola", "generic", "clumps", "custom")


def trial_rng(seed: int, trial: int = 0) -> np.random.Generator:
    """Deterministic per-trial stream: PCG64 over SeedSequence(seed, (trial,))."""
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(trial,))))


@dataclass(frozen=True)
class ScenarioSpec:
    """What to sweep: a point-set family plus the frequency-domain settings."""

    kind: str
    m: float
    d: int = 2
    shape: str = "cube"
    mode: str = "discrete"
    rho: int = 1
    lam: int = 3
    seed: int = 0
    clump_count: int = 2
    clump_gap: float = 0.25
    points: tuple = ()
    space: str = TORUS

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown scenario kind {self.kind!r}")
        if self.kind in ("triangle", "parabola") and self.d != 2:
            raise ValueError(f"{self.kind} scenarios are two-dimensional")
        if self.lam < 1:
            raise ValueError("lambda must be positive")


def _axis_offsets(lam: int) -> np.ndarray:
    """Integer offsets {-floor((lam-1)/2), ..., ceil((lam-1)/2)}."""
    lo = -((lam - 1) // 2)
    return np.arange(lo, lo + lam)


def generic_base(lam: int, d: int, m: float, seed: int, trial: int = 0) -> np.ndarray:
    """lam independent uniform draws from Q_{1/m}, fixed per (seed, trial)."""
    rng = trial_rng(seed, trial)
    return rng.uniform(-1.0 / m, 1.0 / m, size=(lam, d)) * 0.5


def generate_scenario(spec: ScenarioSpec, delta: float, trial: int = 0) -> PointSet:
    """Realize the scenario at scale delta; rejects box overflow."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    if spec.kind == "line":
        offs = _axis_offsets(spec.lam)
        pts = np.zeros((spec.lam, spec.d))
        pts[:, 0] = offs * delta
    elif spec.kind == "triangle":
        pts = np.array([[0.0, 0.0], [delta, 0.0], [0.0, delta]])
    elif spec.kind == "parabola":
        t = _axis_offsets(spec.lam) * delta
        pts = np.stack([t, t * t], axis=1)
    elif spec.kind == "generic":
        pts = generic_base(spec.lam, spec.d, spec.m, spec.seed, trial) * delta
    elif spec.kind == "clumps":
        centers = (_axis_offsets(spec.clump_count)[:, None]
                   * np.eye(spec.d)[0] * spec.clump_gap)
        local = _axis_offsets(spec.lam)[:, None] * np.eye(spec.d)[0] * delta
        pts = (centers[:, None, :] + local[None, :, :]).reshape(-1, spec.d)
    elif spec.kind == "custom":
        pts = np.asarray(spec.points, dtype=float)
    else:  # pragma: no cover
        raise ValueError(spec.kind)
    if np.any(pts < -0.5) or np.any(pts >= 0.5):
        raise ValueError(
            f"scenario {spec.kind} at delta={delta} leaves the fundamental domain")
    return PointSet(points=pts, space=spec.space)
