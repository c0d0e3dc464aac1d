"""Frequency-domain geometry: lattice enumeration, point counts, and volumes.

A frequency domain is a closed ball or cube of radius ``m`` in ``R^d``,
either sampled on the (optionally refined) integer lattice or kept
continuous.  Enumeration order is lexicographic so that every matrix built
downstream is reproducible bit for bit.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .errors import BudgetError

ENUMERATION_BUDGET = 10_000_000

# Closed-ball membership |omega|_p <= m is decided with this absolute slack so
# that exact boundary lattice points survive float rounding.
_BOUNDARY_EPS = 1e-9

SHAPES = ("cube", "ball")
MODES = ("discrete", "continuous")


@dataclass(frozen=True)
class FrequencyDomain:
    """Ball or cube of radius ``m``, discrete (with oversampling ``rho``) or continuous."""

    shape: str
    m: float
    d: int
    mode: str = "discrete"
    rho: int = 1

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ValueError(f"unknown shape {self.shape!r}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if not self.m > 0:
            raise ValueError("radius m must be positive")
        if self.d < 1:
            raise ValueError("dimension must be >= 1")
        if self.rho < 1 or self.rho != int(self.rho):
            raise ValueError("oversampling rho must be a positive integer")

    @property
    def p(self) -> float:
        """The l^p index of the domain: 2 for the ball, inf for the cube."""
        return 2.0 if self.shape == "ball" else math.inf

    @property
    def is_discrete(self) -> bool:
        return self.mode == "discrete"

    def with_radius(self, m: float) -> "FrequencyDomain":
        return replace(self, m=m)

    def with_rho(self, rho: int) -> "FrequencyDomain":
        return replace(self, rho=rho)

    def to_json(self) -> str:
        return json.dumps(
            {"shape": self.shape, "m": self.m, "mode": self.mode,
             "rho": self.rho, "d": self.d}
        )

    @staticmethod
    def from_json(text: str) -> "FrequencyDomain":
        obj = json.loads(text)
        return FrequencyDomain(shape=obj["shape"], m=float(obj["m"]), d=int(obj["d"]),
                               mode=obj.get("mode", "discrete"), rho=int(obj.get("rho", 1)))


def _axis_bound(domain: FrequencyDomain) -> int:
    """Largest integer n with n/rho inside the domain along one axis."""
    return int(math.floor(domain.m * domain.rho + _BOUNDARY_EPS))


def enumerate_lattice(domain: FrequencyDomain, budget: int = ENUMERATION_BUDGET) -> np.ndarray:
    """All frequencies in the domain intersected with (rho^-1 Z)^d, lexicographic.

    Returns an (N, d) float array.  Rejects with :class:`BudgetError` when the
    bounding grid exceeds ``budget`` points.
    """
    if not domain.is_discrete:
        raise ValueError("enumerate_lattice requires a discrete domain")
    b = _axis_bound(domain)
    grid_size = (2 * b + 1) ** domain.d
    if grid_size > budget:
        raise BudgetError(
            f"lattice grid needs {grid_size} points, budget is {budget}",
            required=grid_size,
        )
    axis = np.arange(-b, b + 1)
    mesh = np.meshgrid(*([axis] * domain.d), indexing="ij")
    pts = np.stack([m.ravel() for m in mesh], axis=-1).astype(float)
    if domain.shape == "ball":
        r2 = (domain.m * domain.rho) ** 2 + _BOUNDARY_EPS
        pts = pts[np.sum(pts * pts, axis=1) <= r2]
    return pts / domain.rho


@lru_cache(maxsize=None)
def _ball_lattice_count(bound_sq: int, d: int) -> int:
    """Number of integer vectors n in Z^d with |n|^2 <= bound_sq (exact)."""
    if d == 0:
        return 1
    total = _ball_lattice_count(bound_sq, d - 1)
    i = 1
    while i * i <= bound_sq:
        total += 2 * _ball_lattice_count(bound_sq - i * i, d - 1)
        i += 1
    return total


def lattice_count(domain: FrequencyDomain) -> int:
    """|Omega intersect (rho^-1 Z)^d| without materializing the cube case."""
    b = _axis_bound(domain)
    if domain.shape == "cube":
        return (2 * b + 1) ** domain.d
    bound_sq = int(math.floor((domain.m * domain.rho) ** 2 + _BOUNDARY_EPS))
    return _ball_lattice_count(bound_sq, domain.d)


def unit_ball_volume(d: int) -> float:
    return math.pi ** (d / 2) / math.gamma(d / 2 + 1)


def volume(domain: FrequencyDomain) -> float:
    """Lebesgue measure of the domain."""
    if domain.shape == "cube":
        return (2.0 * domain.m) ** domain.d
    return unit_ball_volume(domain.d) * domain.m ** domain.d


def count_or_volume(domain: FrequencyDomain) -> float:
    """Lattice count for discrete domains, Lebesgue measure for continuous ones."""
    return float(lattice_count(domain)) if domain.is_discrete else volume(domain)
