"""Special functions: Bessel J of real order and its first positive zero, the
sharp ball-minorant constant c(alpha), Dirichlet and sinc kernels, and the
Fourier transform of a ball indicator.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq
from scipy.special import jv

from .errors import MinorantError
from .lattice import unit_ball_volume

BESSEL_X_MAX = 60.0
BESSEL_NU_MAX = 6.0

# ball_indicator_ft keeps 2*pi*m*|x| inside the Bessel argument range
BALL_FT_RANGE = 9.0

# switch to the plateau formula within this distance of the right endpoint,
# where the interior expression hits a 0/0 of the Bessel ratio
_PLATEAU_GUARD = 1e-9


def bessel_j(nu: float, x: float) -> float:
    """J_nu(x) for nu >= 0 and x in [0, 60]."""
    if nu < 0:
        raise ValueError("order nu must be nonnegative")
    if not 0.0 <= x <= BESSEL_X_MAX:
        raise ValueError(f"argument {x} outside supported range [0, {BESSEL_X_MAX}]")
    return float(jv(nu, x))


@lru_cache(maxsize=None)
def bessel_first_zero(nu: float) -> float:
    """First positive zero j_{nu,1}, to absolute accuracy 1e-12.

    Sign scan over [nu+1, nu+10] with step 0.05, then bracketed refinement.
    """
    if not 0.0 <= nu <= BESSEL_NU_MAX:
        raise ValueError("order must lie in [0, 6]")
    f = lambda t: jv(nu, t)
    lo = nu + 1.0
    step = 0.05
    a, fa = lo, f(lo)
    while a < nu + 10.0:
        b = a + step
        fb = f(b)
        if fa == 0.0:
            return float(a)
        if fa * fb < 0:
            root = brentq(f, a, b, xtol=1e-13, rtol=8.9e-16)
            if abs(f(root)) > 1e-11:
                raise RuntimeError(f"zero refinement residual too large at nu={nu}")
            return float(root)
        a, fa = b, fb
    raise ValueError(f"no sign change of J_{nu} found in [{nu + 1}, {nu + 10}]")


def sphere_surface_area(d: int) -> float:
    """|S^{d-1}| = 2 pi^{d/2} / Gamma(d/2)."""
    return 2.0 * math.pi ** (d / 2) / math.gamma(d / 2)


def c_alpha_thresholds(d: int) -> tuple:
    """(j_{d/2-1,1}/pi, j_{d/2,1}/pi): the interval where c(alpha) is nontrivial."""
    return bessel_first_zero(d / 2 - 1) / math.pi, bessel_first_zero(d / 2) / math.pi


def c_alpha_plateau(d: int) -> float:
    """Constant extension of c(alpha) for alpha >= j_{d/2,1}/pi."""
    j_hi = bessel_first_zero(d / 2)
    return (2.0 * math.pi / j_hi) ** d / sphere_surface_area(d)


def c_alpha_interior_limit(d: int) -> float:
    """Limit of the interior formula as alpha approaches the right endpoint.

    Differs from the plateau extension by a factor d; both candidates are
    reported by the preliminary table, neither matches the third row of the
    source table in low dimensions.
    """
    return d * c_alpha_plateau(d)


def c_alpha(alpha: float, d: int) -> float:
    """Sharp minorant value c(alpha) for the unit ball in dimension d >= 2.

    For alpha in the open interval between the scaled first zeros of
    J_{d/2-1} and J_{d/2}:

        c(alpha) = (1/|S^{d-1}|) (2/alpha)^d * g / (1 + g/d),
        g = -pi alpha J_{d/2-1}(pi alpha) / J_{d/2}(pi alpha),

    evaluated as N/(D + N/d) with N = -pi alpha J_{d/2-1}(pi alpha) and
    D = J_{d/2}(pi alpha) so the pole of g at the right endpoint never forms
    an inf/inf.  At and above the right endpoint the plateau value applies.
    """
    if d < 2:
        raise ValueError("dimension must be >= 2")
    lo, hi = c_alpha_thresholds(d)
    if alpha <= lo:
        raise MinorantError(
            f"alpha={alpha} <= {lo:.6f}: no nontrivial minorant exists"
        )
    if alpha >= hi - _PLATEAU_GUARD:
        return c_alpha_plateau(d)
    num = -math.pi * alpha * bessel_j(d / 2 - 1, math.pi * alpha)
    den = bessel_j(d / 2, math.pi * alpha)
    ratio = num / (den + num / d)
    return ratio * (2.0 / alpha) ** d / sphere_surface_area(d)


def dirichlet(m: int, t: float) -> float:
    """D_m(t) = sum_{n=-m}^{m} e^{2 pi i n t}, evaluated stably."""
    if m < 0 or m != int(m):
        raise ValueError("m must be a nonnegative integer")
    s = math.sin(math.pi * t)
    if abs(s) < 1e-12:
        return 2.0 * m + 1.0
    return math.sin((2 * m + 1) * math.pi * t) / s


def dirichlet_array(m: int, t: np.ndarray) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    s = np.sin(np.pi * t)
    near = np.abs(s) < 1e-12
    safe = np.where(near, 1.0, s)
    vals = np.sin((2 * m + 1) * np.pi * t) / safe
    return np.where(near, 2.0 * m + 1.0, vals)


def sinc(t: float) -> float:
    """sin(pi t) / (pi t), with value 1 at t = 0."""
    if abs(t) < 1e-9:
        z = math.pi * t
        return 1.0 - z * z / 6.0
    return math.sin(math.pi * t) / (math.pi * t)


def sinc_array(t: np.ndarray) -> np.ndarray:
    return np.sinc(np.asarray(t, dtype=float))


def ball_ft_radial(m: float, r, d: int):
    """Radial profile of the ball-indicator transform at |x| = r (array-safe)."""
    r = np.asarray(r, dtype=float)
    out = np.empty_like(r)
    zero = r == 0.0
    out[zero] = unit_ball_volume(d) * m ** d
    rs = r[~zero]
    out[~zero] = (m / rs) ** (d / 2) * jv(d / 2, 2.0 * math.pi * m * rs)
    return out


def ball_indicator_ft(m: float, x: np.ndarray, d: int) -> float:
    """integral over the radius-m ball of e^{2 pi i w.x} dw; real and radial.

    Equals (m/|x|)^{d/2} J_{d/2}(2 pi m |x|) away from 0 and the ball volume
    at 0.  Requires m |x|_2 <= 9 to stay inside the Bessel argument range.
    """
    if m <= 0:
        raise ValueError("radius m must be positive")
    x = np.asarray(x, dtype=float)
    r = float(np.linalg.norm(x))
    if m * r > BALL_FT_RANGE:
        raise ValueError(f"m*|x| = {m * r:.3f} exceeds supported range {BALL_FT_RANGE}")
    return float(ball_ft_radial(m, np.array([r]), d)[0])
