"""Nonharmonic Fourier matrices, Gram matrices of the discrete and continuous
operators, extreme singular values via a cyclic Jacobi Hermitian eigensolver,
and minimum-norm trigonometric interpolation.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, RankDeficiencyError
from .geometry import PointSet, wrap_torus
from .lattice import (ENUMERATION_BUDGET, FrequencyDomain, count_or_volume,
                      enumerate_lattice, lattice_count, volume)
from .specfun import ball_ft_radial, dirichlet_array, sinc_array

# sigma_min/sigma_max below this ratio cannot be certified in double precision
CONDITION_FLOOR = 1e-15

_JACOBI_TOL = 1e-14
_JACOBI_MAX_SWEEPS = 64


# ---------------------------------------------------------------------------
# trigonometric polynomials as coefficient maps over a frequency list


class TrigPolynomial:
    """f(x) = sum_w F(w) e^{2 pi i w.x} with frequencies w from a finite list.

    Frequencies are integer vectors except where an oversampled lattice is in
    play; coefficients are complex.  The L^2(T^d) norm is the l^2 norm of the
    coefficients (Parseval).
    """

    def __init__(self, freqs: np.ndarray, coeffs: np.ndarray):
        freqs = np.atleast_2d(np.asarray(freqs, dtype=float))
        coeffs = np.asarray(coeffs, dtype=complex).ravel()
        if freqs.shape[0] != coeffs.shape[0]:
            raise ValueError("frequency list and coefficient list disagree")
        self.freqs = freqs
        self.coeffs = coeffs

    @property
    def dimension(self) -> int:
        return self.freqs.shape[1]

    def l2_norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def evaluate(self, x: np.ndarray) -> complex | np.ndarray:
        x = np.asarray(x, dtype=float)
        single = x.ndim == 1
        pts = np.atleast_2d(x)
        phases = np.exp(2j * np.pi * (pts @ self.freqs.T))
        vals = phases @ self.coeffs
        return complex(vals[0]) if single else vals

    def support_radius(self, p: float) -> float:
        a = np.abs(self.freqs)
        if math.isinf(p):
            norms = a.max(axis=1)
        elif p == 1:
            norms = a.sum(axis=1)
        elif p == 2:
            norms = np.sqrt((a * a).sum(axis=1))
        else:
            norms = (a ** p).sum(axis=1) ** (1.0 / p)
        keep = np.abs(self.coeffs) > 1e-12
        return float(norms[keep].max()) if keep.any() else 0.0

    def prune(self, tol: float = 0.0) -> "TrigPolynomial":
        keep = np.abs(self.coeffs) > tol
        if not keep.any():
            keep = np.zeros_like(keep)
            keep[0] = True
        return TrigPolynomial(self.freqs[keep], self.coeffs[keep])

    def multiply(self, other: "TrigPolynomial") -> "TrigPolynomial":
        """Exact product; frequencies add, coefficients convolve."""
        if self.dimension != other.dimension:
            raise ValueError("dimension mismatch")
        fa = np.rint(self.freqs).astype(np.int64)
        fb = np.rint(other.freqs).astype(np.int64)
        if not (np.allclose(self.freqs, fa, atol=1e-9)
                and np.allclose(other.freqs, fb, atol=1e-9)):
            raise ValueError("product requires integer frequency supports")
        sums = (fa[:, None, :] + fb[None, :, :]).reshape(-1, self.dimension)
        prods = (self.coeffs[:, None] * other.coeffs[None, :]).ravel()
        lo = sums.min(axis=0)
        span = sums.max(axis=0) - lo + 1
        flat = np.ravel_multi_index((sums - lo).T, span)
        size = int(np.prod(span))
        acc = np.bincount(flat, weights=prods.real, minlength=size) \
            + 1j * np.bincount(flat, weights=prods.imag, minlength=size)
        nz = np.nonzero(acc)[0]
        freqs = np.stack(np.unravel_index(nz, span), axis=-1) + lo
        return TrigPolynomial(freqs.astype(float), acc[nz])

    def grid_values(self, grid: int) -> np.ndarray:
        """Exact values on the uniform grid (j/G)_{j in [0,G)^d} via the FFT.

        Wrapping frequencies modulo G is exact for evaluation at grid nodes.
        """
        f = np.rint(self.freqs).astype(np.int64)
        if not np.allclose(self.freqs, f, atol=1e-9):
            raise ValueError("grid evaluation requires integer frequencies")
        d = self.dimension
        spec = np.zeros((grid,) * d, dtype=complex)
        np.add.at(spec, tuple((f % grid).T), self.coeffs)
        return np.fft.ifftn(spec) * grid ** d

    def sup_norm_grid(self, grid: int | None = None, refine_tol: float = 1e-3) -> float:
        """Grid estimate of the sup norm, refining x2 until stable."""
        if grid is None:
            grid = 256 if self.dimension <= 2 else 64
        est = float(np.abs(self.grid_values(grid)).max())
        while True:
            grid *= 2
            nxt = float(np.abs(self.grid_values(grid)).max())
            if abs(nxt - est) <= refine_tol * max(est, 1e-300) or grid >= 4096:
                return nxt
            est = nxt


def dirichlet_kernel_poly(domain: FrequencyDomain, normalized: bool = True) -> TrigPolynomial:
    """Normalized Dirichlet kernel of the domain lattice: coefficients 1/|Omega|_*."""
    freqs = enumerate_lattice(domain)
    n = freqs.shape[0]
    c = np.full(n, 1.0 / n if normalized else 1.0, dtype=complex)
    return TrigPolynomial(freqs, c)


# ---------------------------------------------------------------------------
# Fourier matrix and Gram matrices


@dataclass(frozen=True)
class FourierMatrix:
    """Rows indexed by lattice frequencies (lexicographic), columns by nodes."""

    rows: np.ndarray
    matrix: np.ndarray
    domain: FrequencyDomain
    nodes: PointSet


def build_matrix(domain: FrequencyDomain, X: PointSet,
                 budget: int = ENUMERATION_BUDGET) -> FourierMatrix:
    """Entries rho^{-d/2} e^{-2 pi i w.x_k} over the enumerated lattice."""
    if not domain.is_discrete:
        raise ValueError("continuous domains have no matrix; use gram()")
    if domain.d != X.dimension:
        raise ValueError("domain and point set dimension disagree")
    freqs = enumerate_lattice(domain, budget=budget)
    phase = np.exp(-2j * np.pi * (freqs @ X.points.T))
    phase *= domain.rho ** (-domain.d / 2)
    return FourierMatrix(rows=freqs, matrix=phase, domain=domain, nodes=X)


def matrix_from_frequencies(freqs: np.ndarray, X: PointSet) -> np.ndarray:
    """Plain e^{-2 pi i w.x} matrix for an explicit frequency list (cross-checks)."""
    return np.exp(-2j * np.pi * (np.asarray(freqs, float) @ X.points.T))


DISCRETE_DIRECT = "DiscreteDirect"
DISCRETE_CLOSED = "DiscreteClosedForm"
CONTINUOUS_CLOSED = "ContinuousClosedForm"


@dataclass(frozen=True)
class GramMatrix:
    """s x s Hermitian Gram matrix of the operator, with its provenance."""

    entries: np.ndarray
    provenance: str
    domain: FrequencyDomain

    def __post_init__(self):
        G = self.entries
        dev = float(np.abs(G - G.conj().T).max())
        scale = max(1.0, float(np.abs(G).max()))
        if dev > 1e-11 * scale:
            raise ValueError(f"Gram matrix not Hermitian: deviation {dev:.3e}")

    @property
    def size(self) -> int:
        return self.entries.shape[0]


def _displacements(X: PointSet) -> np.ndarray:
    diff = X.points[:, None, :] - X.points[None, :, :]
    return wrap_torus(diff) if X.space == "torus" else diff


def gram(domain: FrequencyDomain, X: PointSet, method: str = "auto",
         budget: int = ENUMERATION_BUDGET) -> GramMatrix:
    """Gram matrix of the operator restricted to the domain.

    Closed forms: discrete cube via Dirichlet-kernel products (any rho),
    continuous cube via sinc products, continuous ball via the radial Bessel
    transform.  The discrete ball, and method="direct" generally, sum over the
    enumerated lattice.
    """
    if domain.d != X.dimension:
        raise ValueError("domain and point set dimension disagree")
    diff = _displacements(X)
    if domain.mode == "continuous":
        if method == "direct":
            raise ValueError("no direct summation for continuous domains")
        if domain.shape == "cube":
            G = np.prod(2.0 * domain.m * sinc_array(2.0 * domain.m * diff), axis=2)
        else:
            r = np.sqrt((diff * diff).sum(axis=2))
            if domain.m * r.max() > 9.0:
                raise ValueError(
                    "node diameter too large for the ball transform range "
                    f"(m*diam = {domain.m * r.max():.3f} > 9)")
            G = ball_ft_radial(domain.m, r, domain.d)
        return GramMatrix(entries=G.astype(complex), provenance=CONTINUOUS_CLOSED,
                          domain=domain)
    if method == "auto" and domain.shape == "cube":
        b = int(math.floor(domain.m * domain.rho + 1e-9))
        G = np.prod(dirichlet_array(b, diff / domain.rho), axis=2)
        G = G.astype(complex) * domain.rho ** (-domain.d)
        return GramMatrix(entries=G, provenance=DISCRETE_CLOSED, domain=domain)
    fm = build_matrix(domain, X, budget=budget)
    G = fm.matrix.conj().T @ fm.matrix
    G = 0.5 * (G + G.conj().T)
    return GramMatrix(entries=G, provenance=DISCRETE_DIRECT, domain=domain)


# ---------------------------------------------------------------------------
# Hermitian eigensolver (cyclic Jacobi) and spectrum reports


def hermitian_jacobi(H: np.ndarray, tol: float = _JACOBI_TOL,
                     max_sweeps: int = _JACOBI_MAX_SWEEPS):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns (eigenvalues ascending, eigenvectors as columns, rotations).
    Convergence: off-diagonal Frobenius norm <= tol * ||H||_F.
    """
    A = np.array(H, dtype=complex)
    n = A.shape[0]
    V = np.eye(n, dtype=complex)
    thresh = tol * max(np.linalg.norm(A), 1e-300)
    rotations = 0
    if n == 1:
        return A.real.ravel(), V, 0

    def offnorm():
        return math.sqrt(2.0) * np.linalg.norm(A[np.triu_indices(n, k=1)])

    skip = thresh / max(1, n * (n - 1))
    for _ in range(max_sweeps):
        if offnorm() <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = A[p, q]
                ag = abs(g)
                if ag <= skip:
                    continue
                phase = g / ag
                app, aqq = A[p, p].real, A[q, q].real
                tau = (app - aqq) / (2.0 * ag)
                t = 1.0 / (abs(tau) + math.sqrt(1.0 + tau * tau))
                if tau < 0:
                    t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # unitary block [[c, -s e^{i phi}], [s e^{-i phi}, c]]
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                A[:, p] = c * col_p + s * np.conj(phase) * col_q
                A[:, q] = -s * phase * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :].copy()
                A[p, :] = c * row_p + s * phase * row_q
                A[q, :] = -s * np.conj(phase) * row_p + c * row_q
                A[p, q] = 0.0
                A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real
                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = c * vp + s * np.conj(phase) * vq
                V[:, q] = -s * phase * vp + c * vq
                rotations += 1
    else:
        res = offnorm()
        if res > thresh:
            raise ConvergenceError(
                f"Jacobi did not converge: residual {res:.3e} > {thresh:.3e}",
                iterations=rotations, residual=res)
    vals = A.diagonal().real
    order = np.argsort(vals)
    return vals[order], V[:, order], rotations


@dataclass(frozen=True)
class SpectrumReport:
    """Extreme singular values and the minimizing right singular vector."""

    sigma_min: float
    sigma_max: float
    min_vector: np.ndarray
    iterations: int
    floor_hit: bool

    def to_json(self) -> str:
        return json.dumps({
            "sigma_min": self.sigma_min,
            "sigma_max": self.sigma_max,
            "floor_hit": self.floor_hit,
            "iterations": self.iterations,
        })


def sigma_extremes(G: GramMatrix) -> SpectrumReport:
    """sigma_min/sigma_max of the operator from its Gram matrix eigenvalues."""
    vals, vecs, iters = hermitian_jacobi(G.entries)
    trace = float(np.trace(G.entries).real)
    if vals[0] < -1e-10 * max(trace, 1.0):
        raise ValueError(
            f"Gram matrix has a significantly negative eigenvalue {vals[0]:.3e}")
    lam_min = max(float(vals[0]), 0.0)
    lam_max = max(float(vals[-1]), 0.0)
    smin, smax = math.sqrt(lam_min), math.sqrt(lam_max)
    floor = smax > 0 and smin / smax < CONDITION_FLOOR
    v = vecs[:, 0]
    v = v / np.linalg.norm(v)
    return SpectrumReport(sigma_min=smin, sigma_max=smax, min_vector=v,
                          iterations=iters, floor_hit=floor)


def sigma_extremes_direct(domain: FrequencyDomain, X: PointSet,
                          budget: int = ENUMERATION_BUDGET) -> tuple:
    """(sigma_min, sigma_max) by direct SVD of the tall matrix.

    Unlike the Gram route, this resolves sigma_min down to machine epsilon
    relative to sigma_max, which deep super-resolution sweeps require.
    """
    fm = build_matrix(domain, X, budget=budget)
    sv = np.linalg.svd(fm.matrix, compute_uv=False)
    return float(sv[-1]), float(sv[0])


def sigma_sandwich_check(domain: FrequencyDomain, s: int,
                         report: SpectrumReport, rel_slack: float = 1e-9):
    """Verify sqrt(|Omega|) <= sigma_max <= sqrt(s |Omega|) (counts if discrete)."""
    base = count_or_volume(domain)
    lower = math.sqrt(base)
    upper = math.sqrt(s * base)
    ok_low = report.sigma_max >= lower * (1.0 - rel_slack)
    ok_high = report.sigma_max <= upper * (1.0 + rel_slack)
    margins = {"lower": lower, "upper": upper, "sigma_max": report.sigma_max}
    return ok_low and ok_high, margins


# ---------------------------------------------------------------------------
# minimum-norm interpolation


def min_norm_interpolant(domain: FrequencyDomain, X: PointSet,
                         w: np.ndarray) -> TrigPolynomial:
    """Least L^2(T^d)-norm trigonometric polynomial with f(x_k) = w_k.

    Coefficients F = Phi (Phi* Phi)^{-1} w, solved through the Jacobi
    eigendecomposition of the Gram matrix.  Rejects when the system is
    numerically rank deficient (sigma_min <= 1e-12 sigma_max).
    """
    if not domain.is_discrete or domain.rho != 1:
        raise ValueError("minimum-norm interpolation works on the integer lattice")
    w = np.asarray(w, dtype=complex).ravel()
    if w.shape[0] != X.size:
        raise ValueError("data vector length must match the number of nodes")
    G = gram(domain, X)
    vals, vecs, _ = hermitian_jacobi(G.entries)
    lam_min = max(float(vals[0]), 0.0)
    lam_max = max(float(vals[-1]), 1e-300)
    smin = math.sqrt(lam_min)
    if smin <= 1e-12 * math.sqrt(lam_max):
        raise RankDeficiencyError(
            f"interpolation system rank deficient (sigma_min ~ {smin:.3e})",
            sigma_min=smin)
    c = vecs @ ((vecs.conj().T @ w) / vals)
    freqs = enumerate_lattice(domain)
    F = np.exp(-2j * np.pi * (freqs @ X.points.T)) @ c
    return TrigPolynomial(freqs, F)


def evaluate_polynomial(poly: TrigPolynomial, x: np.ndarray):
    """Direct summation of the coefficient map at x (vector or batch)."""
    return poly.evaluate(x)


def export_matrix_csv(fm: FourierMatrix, path: str) -> None:
    """(re, im) CSV export of the matrix for external cross-checks."""
    M = fm.matrix
    with open(path, "w") as fh:
        cols = [f"re_{k},im_{k}" for k in range(M.shape[1])]
        fh.write(",".join(cols) + "\n")
        for row in M:
            fh.write(",".join(f"{z.real:.17g},{z.imag:.17g}" for z in row) + "\n")
