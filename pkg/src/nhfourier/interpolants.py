"""Explicit Lagrange interpolants with certified norms: quantized plane-wave
products for neighborhood sets, hyperplane-based bandlimited interpolants,
localization polynomials, and the duality lower bound they certify.

Every construction carries its analytic norm bound and a bandwidth
certificate; both are checkable against the realized object.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import betainc

from .errors import CertificateError
from .geometry import (LocalHyperplaneDecomposition, PointSet, holder_dual,
                       local_sparsity, lp_norm, neighborhood,
                       separated_partition)
from .lattice import FrequencyDomain, unit_ball_volume, volume
from .operators import (TrigPolynomial, dirichlet_kernel_poly,
                        min_norm_interpolant)

_CERT_SLACK = 1e-12
_RESIDUAL_TOL = 1e-9


# ---------------------------------------------------------------------------
# dual vectors and the quantized direction of Lemma-style constructions


def dual_vector(u: np.ndarray, p: float) -> np.ndarray:
    """Unit l^p vector v with v.u = |u|_{p'}; sign(0) = 0 convention."""
    u = np.asarray(u, dtype=float)
    if not np.any(u):
        raise ValueError("dual vector of the zero vector is undefined")
    if math.isinf(p):
        return np.sign(u)
    if p == 1:
        v = np.zeros_like(u)
        j = int(np.argmax(np.abs(u)))
        v[j] = np.sign(u[j])
        return v
    pp = holder_dual(p)
    scale = lp_norm(u, pp) ** (pp - 1.0)
    return np.abs(u) ** (pp - 1.0) * np.sign(u) / scale


@dataclass(frozen=True)
class QuantizationCertificate:
    """Integer direction q for u with the three proved inequalities evaluated."""

    q: np.ndarray
    alpha: float
    p: float
    q_norm: float          # |q|_p            <= 1/(2 alpha)
    inner: float           # |q.u| in [|u|_{p'}/(4 alpha), 1/2]
    denom_modulus: float   # |1 - e^{2 pi i q.u}| >= sqrt(2)/alpha |u|_{p'}


def quantize_direction(u: np.ndarray, alpha: float, p: float) -> QuantizationCertificate:
    """Round v/(2 alpha) toward zero and verify the resulting inequalities.

    Requires 0 < |u|_{p'} <= alpha <= 1/(4 d^{1/p}).  A certificate failure is
    an internal error: it would falsify the construction this implements.
    """
    u = np.asarray(u, dtype=float)
    d = u.shape[0]
    pp = holder_dual(p)
    un = lp_norm(u, pp)
    cap = 0.25 / d ** (1.0 / p) if not math.isinf(p) else 0.25
    if not 0.0 < un <= alpha + _CERT_SLACK:
        raise ValueError("need 0 < |u|_{p'} <= alpha")
    if alpha > cap + _CERT_SLACK:
        raise ValueError(f"alpha must not exceed 1/(4 d^(1/p)) = {cap}")
    v = dual_vector(u, p)
    a = v / (2.0 * alpha)
    q = np.trunc(a)
    q_norm = lp_norm(q, p)
    inner = abs(float(q @ u))
    denom = abs(1.0 - np.exp(2j * np.pi * float(q @ u)))
    checks = (
        q_norm <= 1.0 / (2.0 * alpha) + _CERT_SLACK,
        un / (4.0 * alpha) <= inner + _CERT_SLACK,
        inner <= 0.5 + _CERT_SLACK,
        denom >= math.sqrt(2.0) / alpha * un - _CERT_SLACK,
    )
    if not all(checks):
        raise CertificateError(
            f"quantization certificate failed for u={u.tolist()}, alpha={alpha}, "
            f"p={p}: q={q.tolist()}, |q|_p={q_norm}, |q.u|={inner}, |1-e|={denom}")
    return QuantizationCertificate(q=q, alpha=alpha, p=p, q_norm=q_norm,
                                   inner=inner, denom_modulus=denom)


# ---------------------------------------------------------------------------
# plane-wave factors, kernels, and product interpolants


@dataclass(frozen=True)
class PlaneWaveFactor:
    """x -> (e^{2 pi i f.x} - e^{2 pi i f.u}) / (1 - e^{2 pi i f.u}).

    Equals 1 at the origin and 0 on the hyperplane {f.x = f.u} through the
    root u.
    """

    frequency: np.ndarray
    root: np.ndarray

    def __post_init__(self):
        f = np.asarray(self.frequency, dtype=float)
        u = np.asarray(self.root, dtype=float)
        if abs(self.denominator) <= 0.0:
            raise ValueError("factor denominator vanishes")
        f.setflags(write=False)
        u.setflags(write=False)
        object.__setattr__(self, "frequency", f)
        object.__setattr__(self, "root", u)

    @property
    def root_phase(self) -> complex:
        return complex(np.exp(2j * np.pi * float(np.dot(self.frequency, self.root))))

    @property
    def denominator(self) -> complex:
        return 1.0 - self.root_phase

    def evaluate(self, x: np.ndarray):
        x = np.asarray(x, dtype=float)
        ph = np.exp(2j * np.pi * (np.atleast_2d(x) @ self.frequency))
        vals = (ph - self.root_phase) / self.denominator
        return complex(vals[0]) if x.ndim == 1 else vals


@dataclass(frozen=True)
class KernelSpec:
    """Normalized low-pass kernel over an l^p ball of radius R.

    mode "lattice": Dirichlet kernel of the lattice points (torus object);
    mode "lowpass": inverse transform of the normalized indicator (Euclidean).
    """

    mode: str
    shape: str
    radius: float
    d: int

    def domain(self) -> FrequencyDomain:
        return FrequencyDomain(shape=self.shape, m=self.radius, d=self.d,
                               mode="discrete" if self.mode == "lattice" else "continuous")


def _expand_factors(factors, translate=None) -> tuple:
    """Plane-wave expansion of a factor product: (shifts (n,d), coeffs (n,)).

    With ``translate`` = t the expansion is of x -> prod factor(x - t).
    """
    d = factors[0].frequency.shape[0] if factors else None
    shifts = [np.zeros(d if d is not None else 0)]
    coeffs = [1.0 + 0.0j]
    for fac in factors:
        f = fac.frequency
        rho = fac.root_phase
        den = fac.denominator
        phase = np.exp(-2j * np.pi * float(np.dot(f, translate))) if translate is not None else 1.0
        new_shifts, new_coeffs = [], []
        for t, c in zip(shifts, coeffs):
            new_shifts.append(t + f)
            new_coeffs.append(c * phase / den)
            new_shifts.append(t)
            new_coeffs.append(-c * rho / den)
        shifts, coeffs = new_shifts, new_coeffs
    return np.array(shifts), np.array(coeffs)


class ShiftedKernelSum:
    """f(x) = h(x - center) sum_i c_i e^{2 pi i t_i.(x - center)} in L^2(R^d).

    The transform is sum_i c_i hhat(xi - t_i) (times a center phase), with
    hhat the normalized indicator of the radius-R l^p ball, so L^2 norms
    reduce to pairwise overlap volumes of shifted balls or cubes.
    """

    def __init__(self, kernel: KernelSpec, shifts: np.ndarray, coeffs: np.ndarray,
                 center: np.ndarray | None = None):
        if kernel.mode != "lowpass":
            raise ValueError("ShiftedKernelSum requires a continuous low-pass kernel")
        self.kernel = kernel
        self.shifts = np.atleast_2d(np.asarray(shifts, dtype=float))
        self.coeffs = np.asarray(coeffs, dtype=complex).ravel()
        self.center = (np.zeros(kernel.d) if center is None
                       else np.asarray(center, dtype=float))

    def _kernel_values(self, y: np.ndarray) -> np.ndarray:
        R, d = self.kernel.radius, self.kernel.d
        if self.kernel.shape == "cube":
            return np.prod(np.sinc(2.0 * R * y), axis=-1)
        from .specfun import ball_ft_radial
        r = np.sqrt((y * y).sum(axis=-1))
        return ball_ft_radial(R, r, d) / (unit_ball_volume(d) * R ** d)

    def evaluate(self, x: np.ndarray):
        x = np.asarray(x, dtype=float)
        single = x.ndim == 1
        y = np.atleast_2d(x) - self.center
        trig = np.exp(2j * np.pi * (y @ self.shifts.T)) @ self.coeffs
        vals = trig * self._kernel_values(y)
        return complex(vals[0]) if single else vals

    def _overlap(self, delta: np.ndarray) -> np.ndarray:
        """|Omega_R cap (Omega_R + delta)| for a batch of shift differences."""
        R, d = self.kernel.radius, self.kernel.d
        if self.kernel.shape == "cube":
            return np.prod(np.clip(2.0 * R - np.abs(delta), 0.0, None), axis=-1)
        t = np.sqrt((delta * delta).sum(axis=-1))
        h = np.clip(R - 0.5 * t, 0.0, None)
        x = np.clip((2.0 * R * h - h * h) / R ** 2, 0.0, 1.0)
        cap = 0.5 * unit_ball_volume(d) * R ** d * betainc((d + 1) / 2.0, 0.5, x)
        return 2.0 * cap

    def l2_norm(self) -> float:
        vol = volume(self.kernel.domain())
        delta = self.shifts[:, None, :] - self.shifts[None, :, :]
        O = self._overlap(delta)
        total = np.einsum("i,ij,j->", self.coeffs, O, self.coeffs.conj())
        return math.sqrt(max(float(total.real), 0.0)) / vol

    def support_radius(self, p: float) -> float:
        norms = [lp_norm(t, p) for t in self.shifts]
        return (max(norms) if norms else 0.0) + self.kernel.radius

    def multiply_poly(self, poly: TrigPolynomial) -> "ShiftedKernelSum":
        """Product with a trigonometric polynomial given in absolute coordinates."""
        phase = np.exp(2j * np.pi * (poly.freqs @ self.center))
        pc = poly.coeffs * phase
        shifts = (poly.freqs[:, None, :] + self.shifts[None, :, :]).reshape(-1, self.kernel.d)
        coeffs = (pc[:, None] * self.coeffs[None, :]).ravel()
        return ShiftedKernelSum(self.kernel, shifts, coeffs, center=self.center)


@dataclass
class InterpolantProduct:
    """A product of plane-wave factors times an optional low-pass kernel.

    ``norm_bound`` is the analytic bound proved for ``norm_space`` (one of
    "sup_torus", "l2_torus", "l2_euclidean"); ``bandwidth`` is the certified
    l^p radius of the frequency support.
    """

    factors: tuple
    kernel: KernelSpec | None
    p: float
    bandwidth: float
    norm_bound: float
    norm_space: str
    nodes: PointSet
    certificates: dict = field(default_factory=dict)

    def evaluate(self, x: np.ndarray):
        x = np.asarray(x, dtype=float)
        single = x.ndim == 1
        pts = np.atleast_2d(x)
        vals = np.ones(pts.shape[0], dtype=complex)
        for fac in self.factors:
            vals = vals * fac.evaluate(pts)
        if self.kernel is not None:
            if self.kernel.mode == "lattice":
                vals = vals * dirichlet_kernel_poly(self.kernel.domain()).evaluate(pts)
            else:
                ks = ShiftedKernelSum(self.kernel, np.zeros((1, self.kernel.d)),
                                      np.ones(1))
                vals = vals * ks.evaluate(pts)
        return complex(vals[0]) if single else vals

    def as_trig_polynomial(self) -> TrigPolynomial:
        d = self.nodes.dimension
        poly = TrigPolynomial(np.zeros((1, d)), np.ones(1, dtype=complex))
        for fac in self.factors:
            two = TrigPolynomial(
                np.stack([fac.frequency, np.zeros(d)]),
                np.array([1.0 / fac.denominator, -fac.root_phase / fac.denominator]))
            poly = poly.multiply(two)
        if self.kernel is not None:
            if self.kernel.mode != "lattice":
                raise ValueError("continuous kernel: not a trigonometric polynomial")
            poly = poly.multiply(dirichlet_kernel_poly(self.kernel.domain()))
        return poly

    def as_kernel_sum(self) -> ShiftedKernelSum:
        if self.kernel is None or self.kernel.mode != "lowpass":
            raise ValueError("no continuous kernel attached")
        shifts, coeffs = _expand_factors(list(self.factors))
        if not self.factors:
            shifts = np.zeros((1, self.kernel.d))
            coeffs = np.ones(1, dtype=complex)
        return ShiftedKernelSum(self.kernel, shifts, coeffs)

    def l2_norm(self) -> float:
        if self.norm_space == "l2_euclidean":
            return self.as_kernel_sum().l2_norm()
        return self.as_trig_polynomial().l2_norm()

    def sup_norm_grid(self, grid: int | None = None) -> float:
        return self.as_trig_polynomial().sup_norm_grid(grid)

    def support_radius(self) -> float:
        """l^p radius of the realized frequency support (coefficients > 1e-12)."""
        if self.norm_space == "l2_euclidean":
            return self.as_kernel_sum().support_radius(self.p)
        return self.as_trig_polynomial().support_radius(self.p)

    def to_json(self) -> str:
        return json.dumps({
            "factors": [
                {"frequency": f.frequency.tolist(), "root": f.root.tolist()}
                for f in self.factors
            ],
            "kernel": None if self.kernel is None else {
                "mode": self.kernel.mode, "shape": self.kernel.shape,
                "radius": self.kernel.radius, "d": self.kernel.d},
            "p": "inf" if math.isinf(self.p) else self.p,
            "bandwidth_certificate": self.bandwidth,
            "norm_bound": self.norm_bound,
            "norm_space": self.norm_space,
        })


def _require_center(U: PointSet) -> int:
    for i in range(U.size):
        if not np.any(U.points[i]):
            return i
    raise ValueError("the neighborhood set must contain the origin")


# ---------------------------------------------------------------------------
# the three neighborhood constructions


def neighbor_interpolant_discrete(U: PointSet, n: float, r: int,
                                  p: float) -> InterpolantProduct:
    """Trigonometric polynomial vanishing on U \\ {0} with f(0) = 1.

    Near roots (|u|_{p'} <= r/(2n)) are quantized at alpha = r/(2n) and drive
    the sup bound; far roots are quantized at alpha = |u|_{p'} and cost a
    factor sqrt(2) each.  Bandwidth certificate: n(r-1)/r in l^p.
    """
    _require_center(U)
    d = U.dimension
    pp = holder_dual(p)
    dp = 1.0 if math.isinf(p) else d ** (1.0 / p)
    if r < U.size:
        raise ValueError("need r >= |U|")
    if n < 2.0 * dp * r:
        raise ValueError("need n >= 2 d^(1/p) r")
    cap = 0.25 / dp
    norms = [lp_norm(u, pp) for u in U.points]
    if max(norms) > cap + _CERT_SLACK:
        raise ValueError("all roots must satisfy |u|_{p'} <= 1/(4 d^(1/p))")
    near_alpha = r / (2.0 * n)
    factors, certs = [], []
    sup = 1.0
    for u, un in zip(U.points, norms):
        if un == 0.0:
            continue
        alpha = near_alpha if un <= near_alpha else un
        cert = quantize_direction(u, alpha, p)
        factors.append(PlaneWaveFactor(frequency=cert.q, root=np.asarray(u)))
        certs.append(cert)
        if un <= near_alpha:
            sup *= near_alpha / un
    sup *= math.sqrt(2.0 ** max(U.size - 1, 0))
    return InterpolantProduct(
        factors=tuple(factors), kernel=None, p=p,
        bandwidth=n * (r - 1) / r if U.size > 1 else 0.0,
        norm_bound=sup, norm_space="sup_torus", nodes=U,
        certificates={"quantization": certs})


def neighbor_interpolant_continuous(U: PointSet,
                                    decomposition: LocalHyperplaneDecomposition,
                                    n: float, p: float) -> InterpolantProduct:
    """Bandlimited interpolant from a hyperplane cover of U \\ {0}.

    One factor per plane with frequency n theta_k/(r+1) and root eta_k theta_k,
    times the normalized low-pass kernel of radius n/(r+1); L^2(R^d) norm is
    bounded by sqrt(2^r/|Omega^p_{n/(r+1)}|) prod (r+1)/(4 n eta_k).
    """
    _require_center(U)
    if p < 2:
        raise ValueError("hyperplane interpolants require p >= 2")
    if p not in (2.0, math.inf):
        raise ValueError("only ball (p=2) and cube (p=inf) kernels are supported")
    r = decomposition.r
    if r == 0:
        kernel = KernelSpec(mode="lowpass", shape="ball" if p == 2 else "cube",
                            radius=n, d=U.dimension)
        return InterpolantProduct(factors=(), kernel=kernel, p=p, bandwidth=n,
                                  norm_bound=1.0 / math.sqrt(volume(kernel.domain())),
                                  norm_space="l2_euclidean", nodes=U)
    etas = decomposition.distances
    if max(etas) > (r + 1) / (4.0 * n) + _CERT_SLACK:
        raise ValueError("plane distances must satisfy eta <= (r+1)/(4n)")
    factors = []
    bound = 1.0
    for plane, _ in decomposition.planes:
        theta = plane.normal
        eta = abs(plane.offset)
        freq = n * theta / (r + 1.0)
        factors.append(PlaneWaveFactor(frequency=freq, root=eta * theta))
        bound *= (r + 1.0) / (4.0 * n * eta)
    kernel = KernelSpec(mode="lowpass", shape="ball" if p == 2 else "cube",
                        radius=n / (r + 1.0), d=U.dimension)
    bound *= math.sqrt(2.0 ** r / volume(kernel.domain()))
    bandwidth = kernel.radius + sum(lp_norm(f.frequency, p) for f in factors)
    return InterpolantProduct(factors=tuple(factors), kernel=kernel, p=p,
                              bandwidth=bandwidth, norm_bound=bound,
                              norm_space="l2_euclidean", nodes=U)


@dataclass(frozen=True)
class IntegerHyperplane:
    """{x : q.x = c} with an integer normal direction q."""

    q: np.ndarray
    c: float

    def __post_init__(self):
        q = np.asarray(self.q, dtype=float)
        if not np.allclose(q, np.rint(q), atol=1e-9) or not np.any(q):
            raise ValueError("normal direction must be a nonzero integer vector")
        q.setflags(write=False)
        object.__setattr__(self, "q", q)

    @property
    def eta(self) -> float:
        return abs(self.c) / float(np.linalg.norm(self.q))


def neighbor_interpolant_integer_hyperplanes(U: PointSet, planes, n: float,
                                             p: float) -> InterpolantProduct:
    """Trigonometric-polynomial analogue when every plane has an integer normal.

    Kernel is the normalized Dirichlet kernel of radius n/(r+1); L^2(T^d) norm
    is bounded by sqrt(2^r/|Omega^p_{n/(r+1)}|_*) prod 1/(4 |q_k|_2 eta_k).
    """
    _require_center(U)
    if p < 2:
        raise ValueError("hyperplane interpolants require p >= 2")
    if p not in (2.0, math.inf):
        raise ValueError("only ball (p=2) and cube (p=inf) kernels are supported")
    planes = [pl if isinstance(pl, IntegerHyperplane) else IntegerHyperplane(*pl)
              for pl in planes]
    if not planes:
        raise ValueError("at least one integer hyperplane is required")
    r = len(planes)
    covered = np.zeros(U.size, dtype=bool)
    for i, u in enumerate(U.points):
        if not np.any(u):
            covered[i] = True
            continue
        for pl in planes:
            if abs(float(pl.q @ u) - pl.c) <= 1e-10:
                covered[i] = True
                break
    if not covered.all():
        raise ValueError("planes do not cover U \\ {0}")
    factors = []
    bound = 1.0
    for pl in planes:
        qn = float(np.linalg.norm(pl.q))
        if qn > n / (r + 1.0) + _CERT_SLACK:
            raise ValueError(f"|q|_2 = {qn} exceeds n/(r+1) = {n / (r + 1)}")
        if pl.eta > (r + 1) / (4.0 * n) + _CERT_SLACK:
            raise ValueError("plane distances must satisfy eta <= (r+1)/(4n)")
        root = pl.q * (pl.c / qn ** 2)
        factors.append(PlaneWaveFactor(frequency=pl.q, root=root))
        bound *= 1.0 / (4.0 * qn * pl.eta)
    kernel = KernelSpec(mode="lattice", shape="ball" if p == 2 else "cube",
                        radius=n / (r + 1.0), d=U.dimension)
    from .lattice import lattice_count
    bound *= math.sqrt(2.0 ** r / lattice_count(kernel.domain()))
    bandwidth = kernel.radius + sum(lp_norm(f.frequency, p) for f in factors)
    return InterpolantProduct(factors=tuple(factors), kernel=kernel, p=p,
                              bandwidth=bandwidth, norm_bound=bound,
                              norm_space="l2_torus", nodes=U,
                              certificates={"planes": planes})


# ---------------------------------------------------------------------------
# localization polynomials and the duality bound


@dataclass
class LocalizationPolynomial:
    """g_k: equal to 1 at node k, vanishing outside its tau-neighborhood."""

    node: int
    poly: TrigPolynomial
    nu: int
    sup_bound: float
    sup_estimate: float
    sup_bound_ok: bool
    bandwidth: float


def localization_polynomials(X: PointSet, tau: float, m: float, p: float,
                             C: float, c: float, grid: int | None = None) -> list:
    """One polynomial per node vanishing on all nodes farther than tau away.

    The far set is split into separated parts; each part contributes one
    minimum-norm interpolant over Omega^p_{C/tau}, and the product is bounded
    in sup norm by c^{-nu} when the well-separated estimate
    sigma_min >= c sqrt(|Omega^p_{C/tau}|_*) holds at separation tau.  The sup
    bound is verified on a grid and flagged, not enforced.
    """
    if not 0.0 < c < 1.0:
        raise ValueError("well-separated constant c must lie in (0, 1)")
    nu = local_sparsity(X, tau, p)
    if C * nu / tau > m / 2.0 + _CERT_SLACK:
        raise ValueError(
            f"density condition fails: C nu / tau = {C * nu / tau:.3f} > m/2 = {m / 2}")
    shape = "ball" if p == 2 else "cube"
    radius = C / tau
    domain = FrequencyDomain(shape=shape, m=radius, d=X.dimension, mode="discrete")
    out = []
    for k in range(X.size):
        near = set(int(j) for j in neighborhood(X, k, tau, p))
        far = np.array(sorted(set(range(X.size)) - near), dtype=int)
        d = X.dimension
        g = TrigPolynomial(np.zeros((1, d)), np.ones(1, dtype=complex))
        if far.size:
            for part in separated_partition(X, tau, p, indices=far):
                sub_idx = [k] + [int(j) for j in part]
                sub = PointSet(points=X.points[sub_idx], space=X.space)
                w = np.zeros(len(sub_idx), dtype=complex)
                w[0] = 1.0
                g = g.multiply(min_norm_interpolant(domain, sub, w))
        sup_bound = c ** (-nu)
        sup_est = g.sup_norm_grid(grid)
        out.append(LocalizationPolynomial(
            node=k, poly=g, nu=nu, sup_bound=sup_bound, sup_estimate=sup_est,
            sup_bound_ok=sup_est <= sup_bound + 1e-6,
            bandwidth=g.support_radius(p)))
    return out


def duality_lower_bound(family, X: PointSet, domain: FrequencyDomain,
                        residual_tol: float = _RESIDUAL_TOL) -> float:
    """Certified lower bound (1/sqrt(s)) min_k 1/||f_k|| from a Lagrange family.

    Verifies the Lagrange property by evaluation and every member's bandwidth
    certificate against the target domain before returning the bound.
    """
    s = X.size
    if len(family) != s:
        raise ValueError("family size must equal the number of nodes")
    norms = []
    for k, f in enumerate(family):
        vals = np.asarray(f.evaluate(X.points))
        target = np.zeros(s, dtype=complex)
        target[k] = 1.0
        resid = float(np.abs(vals - target).max())
        if resid > residual_tol:
            raise ValueError(
                f"family member {k} is not Lagrange: residual {resid:.3e}")
        if isinstance(f, TrigPolynomial):
            if not domain.is_discrete:
                raise ValueError("trigonometric polynomials need a discrete target")
            radius = f.support_radius(domain.p)
            norm = f.l2_norm()
        elif isinstance(f, ShiftedKernelSum):
            if domain.is_discrete:
                raise ValueError("bandlimited members need a continuous target")
            radius = f.support_radius(domain.p)
            norm = f.l2_norm()
        elif isinstance(f, InterpolantProduct):
            radius = f.support_radius()
            norm = f.l2_norm()
        else:
            raise TypeError(f"unsupported family member type {type(f)!r}")
        if radius > domain.m + 1e-9:
            raise ValueError(
                f"member {k} bandwidth {radius:.6f} exceeds the target radius {domain.m}")
        norms.append(norm)
    return min(1.0 / n for n in norms) / math.sqrt(s)


def min_norm_lagrange_family(domain: FrequencyDomain, X: PointSet) -> list:
    """The s minimum-norm Lagrange interpolants f_k(x_j) = delta_jk."""
    out = []
    for k in range(X.size):
        w = np.zeros(X.size, dtype=complex)
        w[k] = 1.0
        out.append(min_norm_interpolant(domain, X, w))
    return out
