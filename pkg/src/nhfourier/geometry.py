"""Point sets on the torus or in Euclidean space, and the geometric predicates
consumed by the singular-value bounds: l^p distances, minimum separation,
neighborhood sets, local sparsity, separated partitions, clump detection, and
local hyperplane decompositions.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetError, NoDecompositionError, NotClumpsError

TORUS = "torus"
EUCLIDEAN = "euclidean"

# Exhaustive hyperplane-cover search is limited to this many neighbors.
DECOMPOSITION_BUDGET = 12

_PLANE_MEMBER_TOL = 1e-10
_UNIT_NORMAL_TOL = 1e-12


@dataclass(frozen=True)
class PointSet:
    """Distinct nodes in [-1/2, 1/2)^d with a torus or Euclidean metric mode."""

    points: np.ndarray
    space: str = TORUS

    def __post_init__(self):
        pts = np.atleast_2d(np.asarray(self.points, dtype=float))
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValueError("points must form a nonempty (s, d) array")
        if np.any(pts < -0.5) or np.any(pts >= 0.5):
            raise ValueError("coordinates must lie in [-1/2, 1/2)")
        if np.unique(pts, axis=0).shape[0] != pts.shape[0]:
            raise ValueError("points must be pairwise distinct")
        if self.space not in (TORUS, EUCLIDEAN):
            raise ValueError(f"unknown space {self.space!r}")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def size(self) -> int:
        return self.points.shape[0]

    @property
    def dimension(self) -> int:
        return self.points.shape[1]

    def to_json(self) -> str:
        return json.dumps(
            {"d": self.dimension, "space": self.space,
             "points": self.points.tolist()}
        )

    @staticmethod
    def from_json(text: str) -> "PointSet":
        obj = json.loads(text)
        pts = np.asarray(obj["points"], dtype=float)
        if pts.ndim == 2 and pts.shape[1] != int(obj["d"]):
            raise ValueError("point dimension disagrees with declared d")
        return PointSet(points=pts, space=obj["space"])


@dataclass(frozen=True)
class Hyperplane:
    """{x : normal . x = offset} with a unit Euclidean normal."""

    normal: np.ndarray
    offset: float

    def __post_init__(self):
        n = np.asarray(self.normal, dtype=float)
        if abs(np.linalg.norm(n) - 1.0) > _UNIT_NORMAL_TOL:
            raise ValueError("hyperplane normal must have unit Euclidean norm")
        n.setflags(write=False)
        object.__setattr__(self, "normal", n)


@dataclass(frozen=True)
class LocalHyperplaneDecomposition:
    """Cover of a node's neighborhood (minus itself) by hyperplanes avoiding it.

    Planes live in the local chart centered at the reference node, so the
    reference sits at the origin and its distance to a plane is |offset|.
    ``eta`` is the minimum such distance.
    """

    reference_index: int
    planes: tuple
    eta: float

    @property
    def r(self) -> int:
        return len(self.planes)

    @property
    def distances(self) -> tuple:
        return tuple(abs(h.offset) for h, _ in self.planes)


@dataclass(frozen=True)
class ClumpStructure:
    """Partition into equal-cardinality groups of diameter <= tau, mutually > tau apart."""

    clumps: tuple
    tau: float
    lam: int


def wrap_torus(diff: np.ndarray) -> np.ndarray:
    """Per-coordinate representative of smallest magnitude, min_n |t + n|."""
    return diff - np.round(diff)


def displacement(x: np.ndarray, y: np.ndarray, space: str) -> np.ndarray:
    d = np.asarray(x, dtype=float) - np.asarray(y, dtype=float)
    return wrap_torus(d) if space == TORUS else d


def lp_norm(v: np.ndarray, p: float) -> float:
    v = np.abs(np.asarray(v, dtype=float))
    if math.isinf(p):
        return float(np.max(v)) if v.size else 0.0
    if p == 1:
        return float(np.sum(v))
    if p == 2:
        return float(np.sqrt(np.sum(v * v)))
    if p < 1:
        raise ValueError("p must be in [1, inf]")
    return float(np.sum(v ** p) ** (1.0 / p))


def holder_dual(p: float) -> float:
    if math.isinf(p):
        return 1.0
    if p == 1:
        return math.inf
    return p / (p - 1.0)


def lp_distance(x: np.ndarray, y: np.ndarray, p: float, space: str = TORUS) -> float:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ValueError("vectors must share dimension")
    return lp_norm(displacement(x, y, space), p)


def _pairwise_dist(X: PointSet, p: float, indices=None) -> np.ndarray:
    idx = np.arange(X.size) if indices is None else np.asarray(indices, dtype=int)
    pts = X.points[idx]
    diff = pts[:, None, :] - pts[None, :, :]
    if X.space == TORUS:
        diff = wrap_torus(diff)
    diff = np.abs(diff)
    if math.isinf(p):
        return diff.max(axis=2)
    if p == 1:
        return diff.sum(axis=2)
    if p == 2:
        return np.sqrt((diff * diff).sum(axis=2))
    return (diff ** p).sum(axis=2) ** (1.0 / p)


def min_separation(X: PointSet, p: float, indices=None) -> float:
    """Minimum pairwise l^p distance; undefined (rejected) for singletons."""
    idx = np.arange(X.size) if indices is None else np.asarray(indices, dtype=int)
    if idx.size < 2:
        raise ValueError("minimum separation needs at least two points")
    dist = _pairwise_dist(X, p, idx)
    iu = np.triu_indices(idx.size, k=1)
    return float(dist[iu].min())


def neighborhood(X: PointSet, k: int, tau: float, p: float, indices=None) -> np.ndarray:
    """Indices j (within `indices`, default all) with |x_j - x_k|_p <= tau."""
    if tau <= 0:
        raise ValueError("tau must be positive")
    if not 0 <= k < X.size:
        raise ValueError("node index out of range")
    idx = np.arange(X.size) if indices is None else np.asarray(indices, dtype=int)
    diff = X.points[idx] - X.points[k]
    if X.space == TORUS:
        diff = wrap_torus(diff)
    diff = np.abs(diff)
    if math.isinf(p):
        d = diff.max(axis=1)
    elif p == 1:
        d = diff.sum(axis=1)
    elif p == 2:
        d = np.sqrt((diff * diff).sum(axis=1))
    else:
        d = (diff ** p).sum(axis=1) ** (1.0 / p)
    return idx[d <= tau]


def local_sparsity(X: PointSet, tau: float, p: float, indices=None) -> int:
    """Max neighborhood cardinality over the (sub)set; empty subset gives 0."""
    if tau <= 0:
        raise ValueError("tau must be positive")
    idx = np.arange(X.size) if indices is None else np.asarray(indices, dtype=int)
    if idx.size == 0:
        return 0
    dist = _pairwise_dist(X, p, idx)
    return int((dist <= tau).sum(axis=1).max())


def separated_partition(X: PointSet, tau: float, p: float, indices=None) -> list:
    """Partition into exactly nu_p(tau, .) parts, each with pairwise distance > tau.

    Greedy over stored order: each node joins the first part it stays separated
    from.  A greedy pass can finish with fewer parts than the local sparsity
    (chains), in which case the largest parts shed their highest-index element
    into fresh singleton parts until the count matches.
    """
    idx = np.arange(X.size) if indices is None else np.asarray(indices, dtype=int)
    if idx.size == 0:
        raise ValueError("cannot partition an empty set")
    nu = local_sparsity(X, tau, p, idx)
    dist = _pairwise_dist(X, p, idx)
    pos = {int(g): i for i, g in enumerate(idx)}
    parts: list[list[int]] = []
    for g in idx:
        g = int(g)
        for part in parts:
            if all(dist[pos[g], pos[h]] > tau for h in part):
                part.append(g)
                break
        else:
            parts.append([g])
    while len(parts) < nu:
        donor = max(parts, key=len)
        parts.append([donor.pop()])
    return [np.asarray(sorted(part), dtype=int) for part in parts]


def detect_clumps(X: PointSet, tau: float, p: float) -> ClumpStructure:
    """Connected components of the <=tau graph, validated as a clump configuration."""
    if tau <= 0:
        raise ValueError("tau must be positive")
    dist = _pairwise_dist(X, p)
    adj = dist <= tau
    seen = np.zeros(X.size, dtype=bool)
    components = []
    for start in range(X.size):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in np.nonzero(adj[i])[0]:
                if not seen[j]:
                    seen[j] = True
                    stack.append(int(j))
        components.append(tuple(sorted(comp)))
    lam = len(components[0])
    for comp in components:
        if len(comp) != lam:
            raise NotClumpsError("clumps have unequal cardinality", component=comp)
        sub = dist[np.ix_(comp, comp)]
        if len(comp) > 1 and sub.max() > tau:
            raise NotClumpsError("intra-clump diameter exceeds tau", component=comp)
    return ClumpStructure(clumps=tuple(components), tau=tau, lam=lam)


def point_hyperplane_distance(x: np.ndarray, plane: Hyperplane) -> float:
    return float(abs(np.dot(plane.normal, np.asarray(x, dtype=float)) - plane.offset))


def _group_plane(disp: np.ndarray, members: tuple) -> tuple | None:
    """Best hyperplane through a group of chart points, avoiding the origin.

    Returns (normal, offset=distance to origin) for the plane containing the
    group's affine span that is farthest from the reference node, or None when
    the span is full-dimensional or passes through the origin.
    """
    pts = disp[list(members)]
    d = pts.shape[1]
    center = pts.mean(axis=0)
    M = pts - center
    if len(members) == 1:
        basis = np.zeros((0, d))
    else:
        _, sv, vt = np.linalg.svd(M, full_matrices=False)
        scale = sv[0] if sv.size and sv[0] > 0 else 1.0
        rank = int(np.sum(sv > 1e-8 * scale))
        if rank > d - 1:
            return None
        basis = vt[:rank]
    w = center - basis.T @ (basis @ center) if basis.size else center.copy()
    dist = float(np.linalg.norm(w))
    if dist <= _PLANE_MEMBER_TOL:
        return None
    normal = w / dist
    return normal, dist


def local_hyperplane_decomposition(
    X: PointSet,
    k: int,
    tau: float,
    p: float,
    r_max: int,
    budget: int = DECOMPOSITION_BUDGET,
) -> LocalHyperplaneDecomposition:
    """Minimum-r hyperplane cover of the tau-neighborhood of node k, excluding k.

    Searches set partitions of the neighbors into groups whose affine spans are
    at most (d-1)-dimensional and avoid the reference node; each group is
    covered by the admissible hyperplane farthest from the reference.  Among
    minimum-r covers the one maximizing eta (the least reference-to-plane
    distance) is returned.  Torus sets are handled in the local Euclidean chart
    centered at the reference node, valid for the tau <= 1/4 scales the bounds
    use.
    """
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    nbrs = [int(j) for j in neighborhood(X, k, tau, p) if j != k]
    n = len(nbrs)
    if n > budget:
        raise BudgetError(
            f"neighborhood has {n} nodes, decomposition budget is {budget}",
            required=n,
        )
    if n == 0:
        return LocalHyperplaneDecomposition(reference_index=k, planes=(), eta=math.inf)
    disp = X.points[nbrs] - X.points[k]
    if X.space == TORUS:
        disp = wrap_torus(disp)

    full = (1 << n) - 1
    plane_of = {}
    for mask in range(1, full + 1):
        members = tuple(i for i in range(n) if mask >> i & 1)
        plane_of[mask] = _group_plane(disp, members)

    # dp[mask] = (r, -eta, partition) minimizing r, then maximizing eta.
    dp: list = [None] * (full + 1)
    dp[0] = (0, -math.inf, ())
    for mask in range(1, full + 1):
        low = mask & -mask
        best = None
        sub = mask
        while sub:
            if sub & low and plane_of[sub] is not None:
                rest = dp[mask ^ sub]
                if rest is not None:
                    eta = min(plane_of[sub][1], -rest[1])
                    cand = (rest[0] + 1, -eta, rest[2] + (sub,))
                    if best is None or cand[:2] < best[:2]:
                        best = cand
            sub = (sub - 1) & mask
        dp[mask] = best

    result = dp[full]
    if result is None or result[0] > r_max:
        raise NoDecompositionError(
            f"no hyperplane cover of node {k} with r <= {r_max}"
        )
    r, neg_eta, groups = result
    planes = []
    for mask in groups:
        normal, dist = plane_of[mask]
        members = frozenset(nbrs[i] for i in range(n) if mask >> i & 1)
        planes.append((Hyperplane(normal=normal, offset=dist), members))
    planes.sort(key=lambda pm: abs(pm[0].offset))
    return LocalHyperplaneDecomposition(
        reference_index=k, planes=tuple(planes), eta=-neg_eta
    )


def generic_exponents(lam: int, d: int) -> tuple:
    """Decay exponents for dilations of a generic lambda-point set in R^d.

    gamma = least integer with C(gamma + d, d) >= lambda; r = ceil((lambda-1)/d).
    """
    if lam < 1 or d < 1:
        raise ValueError("lambda and d must be positive")
    gamma = 0
    while math.comb(gamma + d, d) < lam:
        gamma += 1
    r = math.ceil((lam - 1) / d)
    return gamma, r


def dilate(X: PointSet, delta: float) -> PointSet:
    """Isotropic scaling of all nodes by delta; rejects if the box overflows."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    pts = X.points * delta
    if np.any(pts < -0.5) or np.any(pts >= 0.5):
        raise ValueError("dilation overflows the fundamental domain")
    return PointSet(points=pts, space=X.space)
