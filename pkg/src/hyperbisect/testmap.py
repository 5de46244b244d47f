"""Equivariant test maps for hyperplane bisection, and a numerical solver.

An oriented affine hyperplane in R^d is encoded by a unit vector
w = (u', c) in R^{d+1}: lift points x to (x, 1), then the functional is
p(x) = <x, u'> + c.  The two poles (u' = 0) would be hyperplanes at
infinity and are rejected, not extended.

phi measures how far an arrangement of k such directions is from
bisecting each of j discrete measures: component i is the mass of
measure i on the positive side of the product functional minus the mass
on the negative side (points exactly on the union count for neither).
psi augments phi on the k-fold join: a join point carries barycentric
weights lambda and k directions, and maps to (lambda_i - 1/k)_i in the
wedge part and prod(lambda) * phi in the measure part.  The signed
permutation group acts on everything; equivariance of phi and psi under
that action is what the tests pin down, and a zero of psi with all
lambda_i = 1/k is exactly a bisecting arrangement.

The solver looks for such zeros directly: it minimizes a softened
version of phi (tanh instead of sign) with the temperature annealed
downward over stages, multi-starting from seeded random directions, and
accepts only candidates whose exact sign imbalance passes the
tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .momentcurve import Arrangement, IntervalFamily, OrientedHyperplane


class _Pole(Enum):
    AT_INFINITY = "AT_INFINITY"

    def __repr__(self) -> str:
        return self.name


AT_INFINITY = _Pole.AT_INFINITY


class AtInfinityError(ValueError):
    """A pole direction (u' = 0) was used where a hyperplane is required."""


@dataclass
class DiscreteMeasure:
    """Weighted points in R^d; weights must be strictly positive."""

    points: np.ndarray
    weights: np.ndarray
    total: float = field(init=False)

    def __post_init__(self) -> None:
        self.points = np.asarray(self.points, dtype=float)
        self.weights = np.asarray(self.weights, dtype=float)
        if self.points.ndim != 2:
            raise ValueError(f"points must be (n, d), got shape {self.points.shape}")
        if self.weights.shape != (self.points.shape[0],):
            raise ValueError("one weight per point required")
        if self.points.shape[0] == 0:
            raise ValueError("measure needs at least one point")
        if not np.all(self.weights > 0):
            raise ValueError("weights must be strictly positive")
        self.total = float(self.weights.sum())

    @property
    def dim(self) -> int:
        return int(self.points.shape[1])

    def lifted(self) -> np.ndarray:
        """Points with a trailing 1, so p(x) = lifted @ w."""
        n = self.points.shape[0]
        return np.hstack([self.points, np.ones((n, 1))])


@dataclass(frozen=True)
class JoinPoint:
    """Barycentric weights plus k unit directions in R^{d+1}."""

    lambdas: tuple[float, ...]
    directions: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if len(self.lambdas) != len(self.directions):
            raise ValueError("one weight per direction required")
        if any(lam < 0 for lam in self.lambdas):
            raise ValueError("barycentric weights must be nonnegative")
        if abs(sum(self.lambdas) - 1.0) > 1e-12:
            raise ValueError("barycentric weights must sum to 1")
        for w in self.directions:
            if abs(math.fsum(c * c for c in w) - 1.0) > 1e-9:
                raise ValueError("directions must be unit vectors")

    @property
    def k(self) -> int:
        return len(self.lambdas)


@dataclass(frozen=True)
class GroupElement:
    """A sign vector and a permutation of {0, ..., k-1} (semidirect)."""

    signs: tuple[int, ...]
    permutation: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.signs) != len(self.permutation):
            raise ValueError("signs and permutation must have equal length")
        if any(s not in (0, 1) for s in self.signs):
            raise ValueError("signs must be 0 or 1")
        if sorted(self.permutation) != list(range(len(self.permutation))):
            raise ValueError(f"not a permutation: {self.permutation}")

    @property
    def k(self) -> int:
        return len(self.signs)

    @classmethod
    def identity(cls, k: int) -> "GroupElement":
        return cls((0,) * k, tuple(range(k)))

    def inverse_permutation(self) -> tuple[int, ...]:
        inv = [0] * self.k
        for i, image in enumerate(self.permutation):
            inv[image] = i
        return tuple(inv)

    def compose(self, other: "GroupElement") -> "GroupElement":
        """Element acting like self after other: act(self, act(other, x))."""
        if self.k != other.k:
            raise ValueError("mismatched k")
        tau1, tau2 = self.permutation, other.permutation
        inv1 = self.inverse_permutation()
        perm = tuple(tau1[tau2[i]] for i in range(self.k))
        signs = tuple((self.signs[i] + other.signs[inv1[i]]) % 2
                      for i in range(self.k))
        return GroupElement(signs, perm)


def sphere_to_hyperplane(w) -> OrientedHyperplane | _Pole:
    """Decode a unit direction in R^{d+1} into an affine hyperplane.

    Returns AT_INFINITY for the poles (u' = 0); otherwise the hyperplane
    with functional <x, u'> + c, orientation preserved, no
    canonicalization.
    """
    w = np.asarray(w, dtype=float)
    if w.ndim != 1 or w.shape[0] < 2:
        raise ValueError(f"direction must live in R^(d+1), d >= 1, got {w.shape}")
    if abs(float(w @ w) - 1.0) > 1e-9:
        raise ValueError("direction must be a unit vector")
    u, c = w[:-1], float(w[-1])
    if np.all(u == 0.0):
        return AT_INFINITY
    return OrientedHyperplane(tuple(float(x) for x in u), -c)


def hyperplane_to_sphere_point(h: OrientedHyperplane) -> np.ndarray:
    """Inverse direction of sphere_to_hyperplane, up to positive scale."""
    w = np.array([float(u) for u in h.normal] + [-float(h.offset)])
    return w / np.linalg.norm(w)


def _direction_matrix(directions, d: int | None = None) -> np.ndarray:
    W = np.asarray(directions, dtype=float)
    if W.ndim != 2:
        raise ValueError(f"directions must be (k, d+1), got shape {W.shape}")
    if d is not None and W.shape[1] != d + 1:
        raise ValueError(f"directions live in R^{W.shape[1]}, measures in R^{d}")
    for row in W:
        if np.all(row[:-1] == 0.0):
            raise AtInfinityError("pole direction has no affine hyperplane")
    return W


def _signed_products(measure: DiscreteMeasure, W: np.ndarray) -> np.ndarray:
    return np.prod(measure.lifted() @ W.T, axis=1)


def phi(measures, directions) -> np.ndarray:
    """Signed mass imbalance of each measure across the arrangement.

    Component i is sum_points weight * sign(product functional); zero
    for measure i means the arrangement bisects it.
    """
    if not measures:
        raise ValueError("need at least one measure")
    d = measures[0].dim
    if any(m.dim != d for m in measures):
        raise ValueError("measures of mixed dimension")
    W = _direction_matrix(directions, d)
    return np.array([float(np.sign(_signed_products(m, W)) @ m.weights)
                     for m in measures])


def boundary_mass(measures, directions) -> np.ndarray:
    """Mass sitting exactly on the union of the hyperplanes, per measure."""
    d = measures[0].dim
    W = _direction_matrix(directions, d)
    return np.array([float(m.weights[_signed_products(m, W) == 0.0].sum())
                     for m in measures])


def psi(measures, join_point: JoinPoint) -> tuple[np.ndarray, np.ndarray]:
    """The join test map: (lambda - 1/k, prod(lambda) * phi).

    The measure part is exactly zero whenever some lambda_i is zero, so
    on degenerate join faces the map does not depend on the measures (or
    touch the poles) at all.
    """
    k = join_point.k
    lambdas = np.asarray(join_point.lambdas, dtype=float)
    w_part = lambdas - 1.0 / k
    if any(lam == 0.0 for lam in join_point.lambdas):
        v_part = np.zeros(len(measures))
        return w_part, v_part
    scale = float(np.prod(lambdas))
    return w_part, scale * phi(measures, join_point.directions)


def act_on_join(g: GroupElement, point: JoinPoint) -> JoinPoint:
    """Position i receives weight lambda_{tau^-1(i)} and direction
    (-1)^{signs_i} w_{tau^-1(i)}."""
    if g.k != point.k:
        raise ValueError("group element and join point have different k")
    inv = g.inverse_permutation()
    lams = tuple(point.lambdas[inv[i]] for i in range(g.k))
    dirs = []
    for i in range(g.k):
        w = point.directions[inv[i]]
        dirs.append(tuple(-c for c in w) if g.signs[i] else w)
    return JoinPoint(lams, tuple(dirs))


def act_on_target(g: GroupElement, w_part, v_part) -> tuple[np.ndarray, np.ndarray]:
    """Permute the wedge part; scale the measure part by (-1)^{sum signs}."""
    w_part = np.asarray(w_part, dtype=float)
    v_part = np.asarray(v_part, dtype=float)
    if w_part.shape != (g.k,):
        raise ValueError(f"wedge part must have length {g.k}")
    inv = g.inverse_permutation()
    new_w = w_part[list(inv)]
    new_v = -v_part if sum(g.signs) % 2 else v_part.copy()
    return new_w, new_v


def interval_quadrature_measures(family: IntervalFamily, n: int) -> list[DiscreteMeasure]:
    """Midpoint-rule discretization of the family's interval measures.

    Each interval becomes n equally weighted points on the moment curve,
    total mass 1, uniform in the curve parameter.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    out = []
    for a, b in family.intervals():
        ts = float(a) + (np.arange(n) + 0.5) * (float(b) - float(a)) / n
        coords = np.empty((n, family.d))
        acc = np.ones(n)
        for i in range(1, family.d + 1):
            acc = acc * (ts - (i - 1)) / i
            coords[:, i - 1] = acc
        out.append(DiscreteMeasure(coords, np.full(n, 1.0 / n)))
    return out


NOT_FOUND = "NOT_FOUND"


@dataclass(frozen=True)
class SolverConfig:
    tolerance: float = 1e-2          # max allowed relative imbalance
    seed: int = 0
    max_restarts: int = 20
    stage_factors: tuple[float, ...] = (1.0, 0.1, 0.01)  # times data diameter
    iterations_per_stage: int = 500
    initial_step: float = 0.6
    min_step: float = 1e-4
    polish_iterations: int = 400

    def __post_init__(self) -> None:
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.max_restarts < 1:
            raise ValueError("need at least one restart")


@dataclass
class SolveResult:
    status: str                      # "SUCCESS" or NOT_FOUND
    directions: np.ndarray | None    # (k, d+1) rows, unit length
    imbalances: np.ndarray | None    # exact signed-mass phi values
    relative_imbalances: np.ndarray | None
    restarts_used: int
    seed: int

    @property
    def success(self) -> bool:
        return self.status == "SUCCESS"

    def arrangement(self) -> Arrangement:
        if not self.success:
            raise ValueError("no arrangement: solver reported NOT_FOUND")
        hs = []
        for w in self.directions:
            h = sphere_to_hyperplane(w)
            if h is AT_INFINITY:
                raise AtInfinityError("solution direction degenerated to a pole")
            hs.append(h)
        return Arrangement(tuple(hs))

    def to_jsonable(self) -> dict:
        out: dict = {"status": self.status, "restarts_used": self.restarts_used,
                     "seed": self.seed}
        if self.success:
            out["arrangement"] = [
                {"normal": [float(u) for u in h.normal],
                 "offset": float(h.offset)}
                for h in self.arrangement().hyperplanes
            ]
            out["imbalances"] = [float(v) for v in self.imbalances]
            out["relative_imbalances"] = [float(v) for v in
                                          self.relative_imbalances]
        return out


def _normalize_rows(W: np.ndarray) -> np.ndarray:
    return W / np.linalg.norm(W, axis=1, keepdims=True)


def _data_diameter(measures) -> float:
    pts = np.vstack([m.points for m in measures])
    spread = float(np.linalg.norm(pts.max(axis=0) - pts.min(axis=0)))
    return spread if spread > 0 else 1.0


def _centering(measures) -> tuple[np.ndarray, float]:
    """Centroid and radius of the pooled point cloud.

    Searching in centered unit-radius coordinates keeps the offset
    component of the sphere parameterization O(1) regardless of where the
    data sits; a cloud far from the origin would otherwise need directions
    crowded against the poles.
    """
    pts = np.vstack([m.points for m in measures])
    center = pts.mean(axis=0)
    radius = float(np.max(np.linalg.norm(pts - center, axis=1)))
    return center, radius if radius > 0 else 1.0


def _uncenter_directions(W: np.ndarray, center: np.ndarray,
                         radius: float) -> np.ndarray:
    """Map directions found in centered coordinates back to the original
    frame.  With y = (x - c)/s, the functional <y,u> + v equals
    (<x,u> + (v*s - <c,u>))/s, so signs are preserved exactly."""
    u = W[:, :-1]
    v = W[:, -1:]
    return _normalize_rows(np.hstack([u, v * radius - u @ center[:, None]]))


def _soft_imbalance(lifted, weights, totals, W, temp) -> float:
    obj = 0.0
    for X, w, tot in zip(lifted, weights, totals):
        prods = np.prod(X @ W.T, axis=1)
        s = float(np.tanh(prods / temp) @ w) / tot
        obj += s * s
    return obj


def _hard_worst(lifted, weights, totals, W) -> float:
    worst = 0.0
    for X, w, tot in zip(lifted, weights, totals):
        prods = np.prod(X @ W.T, axis=1)
        worst = max(worst, abs(float(np.sign(prods) @ w)) / tot)
    return worst


def _single_search(rng, lifted, weights, totals, k, d, diameter,
                   config: SolverConfig) -> np.ndarray:
    W = _normalize_rows(rng.normal(size=(k, d + 1)))
    step = config.initial_step
    for factor in config.stage_factors:
        temp = factor * diameter
        cur = _soft_imbalance(lifted, weights, totals, W, temp)
        for _ in range(config.iterations_per_stage):
            r = int(rng.integers(k))
            cand = W.copy()
            cand[r] = cand[r] + step * rng.normal(size=d + 1)
            norm = np.linalg.norm(cand[r])
            if norm == 0 or np.all(cand[r][:-1] == 0.0):
                continue
            cand[r] /= norm
            val = _soft_imbalance(lifted, weights, totals, cand, temp)
            if val <= cur:
                W, cur = cand, val
                step = min(step * 1.25, 2.0)
            else:
                step = max(step * 0.85, config.min_step)
    # hard-sign polish: walk directly on the exact imbalance
    cur = _hard_worst(lifted, weights, totals, W)
    step = 0.1
    for _ in range(config.polish_iterations):
        if cur == 0.0:
            break
        r = int(rng.integers(k))
        cand = W.copy()
        cand[r] = cand[r] + step * rng.normal(size=d + 1)
        norm = np.linalg.norm(cand[r])
        if norm == 0 or np.all(cand[r][:-1] == 0.0):
            continue
        cand[r] /= norm
        val = _hard_worst(lifted, weights, totals, cand)
        if val <= cur:
            if val < cur:
                step = min(step * 1.2, 0.5)
            W, cur = cand, val
        else:
            step = max(step * 0.9, config.min_step)
    return W


def solve_bisection(measures, k: int,
                    config: SolverConfig | None = None) -> SolveResult:
    """Search for k hyperplanes bisecting all measures at once.

    Deterministic in (measures, k, config): restart r uses the r-th
    spawn of the seed sequence, restarts run in index order, and the
    first exact success wins.  Every SUCCESS is re-verified with the
    exact sign imbalance before being returned.
    """
    config = config or SolverConfig()
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if not measures:
        raise ValueError("need at least one measure")
    d = measures[0].dim
    if any(m.dim != d for m in measures):
        raise ValueError("measures of mixed dimension")

    center, radius = _centering(measures)
    centered = [DiscreteMeasure((m.points - center) / radius, m.weights)
                for m in measures]
    lifted = [m.lifted() for m in centered]
    weights = [m.weights for m in centered]
    totals = [m.total for m in centered]
    diameter = _data_diameter(centered)
    children = np.random.SeedSequence(config.seed).spawn(config.max_restarts)

    for idx, child in enumerate(children):
        rng = np.random.default_rng(child)
        W = _single_search(rng, lifted, weights, totals, k, d, diameter, config)
        W = _uncenter_directions(W, center, radius)
        imb = phi(measures, W)
        rel = np.abs(imb) / np.array(totals)
        if float(rel.max()) <= config.tolerance:
            return SolveResult(status="SUCCESS", directions=W, imbalances=imb,
                               relative_imbalances=rel, restarts_used=idx + 1,
                               seed=config.seed)
    return SolveResult(status=NOT_FOUND, directions=None, imbalances=None,
                       relative_imbalances=None,
                       restarts_used=config.max_restarts, seed=config.seed)


def measures_from_jsonable(data) -> tuple[int, list[DiscreteMeasure]]:
    """Parse {"d": ..., "measures": [{"points": [{"x": [...], "w": ...}]}]}."""
    if not isinstance(data, dict):
        raise ValueError("top level must be an object")
    try:
        d = int(data["d"])
        raw_measures = data["measures"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"missing or malformed field: {exc}") from exc
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if not isinstance(raw_measures, list) or not raw_measures:
        raise ValueError("measures must be a nonempty list")
    measures = []
    for m_idx, m in enumerate(raw_measures):
        try:
            pts = [[float(v) for v in p["x"]] for p in m["points"]]
            ws = [float(p["w"]) for p in m["points"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"measure {m_idx} malformed: {exc}") from exc
        if any(len(x) != d for x in pts):
            raise ValueError(f"measure {m_idx} has points of dimension != {d}")
        measures.append(DiscreteMeasure(np.array(pts), np.array(ws)))
    return d, measures


def measures_to_jsonable(d: int, measures) -> dict:
    return {"d": d, "measures": [
        {"points": [{"x": [float(v) for v in x], "w": float(w)}
                    for x, w in zip(m.points, m.weights)]}
        for m in measures
    ]}
