"""Exact constructions on the binomial moment curve.

The curve sends t to (C(t,1), C(t,2), ..., C(t,d)).  Its key feature is
algebraic: composing an affine functional with the curve gives a degree
<= d polynomial in t, so a hyperplane meets the curve in at most d
points, and d points on the curve determine a unique hyperplane.

Measures here are uniform-in-parameter masses on disjoint parameter
intervals.  An arrangement of k hyperplanes bisects all j interval
measures exactly when, for every interval, the product of the composed
functionals flips sign once, at the interval's parameter midpoint.
That reduces bisection to a statement about polynomial roots, checked
below with exact rational arithmetic, and reduces the enumeration of
bisecting arrangements to combinatorics: partition the j midpoints into
blocks and pass one hyperplane through each block (plus, in the
anchored variant, ell fixed early curve points shared by all but one
block).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import polynomials as poly

Rational = Fraction


class DegenerateInputError(ValueError):
    """Input admits no unique exact solution (e.g. affinely dependent points)."""


class GenericityWarning(UserWarning):
    """Some enumerated candidate failed exact verification and was dropped."""


@dataclass(frozen=True)
class OrientedHyperplane:
    """Affine hyperplane with functional p(x) = <x, normal> - offset.

    The positive side is where the functional is positive.  Scaling by a
    positive constant preserves the oriented hyperplane; canonical()
    fixes the scale and the orientation in one stroke, so two
    hyperplanes agree up to orientation flip iff their canonical forms
    are equal.
    """

    normal: tuple
    offset: object

    def __post_init__(self) -> None:
        if not self.normal or all(c == 0 for c in self.normal):
            raise ValueError("normal vector must be nonzero")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value(self, point) -> Fraction:
        if len(point) != self.dim:
            raise ValueError(f"point has dim {len(point)}, expected {self.dim}")
        return sum(u * x for u, x in zip(self.normal, point)) - self.offset

    def flipped(self) -> "OrientedHyperplane":
        return OrientedHyperplane(tuple(-u for u in self.normal), -self.offset)

    def canonical(self) -> "OrientedHyperplane":
        """Scale so the first nonzero normal coordinate equals one."""
        pivot = next(u for u in self.normal if u != 0)
        return OrientedHyperplane(tuple(u / pivot for u in self.normal),
                                  self.offset / pivot)

    def sort_key(self) -> tuple:
        c = self.canonical()
        return (*c.normal, c.offset)


@dataclass(frozen=True)
class Arrangement:
    hyperplanes: tuple[OrientedHyperplane, ...]

    def __post_init__(self) -> None:
        if not self.hyperplanes:
            raise ValueError("arrangement needs at least one hyperplane")
        dims = {h.dim for h in self.hyperplanes}
        if len(dims) > 1:
            raise ValueError(f"mixed dimensions {dims}")

    @property
    def k(self) -> int:
        return len(self.hyperplanes)

    @property
    def dim(self) -> int:
        return self.hyperplanes[0].dim

    def is_essential(self) -> bool:
        """No two hyperplanes coincide, even after an orientation flip."""
        return len({h.canonical() for h in self.hyperplanes}) == self.k

    def canonical(self) -> "Arrangement":
        return Arrangement(tuple(sorted((h.canonical() for h in self.hyperplanes),
                                        key=OrientedHyperplane.sort_key)))

    def sort_key(self) -> tuple:
        return tuple(h.sort_key() for h in self.hyperplanes)


def moment_point(t, d: int) -> tuple[Fraction, ...]:
    """Curve point (C(t,1), ..., C(t,d)) at rational parameter t."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    t = Fraction(t)
    coords = []
    acc = Fraction(1)
    for i in range(1, d + 1):
        acc = acc * (t - (i - 1)) / i
        coords.append(acc)
    return tuple(coords)


def _nullspace_vector(rows: list[list[Fraction]]) -> list[Fraction]:
    """The kernel vector of a matrix whose kernel must be a line."""
    m = [row[:] for row in rows]
    n_rows, n_cols = len(m), len(m[0])
    pivot_cols: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
        if r == n_rows:
            break
    free_cols = [c for c in range(n_cols) if c not in pivot_cols]
    if len(free_cols) != 1:
        raise DegenerateInputError(
            f"kernel has dimension {len(free_cols)}, expected 1")
    free = free_cols[0]
    vec = [Fraction(0)] * n_cols
    vec[free] = Fraction(1)
    for row_idx, c in enumerate(pivot_cols):
        vec[c] = -m[row_idx][free]
    return vec


def hyperplane_through(points) -> OrientedHyperplane:
    """The unique hyperplane through d affinely independent points in R^d.

    Exact rational solve; raises DegenerateInputError when the points
    fail to determine a single hyperplane.  The result is canonical.
    """
    points = [tuple(Fraction(x) for x in p) for p in points]
    if not points:
        raise ValueError("no points given")
    d = len(points[0])
    if len(points) != d:
        raise ValueError(f"need exactly {d} points in R^{d}, got {len(points)}")
    if any(len(p) != d for p in points):
        raise ValueError("points of mixed dimension")
    rows = [[*p, Fraction(-1)] for p in points]
    vec = _nullspace_vector(rows)
    normal, offset = tuple(vec[:d]), vec[d]
    if all(u == 0 for u in normal):
        raise DegenerateInputError("points force a zero normal")
    return OrientedHyperplane(normal, offset).canonical()


def curve_restriction(h: OrientedHyperplane) -> poly.Coeffs:
    """Coefficients of t -> p(moment curve(t)) in the power basis."""
    d = h.dim
    q = poly.make([-Fraction(h.offset)])
    basis = poly.make([1])
    for i in range(1, d + 1):
        basis = poly.scale(poly.multiply(basis, poly.make([-(i - 1), 1])),
                           Fraction(1, i))
        q = poly.add(q, poly.scale(basis, Fraction(h.normal[i - 1])))
    return q


def curve_roots_check(h: OrientedHyperplane, params) -> bool:
    """True iff the restriction vanishes exactly at params and nowhere else.

    Exact polynomial division: the restriction must factor as a nonzero
    constant times the product of (t - param).
    """
    params = [Fraction(t) for t in params]
    if len(set(params)) != len(params):
        raise ValueError("parameters must be distinct")
    q = curve_restriction(h)
    if not q:
        return False
    for t in params:
        q, rem = poly.divide(q, poly.make([-t, 1]))
        if rem or not q:
            return False
    return poly.degree(q) == 0


@dataclass(frozen=True)
class IntervalFamily:
    """Disjoint parameter intervals on the moment curve, plus anchors.

    parameters lists the 2j interval endpoints in strictly increasing
    order; interval r spans (parameters[2r], parameters[2r+1]).  With
    anchor_count = ell > 0 the construction pins all but one hyperplane
    through the curve points at parameters 0, 1, ..., ell-1, which must
    precede the first interval.
    """

    d: int
    parameters: tuple[Fraction, ...]
    anchor_count: int = 0

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"need d >= 1, got {self.d}")
        if self.anchor_count < 0:
            raise ValueError(f"negative anchor count {self.anchor_count}")
        ps = tuple(Fraction(t) for t in self.parameters)
        object.__setattr__(self, "parameters", ps)
        if len(ps) < 2 or len(ps) % 2:
            raise ValueError(f"need an even number >= 2 of endpoints, got {len(ps)}")
        if any(a >= b for a, b in zip(ps, ps[1:])):
            raise ValueError("endpoints must be strictly increasing")
        if self.anchor_count > 0 and not self.anchor_count - 1 < ps[0]:
            raise ValueError("anchors must precede the first interval")

    @property
    def j(self) -> int:
        return len(self.parameters) // 2

    def intervals(self) -> list[tuple[Fraction, Fraction]]:
        ps = self.parameters
        return [(ps[2 * r], ps[2 * r + 1]) for r in range(self.j)]

    def midpoints(self) -> list[Fraction]:
        return [(a + b) / 2 for a, b in self.intervals()]

    def anchors(self) -> list[Fraction]:
        return [Fraction(i) for i in range(self.anchor_count)]


def well_separated_family(d: int, k: int, ell: int = 0) -> IntervalFamily:
    """A canonical test family: unit intervals at integer endpoints."""
    if ell == 0:
        j = d * k
    else:
        j = (d - ell) * k + ell
    start = ell + 1
    params = []
    for r in range(j):
        params.extend([start + 2 * r, start + 2 * r + 1])
    return IntervalFamily(d=d, parameters=tuple(Fraction(t) for t in params),
                          anchor_count=ell)


def verify_bisection(arrangement: Arrangement, family: IntervalFamily) -> bool:
    """Exact check that the arrangement halves every interval measure.

    For each interval the product of the restrictions must have exactly
    one root strictly inside, located at the midpoint and simple; no
    other hyperplane may cut into the interval.  Then the sign of the
    product is constant on each half and opposite across the midpoint,
    so every interval's mass splits evenly, whatever the orientations.
    """
    if arrangement.dim != family.d:
        raise ValueError(f"arrangement lives in R^{arrangement.dim}, "
                         f"family in R^{family.d}")
    qs = [curve_restriction(h) for h in arrangement.hyperplanes]
    if any(not q for q in qs):
        return False
    for (t1, t2), mid in zip(family.intervals(), family.midpoints()):
        owners = [i for i, q in enumerate(qs) if poly.evaluate(q, mid) == 0]
        if len(owners) != 1:
            return False
        q_owner = qs[owners[0]]
        if poly.evaluate(poly.derivative(q_owner), mid) == 0:
            return False
        for i, q in enumerate(qs):
            expected = 1 if i == owners[0] else 0
            if poly.count_roots_open(q, t1, t2) != expected:
                return False
    return True


def _equal_partitions(items: tuple, size: int):
    """Unordered partitions of items into blocks of the given size."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for others in combinations(rest, size - 1):
        block = (first, *others)
        remaining = tuple(x for x in rest if x not in others)
        for tail in _equal_partitions(remaining, size):
            yield (block, *tail)


def enumerate_bisections(family: IntervalFamily, k: int) -> list[Arrangement]:
    """All k-hyperplane arrangements bisecting the family, exactly verified.

    Unanchored families need j == d*k: each candidate passes one
    hyperplane through each block of a partition of the j midpoints into
    k blocks of size d.  Anchored families need j == (d-ell)*k + ell and
    k >= 2: one free hyperplane through d midpoints, the rest through
    d-ell midpoints plus the ell anchors.  Candidates failing exact
    verification are dropped with a GenericityWarning.
    """
    d, ell, j = family.d, family.anchor_count, family.j
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    mids = tuple(family.midpoints())
    candidates = []
    if ell == 0:
        if j != d * k:
            raise ValueError(f"unanchored case needs j == d*k, got j={j}, "
                             f"d={d}, k={k}")
        for partition in _equal_partitions(mids, d):
            candidates.append([
                hyperplane_through([moment_point(t, d) for t in block])
                for block in partition
            ])
    else:
        if k < 2:
            raise ValueError(f"anchored case needs k >= 2, got k={k}")
        if not 1 <= ell <= d - 1:
            raise ValueError(f"need 1 <= ell <= d-1, got ell={ell}, d={d}")
        if j != (d - ell) * k + ell:
            raise ValueError(f"anchored case needs j == (d-ell)*k + ell, "
                             f"got j={j}, d={d}, k={k}, ell={ell}")
        anchor_pts = [moment_point(t, d) for t in family.anchors()]
        for free_block in combinations(mids, d):
            remaining = tuple(t for t in mids if t not in free_block)
            free_h = hyperplane_through([moment_point(t, d) for t in free_block])
            for partition in _equal_partitions(remaining, d - ell):
                hs = [free_h]
                for block in partition:
                    pts = [moment_point(t, d) for t in block] + anchor_pts
                    hs.append(hyperplane_through(pts))
                candidates.append(hs)

    accepted = []
    rejected = 0
    for hs in candidates:
        arr = Arrangement(tuple(hs)).canonical()
        if arr.is_essential() and verify_bisection(arr, family):
            accepted.append(arr)
        else:
            rejected += 1
    if rejected:
        warnings.warn(f"{rejected} candidate arrangement(s) failed exact "
                      f"verification and were dropped", GenericityWarning)
    accepted.sort(key=Arrangement.sort_key)
    return accepted


def count_bisections(d: int, k: int, ell: int = 0) -> int:
    """Closed-form count of the arrangements enumerate_bisections yields."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if ell == 0:
        if k < 1:
            raise ValueError(f"need k >= 1, got {k}")
        count = math.factorial(d * k)
        for _ in range(k):
            count //= math.factorial(d)
        return count // math.factorial(k)
    if k < 2:
        raise ValueError(f"anchored case needs k >= 2, got k={k}")
    if not 1 <= ell <= d - 1:
        raise ValueError(f"need 1 <= ell <= d-1, got ell={ell}, d={d}")
    j = (d - ell) * k + ell
    count = math.factorial((d - ell) * (k - 1))
    for _ in range(k - 1):
        count //= math.factorial(d - ell)
    return math.comb(j, d) * (count // math.factorial(k - 1))


def _frac_str(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def hyperplane_to_jsonable(h: OrientedHyperplane) -> dict:
    return {"normal": [_frac_str(u) for u in h.normal],
            "offset": _frac_str(h.offset)}


def hyperplane_from_jsonable(data: dict) -> OrientedHyperplane:
    return OrientedHyperplane(tuple(Fraction(s) for s in data["normal"]),
                              Fraction(data["offset"]))


def arrangement_to_jsonable(arr: Arrangement) -> list[dict]:
    return [hyperplane_to_jsonable(h) for h in arr.hyperplanes]


def arrangement_from_jsonable(data: list[dict]) -> Arrangement:
    return Arrangement(tuple(hyperplane_from_jsonable(d) for d in data))
