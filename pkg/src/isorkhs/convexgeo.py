"""Origin-symmetric convex bodies in the plane and the width-pair isometry.

Bodies are convex polygons, symmetric about the origin, kept in a canonical
form: counterclockwise vertices, antipodal pairs exactly negated, starting at
the lexicographically smallest vertex.  Points and segments are first-class
degenerate bodies, so Minkowski sums and differences of widths never need
special-casing.

A pair of bodies ``[U, V]`` stands for the formal difference ``U - V``.  Its
half-width difference

    f(phi) = (width_U(phi) - width_V(phi)) / 2

is a member of the function space on ``[-pi/2, pi/2]`` (widths are
pi-periodic, so the endpoints agree), and the pair quantities

    pair_perimeter = perim(U) - perim(V)
    pair_measure   = 2 area(U) + 2 area(V) - area(U + V)

map onto the function-space integrals: ``int f`` is half the pair perimeter
and ``int (f^2 - f'^2)`` is the pair measure.  The squared norm of the pair
under this correspondence is ``(2 p^2 - 4 pi m) / (4 pi^2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import funcspace, quad, seqmodel
from .errors import InputError, InvariantViolationError
from .funcspace import Sampled
from .quad import DEFAULT_SPEC, DELTA, QuadratureSpec

__all__ = [
    "WIDTH_SCALE",
    "SymmetricPolygon",
    "symmetric_polygon",
    "point",
    "segment",
    "regular_polygon",
    "zonotope_from_generators",
    "minkowski_sum",
    "area",
    "perimeter",
    "width",
    "width_derivative",
    "width_kinks",
    "BodyPair",
    "body_pair",
    "pair_measure",
    "pair_perimeter",
    "pair_deficit",
    "convex_norm_squared",
    "convex_norm",
    "pair_to_function",
    "pair_equivalent",
    "cauchy_check",
    "calibrate_width_scale",
    "pair_norm_agreement",
]

_HALF_PI = 0.5 * math.pi

# Scale applied to a width difference to land in the function space; fixed by
# calibrate_width_scale() against reference bodies with known profiles.
WIDTH_SCALE = 0.5

_GEOM_TOL = 1e-12


def _scale_of(pts: np.ndarray) -> float:
    if pts.size == 0:
        return 1.0
    return max(1.0, float(np.max(np.abs(pts))))


# ---------------------------------------------------------------------------
# canonical construction


def _convex_hull(pts: np.ndarray) -> np.ndarray:
    """Monotone-chain hull, CCW, strictly convex vertices only."""
    scale = _scale_of(pts)
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = pts[order]
    keep = [0]
    for i in range(1, len(pts)):
        if np.max(np.abs(pts[i] - pts[keep[-1]])) > _GEOM_TOL * scale:
            keep.append(i)
    pts = pts[keep]
    if len(pts) <= 2:
        return pts
    eps = _GEOM_TOL * scale * scale

    def half(iterable):
        chain: list[np.ndarray] = []
        for p in iterable:
            while len(chain) >= 2:
                a, b = chain[-2], chain[-1]
                if (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) <= eps:
                    chain.pop()
                else:
                    break
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(pts[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:  # all points collinear
        return np.asarray([pts[0], pts[-1]])
    return np.asarray(hull)


def _upper_of_pair(u: np.ndarray) -> bool:
    return u[1] > 0.0 or (u[1] == 0.0 and u[0] > 0.0)


def _canonicalize(points: np.ndarray) -> tuple[tuple[float, float], ...]:
    """Hull, antipodal pairing, exact symmetrization, canonical rotation."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) == 0:
        raise InputError("expected a nonempty array of planar points")
    if not np.all(np.isfinite(pts)):
        raise InputError("vertices must be finite")
    hull = _convex_hull(pts)
    scale = _scale_of(hull)
    tol = _GEOM_TOL * scale
    if len(hull) == 1:
        if np.max(np.abs(hull[0])) > tol:
            raise InputError("a one-point body must sit at the origin")
        return ((0.0, 0.0),)
    if len(hull) % 2 != 0:
        raise InputError("vertex set is not centrally symmetric")

    used = np.zeros(len(hull), dtype=bool)
    uppers: list[np.ndarray] = []
    for i in range(len(hull)):
        if used[i]:
            continue
        used[i] = True
        target = -hull[i]
        best, best_d = -1, math.inf
        for j in range(len(hull)):
            if used[j]:
                continue
            d = float(np.max(np.abs(hull[j] - target)))
            if d < best_d:
                best, best_d = j, d
        if best < 0 or best_d > tol:
            raise InputError("vertex set is not centrally symmetric")
        used[best] = True
        u = 0.5 * (hull[i] - hull[best])
        uppers.append(u if _upper_of_pair(u) else -u)

    uppers.sort(key=lambda u: math.atan2(u[1], u[0]))
    ring = [(float(u[0]), float(u[1])) for u in uppers]
    ring += [(-x, -y) for x, y in ring]
    start = min(range(len(ring)), key=lambda i: ring[i])
    return tuple(ring[start:] + ring[:start])


@dataclass(frozen=True)
class SymmetricPolygon:
    """Canonical origin-symmetric convex polygon (possibly a segment or point).

    Build through the factory functions; ``vertices`` is trusted to be in
    canonical form.
    """

    vertices: tuple[tuple[float, float], ...]

    @cached_property
    def vertex_array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=float)

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    @property
    def is_segment(self) -> bool:
        return len(self.vertices) == 2

    @property
    def scale(self) -> float:
        return _scale_of(self.vertex_array)


def symmetric_polygon(points: Iterable[Sequence[float]]) -> SymmetricPolygon:
    """Validate and canonicalize a vertex set.

    Rejects vertex sets that are not centrally symmetric or contain points
    interior to their own hull (the vertices must be in convex position).
    """
    pts = np.asarray(list(points), dtype=float)
    canon = _canonicalize(pts)
    hull = np.asarray(canon, dtype=float)
    scale = _scale_of(pts)
    for p in pts:
        if float(np.min(np.max(np.abs(hull - p), axis=1))) > 1e-9 * scale:
            raise InputError("vertices are not in convex position")
    return SymmetricPolygon(canon)


def point() -> SymmetricPolygon:
    return SymmetricPolygon(((0.0, 0.0),))


def segment(angle: float, length: float) -> SymmetricPolygon:
    """Origin-centered segment with direction ``angle`` and total ``length``."""
    angle, length = float(angle), float(length)
    if not (math.isfinite(angle) and math.isfinite(length)) or length < 0.0:
        raise InputError("segment needs a finite angle and nonnegative length")
    if length == 0.0:
        return point()
    h = 0.5 * length
    v = (h * math.cos(angle), h * math.sin(angle))
    return SymmetricPolygon(_canonicalize(np.asarray([v, (-v[0], -v[1])])))


def regular_polygon(n: int, radius: float = 1.0, phase: float = 0.0) -> SymmetricPolygon:
    """Regular ``n``-gon (``n`` even, at least 4) with circumradius ``radius``."""
    n = int(n)
    if n < 4 or n % 2 != 0:
        raise InputError("central symmetry requires an even vertex count >= 4")
    radius = float(radius)
    if not math.isfinite(radius) or radius <= 0.0:
        raise InputError("radius must be positive")
    ang = phase + 2.0 * math.pi * np.arange(n) / n
    pts = radius * np.stack([np.cos(ang), np.sin(ang)], axis=1)
    return SymmetricPolygon(_canonicalize(pts))


def zonotope_from_generators(generators: Iterable[tuple[float, float]]) -> SymmetricPolygon:
    """Minkowski sum of origin-centered segments ``(angle, length)``.

    Angles are identified modulo pi; exact duplicates merge by adding
    lengths.  An empty generator list gives the point.
    """
    merged: dict[float, float] = {}
    for raw_angle, raw_len in generators:
        a = seqmodel.normalize_angle(float(raw_angle))
        ln = float(raw_len)
        if not math.isfinite(ln) or ln < 0.0:
            raise InputError(f"generator length must be nonnegative, got {raw_len!r}")
        if ln == 0.0:
            continue
        merged[a] = merged.get(a, 0.0) + ln
    if not merged:
        return point()
    angles = sorted(merged)
    edges = np.asarray([[merged[a] * math.cos(a), merged[a] * math.sin(a)] for a in angles])
    start = -0.5 * edges.sum(axis=0)
    walk = start + np.vstack([np.zeros(2), np.cumsum(edges, axis=0)[:-1]])
    ring = np.vstack([walk, -walk])
    return SymmetricPolygon(_canonicalize(ring))


def minkowski_sum(u: SymmetricPolygon, v: SymmetricPolygon) -> SymmetricPolygon:
    """Minkowski sum ``{a + b : a in U, b in V}``."""
    sums = (u.vertex_array[:, None, :] + v.vertex_array[None, :, :]).reshape(-1, 2)
    return SymmetricPolygon(_canonicalize(sums))


# ---------------------------------------------------------------------------
# metric quantities


def area(u: SymmetricPolygon) -> float:
    v = u.vertex_array
    if len(v) < 3:
        return 0.0
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def perimeter(u: SymmetricPolygon) -> float:
    """Cyclic boundary length; a segment's doubly-walked boundary counts twice."""
    v = u.vertex_array
    if len(v) < 2:
        return 0.0
    return float(np.sum(np.hypot(*(np.roll(v, -1, axis=0) - v).T)))


def _normals(phi: np.ndarray) -> np.ndarray:
    return np.stack([-np.sin(phi), np.cos(phi)], axis=0)


def width(u: SymmetricPolygon, phi):
    """Extent of ``U`` in the direction at angle ``phi``; pi-periodic."""
    pa = np.asarray(phi, dtype=float)
    scalar = pa.ndim == 0
    dots = u.vertex_array @ _normals(np.atleast_1d(pa))
    out = 2.0 * dots.max(axis=0)
    return float(out[0]) if scalar else out


def width_kinks(u: SymmetricPolygon) -> tuple[float, ...]:
    """Angles in ``[-pi/2, pi/2)`` where the width profile loses smoothness.

    These are the edge directions taken modulo pi; a point has none.
    """
    v = u.vertex_array
    if len(v) < 2:
        return ()
    edges = np.roll(v, -1, axis=0) - v
    ks = {seqmodel.normalize_angle(math.atan2(e[1], e[0])) for e in edges}
    return tuple(sorted(ks))


def width_derivative(u: SymmetricPolygon, phi):
    """Derivative of the width profile, right-hand branch at kinks.

    The width is a maximum over vertices; at a tie the one-sided derivative
    from the right is the largest of the active vertices' rates.
    """
    pa = np.asarray(phi, dtype=float)
    scalar = pa.ndim == 0
    angles = np.atleast_1d(pa)
    verts = u.vertex_array
    dots = verts @ _normals(angles)  # (n_vertices, n_angles)
    best = dots.max(axis=0)
    tie = dots >= best[None, :] - _GEOM_TOL * max(1.0, u.scale)
    rates = verts @ np.stack([-np.cos(angles), -np.sin(angles)], axis=0)
    out = 2.0 * np.where(tie, rates, -np.inf).max(axis=0)
    return float(out[0]) if scalar else out


def cauchy_check(u: SymmetricPolygon, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """``| int width - perimeter |``; zero for convex bodies."""
    total = quad.integrate(lambda p: width(u, p), DELTA, width_kinks(u), spec)
    return abs(total - perimeter(u))


# ---------------------------------------------------------------------------
# body pairs


@dataclass(frozen=True)
class BodyPair:
    """Formal difference ``U - V`` of two symmetric bodies."""

    U: SymmetricPolygon
    V: SymmetricPolygon

    @property
    def scale(self) -> float:
        return max(self.U.scale, self.V.scale)


def body_pair(u: SymmetricPolygon, v: SymmetricPolygon) -> BodyPair:
    return BodyPair(u, v)


def pair_perimeter(pair: BodyPair) -> float:
    return perimeter(pair.U) - perimeter(pair.V)


def pair_measure(pair: BodyPair) -> float:
    """Signed mixed-area combination ``2 m(U) + 2 m(V) - m(U + V)``."""
    return 2.0 * area(pair.U) + 2.0 * area(pair.V) - area(minkowski_sum(pair.U, pair.V))


def pair_deficit(pair: BodyPair) -> float:
    """Isoperimetric deficit ``p^2 - 4 pi m`` of the pair; nonnegative."""
    p = pair_perimeter(pair)
    return p * p - 4.0 * math.pi * pair_measure(pair)


def convex_norm_squared(pair: BodyPair) -> float:
    p = pair_perimeter(pair)
    m = pair_measure(pair)
    n2 = (2.0 * p * p - 4.0 * math.pi * m) / (4.0 * math.pi * math.pi)
    if n2 < -1e-9 * max(1.0, abs(m), p * p):
        raise InvariantViolationError(f"squared pair norm is negative: {n2!r}")
    return n2


def convex_norm(pair: BodyPair) -> float:
    return math.sqrt(max(0.0, convex_norm_squared(pair)))


def pair_to_function(pair: BodyPair) -> Sampled:
    """The scaled width difference of the pair as a function-space member."""
    u, v = pair.U, pair.V

    def value(phi):
        return WIDTH_SCALE * (width(u, phi) - width(v, phi))

    def derivative(phi):
        return WIDTH_SCALE * (width_derivative(u, phi) - width_derivative(v, phi))

    kinks = sorted(set(width_kinks(u)) | set(width_kinks(v)))
    return Sampled(value, derivative, tuple(kinks))


def pair_equivalent(a: BodyPair, b: BodyPair) -> bool:
    """Whether two pairs represent the same difference: ``U + Q = V + P``.

    Decided by canonical vertex matching of the two Minkowski sums, with a
    width-profile comparison as an independent cross-check; the two tests
    disagreeing is an invariant violation.
    """
    left = minkowski_sum(a.U, b.V)
    right = minkowski_sum(b.U, a.V)
    scale = max(1.0, left.scale, right.scale)

    by_vertices = False
    if len(left.vertices) == len(right.vertices):
        lv, rv = left.vertex_array, right.vertex_array
        dist = np.abs(lv[:, None, :] - rv[None, :, :]).max(axis=2)
        by_vertices = bool(dist.min(axis=1).max() <= 1e-9 * scale) and bool(
            dist.min(axis=0).max() <= 1e-9 * scale
        )

    grid = np.linspace(-_HALF_PI, _HALF_PI, 721)
    gap = float(np.max(np.abs(width(left, grid) - width(right, grid))))
    by_width = gap <= 1e-9 * scale

    if by_vertices != by_width:
        raise InvariantViolationError(
            "vertex and width-profile equivalence tests disagree "
            f"(width gap {gap!r})"
        )
    return by_vertices


# ---------------------------------------------------------------------------
# calibration


def calibrate_width_scale() -> float:
    """Recover the width-to-function scale from reference bodies.

    A unit-direction segment of length 2 paired with a point must produce the
    diangle profile ``sin|phi - psi|``, and a fine regular polygon paired with
    a point must produce (nearly) the constant 1.  The candidate scale
    matching both is returned; the stored ``WIDTH_SCALE`` must agree.
    """
    grid = np.linspace(-_HALF_PI, _HALF_PI, 181)
    psi = 0.3
    seg = segment(psi, 2.0)
    disc = regular_polygon(64)
    pt = point()
    target_seg = np.sin(np.abs(grid - psi))

    best_c, best_err = None, math.inf
    for c in (1.0, 0.5):
        err_seg = float(np.max(np.abs(c * (width(seg, grid) - width(pt, grid)) - target_seg)))
        err_disc = float(np.max(np.abs(c * (width(disc, grid) - width(pt, grid)) - 1.0)))
        err = max(err_seg, err_disc)
        if err < best_err:
            best_c, best_err = c, err
    if best_c != WIDTH_SCALE or best_err > 0.01:
        raise InvariantViolationError(
            f"width-scale calibration found {best_c!r} (error {best_err!r})"
        )
    return best_c


def pair_norm_agreement(pair: BodyPair, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """``| pair norm^2 - function norm^2 |`` under the width correspondence."""
    f = pair_to_function(pair)
    return abs(convex_norm_squared(pair) - funcspace.norm_iso_squared(f, spec=spec))
