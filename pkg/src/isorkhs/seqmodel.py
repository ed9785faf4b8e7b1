"""Finite expansions over the constant function and diangle profiles.

A diangle profile at angle ``a`` is the width-type map ``t -> sin|t - a|``
on ``[-pi/2, pi/2]``; an expansion is ``x0*1 + sum_i x_i * profile(a_i)``.
This module carries the closed-form inner product of two expansions, the
induced squared norm together with its exact algebraic rearrangements, the
isoperimetric gap of an expansion, and the perimeter/area readings of a
nonnegative constant-free expansion as a planar zonotope.

Angles are normalized modulo pi into ``[-pi/2, pi/2)``; the profile is
pi-periodic in its angle, so this loses nothing, and duplicate angles are
merged by summing coefficients at construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, InputError, InvariantViolationError

__all__ = [
    "DiangleExpansion",
    "diangle_expansion",
    "normalize_angle",
    "expansion_value",
    "expansion_derivative",
    "to_function",
    "seq_inner",
    "seq_norm_squared",
    "sequence_isoperimetric_gap",
    "polygon_isoperimetric_gap",
    "polygon_perimeter",
    "polygon_area",
    "sin_quadratic",
    "AREA_CONSTANT",
    "calibrate_area_constant",
]

_HALF_PI = 0.5 * math.pi
_PI_SQ = math.pi * math.pi

#: Scale between the double sum ``sum_ij sin|a_i - a_j| x_i x_j`` and the
#: shoelace area of the zonotope spanned by segments of length ``2 x_i``.
#: Pinned by :func:`calibrate_area_constant` against the geometry oracle.
AREA_CONSTANT = 2.0


def normalize_angle(a: float) -> float:
    """Reduce an angle modulo pi into ``[-pi/2, pi/2)``."""
    a = float(a)
    if not math.isfinite(a):
        raise InputError("angles must be finite")
    n = math.floor((a + _HALF_PI) / math.pi)
    r = a - n * math.pi
    if r >= _HALF_PI:
        r -= math.pi
    elif r < -_HALF_PI:
        r += math.pi
    return r


@dataclass(frozen=True)
class DiangleExpansion:
    """Canonical expansion: normalized, sorted, distinct, nonzero terms."""

    x0: float
    terms: tuple[tuple[float, float], ...]

    @property
    def angles(self) -> tuple[float, ...]:
        return tuple(a for a, _ in self.terms)

    @property
    def coefficients(self) -> tuple[float, ...]:
        return tuple(c for _, c in self.terms)

    @property
    def coefficient_sum(self) -> float:
        return float(sum(c for _, c in self.terms))


def diangle_expansion(x0: float, terms: Iterable[tuple[float, float]] = ()) -> DiangleExpansion:
    """Build a canonical :class:`DiangleExpansion`.

    Angles are normalized modulo pi, exact duplicates merged by summing
    coefficients, zero coefficients dropped, terms sorted by angle.
    """
    x0 = float(x0)
    if not math.isfinite(x0):
        raise InputError("constant coefficient must be finite")
    merged: dict[float, float] = {}
    for item in terms:
        try:
            a, c = item
        except (TypeError, ValueError) as exc:
            raise InputError(f"not an (angle, coefficient) pair: {item!r}") from exc
        c = float(c)
        if not math.isfinite(c):
            raise InputError("coefficients must be finite")
        an = normalize_angle(a)
        merged[an] = merged.get(an, 0.0) + c
    cleaned = tuple(sorted((a, c) for a, c in merged.items() if c != 0.0))
    return DiangleExpansion(x0, cleaned)


def expansion_value(e: DiangleExpansion, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    acc = np.full(x.shape, e.x0)
    for a, c in e.terms:
        acc += c * np.sin(np.abs(x - a))
    return acc


def expansion_derivative(e: DiangleExpansion, x) -> np.ndarray:
    """Derivative a.e.; the right-hand branch is taken at each kink."""
    x = np.asarray(x, dtype=float)
    acc = np.zeros(x.shape)
    for a, c in e.terms:
        d = x - a
        acc += c * np.where(d >= 0.0, 1.0, -1.0) * np.cos(d)
    return acc


def to_function(e: DiangleExpansion):
    """The expansion as a function-space member (a ``DiangleSpan``)."""
    from . import funcspace  # deferred: funcspace imports this module

    return funcspace.DiangleSpan(e)


def _cross_gram(x: DiangleExpansion, y: DiangleExpansion) -> float:
    if not x.terms or not y.terms:
        return 0.0
    ax = np.array(x.angles)
    ay = np.array(y.angles)
    cx = np.array(x.coefficients)
    cy = np.array(y.coefficients)
    s = np.sin(np.abs(ax[:, None] - ay[None, :]))
    return float(cx @ (2.0 - _HALF_PI * s) @ cy)


def seq_inner(x: DiangleExpansion, y: DiangleExpansion) -> float:
    """Closed-form inner product of two expansions.

    The Gram coefficients are 1 for the constant against itself, ``2/pi``
    between the constant and any profile, and
    ``(4/pi^2) * (2 - (pi/2) sin|a - b|)`` between two profiles.
    """
    v = x.x0 * y.x0
    v += (2.0 / math.pi) * (x.coefficient_sum * y.x0 + x.x0 * y.coefficient_sum)
    v += (4.0 / _PI_SQ) * _cross_gram(x, y)
    return v


def sin_quadratic(x: DiangleExpansion) -> float:
    """The double sum ``sum_ij sin|a_i - a_j| x_i x_j``."""
    if not x.terms:
        return 0.0
    a = np.array(x.angles)
    c = np.array(x.coefficients)
    s = np.sin(np.abs(a[:, None] - a[None, :]))
    return float(c @ s @ c)


def seq_norm_squared(x: DiangleExpansion) -> float:
    """Squared norm of an expansion, cross-checked against its rearrangements.

    Three algebraically identical forms are evaluated: the direct quadratic
    form, the completed-square form, and the expanded form that isolates the
    sine double sum.  They must agree to ``1e-12`` (relative for large
    values); disagreement means the algebra was broken and raises.
    """
    n2 = seq_inner(x, x)
    s = x.coefficient_sum
    half = _HALF_PI * x.x0 + s
    gram = _cross_gram(x, x)
    form3 = (4.0 / _PI_SQ) * (half * half - s * s + gram)
    form4 = (4.0 / _PI_SQ) * (half * half + s * s - _HALF_PI * sin_quadratic(x))
    tol = 1e-12 * max(1.0, abs(n2))
    if abs(n2 - form3) > tol or abs(n2 - form4) > tol:
        raise InvariantViolationError(
            f"norm rearrangements disagree: {n2!r}, {form3!r}, {form4!r}"
        )
    if n2 < -1e-9:
        raise InvariantViolationError(f"squared norm is negative: {n2!r}")
    return n2


def sequence_isoperimetric_gap(x: DiangleExpansion) -> float:
    """Slack in the sequence isoperimetric inequality.

    Returns ``((pi/2) x0 + S)^2 + 2 S^2 - S^2 - (pi/2) sum_ij sin|a_i-a_j| x_i x_j``
    with ``S = sum_i x_i``, which equals ``(pi^2/4)`` times the squared norm,
    hence is nonnegative up to rounding.
    """
    s = x.coefficient_sum
    half = _HALF_PI * x.x0 + s
    lhs = half * half + 2.0 * s * s
    rhs = s * s + _HALF_PI * sin_quadratic(x)
    return lhs - rhs


def polygon_isoperimetric_gap(x: DiangleExpansion) -> float:
    """The constant-free reduced gap ``(4/pi) S^2 - sum_ij sin|a_i-a_j| x_i x_j``.

    This is the ``2/pi``-scaled reading of :func:`sequence_isoperimetric_gap`
    for expansions with no constant part; it is the form in which the polygon
    inequality ``area <= perimeter^2 / (4 pi)`` is usually quoted.
    """
    if x.x0 != 0.0:
        raise DomainError("reduced gap requires a zero constant coefficient")
    s = x.coefficient_sum
    return (4.0 / math.pi) * s * s - sin_quadratic(x)


def _require_polygon(x: DiangleExpansion) -> None:
    if x.x0 != 0.0:
        raise DomainError("polygon readings require a zero constant coefficient")
    for a, c in x.terms:
        if c < 0.0:
            raise DomainError(f"polygon readings require nonnegative coefficients, got {c!r} at angle {a!r}")


def polygon_perimeter(x: DiangleExpansion) -> float:
    """Perimeter of the zonotope spanned by segments of length ``2 x_i``."""
    _require_polygon(x)
    return 4.0 * x.coefficient_sum


def polygon_area(x: DiangleExpansion) -> float:
    """Area of the zonotope spanned by segments of length ``2 x_i``.

    Equals ``AREA_CONSTANT * sum_ij sin|a_i - a_j| x_i x_j``, which is also
    the energy functional ``int (f^2 - f'^2)`` of the expansion's function.
    """
    _require_polygon(x)
    return AREA_CONSTANT * sin_quadratic(x)


def calibrate_area_constant() -> float:
    """Measure the area constant against the shoelace oracle.

    Builds a few reference zonotopes from expansions (generator lengths
    ``2 x_i``), compares their shoelace areas to the sine double sum, and
    returns the common ratio.  Raises if the references disagree.
    """
    from . import convexgeo  # deferred: convexgeo imports this module

    references = [
        diangle_expansion(0.0, [(-math.pi / 4, 1.0), (math.pi / 4, 1.0)]),
        diangle_expansion(0.0, [(-1.2, 0.7), (0.3, 1.1), (1.0, 0.4)]),
        diangle_expansion(0.0, [(-1.5, 0.25), (-0.4, 0.9), (0.2, 0.6), (1.1, 1.3)]),
    ]
    ratios = []
    for e in references:
        body = convexgeo.zonotope_from_generators([(a, 2.0 * c) for a, c in e.terms])
        denom = sin_quadratic(e)
        if denom <= 0:
            raise InvariantViolationError("degenerate calibration reference")
        ratios.append(convexgeo.area(body) / denom)
    spread = max(ratios) - min(ratios)
    if spread > 1e-9:
        raise InvariantViolationError(f"area calibration references disagree: {ratios!r}")
    return float(np.mean(ratios))
