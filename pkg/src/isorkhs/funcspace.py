"""Members of the periodic Sobolev space on ``[-pi/2, pi/2]`` and its functionals.

The space consists of absolutely continuous functions with square-integrable
derivative whose values at the two endpoints agree.  Its isoperimetric inner
product is

    <f, g> = (1/pi^2) * [ 2 (int f)(int g) - pi * int (f g - f' g') ]

with all integrals over ``[-pi/2, pi/2]``.  Three representations are
supported:

* ``TrigPoly``      -- finite cosine/sine series,
* ``DiangleSpan``   -- a constant plus diangle profiles (see ``seqmodel``),
* ``Sampled``       -- arbitrary callables with registered kink angles.

Inner products and the derived functionals take an exact closed-form path
whenever every argument is symbolic (trig or diangle) and an adaptive
quadrature path otherwise; the two paths are independent and the test suite
holds them against each other.  Quadrature registers the union of both
arguments' kinks as breakpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import quad, seqmodel
from .errors import DomainError, InputError, InvariantViolationError
from .quad import DEFAULT_SPEC, DELTA, Interval, QuadratureSpec
from .seqmodel import DiangleExpansion, diangle_expansion

__all__ = [
    "H1Function",
    "TrigPoly",
    "DiangleSpan",
    "Sampled",
    "trig_poly",
    "constant",
    "diangle",
    "diangle_span",
    "sampled",
    "project_endpoints",
    "evaluate",
    "mean_value",
    "perimeter_functional",
    "wirtinger_deficit",
    "energy_deficit",
    "energy_integral",
    "inner_product_iso",
    "norm_iso",
    "norm_iso_squared",
    "inner_product_classical",
    "holder_ratio",
]

_PI = math.pi
_HALF_PI = 0.5 * math.pi
_PI_SQ = math.pi * math.pi
_SQRT_PI = math.sqrt(math.pi)

_ENDPOINT_TOL = 1e-12
_NEGATIVE_NORM_TOL = 1e-9


# ---------------------------------------------------------------------------
# representations


class H1Function:
    """Abstract member of the space; concrete variants implement the rules."""

    @property
    def kinks(self) -> tuple[float, ...]:
        return ()

    def value(self, x):
        raise NotImplementedError

    def derivative(self, x):
        raise NotImplementedError

    def __call__(self, x):
        return self.value(x)


def _maybe_scalar(result: np.ndarray, scalar: bool):
    return float(result) if scalar else result


def _half_pi_sin(k: int) -> float:
    """``sin(k * pi/2)`` exactly for integer ``k``."""
    return (0.0, 1.0, 0.0, -1.0)[k % 4]


@dataclass(frozen=True)
class TrigPoly(H1Function):
    """Finite series ``a0 + sum a_k cos(k t) + sum b_k sin(k t)``.

    ``cos_coeffs`` starts at the constant term; ``sin_coeffs`` starts at
    frequency 1.  Membership requires equal endpoint values, which for this
    representation reduces to the alternating sum of odd-frequency sine
    coefficients vanishing; that is checked structurally at construction.
    """

    cos_coeffs: tuple[float, ...]
    sin_coeffs: tuple[float, ...] = ()

    def __post_init__(self):
        cc = tuple(float(c) for c in self.cos_coeffs)
        sc = tuple(float(c) for c in self.sin_coeffs)
        if not cc:
            cc = (0.0,)
        for c in (*cc, *sc):
            if not math.isfinite(c):
                raise InputError("trig coefficients must be finite")
        object.__setattr__(self, "cos_coeffs", cc)
        object.__setattr__(self, "sin_coeffs", sc)
        gap = 2.0 * sum(b * _half_pi_sin(k) for k, b in enumerate(sc, start=1))
        scale = 1.0 + max((abs(c) for c in (*cc, *sc)), default=0.0)
        if abs(gap) > _ENDPOINT_TOL * scale:
            raise DomainError(
                "endpoint values differ by "
                f"{gap!r}: not a member of the space; see project_endpoints()"
            )

    def value(self, x):
        arr = np.asarray(x, dtype=float)
        scalar = arr.ndim == 0
        arr = np.atleast_1d(arr)
        acc = np.full(arr.shape, self.cos_coeffs[0])
        for k, a in enumerate(self.cos_coeffs[1:], start=1):
            if a != 0.0:
                acc += a * np.cos(k * arr)
        for k, b in enumerate(self.sin_coeffs, start=1):
            if b != 0.0:
                acc += b * np.sin(k * arr)
        return _maybe_scalar(acc[0] if scalar else acc, scalar)

    def derivative(self, x):
        arr = np.asarray(x, dtype=float)
        scalar = arr.ndim == 0
        arr = np.atleast_1d(arr)
        acc = np.zeros(arr.shape)
        for k, a in enumerate(self.cos_coeffs[1:], start=1):
            if a != 0.0:
                acc -= k * a * np.sin(k * arr)
        for k, b in enumerate(self.sin_coeffs, start=1):
            if b != 0.0:
                acc += k * b * np.cos(k * arr)
        return _maybe_scalar(acc[0] if scalar else acc, scalar)


@dataclass(frozen=True)
class DiangleSpan(H1Function):
    """A diangle expansion viewed as a function; see ``seqmodel``."""

    expansion: DiangleExpansion

    @property
    def kinks(self) -> tuple[float, ...]:
        # An angle normalized to exactly -pi/2 sits on the boundary: the
        # profile there is cos(t), smooth in the interior.
        return tuple(a for a in self.expansion.angles if a > -_HALF_PI)

    def value(self, x):
        arr = np.asarray(x, dtype=float)
        scalar = arr.ndim == 0
        out = seqmodel.expansion_value(self.expansion, np.atleast_1d(arr))
        return _maybe_scalar(out[0] if scalar else out, scalar)

    def derivative(self, x):
        arr = np.asarray(x, dtype=float)
        scalar = arr.ndim == 0
        out = seqmodel.expansion_derivative(self.expansion, np.atleast_1d(arr))
        return _maybe_scalar(out[0] if scalar else out, scalar)


@dataclass(frozen=True)
class Sampled(H1Function):
    """A callable member with an optional derivative rule and known kinks.

    Without a derivative rule, derivatives fall back to central finite
    differences (one-sided next to a kink, right-hand at a kink).  Supply the
    rule whenever high-accuracy derivative integrals are needed.
    """

    fn: Callable
    derivative_fn: Callable | None = None
    kink_angles: tuple[float, ...] = ()
    _fd_step: float = field(default=1e-6, repr=False)

    def __post_init__(self):
        ks = tuple(sorted(float(k) for k in self.kink_angles if -_HALF_PI < float(k) < _HALF_PI))
        object.__setattr__(self, "kink_angles", ks)
        grid = np.linspace(-_HALF_PI, _HALF_PI, 33)
        vals = self._raw(grid)
        if not np.all(np.isfinite(vals)):
            raise InputError("sampled function is non-finite on the domain")
        tol = _ENDPOINT_TOL * (1.0 + float(np.max(np.abs(vals))))
        gap = abs(float(vals[0]) - float(vals[-1]))
        if gap > tol:
            raise DomainError(
                f"endpoint values differ by {gap!r}: not a member of the space"
            )

    @property
    def kinks(self) -> tuple[float, ...]:
        return self.kink_angles

    def _raw(self, arr: np.ndarray) -> np.ndarray:
        try:
            out = np.asarray(self.fn(arr), dtype=float)
        except (TypeError, ValueError):
            out = np.fromiter((float(self.fn(t)) for t in arr), dtype=float, count=arr.size)
        if out.shape != arr.shape:
            if out.ndim == 0:
                out = np.full(arr.shape, float(out))
            else:
                raise InputError("sampled rule returned a mismatched shape")
        return out

    def value(self, x):
        arr = np.asarray(x, dtype=float)
        scalar = arr.ndim == 0
        out = self._raw(np.atleast_1d(arr))
        return _maybe_scalar(out[0] if scalar else out, scalar)

    def derivative(self, x):
        arr = np.asarray(x, dtype=float)
        scalar = arr.ndim == 0
        pts = np.atleast_1d(arr)
        if self.derivative_fn is not None:
            try:
                out = np.asarray(self.derivative_fn(pts), dtype=float)
            except (TypeError, ValueError):
                out = np.fromiter(
                    (float(self.derivative_fn(t)) for t in pts), dtype=float, count=pts.size
                )
            if out.shape != pts.shape:
                if out.ndim == 0:
                    out = np.full(pts.shape, float(out))
                else:
                    raise InputError("derivative rule returned a mismatched shape")
        else:
            h = self._fd_step
            out = np.empty(pts.shape)
            at_kink = np.zeros(pts.shape, dtype=bool)
            for k in self.kink_angles:
                at_kink |= np.abs(pts - k) <= 1e-12 * (1.0 + np.abs(pts))
            near_hi = pts >= _HALF_PI - 2.0 * h
            central = ~(at_kink | near_hi)
            if central.any():
                xc = pts[central]
                out[central] = (self._raw(xc + h) - self._raw(xc - h)) / (2.0 * h)
            right = at_kink & ~near_hi
            if right.any():
                xr = pts[right]
                out[right] = (
                    -3.0 * self._raw(xr) + 4.0 * self._raw(xr + h) - self._raw(xr + 2.0 * h)
                ) / (2.0 * h)
            if near_hi.any():
                xl = pts[near_hi]
                out[near_hi] = (
                    3.0 * self._raw(xl) - 4.0 * self._raw(xl - h) + self._raw(xl - 2.0 * h)
                ) / (2.0 * h)
        return _maybe_scalar(out[0] if scalar else out, scalar)


# ---------------------------------------------------------------------------
# constructors


def trig_poly(cos_coeffs: Sequence[float], sin_coeffs: Sequence[float] = ()) -> TrigPoly:
    return TrigPoly(tuple(cos_coeffs), tuple(sin_coeffs))


def constant(c: float = 1.0) -> TrigPoly:
    return TrigPoly((float(c),))


def diangle(psi: float) -> DiangleSpan:
    """The profile ``t -> sin|t - psi|`` as a function-space member."""
    return DiangleSpan(diangle_expansion(0.0, [(psi, 1.0)]))


def diangle_span(x0: float, terms: Iterable[tuple[float, float]] = ()) -> DiangleSpan:
    return DiangleSpan(diangle_expansion(x0, terms))


def sampled(fn: Callable, derivative: Callable | None = None, kinks: Sequence[float] = ()) -> Sampled:
    return Sampled(fn, derivative, tuple(kinks))


def project_endpoints(
    cos_coeffs: Sequence[float], sin_coeffs: Sequence[float]
) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Minimal sine-coefficient adjustment that makes the endpoints agree.

    Subtracts the alternating odd-frequency sum from ``b_1``; handy for
    generating random members.
    """
    cc = tuple(float(c) for c in cos_coeffs)
    sc = [float(c) for c in sin_coeffs]
    if sc:
        s = sum(b * _half_pi_sin(k) for k, b in enumerate(sc, start=1))
        sc[0] -= s
    return cc, tuple(sc)


# ---------------------------------------------------------------------------
# exact integral engine (symbolic variants)


def _J(p: int) -> float:
    """``int cos(p t) dt`` over the domain, exact for integer ``p``."""
    p = abs(int(p))
    if p == 0:
        return _PI
    return 2.0 * _half_pi_sin(p) / p


def _S(p: int, t: float) -> float:
    """Antiderivative of ``cos(p t)``; valid for any integer ``p``."""
    if p == 0:
        return t
    return math.sin(p * t) / p


def _C(p: int, t: float) -> float:
    """Antiderivative of ``sin(p t)``; odd in ``p``, as it must be."""
    if p == 0:
        return 0.0
    return -math.cos(p * t) / p


def _anti_cos_cos(m: int, n: int, t: float) -> float:
    return 0.5 * (_S(m - n, t) + _S(m + n, t))


def _anti_sin_sin(m: int, n: int, t: float) -> float:
    return 0.5 * (_S(m - n, t) - _S(m + n, t))


def _anti_sin_cos(m: int, n: int, t: float) -> float:
    return 0.5 * (_C(m + n, t) + _C(m - n, t))


def _anti_cos_sin(m: int, n: int, t: float) -> float:
    return _anti_sin_cos(n, m, t)


def _sgn_weighted(anti, k: int, psi: float) -> float:
    """``int sgn(t - psi) p(t) dt`` over the domain, ``p`` with antiderivative ``anti(k, 1, .)``."""
    return anti(k, 1, _HALF_PI) + anti(k, 1, -_HALF_PI) - 2.0 * anti(k, 1, psi)


def _profile_cos_product(k: int, psi: float) -> float:
    """``int cos(k t) sin|t - psi| dt`` in closed form."""
    return math.cos(psi) * _sgn_weighted(_anti_cos_sin, k, psi) - math.sin(psi) * _sgn_weighted(
        _anti_cos_cos, k, psi
    )


def _profile_sin_product(k: int, psi: float) -> float:
    """``int sin(k t) sin|t - psi| dt`` in closed form."""
    return math.cos(psi) * _sgn_weighted(_anti_sin_sin, k, psi) - math.sin(psi) * _sgn_weighted(
        _anti_sin_cos, k, psi
    )


def _profile_slope_cos_product(k: int, psi: float) -> float:
    """``int cos(k t) sgn(t - psi) cos(t - psi) dt`` in closed form."""
    return math.cos(psi) * _sgn_weighted(_anti_cos_cos, k, psi) + math.sin(psi) * _sgn_weighted(
        _anti_cos_sin, k, psi
    )


def _profile_slope_sin_product(k: int, psi: float) -> float:
    """``int sin(k t) sgn(t - psi) cos(t - psi) dt`` in closed form."""
    return math.cos(psi) * _sgn_weighted(_anti_sin_cos, k, psi) + math.sin(psi) * _sgn_weighted(
        _anti_sin_sin, k, psi
    )


def _profile_pair_integrals(a: float, b: float) -> tuple[float, float]:
    """``(int P_a P_b, int P_a' P_b')`` for two diangle profiles, exactly.

    With ``d = |a - b|`` the value product integrates to
    ``(pi - 2 d) cos(d) / 2 + sin(d)`` and the slope product to the same
    leading term minus ``sin(d)``.
    """
    d = abs(a - b)
    lead = 0.5 * (_PI - 2.0 * d) * math.cos(d)
    return lead + math.sin(d), lead - math.sin(d)


def _is_symbolic(f) -> bool:
    return isinstance(f, (TrigPoly, DiangleSpan))


def _trig_integral(f: TrigPoly) -> float:
    return f.cos_coeffs[0] * _PI + sum(
        a * _J(k) for k, a in enumerate(f.cos_coeffs[1:], start=1)
    )


def _span_integral(f: DiangleSpan) -> float:
    e = f.expansion
    return e.x0 * _PI + 2.0 * e.coefficient_sum


def _trig_pair_integrals(f: TrigPoly, g: TrigPoly) -> tuple[float, float]:
    """``(int f g, int f' g')`` for trig series via product-to-sum."""
    int_fg = 0.0
    int_dd = 0.0
    fa = f.cos_coeffs
    fb = f.sin_coeffs
    ga = g.cos_coeffs
    gb = g.sin_coeffs
    for m, am in enumerate(fa):
        if am == 0.0:
            continue
        for n, cn in enumerate(ga):
            if cn == 0.0:
                continue
            cc = 0.5 * (_J(m - n) + _J(m + n))
            int_fg += am * cn * cc
            if m and n:
                ss = 0.5 * (_J(m - n) - _J(m + n))
                int_dd += m * n * am * cn * ss
    for m, bm in enumerate(fb, start=1):
        if bm == 0.0:
            continue
        for n, dn in enumerate(gb, start=1):
            if dn == 0.0:
                continue
            ss = 0.5 * (_J(m - n) - _J(m + n))
            cc = 0.5 * (_J(m - n) + _J(m + n))
            int_fg += bm * dn * ss
            int_dd += m * n * bm * dn * cc
    # cos x sin cross terms vanish by parity over the symmetric domain
    return int_fg, int_dd


def _trig_span_pair_integrals(f: TrigPoly, g: DiangleSpan) -> tuple[float, float]:
    """``(int f g, int f' g')`` for a trig series against an expansion."""
    e = g.expansion
    int_fg = e.x0 * _trig_integral(f)
    int_dd = 0.0
    for psi, c in e.terms:
        for k, a in enumerate(f.cos_coeffs):
            if a != 0.0:
                int_fg += c * a * _profile_cos_product(k, psi)
                if k:
                    int_dd -= c * k * a * _profile_slope_sin_product(k, psi)
        for k, b in enumerate(f.sin_coeffs, start=1):
            if b != 0.0:
                int_fg += c * b * _profile_sin_product(k, psi)
                int_dd += c * k * b * _profile_slope_cos_product(k, psi)
    return int_fg, int_dd


def _span_pair_integrals(f: DiangleSpan, g: DiangleSpan) -> tuple[float, float]:
    ef, eg = f.expansion, g.expansion
    int_fg = ef.x0 * eg.x0 * _PI + 2.0 * (ef.x0 * eg.coefficient_sum + eg.x0 * ef.coefficient_sum)
    int_dd = 0.0
    for a, ca in ef.terms:
        for b, cb in eg.terms:
            v, d = _profile_pair_integrals(a, b)
            int_fg += ca * cb * v
            int_dd += ca * cb * d
    return int_fg, int_dd


def _exact_component_integrals(f) -> tuple[float, float, float]:
    """``(int f, int f^2, int f'^2)`` for a symbolic member, exactly."""
    if isinstance(f, TrigPoly):
        fg, dd = _trig_pair_integrals(f, f)
        return _trig_integral(f), fg, dd
    if isinstance(f, DiangleSpan):
        fg, dd = _span_pair_integrals(f, f)
        return _span_integral(f), fg, dd
    raise InputError("exact integrals require a symbolic representation")


def _exact_pair_integrals(f, g) -> tuple[float, float, float, float]:
    """``(int f, int g, int f g, int f' g')`` for symbolic members."""
    if isinstance(f, TrigPoly) and isinstance(g, TrigPoly):
        fg, dd = _trig_pair_integrals(f, g)
        return _trig_integral(f), _trig_integral(g), fg, dd
    if isinstance(f, TrigPoly) and isinstance(g, DiangleSpan):
        fg, dd = _trig_span_pair_integrals(f, g)
        return _trig_integral(f), _span_integral(g), fg, dd
    if isinstance(f, DiangleSpan) and isinstance(g, TrigPoly):
        gf, dd = _trig_span_pair_integrals(g, f)
        return _span_integral(f), _trig_integral(g), gf, dd
    if isinstance(f, DiangleSpan) and isinstance(g, DiangleSpan):
        fg, dd = _span_pair_integrals(f, g)
        return _span_integral(f), _span_integral(g), fg, dd
    raise InputError("exact path requires symbolic representations on both sides")


# ---------------------------------------------------------------------------
# quadrature path


def _merged_kinks(*fs) -> tuple[float, ...]:
    ks: set[float] = set()
    for f in fs:
        ks.update(f.kinks)
    return tuple(sorted(ks))


def _quad_integral(f, spec: QuadratureSpec) -> float:
    return quad.integrate(f.value, DELTA, f.kinks, spec)


def _quad_component_integrals(f, spec: QuadratureSpec) -> tuple[float, float, float]:
    int_f = _quad_integral(f, spec)
    int_sq = quad.integrate(lambda x: f.value(x) ** 2, DELTA, f.kinks, spec)
    int_dsq = quad.integrate(lambda x: f.derivative(x) ** 2, DELTA, f.kinks, spec)
    return int_f, int_sq, int_dsq


def _component_integrals(f, spec: QuadratureSpec) -> tuple[float, float, float]:
    if _is_symbolic(f):
        return _exact_component_integrals(f)
    return _quad_component_integrals(f, spec)


def _combine_inner(int_f: float, int_g: float, int_fg: float, int_dd: float) -> float:
    return (2.0 * int_f * int_g - _PI * (int_fg - int_dd)) / _PI_SQ


# ---------------------------------------------------------------------------
# functionals


def evaluate(f: H1Function, x):
    """Evaluate a member at ``x`` (scalar or array) with a domain check."""
    arr = np.asarray(x, dtype=float)
    if np.any(np.abs(arr) > _HALF_PI + 1e-12):
        raise DomainError(f"argument outside [-pi/2, pi/2]: {x!r}")
    return f.value(np.clip(arr, -_HALF_PI, _HALF_PI))


def mean_value(f: H1Function, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """``(1/pi) int f``."""
    if _is_symbolic(f):
        return _exact_component_integrals(f)[0] / _PI
    return _quad_integral(f, spec) / _PI


def perimeter_functional(f: H1Function, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """``int f``; reads the generalized perimeter off a width-type profile."""
    if _is_symbolic(f):
        return _exact_component_integrals(f)[0]
    return _quad_integral(f, spec)


def wirtinger_deficit(f: H1Function, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """``int f'^2 - int (f - mean)^2``; nonnegative on the space."""
    int_f, int_sq, int_dsq = _component_integrals(f, spec)
    return int_dsq - int_sq + int_f * int_f / _PI


def energy_deficit(f: H1Function, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """``(int f)^2 - pi int (f^2 - f'^2)``; pi times the Wirtinger deficit."""
    int_f, int_sq, int_dsq = _component_integrals(f, spec)
    return int_f * int_f - _PI * (int_sq - int_dsq)


def energy_integral(f: H1Function, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """``int (f^2 - f'^2)``; the pair measure of the body pair a width profile encodes."""
    _, int_sq, int_dsq = _component_integrals(f, spec)
    return int_sq - int_dsq


def inner_product_iso(
    f: H1Function,
    g: H1Function,
    method: str = "auto",
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    """The isoperimetric inner product of two members.

    ``method`` selects the evaluation path: ``"exact"`` (closed form, both
    arguments symbolic), ``"quadrature"``, or ``"auto"`` (exact when
    available).
    """
    if method == "auto":
        method = "exact" if (_is_symbolic(f) and _is_symbolic(g)) else "quadrature"
    if method == "exact":
        if isinstance(f, DiangleSpan) and isinstance(g, DiangleSpan):
            return seqmodel.seq_inner(f.expansion, g.expansion)
        return _combine_inner(*_exact_pair_integrals(f, g))
    if method != "quadrature":
        raise InputError(f"unknown inner-product method {method!r}")
    bp = _merged_kinks(f, g)
    int_f = _quad_integral(f, spec)
    int_g = _quad_integral(g, spec)
    int_fg = quad.integrate(lambda x: f.value(x) * g.value(x), DELTA, bp, spec)
    int_dd = quad.integrate(lambda x: f.derivative(x) * g.derivative(x), DELTA, bp, spec)
    return _combine_inner(int_f, int_g, int_fg, int_dd)


def norm_iso_squared(
    f: H1Function, method: str = "auto", spec: QuadratureSpec = DEFAULT_SPEC
) -> float:
    n2 = inner_product_iso(f, f, method=method, spec=spec)
    if n2 < -_NEGATIVE_NORM_TOL:
        raise InvariantViolationError(f"squared norm is negative: {n2!r}")
    return n2


def norm_iso(f: H1Function, method: str = "auto", spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    return math.sqrt(max(0.0, norm_iso_squared(f, method=method, spec=spec)))


# ---------------------------------------------------------------------------
# classical Sobolev inner product on an arbitrary interval


def _as_rule(f) -> tuple[Callable, Callable, tuple[float, ...]]:
    """Normalize ``f`` to ``(value, derivative, kinks)``.

    Accepts a member, a ``(value, derivative)`` or ``(value, derivative,
    kinks)`` tuple, or a bare callable (derivative then falls back to a
    central difference, adequate for smooth callables only).
    """
    if isinstance(f, H1Function):
        return f.value, f.derivative, f.kinks
    if isinstance(f, (tuple, list)):
        if len(f) == 2:
            v, d = f
            return v, d, ()
        if len(f) == 3:
            v, d, ks = f
            return v, d, tuple(float(k) for k in ks)
        raise InputError("expected (value, derivative[, kinks])")
    if callable(f):
        h = 1e-6

        def fd(x, _f=f, _h=h):
            x = np.asarray(x, dtype=float)
            return (np.asarray(_f(x + _h), dtype=float) - np.asarray(_f(x - _h), dtype=float)) / (
                2.0 * _h
            )

        return f, fd, ()
    raise InputError(f"not a function-like object: {f!r}")


def inner_product_classical(
    f,
    g,
    interval=(0.0, 1.0),
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    """First-order Sobolev inner product ``int_a^b (f g + f' g')``.

    Unlike the isoperimetric product this imposes no endpoint condition, so
    besides members it accepts plain callables or ``(value, derivative)``
    pairs; kinks outside the interval are ignored.
    """
    iv = quad.Interval(*interval) if not isinstance(interval, Interval) else interval
    fv, fd, fk = _as_rule(f)
    gv, gd, gk = _as_rule(g)
    bp = tuple(sorted(set(fk) | set(gk)))

    def integrand(x):
        return np.asarray(fv(x), dtype=float) * np.asarray(gv(x), dtype=float) + np.asarray(
            fd(x), dtype=float
        ) * np.asarray(gd(x), dtype=float)

    return quad.integrate(integrand, iv, bp, spec)


# ---------------------------------------------------------------------------
# Hoelder ratio


def holder_ratio(
    f: H1Function,
    x,
    h,
    norm: float | None = None,
    spec: QuadratureSpec = DEFAULT_SPEC,
):
    """``|f(x+h) - f(x)| / (sqrt(pi) ||f|| sqrt(|h|))``; at most 1 on the space.

    Vectorizes over broadcastable ``x`` and ``h``.  Pass a precomputed
    ``norm`` when sweeping grids.
    """
    xa = np.asarray(x, dtype=float)
    ha = np.asarray(h, dtype=float)
    scalar = xa.ndim == 0 and ha.ndim == 0
    xa, ha = np.broadcast_arrays(np.atleast_1d(xa), np.atleast_1d(ha))
    if np.any(ha == 0.0):
        raise DomainError("increment h must be nonzero")
    if np.any(np.abs(xa) > _HALF_PI + 1e-12) or np.any(np.abs(xa + ha) > _HALF_PI + 1e-12):
        raise DomainError("x and x + h must both lie in [-pi/2, pi/2]")
    if norm is None:
        norm = norm_iso(f, spec=spec)
    lo = np.clip(xa, -_HALF_PI, _HALF_PI)
    hi = np.clip(xa + ha, -_HALF_PI, _HALF_PI)
    num = np.abs(f.value(hi) - f.value(lo))
    if norm == 0.0:
        if float(np.max(num, initial=0.0)) > 1e-12:
            raise InvariantViolationError("zero-norm member with a nonzero increment")
        out = np.zeros(num.shape)
        return _maybe_scalar(out[0] if scalar else out, scalar)
    out = num / (_SQRT_PI * norm * np.sqrt(np.abs(ha)))
    return _maybe_scalar(out[0] if scalar else out, scalar)
