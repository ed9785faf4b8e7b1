"""Function-space membership, functionals, and the two inner-product paths.

Closed-form oracle values used below, all derivable by hand:

* int cos = 2, int cos^2 = int sin^2 = pi/2 on the domain, so
  <cos, cos> = (2*2*2 - pi*(pi/2 - pi/2)) / pi^2 = 8/pi^2, the energy
  deficit of cos is 4 and its Wirtinger deficit 4/pi.
* int sin|t - psi| = 2 for every psi in the domain, so the profile mean
  is 2/pi and the kernel section integral is theta*pi - pi.
* A difference of profiles at angles x and x+h has squared norm
  (4/pi) sin|h|.
"""

import math

import numpy as np
import pytest

from isorkhs import funcspace, quad
from isorkhs.errors import DomainError, InputError, InvariantViolationError
from isorkhs.rng import SplitMix64

HALF_PI = 0.5 * math.pi
PI_SQ = math.pi * math.pi


# ---------------------------------------------------------------------------
# membership


def test_trig_membership_endpoint_rule():
    with pytest.raises(DomainError):
        funcspace.trig_poly([0.0], [1.0])  # sin t: endpoints differ by 2
    funcspace.trig_poly([0.0], [0.0, 1.0])  # sin 2t is fine
    funcspace.trig_poly([0.0], [1.0, 0.0, 1.0])  # sin t + sin 3t cancels
    with pytest.raises(InputError):
        funcspace.trig_poly([math.nan])


def test_project_endpoints():
    cc, sc = funcspace.project_endpoints([0.5, 1.0], [0.7, 0.2, -0.3])
    f = funcspace.trig_poly(cc, sc)
    assert abs(f.value(HALF_PI) - f.value(-HALF_PI)) <= 1e-14
    # only b_1 moves
    assert sc[1:] == (0.2, -0.3)


def test_sampled_membership_and_fd_derivative():
    with pytest.raises(DomainError):
        funcspace.sampled(np.sin)
    f = funcspace.sampled(np.cos)
    grid = np.linspace(-1.4, 1.4, 11)
    np.testing.assert_allclose(f.derivative(grid), -np.sin(grid), atol=1e-5)


def test_evaluate_domain_check():
    f = funcspace.constant(1.0)
    with pytest.raises(DomainError):
        funcspace.evaluate(f, 2.0)
    # a hair past the endpoint is clipped, not rejected
    assert funcspace.evaluate(f, HALF_PI + 5e-13) == 1.0


# ---------------------------------------------------------------------------
# functionals


def test_unit_inner_product_exact():
    one = funcspace.constant(1.0)
    assert funcspace.inner_product_iso(one, one, method="exact") == 1.0


def test_unit_inner_product_quadrature():
    one = funcspace.constant(1.0)
    v = funcspace.inner_product_iso(one, one, method="quadrature")
    assert abs(v - 1.0) <= 1e-11


def test_cos_oracles():
    c = funcspace.trig_poly([0.0, 1.0])
    assert math.isclose(funcspace.inner_product_iso(c, c, method="exact"), 8.0 / PI_SQ, rel_tol=1e-15)
    assert math.isclose(funcspace.mean_value(c), 2.0 / math.pi, rel_tol=1e-15)
    assert math.isclose(funcspace.perimeter_functional(c), 2.0, rel_tol=1e-15)
    assert math.isclose(funcspace.energy_deficit(c), 4.0, rel_tol=1e-14)
    assert math.isclose(funcspace.wirtinger_deficit(c), 4.0 / math.pi, rel_tol=1e-14)


def test_second_harmonic_oracles():
    c2 = funcspace.trig_poly([0.0, 0.0, 1.0])
    s2 = funcspace.trig_poly([0.0], [0.0, 1.0])
    assert math.isclose(funcspace.norm_iso_squared(c2, method="exact"), 1.5, rel_tol=1e-14)
    assert math.isclose(funcspace.norm_iso_squared(s2, method="exact"), 1.5, rel_tol=1e-14)
    assert math.isclose(funcspace.wirtinger_deficit(c2), 1.5 * math.pi, rel_tol=1e-13)
    # cross terms of distinct frequencies vanish
    assert abs(funcspace.inner_product_iso(c2, s2, method="exact")) <= 1e-15


@pytest.mark.parametrize("psi", [-0.8, 0.0, 1.1])
def test_profile_oracles(psi):
    p = funcspace.diangle(psi)
    assert math.isclose(funcspace.perimeter_functional(p), 2.0, rel_tol=1e-13)
    assert math.isclose(funcspace.mean_value(p), 2.0 / math.pi, rel_tol=1e-13)
    one = funcspace.constant(1.0)
    assert math.isclose(
        funcspace.inner_product_iso(one, p, method="exact"), 2.0 / math.pi, rel_tol=1e-14
    )


def test_profile_norm():
    p = funcspace.diangle(0.0)
    assert math.isclose(funcspace.norm_iso_squared(p, method="exact"), 8.0 / PI_SQ, rel_tol=1e-15)


@pytest.mark.parametrize("theta", [1.0, 2.0, 5.0])
@pytest.mark.parametrize("y", [0.0, 0.7])
def test_kernel_section_perimeter(theta, y):
    k = funcspace.diangle_span(theta, [(y, -HALF_PI)])
    assert math.isclose(
        funcspace.perimeter_functional(k), (theta - 1.0) * math.pi, rel_tol=1e-13, abs_tol=1e-13
    )


def test_profile_difference_norm():
    rng = SplitMix64(13)
    for _ in range(25):
        x = rng.uniform(-HALF_PI, HALF_PI)
        h = rng.uniform(-HALF_PI, HALF_PI) - x
        if abs(h) < 1e-6:
            continue
        d = funcspace.diangle_span(0.0, [(x + h, 1.0), (x, -1.0)])
        n2 = funcspace.norm_iso_squared(d, method="exact")
        assert abs(n2 - (4.0 / math.pi) * math.sin(abs(h))) <= 1e-12


def test_exact_path_matches_quadrature():
    members = [
        funcspace.trig_poly(*funcspace.project_endpoints([0.2, 1.0, -0.4], [0.5, 0.3])),
        funcspace.diangle_span(0.7, [(-1.1, 0.6), (0.2, -1.3), (0.9, 0.4)]),
        funcspace.diangle(0.5),
        funcspace.constant(-2.0),
    ]
    for i, f in enumerate(members):
        for g in members[i:]:
            exact = funcspace.inner_product_iso(f, g, method="exact")
            quadr = funcspace.inner_product_iso(f, g, method="quadrature")
            assert abs(exact - quadr) <= 1e-9 * (1.0 + abs(exact))


def test_inner_product_rejects_unknown_method():
    one = funcspace.constant(1.0)
    with pytest.raises(InputError):
        funcspace.inner_product_iso(one, one, method="magic")


def test_energy_integral_consistency():
    f = funcspace.diangle_span(0.0, [(-0.4, 1.0), (0.8, 0.5)])
    direct = quad.integrate(
        lambda x: f.value(x) ** 2 - f.derivative(x) ** 2, breakpoints=f.kinks
    )
    assert abs(funcspace.energy_integral(f) - direct) <= 1e-10


def test_positivity_on_random_members():
    rng = SplitMix64(5)
    for _ in range(50):
        n = 2 + rng.below(4)
        cos = [rng.uniform(-1.0, 1.0) for _ in range(n)]
        sin = [rng.uniform(-1.0, 1.0) for _ in range(n - 1)]
        f = funcspace.trig_poly(*funcspace.project_endpoints(cos, sin))
        e = funcspace.energy_deficit(f)
        w = funcspace.wirtinger_deficit(f)
        assert e >= -1e-9
        assert funcspace.norm_iso_squared(f, method="exact") >= -1e-9
        assert abs(e - math.pi * w) <= 1e-9


# ---------------------------------------------------------------------------
# classical Sobolev product


def test_classical_inner_products():
    one = funcspace.constant(1.0)
    assert abs(funcspace.inner_product_classical(one, one) - 1.0) <= 1e-12
    ident = (lambda x: np.asarray(x), lambda x: np.ones_like(np.asarray(x, dtype=float)))
    assert abs(funcspace.inner_product_classical(ident, ident) - 4.0 / 3.0) <= 1e-12
    cos_pair = (np.cos, lambda x: -np.sin(x))
    got = funcspace.inner_product_classical(cos_pair, cos_pair, interval=(-HALF_PI, HALF_PI))
    assert abs(got - math.pi) <= 1e-12


def test_classical_accepts_bare_callables():
    got = funcspace.inner_product_classical(np.exp, np.exp)
    exact = math.expm1(2.0)  # int (e^2x + e^2x) over [0, 1]
    assert abs(got - exact) <= 1e-6  # finite-difference derivative fallback


def test_classical_rejects_junk():
    with pytest.raises(InputError):
        funcspace.inner_product_classical(42.0, np.cos)
    with pytest.raises(InputError):
        funcspace.inner_product_classical((np.cos,), np.cos)


# ---------------------------------------------------------------------------
# continuity ratio


def test_holder_ratio_profile_example():
    p = funcspace.diangle(0.0)
    got = funcspace.holder_ratio(p, 0.0, 0.5)
    exact = math.sin(0.5) / (math.sqrt(math.pi) * math.sqrt(8.0 / PI_SQ) * math.sqrt(0.5))
    assert math.isclose(got, exact, rel_tol=1e-12)
    assert abs(got - 0.425) <= 1e-3


def test_holder_ratio_periodic_null():
    k0 = funcspace.diangle_span(2.0, [(0.0, -HALF_PI)])
    assert funcspace.holder_ratio(k0, -HALF_PI, math.pi) == 0.0


def test_holder_ratio_constant_is_zero():
    one = funcspace.constant(1.0)
    grid = np.linspace(-1.5, 1.4, 7)
    assert np.max(funcspace.holder_ratio(one, grid, 0.1)) == 0.0


def test_holder_ratio_bound_on_grid():
    f = funcspace.trig_poly(*funcspace.project_endpoints([0.1, 1.0, 0.0, -0.2], [0.3, 0.4]))
    n = funcspace.norm_iso(f, method="exact")
    xs = np.linspace(-HALF_PI, HALF_PI, 41)
    px, py = np.meshgrid(xs, xs, indexing="ij")
    mask = py > px
    ratios = funcspace.holder_ratio(f, px[mask], (py - px)[mask], norm=n)
    assert float(np.max(ratios)) <= 1.0 + 1e-9


def test_holder_ratio_near_extremal():
    h = 1e-3
    g = funcspace.diangle_span(0.0, [(0.2 + h, -HALF_PI), (0.2, HALF_PI)])
    r = funcspace.holder_ratio(g, 0.2, h, norm=funcspace.norm_iso(g, method="exact"))
    assert math.isclose(float(r), 0.9999999166666422, rel_tol=1e-10)
    assert float(r) <= 1.0 + 1e-9


def test_holder_ratio_validation():
    p = funcspace.diangle(0.0)
    with pytest.raises(DomainError):
        funcspace.holder_ratio(p, 0.0, 0.0)
    with pytest.raises(DomainError):
        funcspace.holder_ratio(p, 1.5, 0.5)
    zero = funcspace.diangle_span(0.0, [])
    assert funcspace.holder_ratio(zero, 0.0, 0.5) == 0.0
