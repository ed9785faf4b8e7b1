import math

import numpy as np
import pytest

from isorkhs import convexgeo, funcspace, seqmodel
from isorkhs.errors import InputError
from isorkhs.rng import SplitMix64

HALF_PI = 0.5 * math.pi
QUARTER_PI = 0.25 * math.pi


def vertex_set(u):
    return sorted(tuple(round(c, 12) for c in v) for v in u.vertices)


def random_zonotope(rng, max_gens=6):
    gens = [
        (rng.uniform(-HALF_PI, HALF_PI), rng.uniform(0.1, 1.5))
        for _ in range(1 + rng.below(max_gens))
    ]
    return convexgeo.zonotope_from_generators(gens)


# ---------------------------------------------------------------------------
# construction


def test_single_generator_is_segment():
    u = convexgeo.zonotope_from_generators([(0.0, 2.0)])
    assert u.is_segment
    assert vertex_set(u) == [(-1.0, 0.0), (1.0, 0.0)]


def test_two_perpendicular_generators_make_square():
    u = convexgeo.zonotope_from_generators([(0.0, 2.0), (-HALF_PI, 2.0)])
    assert vertex_set(u) == [(-1.0, -1.0), (-1.0, 1.0), (1.0, -1.0), (1.0, 1.0)]
    assert math.isclose(convexgeo.area(u), 4.0, rel_tol=1e-12)
    assert math.isclose(convexgeo.perimeter(u), 8.0, rel_tol=1e-12)


def test_parallelogram_area():
    u = convexgeo.zonotope_from_generators([(-QUARTER_PI, 1.0), (QUARTER_PI, 1.0)])
    assert math.isclose(convexgeo.area(u), 1.0, rel_tol=1e-12)


def test_generator_merge_and_validation():
    a = convexgeo.zonotope_from_generators([(0.3, 1.0), (0.3 + math.pi, 2.0)])
    b = convexgeo.zonotope_from_generators([(0.3, 3.0)])
    assert vertex_set(a) == vertex_set(b)
    assert convexgeo.zonotope_from_generators([]).is_point
    assert convexgeo.zonotope_from_generators([(0.1, 0.0)]).is_point
    with pytest.raises(InputError):
        convexgeo.zonotope_from_generators([(0.0, -1.0)])


def test_symmetric_polygon_canonicalization():
    shuffled = [(1.0, 1.0), (-1.0, -1.0), (1.0, -1.0), (-1.0, 1.0)]
    u = convexgeo.symmetric_polygon(shuffled)
    assert vertex_set(u) == [(-1.0, -1.0), (-1.0, 1.0), (1.0, -1.0), (1.0, 1.0)]


def test_symmetric_polygon_rejects_asymmetry():
    with pytest.raises(InputError):
        convexgeo.symmetric_polygon([(1.0, 0.0), (-1.0, 0.0), (0.5, 0.5)])
    with pytest.raises(InputError):
        convexgeo.symmetric_polygon([(1.0, 0.0), (-1.0, 0.1)])


def test_symmetric_polygon_rejects_interior_points():
    square_plus_center = [(1.0, 1.0), (-1.0, -1.0), (1.0, -1.0), (-1.0, 1.0), (0.0, 0.0)]
    with pytest.raises(InputError):
        convexgeo.symmetric_polygon(square_plus_center)


def test_regular_polygon_validation():
    with pytest.raises(InputError):
        convexgeo.regular_polygon(5)
    with pytest.raises(InputError):
        convexgeo.regular_polygon(2)
    with pytest.raises(InputError):
        convexgeo.regular_polygon(8, radius=0.0)


def test_segment_validation():
    assert convexgeo.segment(0.7, 0.0).is_point
    with pytest.raises(InputError):
        convexgeo.segment(0.0, -2.0)


# ---------------------------------------------------------------------------
# Minkowski structure


def test_minkowski_point_is_identity():
    rng = SplitMix64(11)
    for _ in range(5):
        u = random_zonotope(rng)
        s = convexgeo.minkowski_sum(u, convexgeo.point())
        assert vertex_set(s) == vertex_set(u)


def test_minkowski_segments_make_rectangle():
    s = convexgeo.minkowski_sum(convexgeo.segment(0.0, 2.0), convexgeo.segment(HALF_PI, 4.0))
    assert vertex_set(s) == [(-1.0, -2.0), (-1.0, 2.0), (1.0, -2.0), (1.0, 2.0)]


def test_minkowski_doubling_scales_area_by_four():
    rng = SplitMix64(12)
    u = random_zonotope(rng)
    s = convexgeo.minkowski_sum(u, u)
    assert math.isclose(convexgeo.area(s), 4.0 * convexgeo.area(u), rel_tol=1e-11)
    assert math.isclose(convexgeo.perimeter(s), 2.0 * convexgeo.perimeter(u), rel_tol=1e-11)


# ---------------------------------------------------------------------------
# widths


def test_degenerate_conventions():
    pt = convexgeo.point()
    assert convexgeo.area(pt) == 0.0
    assert convexgeo.perimeter(pt) == 0.0
    assert convexgeo.width(pt, 0.3) == 0.0
    seg = convexgeo.segment(0.7, 3.0)
    assert convexgeo.area(seg) == 0.0
    # doubly-walked boundary of a segment
    assert math.isclose(convexgeo.perimeter(seg), 6.0, rel_tol=1e-12)


def test_square_width():
    sq = convexgeo.zonotope_from_generators([(0.0, 2.0), (-HALF_PI, 2.0)])
    assert math.isclose(convexgeo.width(sq, 0.0), 2.0, rel_tol=1e-12)
    assert math.isclose(convexgeo.width(sq, QUARTER_PI), 2.0 * math.sqrt(2.0), rel_tol=1e-12)
    grid = np.linspace(-HALF_PI, HALF_PI, 41)
    np.testing.assert_allclose(
        convexgeo.width(sq, grid),
        2.0 * (np.abs(np.cos(grid)) + np.abs(np.sin(grid))),
        atol=1e-12,
    )
    exact = convexgeo.symmetric_polygon([(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)])
    assert convexgeo.width_kinks(exact) == (-HALF_PI, 0.0)


def test_segment_width_profile():
    psi, length = 0.3, 2.0
    seg = convexgeo.segment(psi, length)
    grid = np.linspace(-HALF_PI, HALF_PI, 81)
    np.testing.assert_allclose(
        convexgeo.width(seg, grid), length * np.abs(np.sin(grid - psi)), atol=1e-12
    )


def test_width_derivative_right_hand():
    seg = convexgeo.segment(0.0, 2.0)
    # width is 2|sin phi|, so the right-hand slope at the kink is +2
    assert math.isclose(convexgeo.width_derivative(seg, 0.0), 2.0, rel_tol=1e-12)
    assert math.isclose(convexgeo.width_derivative(seg, -0.3), -2.0 * math.cos(0.3), rel_tol=1e-11)
    sq = convexgeo.zonotope_from_generators([(0.0, 2.0), (-HALF_PI, 2.0)])
    assert math.isclose(convexgeo.width_derivative(sq, 0.0), 2.0, rel_tol=1e-11)


def test_width_additivity_under_minkowski_sum():
    rng = SplitMix64(21)
    grid = np.linspace(-HALF_PI, HALF_PI, 61)
    u, v = random_zonotope(rng), random_zonotope(rng)
    s = convexgeo.minkowski_sum(u, v)
    np.testing.assert_allclose(
        convexgeo.width(s, grid),
        convexgeo.width(u, grid) + convexgeo.width(v, grid),
        atol=1e-11,
    )


@pytest.mark.parametrize(
    "body",
    [
        convexgeo.zonotope_from_generators([(0.0, 2.0), (-HALF_PI, 2.0)]),
        convexgeo.segment(0.4, 3.0),
        convexgeo.point(),
        convexgeo.regular_polygon(8),
    ],
)
def test_cauchy_width_integral(body):
    assert convexgeo.cauchy_check(body) <= 1e-8 * (1.0 + convexgeo.perimeter(body))


# ---------------------------------------------------------------------------
# pairs


def test_self_pair_is_null():
    rng = SplitMix64(31)
    u = random_zonotope(rng)
    pair = convexgeo.body_pair(u, u)
    assert convexgeo.pair_perimeter(pair) == 0.0
    assert abs(convexgeo.pair_measure(pair)) <= 1e-9 * (1.0 + u.scale) ** 2
    assert abs(convexgeo.convex_norm_squared(pair)) <= 1e-9 * (1.0 + u.scale) ** 2


def test_square_point_pair():
    sq = convexgeo.zonotope_from_generators([(0.0, 2.0), (-HALF_PI, 2.0)])
    pair = convexgeo.body_pair(sq, convexgeo.point())
    assert math.isclose(convexgeo.pair_perimeter(pair), 8.0, rel_tol=1e-12)
    assert math.isclose(convexgeo.pair_measure(pair), 4.0, rel_tol=1e-12)
    assert math.isclose(convexgeo.pair_deficit(pair), 64.0 - 16.0 * math.pi, rel_tol=1e-12)
    n2 = convexgeo.convex_norm_squared(pair)
    assert math.isclose(n2, (128.0 - 16.0 * math.pi) / (4.0 * math.pi**2), rel_tol=1e-13)
    assert math.isclose(n2, 1.9690383318196463, rel_tol=1e-12)
    assert math.isclose(convexgeo.convex_norm(pair), math.sqrt(n2), rel_tol=1e-15)


def test_segment_pair_matches_profile_difference():
    x, h = -0.4, 0.9
    pair = convexgeo.body_pair(convexgeo.segment(x + h, 2.0), convexgeo.segment(x, 2.0))
    assert math.isclose(convexgeo.pair_measure(pair), -4.0 * math.sin(abs(h)), rel_tol=1e-12)
    assert math.isclose(
        convexgeo.convex_norm_squared(pair), (4.0 / math.pi) * math.sin(abs(h)), rel_tol=1e-12
    )
    f = convexgeo.pair_to_function(pair)
    grid = np.linspace(-HALF_PI, HALF_PI, 101)
    target = np.sin(np.abs(grid - (x + h))) - np.sin(np.abs(grid - x))
    np.testing.assert_allclose(f.value(grid), target, atol=1e-12)


def test_square_pair_function_is_support_sum():
    sq = convexgeo.zonotope_from_generators([(0.0, 2.0), (-HALF_PI, 2.0)])
    pair = convexgeo.body_pair(sq, convexgeo.point())
    f = convexgeo.pair_to_function(pair)
    grid = np.linspace(-HALF_PI, HALF_PI, 101)
    np.testing.assert_allclose(
        f.value(grid), np.abs(np.cos(grid)) + np.abs(np.sin(grid)), atol=1e-12
    )
    # half the perimeter shows up as the integral, the area as the measure
    assert abs(funcspace.perimeter_functional(f) - 4.0) <= 1e-9
    assert abs(funcspace.energy_integral(f) - 4.0) <= 1e-7
    assert abs(funcspace.energy_integral(f) - convexgeo.pair_measure(pair)) <= 1e-7


def test_pair_norm_matches_function_norm():
    rng = SplitMix64(41)
    for i in range(10):
        u = random_zonotope(rng)
        v = convexgeo.point() if i % 3 == 0 else random_zonotope(rng)
        pair = convexgeo.body_pair(u, v)
        assert convexgeo.pair_deficit(pair) >= -1e-9
        n2 = convexgeo.convex_norm_squared(pair)
        assert convexgeo.pair_norm_agreement(pair) <= 1e-7 * (1.0 + n2)


def test_disc_surrogate():
    pair = convexgeo.body_pair(convexgeo.regular_polygon(64), convexgeo.point())
    n2 = convexgeo.convex_norm_squared(pair)
    assert math.isclose(n2, 0.9999997420428441, rel_tol=1e-12)
    f = convexgeo.pair_to_function(pair)
    grid = np.linspace(-HALF_PI, HALF_PI, 721)
    assert float(np.max(np.abs(f.value(grid) - 1.0))) <= 0.01


def test_pair_equivalence():
    rng = SplitMix64(51)
    u, v = random_zonotope(rng, 4), random_zonotope(rng, 4)
    w = convexgeo.segment(0.9, 1.3)
    base = convexgeo.body_pair(u, v)
    shifted = convexgeo.body_pair(convexgeo.minkowski_sum(u, w), convexgeo.minkowski_sum(v, w))
    assert convexgeo.pair_equivalent(base, base)
    assert convexgeo.pair_equivalent(base, shifted)
    assert convexgeo.pair_equivalent(shifted, base)
    lopsided = convexgeo.body_pair(convexgeo.minkowski_sum(u, w), v)
    assert not convexgeo.pair_equivalent(base, lopsided)


def test_pair_equivalence_is_oriented():
    sq = convexgeo.zonotope_from_generators([(0.0, 2.0), (-HALF_PI, 2.0)])
    fwd = convexgeo.body_pair(sq, convexgeo.point())
    rev = convexgeo.body_pair(convexgeo.point(), sq)
    assert not convexgeo.pair_equivalent(fwd, rev)


def test_width_scale_calibration():
    assert convexgeo.calibrate_width_scale() == convexgeo.WIDTH_SCALE == 0.5
