import doctest
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis.strategies import composite, fractions, integers

from bnwalls import exceptions
from bnwalls import lattice
from bnwalls import stability
from bnwalls.lattice import Character, Surface
from bnwalls.stability import Region, Span, StabilityPoint, Wall

G28 = Surface(54)
G4 = Surface(6)
FIRST_WALL_REGION = Region(-2, 0, Fraction(1, 100), 2)


@composite
def characters(draw, bound=12):
    return Character(
        draw(integers(-bound, bound)),
        draw(integers(-bound, bound)),
        draw(integers(-bound, bound)),
    )


@composite
def points(draw):
    alpha = draw(fractions(min_value=Fraction(1, 100), max_value=10, max_denominator=100))
    beta = draw(fractions(min_value=-10, max_value=10, max_denominator=30))
    return StabilityPoint(alpha=alpha, beta=beta)


def test_doctests():
    (failed, attempted) = doctest.testmod(stability)
    assert attempted > 0
    assert failed == 0


def test_central_charge_examples():
    charge = stability.central_charge(Character(0, 1, -3), StabilityPoint(1, 0), G28)
    assert (charge.re, charge.im) == (3, 54)

    charge = stability.central_charge(Character(1, 0, 0), StabilityPoint(1, 1), G28)
    assert (charge.re, charge.im) == (0, -54)
    assert charge.to_json() == {'re': 0, 'im': -54}


@given(points())
def test_point_class_charge(p):
    charge = stability.central_charge(lattice.POINT, p, G28)
    assert (charge.re, charge.im) == (-1, 0)


@given(characters(), characters(), points())
def test_central_charge_additive(v, u, p):
    left = stability.central_charge(v + u, p, G28)
    (cv, cu) = (stability.central_charge(v, p, G28), stability.central_charge(u, p, G28))
    assert left.re == cv.re + cu.re
    assert left.im == cv.im + cu.im


def test_slope_examples():
    assert stability.slope_nu(Character(0, 1, -3), StabilityPoint(1, 0), G28) == Fraction(-1, 18)
    assert stability.slope_nu(Character(1, 0, 0), StabilityPoint(Fraction(7, 3), 0), G28) is stability.PLUS_INFINITY
    assert stability.slope_nu(lattice.POINT, StabilityPoint(1, Fraction(1, 2)), G28) is stability.PLUS_INFINITY


def test_slope_of_kernel_class():
    # (1, 0, 4) is in the kernel of Z at alpha = 2, beta = 0 when H² = 2.
    with pytest.raises(exceptions.ZeroCharge):
        stability.slope_nu(Character(1, 0, 4), StabilityPoint(2, 0), Surface(2))


@given(points())
def test_kernel_vector(p):
    kernel = stability.kernel_vector(p, G28)
    assert lattice.mukai_pairing(kernel, kernel, G28) == -p.alpha_sq * G28.h_squared


def test_stability_point_requires_positive_alpha():
    with pytest.raises(exceptions.BadRange):
        StabilityPoint(0, 1)
    with pytest.raises(exceptions.BadRange):
        StabilityPoint('-1/2', 0)
    assert StabilityPoint('1/3', '-2').alpha_sq == Fraction(1, 9)


def test_wall_between_first_wall():
    wall = stability.wall_between(Character(0, 1, -3), lattice.RANK_ONE, G28)
    assert wall.key == (9, 1, 0)
    assert wall.center == Fraction(-1, 18)
    assert wall.radius_sq == Fraction(1, 324)
    assert stability.rational_sqrt(wall.radius_sq) == Fraction(1, 18)
    assert wall.to_json() == {'a': 9, 'b': 1, 'c': 0, 'center': '-1/18', 'radius_sq': '1/324'}


def test_wall_between_proportional():
    with pytest.raises(exceptions.Proportional):
        stability.wall_between(Character(1, 0, 0), Character(2, 0, 0), G28)


@pytest.mark.parametrize('v', [Character(2, 1, 0), Character(3, -2, 5), Character(-4, 1, -1)])
def test_gieseker_uhlenbeck_wall(v):
    wall = stability.gieseker_uhlenbeck_wall(v, G28)
    assert wall.is_vertical
    assert wall.vertical_beta == Fraction(v.c, v.r)
    assert wall.center is None
    assert wall.to_json()['center'] is None


def test_on_wall_examples():
    vertical = stability.gieseker_uhlenbeck_wall(Character(2, 1, 0), G28)
    assert stability.on_wall(vertical, StabilityPoint(1, Fraction(1, 2)))

    first = stability.normalize_wall(9, 1, 0)
    assert not stability.on_wall(first, StabilityPoint(1, 0))

    gu = stability.wall_between(lattice.RANK_ONE, lattice.POINT, G28)
    assert gu.key == (0, 1, 0)
    assert stability.on_wall(gu, StabilityPoint(3, 0))


def test_normalize_wall():
    assert stability.normalize_wall(-27, -3, 0).key == (9, 1, 0)
    assert stability.normalize_wall(0, -4, 2).key == (0, 2, -1)
    assert stability.normalize_wall(-27, -3, 0) == Wall(9, 1, 0)
    with pytest.raises(exceptions.Proportional):
        stability.normalize_wall(0, 0, 0)


def test_rational_points_on_first_wall():
    v = Character(0, 1, -3)
    (R, w0, wall) = stability.first_wall_data(-3, G28)
    found = stability.rational_points_on_wall(wall, 20)
    assert len(found) == 20
    for p in found:
        assert p.alpha > 0
        assert stability.on_wall(wall, p)
        assert stability.slope_nu(v, p, G28) == stability.slope_nu(lattice.RANK_ONE, p, G28)
        assert stability.slope_nu(v, p, G28) == stability.slope_nu(w0, p, G28)


def test_rational_points_need_rational_radius():
    with pytest.raises(exceptions.BadRange):
        stability.rational_points_on_wall(Wall(1, 0, -2), 3)
    vertical = Wall(0, 2, -1)
    assert [p.alpha for p in stability.rational_points_on_wall(vertical, 3)] == [1, 2, 3]


@given(characters(), characters())
def test_slopes_agree_along_wall(v, u):
    assume(not lattice.is_proportional(v, u))
    wall = stability.wall_between(v, u, G4)
    assume(wall is not None)
    for (beta, alpha_sq) in stability.sample_points_on_wall(wall, 7):
        assert alpha_sq > 0
        assert wall.evaluate(beta, alpha_sq) == 0
        assert stability.same_slope(v, u, beta, alpha_sq, G4)


def test_same_slope_off_wall():
    v = Character(0, 1, -3)
    assert not stability.same_slope(v, lattice.RANK_ONE, 0, 1, G28)


def test_wall_alpha_sq():
    wall = Wall(1, 0, -4)
    assert stability.wall_alpha_sq(wall, 1) == 3
    assert stability.wall_alpha_sq(wall, 3) == -5
    with pytest.raises(exceptions.BadRange):
        stability.wall_alpha_sq(Wall(0, 1, 0), 0)
    assert stability.wall_meets_vertical(wall, 0)
    assert not stability.wall_meets_vertical(wall, 2)
    assert stability.wall_meets_vertical(Wall(0, 1, 0), 0)


def test_walls_cross_and_nest():
    outer = Wall(1, 0, -4)
    inner = Wall(1, 0, -1)
    tangent = Wall(1, -2, 0)
    crossing = Wall(1, -4, 0)
    vertical = Wall(0, 1, 0)

    assert not stability.walls_cross(outer, inner)
    assert not stability.walls_cross(outer, tangent)
    assert stability.walls_cross(outer, crossing)
    assert stability.walls_cross(outer, vertical)
    assert not stability.walls_cross(outer, outer)

    assert stability.wall_inside(inner, outer)
    assert stability.wall_inside(tangent, outer)
    assert stability.wall_inside(outer, outer)
    assert not stability.wall_inside(crossing, outer)
    assert not stability.wall_inside(outer, inner)
    assert not stability.wall_inside(vertical, outer)


def test_rational_sqrt_and_upper():
    assert stability.rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert stability.rational_sqrt(2) is None
    assert stability.rational_sqrt(-1) is None
    upper = stability.sqrt_upper(2)
    assert upper * upper > 2
    below = upper - Fraction(1, stability.SQRT_SCALE)
    assert below * below <= 2


@pytest.mark.parametrize('chi, R, w0', [
    (-3, 9, Character(-9, 1, -3)),
    (-1, 27, Character(-27, 1, -1)),
    (-28, 0, Character(0, 1, -28)),
])
def test_first_wall_data(chi, R, w0):
    (found_R, found_w0, wall) = stability.first_wall_data(chi, G28)
    assert (found_R, found_w0) == (R, w0)
    assert lattice.square(found_w0, G28) >= 0
    assert wall == stability.wall_between(Character(0, 1, chi), lattice.RANK_ONE, G28)
    for k in range(4):
        w_k = w0 + k * lattice.RANK_ONE
        if not lattice.is_proportional(Character(0, 1, chi), w_k):
            assert stability.wall_between(Character(0, 1, chi), w_k, G28) == wall


def test_first_wall_data_square_zero():
    (R, w0, wall) = stability.first_wall_data(-3, G28)
    assert lattice.square(w0, G28) == 0


def test_first_wall_data_needs_negative_chi():
    with pytest.raises(exceptions.NonNegativeChi):
        stability.first_wall_data(0, G28)


def test_region_validation():
    region = Region.parse('-2,0,1/100,2')
    assert region == FIRST_WALL_REGION
    assert region.to_json() == {'beta_lo': -2, 'beta_hi': 0, 'alpha_lo': '1/100', 'alpha_hi': 2}
    with pytest.raises(exceptions.InvalidRegion):
        Region(0, -1, 1, 2)
    with pytest.raises(exceptions.InvalidRegion):
        Region(-1, 0, 0, 2)
    with pytest.raises(exceptions.InvalidRegion):
        Region(-1, 0, 2, 1)
    with pytest.raises(exceptions.UsageError):
        Region.parse('-1,0,1')


def test_span():
    span = Span(Fraction(0), Fraction(1))
    assert span.contains(0) and span.contains(1)
    opened = span.below(1).above(0)
    assert not opened.contains(0) and not opened.contains(1)
    assert opened.contains(Fraction(1, 2))
    assert Span(Fraction(1), Fraction(1), lo_open=True).is_empty
    assert span.intersect(Span(Fraction(2), Fraction(3))).is_empty
    assert span.intersect(Span(Fraction(1, 2), Fraction(3))) == Span(Fraction(1, 2), Fraction(1))
    assert opened.closure() == span


def test_enumerate_walls_finds_first_wall():
    v = Character(0, 1, -1)
    region = Region(-1, 0, Fraction(1, 100), 2)
    walls = stability.enumerate_walls(v, region, G4)
    expected = stability.wall_between(v, lattice.RANK_ONE, G4)
    assert expected.key == (3, 1, 0)
    assert expected.key in [wall.key for (u, wall) in walls]
    for (u, wall) in walls:
        assert lattice.square(u, G4) >= 0
        assert lattice.square(v - u, G4) >= 0
        assert not lattice.is_proportional(v, u)
        assert stability.wall_between(v, u, G4).key == wall.key


def test_enumerate_walls_sorted_and_unique():
    v = Character(0, 1, -3)
    walls = stability.enumerate_walls(v, FIRST_WALL_REGION, G28)
    keys = [wall.key for (u, wall) in walls]
    assert len(keys) == len(set(keys))
    centers = [wall.center for (u, wall) in walls if not wall.is_vertical]
    assert centers == sorted(centers)
    assert (9, 1, 0) in keys


NONZERO_RANK_CASES = [
    (Character(2, 1, -5), Surface(4)),
    (Character(1, 0, -3), Surface(2)),
]
WIDE_REGION = Region(-3, 3, Fraction(1, 10), 3)


@pytest.mark.parametrize('v, s', NONZERO_RANK_CASES)
def test_enumerated_walls_nest(v, s):
    walls = [wall for (u, wall) in stability.enumerate_walls(v, WIDE_REGION, s)]
    assert walls
    for (index, first) in enumerate(walls):
        for second in walls[index + 1:]:
            assert not stability.walls_cross(first, second), (first.key, second.key)


@pytest.mark.parametrize('v, s', NONZERO_RANK_CASES + [(Character(0, 1, -3), G28)])
def test_enumerated_walls_equalize_slopes(v, s):
    for (u, wall) in stability.enumerate_walls(v, WIDE_REGION, s):
        for (beta, alpha_sq) in stability.sample_points_on_wall(wall, 5):
            assert stability.same_slope(v, u, beta, alpha_sq, s), (u, wall.key, beta)


def test_subobject_at_top():
    v = Character(0, 1, -3)
    wall = stability.wall_between(v, lattice.RANK_ONE, G28)
    assert stability.wall_top_beta(wall) == Fraction(-1, 18)
    assert stability.subobject_at_top(v, lattice.RANK_ONE, wall)
    assert stability.subobject_at_top(v, v - lattice.RANK_ONE, wall)
    assert not stability.subobject_at_top(v, -lattice.RANK_ONE, wall)
    assert not stability.subobject_at_top(v, v, wall)
    assert stability.wall_top_beta(Wall(0, 1, -2)) == 2


@pytest.mark.parametrize('v, s', NONZERO_RANK_CASES + [(Character(0, 1, -3), G28), (Character(0, 1, -1), G4)])
def test_representative_is_subobject_at_top(v, s):
    # u and v - u define the same wall, so one of them is preferred whenever
    # either satisfies the condition.
    for (u, wall) in stability.enumerate_walls(v, WIDE_REGION, s):
        if not stability.subobject_at_top(v, u, wall):
            assert not stability.subobject_at_top(v, v - u, wall), (u, wall.key)
        assert stability.wall_between(v, u, s).key == wall.key


def test_enumerate_walls_workers_agree():
    v = Character(0, 1, -1)
    region = Region(-1, 0, Fraction(1, 100), 2)
    single = stability.enumerate_walls(v, region, G4, workers=1)
    pooled = stability.enumerate_walls(v, region, G4, workers=4)
    assert [(u, wall.key) for (u, wall) in single] == [(u, wall.key) for (u, wall) in pooled]


@pytest.mark.parametrize('v, s', [
    (Character(1, 0, 0), G28),
    (Character(-9, 1, -3), G28),
    (Character(2, 0, 0), G4),
])
def test_enumerate_walls_isotropic(v, s):
    assert stability.enumerate_walls(v, FIRST_WALL_REGION, s) == []


def test_enumerate_walls_negative_square():
    with pytest.raises(exceptions.NegativeSquare):
        stability.enumerate_walls(Character(1, 0, 1), FIRST_WALL_REGION, G28)


def test_enumerate_walls_negative_imaginary_part():
    # Im Z(v) < 0 everywhere, so nothing can sit between 0 and v.
    assert stability.enumerate_walls(Character(0, -1, 3), FIRST_WALL_REGION, G28) == []
