import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ccr_opposite.cones import (
    ConeError,
    archimedean_bound,
    cone_from_generators,
    cone_from_json,
    extreme_rays,
    outside_witness,
    parse_rational,
    rank,
    vform_contains,
)

F = Fraction


def scan_archimedean(cone, a, x):
    n = 1
    while not cone.contains_interior(tuple(n * s - t for s, t in zip(a, x))):
        n += 1
    return n


def test_quadrant_is_self_dual(quadrant):
    assert set(quadrant.halfspaces) == {(1, 0), (0, 1)}
    assert quadrant.pointed and quadrant.spanning


def test_skew_cone_halfspaces(skew):
    assert set(skew.halfspaces) == {(0, 1), (1, -1)}
    assert skew.pointed and skew.spanning


def test_skew_cone_descriptions_agree_on_grid(skew):
    # x = a(1,0) + b(1,1) has b = x2, a = x1 - x2
    grid = [F(k, 2) for k in range(-6, 7)]
    for x in itertools.product(grid, repeat=2):
        in_v = x[1] >= 0 and x[0] - x[1] >= 0
        assert skew.contains(x) == in_v


def test_halfline(halfline):
    assert halfline.halfspaces == ((1,),)


def test_membership_examples(quadrant):
    assert quadrant.contains((2, 3)) and quadrant.contains_interior((2, 3))
    assert quadrant.contains((0, 5)) and not quadrant.contains_interior((0, 5))
    assert not quadrant.contains((1, -1))


def test_redundant_generators_and_rational_input():
    c = cone_from_generators(2, [["1/2", "0"], ["1", "1"], ["0", "3"], ["2", "1"]])
    assert set(c.halfspaces) == {(1, 0), (0, 1)}
    assert set(c.rays) == {(1, 0), (0, 1)}


def test_three_dimensional_non_simplicial():
    # square pyramid over (±1, ±1, 1)
    gens = [(1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)]
    c = cone_from_generators(3, gens)
    assert set(c.halfspaces) == {(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1)}
    assert c.pointed


@pytest.mark.parametrize(
    "dim, gens, msg",
    [
        (2, [[1, 0, 0]], "dimension mismatch"),
        (2, [[1, 0], [-1, 0], [0, 1]], "line"),
        (2, [[1, 0], [0, 1], [-1, -1]], "fill"),
        (2, [[1, 1]], "span"),
        (5, [[1, 0, 0, 0, 0]], "outside supported range"),
        (2, [[i, 1] for i in range(17)], "at most"),
    ],
)
def test_rejections(dim, gens, msg):
    with pytest.raises(ConeError, match=msg):
        cone_from_generators(dim, gens)


def test_non_pointed_flag():
    c = cone_from_generators(3, [(1, 0, 0), (-1, 1, 0), (-1, -1, 0), (0, 0, 1)])
    assert not c.pointed
    assert c.halfspaces == ((0, 0, 1),)


@pytest.mark.parametrize(
    "a, x, expected",
    [((1, 1), (5, 3), 6), ((1, 1), (-4, -4), 1), ((2, 1), (5, 3), 4)],
)
def test_archimedean_examples(quadrant, a, x, expected):
    assert scan_archimedean(quadrant, a, x) == expected
    assert archimedean_bound(quadrant, a, x) == expected


def test_archimedean_requires_interior(quadrant):
    with pytest.raises(ConeError, match="requires a ∈ Ω"):
        archimedean_bound(quadrant, (1, 0), (1, 1))


def test_outside_witness(quadrant, skew):
    assert outside_witness(quadrant) == (1, -1)
    x = outside_witness(skew)
    assert not skew.contains(x) and not skew.contains(tuple(-t for t in x))
    assert sum(h * t for h, t in zip((0, 1), x)) * sum(h * t for h, t in zip((1, -1), x)) < 0


def test_outside_witness_dimension_one(halfline):
    with pytest.raises(ConeError, match="dimension 1"):
        outside_witness(halfline)


@pytest.mark.parametrize("text, value", [("3", F(3)), ("-2/4", F(-1, 2)), (" 7/1 ", F(7)), (5, F(5))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1.5", "a/b", "1/0", 0.5, None, "1/2/3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ConeError):
        parse_rational(bad)


def test_cone_from_json():
    c = cone_from_json({"dim": 2, "generators": [["1", "0"], ["0", "1"]]})
    assert set(c.halfspaces) == {(1, 0), (0, 1)}
    with pytest.raises(ConeError):
        cone_from_json({"generators": []})


def test_duality_soundness_1000_points(skew, rng):
    c3 = cone_from_generators(3, [(1, 0, 0), (0, 1, 0), (1, 1, 1), (0, 0, 1), (2, -1, 1)])
    for cone in (skew, c3):
        for _ in range(1000 // 2):
            x = tuple(F(int(rng.integers(-9, 10)), int(rng.integers(1, 4))) for _ in range(cone.dim))
            assert cone.contains(x) == vform_contains(cone, x)


small_vec = st.lists(st.integers(-3, 3), min_size=2, max_size=2).map(tuple)


@st.composite
def cones2d(draw):
    gens = draw(st.lists(small_vec, min_size=2, max_size=5))
    try:
        return cone_from_generators(2, gens)
    except ConeError:
        assume(False)


@settings(max_examples=60, deadline=None)
@given(cones2d(), st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=1, max_size=10))
def test_property_duality(cone, points):
    for x in points:
        assert cone.contains(x) == vform_contains(cone, x)
    assert cone.pointed == (rank(cone.halfspaces) == 2)


@settings(max_examples=60, deadline=None)
@given(cones2d(), st.tuples(st.integers(-20, 20), st.integers(-20, 20)))
def test_property_archimedean_minimal(cone, x):
    a = cone.interior_point()
    n = archimedean_bound(cone, a, x)
    assert cone.contains_interior(tuple(n * s - t for s, t in zip(a, x)))
    if n > 1:
        assert not cone.contains_interior(tuple((n - 1) * s - t for s, t in zip(a, x)))
    assert n == scan_archimedean(cone, a, x)


@settings(max_examples=60, deadline=None)
@given(cones2d())
def test_property_witness(cone):
    x = outside_witness(cone)
    assert not cone.contains(x) and not cone.contains(tuple(-t for t in x))


def test_extreme_rays_of_simplex():
    rays = extreme_rays([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)
    assert set(rays) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
