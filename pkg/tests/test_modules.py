import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccr_opposite.cones import cone_from_generators
from ccr_opposite.modules import (
    ConeModule,
    ModuleError,
    Opposite,
    Window,
    certify_asymmetry,
    cone_module,
    extreme_points_continuous,
    member,
    minimal_elements_in_window,
    module_from_json,
    module_law_holds,
    module_to_json,
    opposite,
    reduce_offsets,
    replay_certificate,
    replay_extreme_report,
    translate,
    translate_equivalent,
    windows_agree,
)

W10 = Window(10)


def test_member_examples(quadrant):
    n2 = cone_module(quadrant)
    assert member(n2, (3, 0))
    assert member(opposite(n2), (1, -5))
    assert not member(opposite(n2), (0, 0))


def test_opposite_collapse(quadrant):
    n2 = cone_module(quadrant)
    assert opposite(n2) == Opposite(n2)
    assert opposite(opposite(n2)) == n2
    assert windows_agree(opposite(opposite(n2)), n2, W10)


def test_one_dimensional_opposite_is_shifted_halfline(halfline):
    b = opposite(cone_module(halfline))
    members = {y for (y,) in W10.points(1) if member(b, (y,))}
    assert members == set(range(1, 11))


@pytest.mark.parametrize(
    "offsets, expected",
    [
        ([(0, 0), (2, 1)], {(0, 0)}),
        ([(1, 0), (0, 1)], {(1, 0), (0, 1)}),
        ([(0, 0), (1, -1), (2, -2)], {(0, 0), (1, -1), (2, -2)}),
    ],
)
def test_reduce_offsets(quadrant, offsets, expected):
    assert reduce_offsets(offsets, quadrant) == expected


def test_reduce_offsets_pairwise_oracle(quadrant):
    pts = [(0, 0), (1, -1), (2, -2)]
    for p in pts:
        for q in pts:
            if p != q:
                assert not (p[0] - q[0] >= 0 and p[1] - q[1] >= 0)


def test_minimal_elements_examples(quadrant):
    steps = [(1, 0), (0, 1)]
    n2 = cone_module(quadrant)
    assert minimal_elements_in_window(n2, W10, steps) == {(0, 0)}
    assert minimal_elements_in_window(opposite(n2), W10, steps) == frozenset()
    two = cone_module(quadrant, [(1, 0), (0, 1)])
    assert minimal_elements_in_window(two, W10, steps) == {(1, 0), (0, 1)}


def test_extreme_points_quadrant(quadrant):
    n2 = cone_module(quadrant)
    rep = extreme_points_continuous(n2)
    assert rep.points == ((0, 0),)
    assert replay_extreme_report(quadrant, rep)
    rep_b = extreme_points_continuous(opposite(n2))
    assert rep_b.points == ()
    assert rep_b.certificate["witness"] == [1, -1]
    assert rep_b.certificate["midpoint"]
    assert replay_extreme_report(quadrant, rep_b)


def test_extreme_points_need_d_at_least_two(halfline):
    with pytest.raises(ModuleError):
        extreme_points_continuous(cone_module(halfline))


def test_translate_equivalent_examples(quadrant, halfline):
    n2 = cone_module(quadrant)
    d = translate_equivalent(n2, opposite(n2))
    assert d.verdict == "NO" and "cone_module" in d.certificate
    # m2 = m1 + z
    d = translate_equivalent(n2, cone_module(quadrant, [(1, 1)]))
    assert d.verdict == "YES" and d.z == (1, 1)
    d = translate_equivalent(cone_module(quadrant, [(1, 1)]), n2)
    assert d.verdict == "YES" and d.z == (-1, -1)
    n = cone_module(halfline)
    d = translate_equivalent(n, opposite(n))
    assert d.verdict == "YES" and d.z == (1,)


def test_one_dimensional_translate_by_enumeration(halfline):
    n = cone_module(halfline)
    b = opposite(n)
    assert windows_agree(translate(n, (1,)), b, W10)
    neg = cone_from_generators(1, [[-1]])
    m = cone_module(neg, [(2,)])
    d = translate_equivalent(m, opposite(m))
    assert d.verdict == "YES"
    assert windows_agree(translate(m, d.z), opposite(m), W10)


def test_opposite_pair_reduces_to_inner(quadrant):
    a = opposite(cone_module(quadrant, [(1, 0), (0, 2)]))
    b = opposite(cone_module(quadrant, [(3, 1), (2, 3)]))
    d = translate_equivalent(a, b)
    assert d.verdict == "YES"
    assert windows_agree(translate(a, d.z), b, Window(12))


def test_mixed_case_window_certificate(quadrant):
    m = cone_module(quadrant, [(1, 0), (0, 1)])
    d = translate_equivalent(m, opposite(m))
    assert d.verdict == "NO"
    assert d.certificate["exhaustive"]
    assert d.certificate["minimal_opposite"] == [[0, 0]]


def test_mixed_case_inconclusive(quadrant):
    d = translate_equivalent(cone_module(quadrant), opposite(cone_module(quadrant, [(1, 0), (0, 1)])))
    assert d.verdict == "INCONCLUSIVE"


def test_mixed_case_non_simplicial_is_inconclusive():
    c = cone_from_generators(3, [(1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)])
    m = cone_module(c, [(0, 0, 0), (1, 0, 0)])
    d = translate_equivalent(m, opposite(m), Window(3))
    assert d.verdict == "INCONCLUSIVE"


def test_cone_mismatch(quadrant, skew):
    with pytest.raises(ModuleError):
        translate_equivalent(cone_module(quadrant), cone_module(skew))


def test_certify_asymmetry_quadrant(quadrant):
    cert = certify_asymmetry(quadrant)
    assert cert.verdict == "ASYMMETRIC"
    assert cert.witness == (1, -1)
    assert replay_certificate(cert)


def test_certify_asymmetry_skew(skew):
    cert = certify_asymmetry(skew)
    assert cert.verdict == "ASYMMETRIC"
    x = cert.witness
    assert not skew.contains(x) and not skew.contains(tuple(-t for t in x))
    assert len(cert.cone_report.points) == 1 and cert.opposite_report.points == ()


def test_certify_refuses_dimension_one(halfline):
    with pytest.raises(ModuleError, match="d = 1"):
        certify_asymmetry(halfline)


def test_json_round_trip(quadrant):
    m = opposite(cone_module(quadrant, [(1, 0), (0, 1)]))
    assert module_from_json(quadrant, module_to_json(m)) == m
    with pytest.raises(ModuleError):
        module_from_json(quadrant, {"kind": "cone", "offsets": [["1/2", "0"]]})
    with pytest.raises(ModuleError):
        module_from_json(quadrant, {"kind": "wedge"})


# --- properties -------------------------------------------------------------

CONES = {
    "quadrant": cone_from_generators(2, [[1, 0], [0, 1]]),
    "skew": cone_from_generators(2, [[1, 0], [1, 1]]),
    "wide": cone_from_generators(2, [[2, -1], [-1, 2]]),
}

offsets = st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=4)


@st.composite
def modules(draw):
    cone = CONES[draw(st.sampled_from(sorted(CONES)))]
    m = ConeModule(cone, frozenset(draw(offsets)))
    return opposite(m) if draw(st.booleans()) else m


@settings(max_examples=40, deadline=None)
@given(modules())
def test_property_module_law(m):
    assert module_law_holds(m, Window(6))


@settings(max_examples=40, deadline=None)
@given(modules())
def test_property_double_opposite(m):
    assert windows_agree(opposite(opposite(m)), m, Window(6))


@settings(max_examples=40, deadline=None)
@given(modules(), st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_property_translation_equivariance(m, z):
    big = Window(12)
    inner = 12 - 3 - 4  # keep each point and its step neighbourhood inside
    mins = minimal_elements_in_window(m, big)
    mins_t = minimal_elements_in_window(translate(m, z), big)
    shifted = {tuple(a + b for a, b in zip(p, z)) for p in mins}
    keep = lambda p: max(abs(t) for t in p) <= inner
    assert {p for p in mins_t if keep(p)} == {p for p in shifted if keep(p)}


@settings(max_examples=40, deadline=None)
@given(modules(), modules())
def test_property_decision_soundness(m1, m2):
    if m1.cone != m2.cone:
        return
    d = translate_equivalent(m1, m2, Window(8))
    if d.verdict == "YES":
        assert windows_agree(translate(m1, d.z), m2, Window(8))
    elif d.verdict == "NO" and "cone_module" in d.certificate:
        assert len(d.certificate["cone_module"]["points"]) != len(d.certificate["opposite"]["points"])


@settings(max_examples=40, deadline=None)
@given(offsets, st.randoms())
def test_property_reduce_idempotent_and_order_free(offs, rnd):
    cone = CONES["skew"]
    r = reduce_offsets(offs, cone)
    assert reduce_offsets(r, cone) == r
    shuffled = list(offs)
    rnd.shuffle(shuffled)
    assert reduce_offsets(shuffled, cone) == r
    # same union
    a, b = ConeModule(cone, frozenset(offs)), ConeModule(cone, r)
    assert all(member(a, y) == any(cone.contains(tuple(s - t for s, t in zip(y, f))) for f in offs) for y in Window(6).points(2))
    assert windows_agree(a, b, Window(6))
