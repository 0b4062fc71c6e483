"""Batch verification suites shared by the command line and the test suite.

Each suite returns a list of :class:`~ccr_opposite.report.Check`.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import fock
from .cones import Cone, archimedean_bound, outside_witness, rank, vform_contains
from .hilbert import (
    RepContext,
    SparseVector,
    check_dilation_minimality,
    complement_escape,
    dilation_shift,
    kernel_project,
    purity_escape,
    v_adjoint,
    v_shift,
)
from .modules import (
    ConeModule,
    Window,
    certify_asymmetry,
    minimal_elements_in_window,
    module_law_holds,
    opposite,
    replay_certificate,
    translate,
    translate_equivalent,
    windows_agree,
)
from .opposite import T, inversion_to_VB
from .report import Check
from .sampling import points_where, random_point, random_vector


def _rng(seed):
    return np.random.default_rng(seed)


def cone_suite(cone: Cone, cases: int = 100, seed: int = 0, window: int = 10) -> list[Check]:
    rng = _rng(seed)
    disagreements = []
    for _ in range(cases):
        x = tuple(
            Fraction(int(rng.integers(-window, window + 1)), int(rng.integers(1, 5))) for _ in range(cone.dim)
        )
        if cone.contains(x) != vform_contains(cone, x):
            disagreements.append([str(t) for t in x])
    checks = [
        Check("V-form and H-form membership agree", not disagreements, {"cases": cases, "disagreements": disagreements}),
        Check(
            "pointed iff halfspace normals span",
            cone.pointed == (rank(cone.halfspaces) == cone.dim),
            {"pointed": cone.pointed, "normal_rank": rank(cone.halfspaces)},
        ),
        Check(
            "generators satisfy every halfspace",
            all(cone.contains(g) for g in cone.generators),
            {"halfspaces": [list(n) for n in cone.halfspaces]},
        ),
    ]
    if cone.dim >= 2 and cone.pointed:
        x = outside_witness(cone)
        checks.append(
            Check(
                "witness outside P ∪ -P",
                not cone.contains(x) and not cone.contains(tuple(-t for t in x)),
                {"witness": [str(t) for t in x]},
            )
        )
    if cone.pointed:
        a = cone.interior_point()
        worst = []
        for _ in range(cases):
            x = tuple(int(rng.integers(-window, window + 1)) for _ in range(cone.dim))
            n = archimedean_bound(cone, a, x)
            ok = cone.contains_interior(tuple(n * s - t for s, t in zip(a, x)))
            if n > 1:
                ok &= not cone.contains_interior(tuple((n - 1) * s - t for s, t in zip(a, x)))
            if not ok:
                worst.append(list(x))
        checks.append(Check("Archimedean bound is least", not worst, {"direction": list(a), "failures": worst}))
    return checks


def module_opposite_suite(m, window: int = 10) -> list[Check]:
    w = Window(window)
    b = opposite(m)
    return [
        Check("double opposite restores membership", windows_agree(opposite(b), m, w), {"window": window}),
        Check("module law for A", module_law_holds(m, w), {"window": window}),
        Check("module law for the opposite", module_law_holds(b, w), {"window": window}),
        Check(
            "minimal elements of the opposite",
            True,
            {"window": window, "points": sorted(list(p) for p in minimal_elements_in_window(b, w))},
        ),
    ]


def decision_check(m1, m2, window: int = 10) -> Check:
    """Decide translate-equivalence and re-verify the answer."""
    w = Window(window)
    d = translate_equivalent(m1, m2, w)
    detail = d.to_json()
    if d.verdict == "YES":
        ok = windows_agree(translate(m1, d.z), m2, w)
    elif d.verdict == "NO":
        cert = d.certificate
        if "cone_module" in cert:
            ok = len(cert["cone_module"]["points"]) != len(cert["opposite"]["points"])
        elif "minimal_cone_module" in cert:
            ok = len(cert["minimal_cone_module"]) != len(cert["minimal_opposite"])
        else:
            ok = True  # antichain mismatch is itself the proof
    else:
        return Check("translate decision", None, detail)
    return Check("translate decision", ok, detail)


def certify_suite(cone: Cone) -> tuple[list[Check], dict]:
    cert = certify_asymmetry(cone)
    replayed = replay_certificate(cert)
    checks = [
        Check("witness outside P ∪ -P", not cone.contains(cert.witness) and not cone.contains(tuple(-t for t in cert.witness)), {"witness": [str(t) for t in cert.witness]}),
        Check("ext(P) = {apex}", len(cert.cone_report.points) == 1, cert.cone_report.to_json()),
        Check("ext(-Ω^c) = ∅ by midpoint", len(cert.opposite_report.points) == 0 and cert.opposite_report.certificate["midpoint"], cert.opposite_report.to_json()),
        Check("P and -Ω^c not translates", cert.decision.verdict == "NO", cert.decision.to_json()),
        Check("certificate replays", replayed, {}),
    ]
    return checks, cert.to_json()


def dilation_suite(ctx: RepContext, cases: int = 100, seed: int = 0, window: int = 10) -> list[Check]:
    rng = _rng(seed)
    w = Window(window)
    in_a = points_where(ctx.in_A, Window(min(window, 6)), ctx.dim)
    a0 = ctx.cone.interior_point()
    compression = inverse = True
    for _ in range(cases):
        f = random_vector(rng, in_a)
        k = int(rng.integers(0, 4))
        a = tuple(k * t for t in a0)
        compression &= dilation_shift(a, f) == v_shift(ctx, a, f)
        inverse &= dilation_shift(tuple(-t for t in a), dilation_shift(a, f)) == f
    cov = check_dilation_minimality(ctx, w)
    return [
        Check("U_a restricted to ℓ²(A) equals V_a", compression, {"cases": cases}),
        Check("U_{-a} U_a = identity", inverse, {"cases": cases}),
        Check(
            "window covered by U_a^* ℓ²(A)",
            cov.passed,
            {"window": window, "points": len(cov.pairs), "failures": [list(y) for y, _ in cov.failures]},
        ),
    ]


def purity_suite(ctx: RepContext, cases: int = 50, seed: int = 0, window: int = 10) -> list[Check]:
    rng = _rng(seed)
    w = Window(window)
    a0 = ctx.cone.interior_point()
    in_a = points_where(ctx.in_A, w, ctx.dim)
    in_c = points_where(ctx.in_complement, w, ctx.dim)
    checks = []
    for label, pts, escape in (("A", in_a, purity_escape), ("A^c", in_c, complement_escape)):
        rows, ok = [], True
        for _ in range(cases):
            y = random_point(rng, pts)
            n, bound = escape(ctx, y, a0)
            ok &= n <= bound
            rows.append([list(y), n, bound])
        checks.append(Check(f"escape indices bounded on {label}", ok, {"direction": list(a0), "samples": rows}))
    minimal = True
    for _ in range(cases):
        x = random_point(rng, in_a + in_c)
        n = archimedean_bound(ctx.cone, a0, x)
        minimal &= ctx.cone.contains_interior(tuple(n * s - t for s, t in zip(a0, x)))
        if n > 1:
            minimal &= not ctx.cone.contains_interior(tuple((n - 1) * s - t for s, t in zip(a0, x)))
    checks.append(Check("Archimedean bound minimal", minimal, {"cases": cases}))
    checks.extend(wold_suite(ctx, cases, seed, window))
    return checks


def wold_suite(ctx: RepContext, cases: int = 50, seed: int = 0, window: int = 10) -> list[Check]:
    rng = _rng(seed + 1)
    w = Window(window)
    a0 = ctx.cone.interior_point()
    in_a = points_where(ctx.in_A, Window(min(window, 6)), ctx.dim)
    wandering = True
    for _ in range(cases):
        f = random_vector(rng, in_a)
        wandering &= not kernel_project(ctx, a0, v_shift(ctx, a0, f))
    # kernel of V_a^* via the operator versus A \ (A + a) via set algebra
    by_operator = {y for y in w.points(ctx.dim) if ctx.in_A(y) and not v_adjoint(ctx, a0, SparseVector.basis(y))}
    by_sets = {
        y for y in w.points(ctx.dim) if ctx.in_A(y) and not ctx.in_A(tuple(s - t for s, t in zip(y, a0)))
    }
    return [
        Check("kernel_project(a) ∘ V_a = 0", wandering, {"cases": cases, "a": list(a0)}),
        Check("Ker V_a^* basis equals A \\ (A + a)", by_operator == by_sets, {"window": window, "size": len(by_sets)}),
    ]


def opposite_rep_suite(ctx: RepContext, cases: int = 100, seed: int = 0, tol: float = 1e-9, window: int = 6) -> list[Check]:
    checks = inversion_to_VB(ctx, cases=cases, seed=seed, tol=tol, window=Window(window))
    # purity of V^op: on normal forms it acts by W, so escape indices exist
    rng = _rng(seed + 2)
    comp = points_where(ctx.in_complement, Window(window), ctx.dim)
    a0 = ctx.cone.interior_point()
    ok = True
    for _ in range(cases):
        c = T(ctx, random_vector(rng, comp))
        for p in c.normal.support:
            n, bound = complement_escape(ctx, p, a0)
            ok &= n <= bound
    checks.append(Check("V^op is pure on window normals", ok, {"cases": cases}))
    return checks


def ccr_suite(ctx: RepContext, cases: int = 50, seed: int = 0, tol: float = 1e-9, window: int = 4) -> list[Check]:
    """One check per random instance: Weyl relation, covariance, Gram PSD."""
    rng = _rng(seed)
    w = Window(window)
    in_a = points_where(ctx.in_A, w, ctx.dim)
    steps = [p for p in w.points(ctx.dim) if ctx.cone.contains(p) and max(abs(t) for t in p) <= 2]
    checks = []
    for i in range(cases):
        xi = random_vector(rng, in_a, 3, 0.6)
        eta = random_vector(rng, in_a, 3, 0.6)
        x = random_point(rng, steps)
        probes = [fock.ExpCombo.vacuum()] + [
            fock.ExpCombo.exp(random_vector(rng, in_a, 3, 0.6), complex(rng.standard_normal(), rng.standard_normal()))
            for _ in range(2)
        ]
        weyl = fock.check_weyl_relation(xi, eta, probes, tol)
        cov = fock.check_covariance(ctx, x, xi, probes, tol)
        family = probes + [fock.weyl_apply(xi, p) for p in probes]
        lam = fock.gram_min_eigenvalue(family)
        g0 = fock.exp_gram(probes)
        g1 = fock.exp_gram([fock.weyl_apply(xi, p) for p in probes])
        unitary = float(np.max(np.abs(g0 - g1)) / max(1.0, float(np.max(np.abs(g0)))))
        checks.append(
            Check(
                f"ccr case {i}",
                weyl.passed and cov.passed and lam >= -tol and unitary < tol,
                {
                    "x": list(x),
                    "weyl_error": weyl.max_error,
                    "covariance_error": cov.max_error,
                    "gram_min_eigenvalue": lam,
                    "weyl_unitarity_error": unitary,
                },
                tol,
            )
        )
    return checks


def random_translate_pairs(cone: Cone, count: int = 20, seed: int = 0):
    """``count`` pairs of cone modules; the first half genuine translates.

    Perturbed pairs change the size of the reduced offset antichain, so
    they are never translates.  Yields ``(m1, m2, expected_yes)``.
    """
    rng = _rng(seed)
    d = cone.dim
    pairs = []
    for i in range(count):
        k = int(rng.integers(1, 4))
        offs = {tuple(int(t) for t in rng.integers(-4, 5, size=d)) for _ in range(k)}
        m1 = ConeModule(cone, frozenset(offs))
        z = tuple(int(t) for t in rng.integers(-3, 4, size=d))
        m2 = translate(m1, z)
        if i < count // 2:
            pairs.append((m1, m2, True))
            continue
        f2 = sorted(m2.offsets)
        if len(f2) > 1:
            m2 = ConeModule(cone, frozenset(f2[1:]))
        else:
            # add an offset incomparable with the single generator
            x = tuple(int(t) for t in outside_witness(cone))
            m2 = ConeModule(cone, frozenset({f2[0], tuple(a + b for a, b in zip(f2[0], x))}))
        assert len(m2.offsets) != len(m1.offsets)
        pairs.append((m1, m2, False))
    return pairs


def translate_suite(cone: Cone, count: int = 20, seed: int = 0, window: int = 10) -> list[Check]:
    checks = []
    for i, (m1, m2, expected) in enumerate(random_translate_pairs(cone, count, seed)):
        c = decision_check(m1, m2, window)
        verdict = c.detail["verdict"]
        c.name = f"translate pair {i}"
        c.passed = bool(c.passed) and verdict == ("YES" if expected else "NO")
        c.detail["expected"] = "YES" if expected else "NO"
        checks.append(c)
    return checks
