"""Lattice P-modules, their opposites, and translate decisions.

A :class:`ConeModule` is ``A = F + S`` with ``S = P ∩ Z^d``.  The opposite
``B = -(A^c)`` is kept symbolically as :class:`Opposite`; on the lattice the
interior is dropped (``A`` and ``Int A`` differ by a null set in the
continuum, so only the complement-and-negate step survives).
"""
from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction

from .cones import Cone, archimedean_bound, outside_witness, parse_rational, rank, solve

Point = tuple[int, ...]


class ModuleError(ValueError):
    pass


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _neg(u):
    return tuple(-a for a in u)


def in_semigroup(cone: Cone, x: Point) -> bool:
    return cone.contains(x)


def reduce_offsets(offsets: Iterable[Point], cone: Cone) -> frozenset:
    """S-minimal elements of ``offsets``; they generate the same union."""
    pts = {tuple(int(t) for t in f) for f in offsets}
    if not pts:
        raise ModuleError("offset set must be nonempty")
    return frozenset(
        f for f in pts if not any(g != f and in_semigroup(cone, _sub(f, g)) for g in pts)
    )


@dataclass(frozen=True)
class ConeModule:
    cone: Cone
    offsets: frozenset = field(default_factory=lambda: frozenset())

    def __post_init__(self):
        for f in self.offsets:
            if len(f) != self.cone.dim:
                raise ModuleError(f"offset {list(f)} has wrong dimension")
        object.__setattr__(self, "offsets", reduce_offsets(self.offsets, self.cone))

    @property
    def dim(self) -> int:
        return self.cone.dim


@dataclass(frozen=True)
class Opposite:
    inner: ConeModule

    @property
    def cone(self) -> Cone:
        return self.inner.cone

    @property
    def dim(self) -> int:
        return self.inner.dim


ModuleExpr = ConeModule | Opposite


def cone_module(cone: Cone, offsets: Iterable[Point] | None = None) -> ConeModule:
    if offsets is None:
        offsets = [(0,) * cone.dim]
    return ConeModule(cone, frozenset(tuple(int(t) for t in f) for f in offsets))


def member(m: ModuleExpr, y: Point) -> bool:
    if isinstance(m, Opposite):
        return not member(m.inner, _neg(y))
    cone = m.cone
    return any(cone.contains(_sub(y, f)) for f in m.offsets)


def opposite(m: ModuleExpr) -> ModuleExpr:
    """``-(m^c)``; the opposite of an opposite collapses back to the cone module."""
    if isinstance(m, Opposite):
        return m.inner
    return Opposite(m)


def translate(m: ModuleExpr, z: Point) -> ModuleExpr:
    """``m + z``."""
    if isinstance(m, Opposite):
        # Opp(M) + z = Opp(M - z)
        return Opposite(translate(m.inner, _neg(z)))
    return ConeModule(m.cone, frozenset(_add(f, z) for f in m.offsets))


# --- windows -------------------------------------------------------------


@dataclass(frozen=True)
class Window:
    radius: int

    def __post_init__(self):
        if self.radius < 1:
            raise ModuleError("window radius must be >= 1")

    def points(self, dim: int) -> Iterator[Point]:
        r = range(-self.radius, self.radius + 1)
        return itertools.product(r, repeat=dim)

    def __contains__(self, y) -> bool:
        return all(abs(t) <= self.radius for t in y)


def step_set(cone: Cone) -> tuple[Point, ...]:
    """Primitive extreme rays; the steps used for lattice minimality scans."""
    return cone.rays


def minimal_elements_in_window(m: ModuleExpr, w: Window, steps=None) -> frozenset:
    steps = step_set(m.cone) if steps is None else steps
    return frozenset(
        y
        for y in w.points(m.dim)
        if member(m, y) and not any(member(m, _sub(y, g)) for g in steps)
    )


# --- Archimedean entry/exit indices --------------------------------------


def entry_index(m: ModuleExpr, a: Point, y: Point) -> int:
    """An ``n`` with ``y + k*a ∈ m`` for every ``k >= n`` (``a`` interior)."""
    cone = m.cone
    if isinstance(m, Opposite):
        return exit_index(m.inner, a, _neg(y))
    return min(archimedean_bound(cone, a, _sub(f, y)) for f in m.offsets)


def exit_index(m: ModuleExpr, a: Point, y: Point) -> int:
    """An ``n`` with ``y - k*a ∉ m`` for every ``k >= n`` (``a`` interior)."""
    cone = m.cone
    if isinstance(m, Opposite):
        return entry_index(m.inner, a, _neg(y))
    return max(archimedean_bound(cone, a, _sub(y, f)) for f in m.offsets)


def anchor(m: ModuleExpr) -> Point:
    """Some lattice point of ``m``."""
    if isinstance(m, ConeModule):
        return min(m.offsets)
    a = m.cone.interior_point()
    n = entry_index(m, a, (0,) * m.dim)
    return tuple(n * t for t in a)


def module_law_holds(m: ModuleExpr, w: Window, steps=None) -> bool:
    steps = step_set(m.cone) if steps is None else steps
    return all(
        member(m, _add(y, g)) for y in w.points(m.dim) if member(m, y) for g in steps
    )


# --- continuous extreme points --------------------------------------------


@dataclass(frozen=True)
class ExtremeReport:
    """Extreme points of a continuous translate of ``P`` or of ``-Ω^c``.

    ``certificate`` holds the replayable data: for the cone, the indices of
    ``dim`` independent halfspace normals (pointedness); for the opposite,
    the witness ``x`` with ``±x ∉ P`` and the apex written as the midpoint of
    ``apex ± x``.
    """

    kind: str  # "cone" | "opposite"
    apex: Point
    points: tuple
    certificate: dict

    def to_json(self):
        return {
            "kind": self.kind,
            "apex": list(self.apex),
            "points": [list(p) for p in self.points],
            "certificate": self.certificate,
        }


def extreme_points_continuous(m: ModuleExpr) -> ExtremeReport:
    """Extreme points of the real set behind a single-offset module.

    For ``f + P`` the answer is ``{f}`` when ``P`` is pointed.  For the
    opposite ``-(f + Ω)^c`` it is empty: every candidate is the apex
    (the set is invariant under scaling about it) and the apex is the
    midpoint of ``apex ± x`` for any ``x`` outside ``P ∪ -P``.
    """
    cone = m.cone
    if cone.dim == 1:
        raise ModuleError("extreme-point certificate needs d >= 2")
    inner = m.inner if isinstance(m, Opposite) else m
    if len(inner.offsets) != 1:
        raise ModuleError("continuous certificate applies to single-offset modules only")
    (f,) = inner.offsets
    if isinstance(m, ConeModule):
        if not cone.pointed:
            return ExtremeReport("cone", f, (), {"pointed": False})
        idx = _independent_normals(cone)
        return ExtremeReport(
            "cone",
            f,
            (f,),
            {"pointed": True, "independent_normals": [list(cone.halfspaces[i]) for i in idx]},
        )
    apex = _neg(f)
    x = tuple(int(t) for t in outside_witness(cone))
    cert = {
        "witness": list(x),
        "witness_in_P": cone.contains(x),
        "neg_witness_in_P": cone.contains(_neg(x)),
        "left": list(_add(apex, x)),
        "right": list(_sub(apex, x)),
        "midpoint": [Fraction(a + b, 2) == c for a, b, c in zip(_add(apex, x), _sub(apex, x), apex)],
        "scale_invariant_complement": True,
    }
    cert["midpoint"] = all(cert["midpoint"])
    return ExtremeReport("opposite", apex, (), cert)


def _independent_normals(cone: Cone) -> list[int]:
    chosen: list[int] = []
    for i, n in enumerate(cone.halfspaces):
        if rank([cone.halfspaces[j] for j in chosen] + [n]) == len(chosen) + 1:
            chosen.append(i)
    return chosen


def replay_extreme_report(cone: Cone, report: ExtremeReport) -> bool:
    """Recheck an :class:`ExtremeReport` from scratch by membership tests."""
    if report.kind == "cone":
        if not report.certificate.get("pointed"):
            return report.points == ()
        normals = report.certificate["independent_normals"]
        return (
            rank(normals) == cone.dim
            and all(tuple(n) in set(cone.halfspaces) for n in normals)
            and report.points == (report.apex,)
        )
    x = tuple(report.certificate["witness"])
    apex = report.apex
    left, right = _add(apex, x), _sub(apex, x)
    # apex ± x lie in -Ω^c - f  <=>  ∓x ∉ Ω, which follows from ±x ∉ P
    return (
        not cone.contains(x)
        and not cone.contains(_neg(x))
        and left != right
        and all(Fraction(l + r, 2) == c for l, r, c in zip(left, right, apex))
        and report.points == ()
    )


# --- translate decision --------------------------------------------------


@dataclass(frozen=True)
class Decision:
    """Outcome of :func:`translate_equivalent`.

    ``YES`` carries ``z`` with ``m2 == translate(m1, z)``.
    """

    verdict: str  # "YES" | "NO" | "INCONCLUSIVE"
    z: Point | None = None
    reason: str = ""
    certificate: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "verdict": self.verdict,
            "z": None if self.z is None else list(self.z),
            "reason": self.reason,
            "certificate": self.certificate,
        }


def _decide_cone_modules(m1: ConeModule, m2: ConeModule) -> Decision:
    f1, f2 = sorted(m1.offsets), sorted(m2.offsets)
    cert = {"antichain_1": [list(p) for p in f1], "antichain_2": [list(p) for p in f2]}
    if len(f1) != len(f2):
        return Decision("NO", reason="minimal generator counts differ", certificate=cert)
    anchor1 = f1[0]
    target = set(f2)
    candidates = []
    for g in f2:
        z = _sub(g, anchor1)
        if {_add(f, z) for f in f1} == target:
            candidates.append(z)
    if candidates:
        return Decision("YES", z=min(candidates), reason="reduced antichains match", certificate=cert)
    return Decision("NO", reason="reduced antichains are not translates", certificate=cert)


def _one_dim_as_cone_module(m: ModuleExpr) -> ConeModule:
    """In d = 1 every module, opposite included, is a half-line."""
    if isinstance(m, ConeModule):
        return m
    (ray,) = m.cone.rays
    s = ray[0]  # +1 or -1
    (f,) = m.inner.offsets  # reduced: a single endpoint
    # inner = {y : s*y >= s*f}; opposite = {y : s*(-y) < s*f} = {y : s*y >= 1 - s*f}
    return ConeModule(m.cone, frozenset({(s * (1 - s * f[0]),)}))


def _step_coordinates(cone: Cone, y):
    steps = step_set(cone)
    cols = [[steps[i][k] for i in range(len(steps))] for k in range(cone.dim)]
    return solve(cols, y)


def _parallelotope_radius(cone: Cone, lo, hi) -> Fraction:
    """Max-norm radius of ``{sum c_i g_i : lo_i <= c_i <= hi_i}``."""
    steps = step_set(cone)
    best = Fraction(0)
    for choice in itertools.product(*zip(lo, hi)):
        v = [sum(choice[i] * steps[i][k] for i in range(cone.dim)) for k in range(cone.dim)]
        best = max(best, max(abs(Fraction(t)) for t in v))
    return best


def minimal_element_radius(m: ModuleExpr):
    """Max-norm bound on the minimal lattice elements of ``m``, or ``None``.

    Available for simplicial cones, where the steps form a basis.  In step
    coordinates ``c``, a minimal element of ``F + S`` lies in
    ``c(f) + [0, 1)^d`` for some offset ``f``; a minimal element ``y`` of the
    opposite has ``u = -y`` outside the inner module with every ``u + g_i``
    inside, which pins each ``c_i(u)`` to ``[c_i(f) - 1, c_i(f))``.
    """
    cone = m.cone
    if len(step_set(cone)) != cone.dim:
        return None
    inner = m.inner if isinstance(m, Opposite) else m
    coords = [_step_coordinates(cone, f) for f in inner.offsets]
    lo = [min(c[i] for c in coords) for i in range(cone.dim)]
    hi = [max(c[i] for c in coords) for i in range(cone.dim)]
    if isinstance(m, Opposite):
        lo = [t - 1 for t in lo]
    else:
        hi = [t + 1 for t in hi]
    return _parallelotope_radius(cone, lo, hi)


def _decide_mixed(cm: ConeModule, op: Opposite, w: Window) -> Decision:
    """Decide whether ``op == cm + z`` for some ``z``."""
    cone = cm.cone
    if cone.dim == 1:
        d = _decide_cone_modules(cm, _one_dim_as_cone_module(op))
        return Decision(d.verdict, d.z, "one-parameter: opposite is a half-line; " + d.reason, d.certificate)
    if len(cm.offsets) == 1 and len(op.inner.offsets) == 1:
        r1 = extreme_points_continuous(cm)
        r2 = extreme_points_continuous(op)
        if len(r1.points) != len(r2.points):
            return Decision(
                "NO",
                reason="extreme point sets differ in cardinality; translation bijects extreme points",
                certificate={"cone_module": r1.to_json(), "opposite": r2.to_json()},
            )
    steps = step_set(cone)
    min_cm = minimal_elements_in_window(cm, w, steps)
    min_op = minimal_elements_in_window(op, w, steps)
    window_data = {
        "window": w.radius,
        "minimal_cone_module": sorted(list(p) for p in min_cm),
        "minimal_opposite": sorted(list(p) for p in min_op),
    }
    r_cm, r_op = minimal_element_radius(cm), minimal_element_radius(op)
    exhaustive = r_cm is not None and r_op is not None and max(r_cm, r_op) <= w.radius
    window_data["exhaustive"] = exhaustive
    if exhaustive and len(min_cm) != len(min_op):
        return Decision(
            "NO",
            reason="minimal lattice element counts differ; translation bijects minimal elements",
            certificate=window_data,
        )
    return Decision("INCONCLUSIVE", reason="window evidence does not settle the mixed case", certificate=window_data)


def translate_equivalent(m1: ModuleExpr, m2: ModuleExpr, w: Window = Window(10)) -> Decision:
    """Is ``m2`` a translate ``m1 + z`` of ``m1``?"""
    if m1.cone != m2.cone:
        raise ModuleError("modules are over different cones")
    if isinstance(m1, ConeModule) and isinstance(m2, ConeModule):
        return _decide_cone_modules(m1, m2)
    if isinstance(m1, Opposite) and isinstance(m2, Opposite):
        # Opp(M2) = Opp(M1) + z  <=>  M2 = M1 - z
        d = _decide_cone_modules(m1.inner, m2.inner)
        z = None if d.z is None else _neg(d.z)
        return Decision(d.verdict, z, "inner modules: " + d.reason, d.certificate)
    if isinstance(m1, ConeModule):
        return _decide_mixed(m1, m2, w)
    d = _decide_mixed(m2, m1, w)
    return Decision(d.verdict, None if d.z is None else _neg(d.z), d.reason, d.certificate)


def windows_agree(m1: ModuleExpr, m2: ModuleExpr, w: Window) -> bool:
    return all(member(m1, y) == member(m2, y) for y in w.points(m1.dim))


# --- the headline certificate --------------------------------------------

CITATION_CHAIN = (
    "P and -Ω^c are not translates (extreme points: {0} versus ∅)",
    "V^A and V^op are unitarily equivalent iff A is a translate of B = -(Int A)^c",
    "cocycle conjugacy of α^V and (α^V)^op would force V ≅ V^op",
    "hence the CCR flow of V^P is not cocycle conjugate to its opposite",
)


@dataclass(frozen=True)
class AsymmetryCertificate:
    cone: Cone
    witness: tuple
    cone_report: ExtremeReport
    opposite_report: ExtremeReport
    decision: Decision
    chain: tuple = CITATION_CHAIN

    @property
    def verdict(self) -> str:
        return "ASYMMETRIC" if self.decision.verdict == "NO" and replay_certificate(self) else "UNPROVEN"

    def to_json(self):
        return {
            "cone": self.cone.to_json(),
            "witness": [str(t) for t in self.witness],
            "extreme_points_P": self.cone_report.to_json(),
            "extreme_points_opposite": self.opposite_report.to_json(),
            "decision": self.decision.to_json(),
            "chain": list(self.chain),
            "verdict": self.verdict,
        }


def certify_asymmetry(cone: Cone) -> AsymmetryCertificate:
    """Certificate that ``P`` and ``-Ω^c`` are not translates of each other."""
    if cone.dim == 1:
        raise ModuleError(
            "refusing d = 1: a half-line and its opposite are translates, "
            "so one-parameter CCR flows of this kind are symmetric"
        )
    if not (cone.pointed and cone.spanning):
        raise ModuleError("cone must be pointed and spanning")
    witness = outside_witness(cone)
    p = cone_module(cone)
    b = opposite(p)
    return AsymmetryCertificate(
        cone=cone,
        witness=witness,
        cone_report=extreme_points_continuous(p),
        opposite_report=extreme_points_continuous(b),
        decision=translate_equivalent(p, b),
    )


def replay_certificate(cert: AsymmetryCertificate) -> bool:
    """Independently recheck every numeric claim in ``cert``."""
    cone = cert.cone
    x = cert.witness
    return (
        not cone.contains(x)
        and not cone.contains(tuple(-t for t in x))
        and replay_extreme_report(cone, cert.cone_report)
        and replay_extreme_report(cone, cert.opposite_report)
        and len(cert.cone_report.points) == 1
        and len(cert.opposite_report.points) == 0
    )


# --- JSON ---------------------------------------------------------------


def module_from_json(cone: Cone, data: dict) -> ModuleExpr:
    kind = data.get("kind")
    if kind == "cone":
        offsets = []
        for f in data.get("offsets", [["0"] * cone.dim]):
            q = [parse_rational(t) for t in f]
            if len(q) != cone.dim:
                raise ModuleError(f"dimension mismatch: offset {f} for d = {cone.dim}")
            if any(t.denominator != 1 for t in q):
                raise ModuleError(f"offsets must be integer vectors, got {f}")
            offsets.append(tuple(int(t) for t in q))
        return cone_module(cone, offsets)
    if kind == "opposite":
        inner = module_from_json(cone, data["inner"])
        return opposite(inner)
    raise ModuleError(f"unknown module kind {kind!r}")


def module_to_json(m: ModuleExpr) -> dict:
    if isinstance(m, Opposite):
        return {"kind": "opposite", "inner": module_to_json(m.inner)}
    return {"kind": "cone", "offsets": [[str(t) for t in f] for f in sorted(m.offsets)]}
