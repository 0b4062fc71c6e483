"""Exact rational polyhedral cones.

A :class:`Cone` carries both descriptions of the same set: the generators
(V-form) and the inward facet normals (H-form, ``<n, x> >= 0``).  The H-form
is synthesised from the generators with the double description method, so
every later membership test is a handful of integer dot products.

Everything here is exact (:class:`fractions.Fraction` / ``int``).
"""
from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

MAX_DIM = 4
MAX_GENERATORS = 16

Vector = tuple  # tuple of Fraction or int


class ConeError(ValueError):
    """Raised for inputs that do not describe a supported cone."""


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a :class:`Fraction`.

    Floats are refused: configs carry rationals as strings so they replay
    exactly.
    """
    if isinstance(value, (bool, float)):
        raise ConeError(f"rational expected, got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if not isinstance(value, str):
        raise ConeError(f"rational expected, got {value!r}")
    text = value.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            q = Fraction(int(num), int(den))
        else:
            q = Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise ConeError(f"malformed rational {value!r}") from None
    return q


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    v = [Fraction(x) for x in v]
    lcm = 1
    for x in v:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g == 0:
        raise ConeError("zero vector has no primitive representative")
    return tuple(x // g for x in ints)


def rank(rows: Iterable[Sequence]) -> int:
    return len(_row_echelon([list(map(Fraction, r)) for r in rows])[1])


def _row_echelon(rows: list[list[Fraction]]):
    """Gauss-Jordan elimination; returns (reduced rows, pivot columns)."""
    rows = [r[:] for r in rows]
    pivots = []
    if not rows:
        return rows, pivots
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...]:
    """Solve a square nonsingular rational system exactly."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    reduced, pivots = _row_echelon(aug)
    if pivots[:n] != list(range(n)) or len(pivots) > n:
        raise ConeError("singular system")
    return tuple(reduced[i][n] for i in range(n))


def _independent_subset(rows: Sequence[Sequence], size: int) -> list[int]:
    """Greedy choice of ``size`` linearly independent row indices."""
    chosen: list[int] = []
    for i in range(len(rows)):
        if rank([rows[j] for j in chosen + [i]]) == len(chosen) + 1:
            chosen.append(i)
            if len(chosen) == size:
                break
    return chosen


def extreme_rays(constraints: Sequence[Sequence], dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of ``{x : <c, x> >= 0 for c in constraints}``.

    Double description method with the combinatorial adjacency test.  The
    constraint rows must have rank ``dim`` so the cone is pointed.
    """
    rows = [tuple(Fraction(x) for x in c) for c in constraints]
    basis = _independent_subset(rows, dim)
    if len(basis) < dim:
        raise ConeError("constraint system has a lineality space; not supported")
    # initial simplicial cone: columns of the inverse of the basis rows
    rays = []
    for j in range(dim):
        e = [Fraction(int(i == j)) for i in range(dim)]
        rays.append(solve([rows[i] for i in basis], e))
    processed = list(basis)
    zero_sets = [frozenset(k for k in processed if dot(rows[k], r) == 0) for r in rays]

    for k in range(len(rows)):
        if k in basis:
            continue
        c = rows[k]
        vals = [dot(c, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        new_rays = [rays[i] for i in pos + zer]
        new_zero = [zero_sets[i] for i in pos] + [zero_sets[i] | {k} for i in zer]
        for p in pos:
            for q in neg:
                common = zero_sets[p] & zero_sets[q]
                if len(common) < dim - 2:
                    continue
                if any(
                    i not in (p, q) and common <= zero_sets[i] for i in range(len(rays))
                ):
                    continue
                r = tuple(vals[p] * b - vals[q] * a for a, b in zip(rays[p], rays[q]))
                new_rays.append(r)
                new_zero.append(common | {k})
        rays, zero_sets = new_rays, new_zero
        processed.append(k)
        if not rays:
            break
    return sorted({primitive(r) for r in rays})


@dataclass(frozen=True, eq=False)
class Cone:
    """Rational polyhedral cone with both V- and H-forms.

    ``generators`` are kept as given (rationals); ``rays`` are the primitive
    integer extreme rays and ``halfspaces`` the primitive integer facet
    normals, sorted in descending lexicographic order.
    """

    dim: int
    generators: tuple[tuple[Fraction, ...], ...]
    halfspaces: tuple[tuple[int, ...], ...]
    rays: tuple[tuple[int, ...], ...]
    pointed: bool
    spanning: bool
    _interior: tuple[int, ...] = field(default=(), repr=False)

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return self.dim == other.dim and set(self.halfspaces) == set(other.halfspaces)

    def __hash__(self):
        return hash((self.dim, frozenset(self.halfspaces)))

    def _check(self, x):
        if len(x) != self.dim:
            raise ConeError(f"dimension mismatch: expected {self.dim}, got {len(x)}")

    def contains(self, x) -> bool:
        self._check(x)
        return all(dot(n, x) >= 0 for n in self.halfspaces)

    def contains_interior(self, x) -> bool:
        self._check(x)
        return all(dot(n, x) > 0 for n in self.halfspaces)

    def contains_lattice(self, x) -> bool:
        """Membership in ``S = P ∩ Z^d``."""
        return all(isinstance(t, int) or Fraction(t).denominator == 1 for t in x) and self.contains(x)

    def interior_point(self) -> tuple[int, ...]:
        """A fixed strictly interior lattice point: the sum of the extreme rays."""
        return self._interior

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "generators": [[format_rational(t) for t in g] for g in self.generators],
            "halfspaces": [[str(t) for t in n] for n in self.halfspaces],
            "rays": [[str(t) for t in r] for r in self.rays],
            "pointed": self.pointed,
            "spanning": self.spanning,
        }


def cone_from_generators(dim: int, generators: Sequence[Sequence]) -> Cone:
    """Build a :class:`Cone` from generators, synthesising the H-form."""
    if dim < 1 or dim > MAX_DIM:
        raise ConeError(f"dimension {dim} outside supported range 1..{MAX_DIM}")
    if not generators:
        raise ConeError("at least one generator required")
    if len(generators) > MAX_GENERATORS:
        raise ConeError(f"at most {MAX_GENERATORS} generators supported")
    gens = []
    for g in generators:
        if len(g) != dim:
            raise ConeError(f"dimension mismatch: generator {list(g)} has length {len(g)}, expected {dim}")
        gens.append(tuple(parse_rational(t) for t in g))
    nonzero = [g for g in gens if any(gens_t != 0 for gens_t in g)]
    if not nonzero:
        raise ConeError("generators are all zero")
    prims = {primitive(g) for g in nonzero}
    for p in prims:
        if tuple(-t for t in p) in prims:
            raise ConeError(f"generator set contains the line through {list(p)}")
    if rank(nonzero) < dim:
        raise ConeError("generators do not span R^d; degenerate cone rejected")

    halfspaces = extreme_rays(nonzero, dim)
    if not halfspaces:
        raise ConeError("double description produced no halfspaces: the generators fill R^d")
    halfspaces = sorted(halfspaces, reverse=True)
    pointed = rank(halfspaces) == dim
    for g in nonzero:
        for n in halfspaces:
            if dot(n, g) < 0:
                raise ConeError("internal error: generator violates a synthesised halfspace")

    if pointed:
        rays = extreme_rays(halfspaces, dim)
        # round trip: every extreme ray of the H-form must be a generator direction
        if not set(rays) <= prims:
            raise ConeError("internal error: V- and H-forms disagree")
        rays = sorted(rays, reverse=True)
        interior = tuple(sum(col) for col in zip(*rays))
    else:
        rays = sorted(prims, reverse=True)
        interior = ()
    return Cone(
        dim=dim,
        generators=tuple(gens),
        halfspaces=tuple(halfspaces),
        rays=tuple(rays),
        pointed=pointed,
        spanning=True,
        _interior=interior,
    )


def cone_from_json(data: dict) -> Cone:
    try:
        dim = data["dim"]
        gens = data["generators"]
    except (KeyError, TypeError):
        raise ConeError('cone config needs "dim" and "generators"') from None
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise ConeError(f"dim must be an integer, got {dim!r}")
    return cone_from_generators(dim, gens)


def vform_contains(cone: Cone, x: Sequence) -> bool:
    """Decide ``x ∈ cone(generators)`` from the V-form alone.

    Exact Carathéodory search: ``x`` is a nonnegative combination of the
    generators iff it is one of some linearly independent subset.  Used as
    the independent oracle for the H-form.
    """
    x = tuple(Fraction(t) for t in x)
    cone._check(x)
    if all(t == 0 for t in x):
        return True
    gens = [g for g in cone.generators if any(t != 0 for t in g)]
    d = cone.dim
    for k in range(1, d + 1):
        for subset in itertools.combinations(gens, k):
            if rank(subset) < k:
                continue
            # least-squares-free exact test: solve on k independent coordinates
            cols = list(zip(*subset))  # d rows, k columns
            reduced, pivots = _row_echelon([list(row) + [xi] for row, xi in zip(cols, x)])
            if k in pivots:
                continue  # x not in span(subset)
            coeffs = [reduced[i][k] for i in range(k)]
            if all(c >= 0 for c in coeffs):
                return True
    return False


def archimedean_bound(cone: Cone, a: Sequence, x: Sequence) -> int:
    """Least ``n >= 1`` with ``n*a - x`` in the interior of the cone."""
    if not cone.contains_interior(a):
        raise ConeError("Archimedean bound requires a ∈ Ω")
    cone._check(x)
    n = 1
    for h in cone.halfspaces:
        q = Fraction(dot(h, x)) / dot(h, a)
        n = max(n, math.floor(q) + 1)
    return n


def outside_witness(cone: Cone) -> tuple[Fraction, ...]:
    """A primitive integer vector ``x`` with ``x ∉ P`` and ``-x ∉ P``.

    Solves ``<n1, x> = 1``, ``<n2, x> = -1`` for two independent facet
    normals, padded with coordinate equations to a square system.
    """
    if cone.dim == 1:
        raise ConeError("no witness exists in dimension 1: R = P ∪ -P")
    hs = cone.halfspaces
    for i, j in itertools.combinations(range(len(hs)), 2):
        if rank([hs[i], hs[j]]) < 2:
            continue
        rows = [hs[i], hs[j]]
        rhs = [1, -1]
        for k in range(cone.dim):
            e = tuple(int(t == k) for t in range(cone.dim))
            if rank(rows + [e]) == len(rows) + 1:
                rows.append(e)
                rhs.append(0)
            if len(rows) == cone.dim:
                break
        x = solve(rows, rhs)
        return tuple(Fraction(t) for t in primitive(x))
    raise ConeError("fewer than two independent halfspace normals; cone is not pointed and spanning")
