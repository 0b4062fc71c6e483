"""Finitely supported vectors on Z^d and the shift semigroups acting on them.

``V^A`` acts on ``ℓ²(A ∩ Z^d)`` by translation, its minimal unitary dilation
is the bilateral shift ``U`` on ``ℓ²(Z^d)``, and ``W_a`` is ``U_{-a}``
restricted to ``ℓ²(A^c)``.  Supports are exact integer bookkeeping; only
the scalar entries are floating point.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass

import numpy as np

from .modules import (
    ModuleExpr,
    Window,
    anchor,
    entry_index,
    exit_index,
    member,
    module_law_holds,
)

Point = tuple[int, ...]

DROP = 1e-15


class SupportError(ValueError):
    pass


class SparseVector:
    """Immutable finitely supported complex function on Z^d."""

    __slots__ = ("_data", "_hash")

    def __init__(self, entries: Mapping[Point, complex] | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        data: dict[Point, complex] = {}
        for p, v in items:
            p = tuple(int(t) for t in p)
            data[p] = data.get(p, 0j) + complex(v)
        self._data = {p: v for p, v in data.items() if abs(v) >= DROP}
        self._hash = None

    @classmethod
    def basis(cls, point, coeff: complex = 1.0) -> SparseVector:
        return cls({tuple(point): coeff})

    @property
    def support(self) -> frozenset:
        return frozenset(self._data)

    def items(self):
        return self._data.items()

    def __getitem__(self, p) -> complex:
        return self._data.get(tuple(p), 0j)

    def __len__(self):
        return len(self._data)

    def __bool__(self):
        return bool(self._data)

    def __eq__(self, other):
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{p}: {v:.6g}" for p, v in sorted(self._data.items()))
        return f"SparseVector({{{body}}})"

    def __add__(self, other: SparseVector) -> SparseVector:
        return SparseVector(list(self._data.items()) + list(other._data.items()))

    def __neg__(self):
        return SparseVector({p: -v for p, v in self._data.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, lam: complex):
        return SparseVector({p: lam * v for p, v in self._data.items()})

    __rmul__ = __mul__

    def translate(self, z) -> SparseVector:
        return SparseVector({tuple(a + b for a, b in zip(p, z)): v for p, v in self._data.items()})

    def reflect(self) -> SparseVector:
        """``(ιf)(y) = f(-y)``."""
        return SparseVector({tuple(-a for a in p): v for p, v in self._data.items()})

    def restrict(self, keep: Callable[[Point], bool]) -> SparseVector:
        return SparseVector({p: v for p, v in self._data.items() if keep(p)})

    def norm_sq(self) -> float:
        return sum(abs(v) ** 2 for v in self._data.values())

    def norm(self) -> float:
        return float(np.sqrt(self.norm_sq()))

    def to_json(self) -> list:
        return [[list(p), v.real, v.imag] for p, v in sorted(self._data.items())]

    @classmethod
    def from_json(cls, data) -> SparseVector:
        return cls((tuple(p), complex(re, im)) for p, re, im in data)


def inner(f: SparseVector, g: SparseVector) -> complex:
    """Conjugate-linear in ``f``, linear in ``g``."""
    fd, gd = f._data, g._data
    if len(fd) <= len(gd):
        return complex(sum(v.conjugate() * gd[p] for p, v in fd.items() if p in gd))
    return complex(sum(fd[p].conjugate() * v for p, v in gd.items() if p in fd))


def gram(vectors) -> np.ndarray:
    n = len(vectors)
    out = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            out[i, j] = inner(vectors[i], vectors[j])
    return out


# --- the representation V^A ----------------------------------------------


@dataclass(frozen=True)
class RepContext:
    """The isometric representation ``V^A`` of a lattice module ``A``."""

    module: ModuleExpr

    def __post_init__(self):
        if not module_law_holds(self.module, Window(3)):
            raise SupportError("module violates A + S ⊆ A on the window")

    @property
    def cone(self):
        return self.module.cone

    @property
    def dim(self) -> int:
        return self.module.dim

    def in_A(self, y) -> bool:
        return member(self.module, y)

    def in_complement(self, y) -> bool:
        return not member(self.module, y)


def _require_semigroup(ctx: RepContext, x):
    if len(x) != ctx.dim or not ctx.cone.contains(x):
        raise SupportError(f"{list(x)} is not in S = P ∩ Z^d")


def _require_support(f: SparseVector, ok, message: str):
    if not all(ok(p) for p in f.support):
        raise SupportError(message)


def v_shift(ctx: RepContext, x, f: SparseVector) -> SparseVector:
    """``(V_x f)(y) = f(y - x)`` for ``y - x ∈ A``."""
    _require_semigroup(ctx, x)
    _require_support(f, ctx.in_A, "vector not in ℓ²(A)")
    return f.translate(x)


def v_adjoint(ctx: RepContext, x, f: SparseVector) -> SparseVector:
    """``(V_x^* f)(y) = f(y + x)`` for ``y ∈ A``."""
    _require_semigroup(ctx, x)
    _require_support(f, ctx.in_A, "vector not in ℓ²(A)")
    neg = tuple(-t for t in x)
    return f.translate(neg).restrict(ctx.in_A)


def kernel_project(ctx: RepContext, x, f: SparseVector) -> SparseVector:
    """Multiply by the indicator of ``A \\ (A + x)``, i.e. project onto ``Ker V_x^*``."""
    return f.restrict(
        lambda p: ctx.in_A(p) and not ctx.in_A(tuple(a - b for a, b in zip(p, x)))
    )


def dilation_shift(x, f: SparseVector) -> SparseVector:
    """Bilateral shift ``U_x`` on ``ℓ²(Z^d)``."""
    return f.translate(x)


def w_shift(ctx: RepContext, a, f: SparseVector) -> SparseVector:
    """``W_a = U_{-a}`` restricted to ``ℓ²(A^c)``."""
    _require_semigroup(ctx, a)
    _require_support(f, ctx.in_complement, "vector not in ℓ²(A^c)")
    out = f.translate(tuple(-t for t in a))
    _require_support(out, ctx.in_complement, "internal error: W_a left ℓ²(A^c)")
    return out


def w_adjoint(ctx: RepContext, a, f: SparseVector) -> SparseVector:
    _require_semigroup(ctx, a)
    _require_support(f, ctx.in_complement, "vector not in ℓ²(A^c)")
    return f.translate(a).restrict(ctx.in_complement)


@dataclass(frozen=True)
class CoverageReport:
    """Every window point ``y`` paired with ``a ∈ S`` such that ``y + a ∈ A``."""

    window: int
    direction: Point
    pairs: tuple
    failures: tuple

    @property
    def passed(self) -> bool:
        return not self.failures


def check_dilation_minimality(ctx: RepContext, w: Window, direction=None) -> CoverageReport:
    """Show ``e_y ∈ U_a^* ℓ²(A)`` for every ``y`` in the window.

    ``a`` is a multiple of a fixed interior direction, with the multiple
    taken from the Archimedean bound relative to a point of ``A``.
    """
    a0 = ctx.cone.interior_point() if direction is None else tuple(direction)
    pairs, failures = [], []
    for y in w.points(ctx.dim):
        n = entry_index(ctx.module, a0, y)
        a = tuple(n * t for t in a0)
        ok = ctx.cone.contains(a) and ctx.in_A(tuple(s + t for s, t in zip(y, a)))
        (pairs if ok else failures).append((y, a))
    return CoverageReport(w.radius, a0, tuple(pairs), tuple(failures))


def purity_escape(ctx: RepContext, y, a) -> tuple[int, int]:
    """Least ``n`` with ``y ∉ A + n a``, and the Archimedean bound it respects.

    ``e_y`` then lies outside ``range(V_{na})``.
    """
    if not ctx.in_A(y):
        raise SupportError(f"{list(y)} is not in A")
    if not ctx.cone.contains_interior(a):
        raise SupportError("escape direction must be interior")
    bound = exit_index(ctx.module, a, y)
    n = 1
    while ctx.in_A(tuple(s - n * t for s, t in zip(y, a))):
        n += 1
        if n > bound:
            raise AssertionError("escape index exceeded the Archimedean bound")
    return n, bound


def complement_escape(ctx: RepContext, y, a) -> tuple[int, int]:
    """Least ``n`` with ``y ∉ A^c - n a`` (``e_y`` leaves ``W_{na} ℓ²(A^c)``)."""
    if ctx.in_A(y):
        raise SupportError(f"{list(y)} is not in A^c")
    if not ctx.cone.contains_interior(a):
        raise SupportError("escape direction must be interior")
    bound = entry_index(ctx.module, a, y)
    n = 1
    while not ctx.in_A(tuple(s + n * t for s, t in zip(y, a))):
        n += 1
        if n > bound:
            raise AssertionError("escape index exceeded the Archimedean bound")
    return n, bound


def module_anchor(ctx: RepContext) -> Point:
    return anchor(ctx.module)
