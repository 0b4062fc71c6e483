"""The opposite representation ``V^op`` on ``H^op`` and its two models.

A class ``[(ξ, a)]`` with ``ξ ∈ Ker V_a^*`` and ``a`` interior is stored
together with its normal form ``U_{-a} ξ``; ``(ξ, a) ~ (η, b)`` exactly when
``V_b ξ = V_a η``, which is equality of normal forms.  The normal forms live
in ``ℓ²(A^c)``, where ``V^op_a`` acts as ``W_a``, and reflection carries
``ℓ²(A^c)`` onto ``ℓ²(B)`` with ``B = -(A^c)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hilbert import (
    RepContext,
    SparseVector,
    SupportError,
    dilation_shift,
    gram,
    inner,
    v_shift,
    w_adjoint,
    w_shift,
)
from .modules import Window, entry_index, opposite
from .report import Check
from .sampling import points_where, random_vector


@dataclass(frozen=True)
class OppositeClass:
    xi: SparseVector
    a: tuple
    normal: SparseVector

    def __eq__(self, other):
        if not isinstance(other, OppositeClass):
            return NotImplemented
        return self.normal == other.normal

    def __hash__(self):
        return hash(self.normal)

    def to_json(self):
        return {"normal": self.normal.to_json()}


def _require_interior(ctx: RepContext, a):
    if len(a) != ctx.dim or not ctx.cone.contains_interior(a):
        raise SupportError(f"{list(a)} is not an interior lattice point")


def _in_kernel(ctx: RepContext, a, y) -> bool:
    return ctx.in_A(y) and not ctx.in_A(tuple(s - t for s, t in zip(y, a)))


def class_make(ctx: RepContext, xi: SparseVector, a) -> OppositeClass:
    a = tuple(int(t) for t in a)
    _require_interior(ctx, a)
    if not all(_in_kernel(ctx, a, p) for p in xi.support):
        raise SupportError("ξ ∉ Ker(V_a^*)")
    return OppositeClass(xi, a, xi.translate(tuple(-t for t in a)))


def class_add(ctx: RepContext, c1: OppositeClass, c2: OppositeClass) -> OppositeClass:
    """``[(ξ,a)] + [(η,b)] = [(V_b ξ + V_a η, a + b)]``."""
    xi = v_shift(ctx, c2.a, c1.xi) + v_shift(ctx, c1.a, c2.xi)
    return class_make(ctx, xi, tuple(s + t for s, t in zip(c1.a, c2.a)))


def class_scale(lam: complex, c: OppositeClass) -> OppositeClass:
    return OppositeClass(lam * c.xi, c.a, lam * c.normal)


def class_inner(ctx: RepContext, c1: OppositeClass, c2: OppositeClass) -> complex:
    """``<[(ξ,a)], [(η,b)]> = <V_b ξ, V_a η>``."""
    return inner(v_shift(ctx, c2.a, c1.xi), v_shift(ctx, c1.a, c2.xi))


def same_class(ctx: RepContext, c1: OppositeClass, c2: OppositeClass) -> bool:
    """The defining relation ``V_b ξ = V_a η``, evaluated literally."""
    return v_shift(ctx, c2.a, c1.xi) == v_shift(ctx, c1.a, c2.xi)


def v_op_apply(ctx: RepContext, a, c: OppositeClass) -> OppositeClass:
    """``V^op_a [(ξ, b)] = [(ξ, a + b)]``."""
    a = tuple(int(t) for t in a)
    _require_interior(ctx, a)
    return class_make(ctx, c.xi, tuple(s + t for s, t in zip(a, c.a)))


def intertwiner_T(ctx: RepContext, f: SparseVector, a) -> OppositeClass:
    """``T f = [(U_a f, a)]`` for ``f ∈ Ker W_a^*``."""
    a = tuple(int(t) for t in a)
    _require_interior(ctx, a)
    if not all(ctx.in_complement(p) and ctx.in_A(tuple(s + t for s, t in zip(p, a))) for p in f.support):
        raise SupportError("f ∉ Ker(W_a^*)")
    return class_make(ctx, dilation_shift(a, f), a)


def kernel_direction(ctx: RepContext, f: SparseVector, direction=None) -> tuple:
    """An interior ``a`` with ``f ∈ Ker W_a^*``, as a multiple of ``direction``."""
    a0 = ctx.cone.interior_point() if direction is None else tuple(direction)
    n = max((entry_index(ctx.module, a0, p) for p in f.support), default=1)
    return tuple(n * t for t in a0)


def T(ctx: RepContext, f: SparseVector) -> OppositeClass:
    """``T`` on a finitely supported ``f ∈ ℓ²(A^c)``, choosing ``a`` automatically."""
    return intertwiner_T(ctx, f, kernel_direction(ctx, f))


# --- equivalence report ----------------------------------------------------


def _max_abs(m) -> float:
    return float(np.max(np.abs(m))) if np.size(m) else 0.0


def inversion_to_VB(
    ctx: RepContext,
    cases: int = 100,
    seed: int = 0,
    tol: float = 1e-9,
    window: Window = Window(6),
    family_size: int = 10,
) -> list[Check]:
    """Check ``W ≅ V^op ≅ V^B`` on random finitely supported vectors.

    Reflection ``(ιf)(y) = f(-y)`` must map ``ℓ²(A^c)`` into ``ℓ²(B)`` and
    satisfy ``ι W_a = V^B_a ι``; ``T`` must preserve Gram matrices and
    satisfy ``T W_a = V^op_a T``.
    """
    rng = np.random.default_rng(seed)
    ctx_b = RepContext(opposite(ctx.module))
    comp = points_where(ctx.in_complement, window, ctx.dim)
    a0 = ctx.cone.interior_point()
    checks = []

    support_ok = intertwine_ok = t_intertwine_ok = True
    worst_t = 0.0
    for _ in range(cases):
        f = random_vector(rng, comp)
        k = int(rng.integers(1, 4))
        a = tuple(k * t for t in a0)
        g = f.reflect()
        support_ok &= all(ctx_b.in_A(p) for p in g.support)
        lhs = w_shift(ctx, a, f).reflect()
        rhs = v_shift(ctx_b, a, g)
        intertwine_ok &= lhs == rhs
        # T W_a f = V^op_a T f, compared as normal forms
        tw = T(ctx, w_shift(ctx, a, f))
        vt = v_op_apply(ctx, a, T(ctx, f))
        t_intertwine_ok &= tw == vt
        worst_t = max(worst_t, (tw.normal - vt.normal).norm())
    checks.append(Check("reflection maps ℓ²(A^c) into ℓ²(B)", support_ok, {"cases": cases}))
    checks.append(Check("reflection intertwines W and V^B", intertwine_ok, {"cases": cases}))
    checks.append(Check("T intertwines W and V^op", t_intertwine_ok and worst_t <= tol, {"max_error": worst_t}, tol))

    worst_gram_t = worst_gram_b = 0.0
    for _ in range(max(1, cases // family_size)):
        fam = [random_vector(rng, comp) for _ in range(family_size)]
        g_k = gram(fam)
        classes = [T(ctx, f) for f in fam]
        g_op = np.array([[class_inner(ctx, c, d) for d in classes] for c in classes])
        g_b = gram([f.reflect() for f in fam])
        worst_gram_t = max(worst_gram_t, _max_abs(g_k - g_op))
        worst_gram_b = max(worst_gram_b, _max_abs(g_op - g_b))
    checks.append(Check("Gram(K) = Gram(H^op)", worst_gram_t <= tol, {"max_error": worst_gram_t}, tol))
    checks.append(Check("Gram(H^op) = Gram(ℓ²(B))", worst_gram_b <= tol, {"max_error": worst_gram_b}, tol))

    # well-definedness: (ξ, a) and (V_c ξ, a + c) give identical results
    well_defined = True
    worst_inner = 0.0
    for _ in range(cases):
        f1, f2 = random_vector(rng, comp), random_vector(rng, comp)
        c1, c2 = T(ctx, f1), T(ctx, f2)
        k = int(rng.integers(1, 3))
        c = tuple(k * t for t in a0)
        alt1 = class_make(ctx, v_shift(ctx, c, c1.xi), tuple(s + t for s, t in zip(c1.a, c)))
        well_defined &= alt1 == c1 and same_class(ctx, alt1, c1)
        well_defined &= class_add(ctx, alt1, c2) == class_add(ctx, c1, c2)
        well_defined &= v_op_apply(ctx, a0, alt1) == v_op_apply(ctx, a0, c1)
        worst_inner = max(worst_inner, abs(class_inner(ctx, alt1, c2) - class_inner(ctx, c1, c2)))
    checks.append(
        Check(
            "class operations independent of representative",
            well_defined and worst_inner <= tol,
            {"max_inner_error": worst_inner},
            tol,
        )
    )
    return checks


def adjoint_kernel_image(ctx: RepContext, f: SparseVector, a) -> SparseVector:
    """``U_a f`` for ``f ∈ Ker W_a^*``; lands in ``Ker V_a^*``."""
    if w_adjoint(ctx, a, f):
        raise SupportError("f ∉ Ker(W_a^*)")
    return dilation_shift(a, f)
