"""Exponential-vector calculus on the symmetric Fock space of ``ℓ²``.

An :class:`ExpCombo` is a finite sum ``Σ c_i e(ξ_i)``.  Nothing is truncated:
inner products use ``<e(ξ), e(η)> = exp(<ξ, η>)`` directly.

Conventions (conjugate-linear first slot)::

    W(ξ) e(η) = exp(-|ξ|²/2 - <ξ, η>) e(ξ + η)
    W(ξ) W(η) = exp(-i Im<ξ, η>) W(ξ + η)
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .hilbert import RepContext, SparseVector, inner, v_shift

NORM_GUARD = 700.0


class FockOverflowError(OverflowError):
    pass


def _guard(xi: SparseVector):
    n2 = xi.norm_sq()
    if n2 > NORM_GUARD:
        raise FockOverflowError(f"|ξ|² = {n2:.3g} exceeds {NORM_GUARD}; exp would overflow")


class ExpCombo:
    """``Σ c_i e(ξ_i)`` with pairwise distinct generators."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        merged: dict[SparseVector, complex] = {}
        for c, xi in terms:
            _guard(xi)
            merged[xi] = merged.get(xi, 0j) + complex(c)
        self.terms = tuple((c, xi) for xi, c in merged.items() if c != 0)

    @classmethod
    def vacuum(cls) -> ExpCombo:
        return cls([(1.0, SparseVector())])

    @classmethod
    def exp(cls, xi: SparseVector, c: complex = 1.0) -> ExpCombo:
        return cls([(c, xi)])

    def __add__(self, other: ExpCombo) -> ExpCombo:
        return ExpCombo(self.terms + other.terms)

    def __mul__(self, lam: complex) -> ExpCombo:
        return ExpCombo((lam * c, xi) for c, xi in self.terms)

    __rmul__ = __mul__

    def __sub__(self, other):
        return self + (-1) * other

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return "ExpCombo(" + " + ".join(f"({c:.4g}) e({xi!r})" for c, xi in self.terms) + ")"


def exp_inner(c1: ExpCombo, c2: ExpCombo) -> complex:
    return complex(
        sum(a.conjugate() * b * cmath.exp(inner(xi, eta)) for a, xi in c1.terms for b, eta in c2.terms)
    )


def exp_gram(combos) -> np.ndarray:
    n = len(combos)
    return np.array([[exp_inner(combos[i], combos[j]) for j in range(n)] for i in range(n)])


def weyl_apply(xi: SparseVector, c: ExpCombo) -> ExpCombo:
    _guard(xi)
    n2 = xi.norm_sq()
    return ExpCombo(
        (coef * cmath.exp(-n2 / 2 - inner(xi, eta)), xi + eta) for coef, eta in c.terms
    )


def gamma_apply(ctx: RepContext, x, c: ExpCombo) -> ExpCombo:
    """Second quantisation ``Γ(V_x) e(η) = e(V_x η)``."""
    return ExpCombo((coef, v_shift(ctx, x, eta)) for coef, eta in c.terms)


def discrepancy(lhs: ExpCombo, rhs: ExpCombo) -> float:
    """``|lhs - rhs|²`` relative to ``max(1, |lhs|² + |rhs|²)``.

    Computed from the Gram matrix of the difference, so nearly parallel but
    unmerged generators do not register as a mismatch.
    """
    d = lhs - rhs
    scale = max(1.0, exp_inner(lhs, lhs).real + exp_inner(rhs, rhs).real)
    return abs(exp_inner(d, d)) / scale


@dataclass
class RelationReport:
    name: str
    errors: list
    tol: float

    @property
    def passed(self) -> bool:
        return all(e < self.tol for e in self.errors)

    @property
    def max_error(self) -> float:
        return max(self.errors, default=0.0)


def check_weyl_relation(xi: SparseVector, eta: SparseVector, probes, tol: float = 1e-9) -> RelationReport:
    """``W(ξ) W(η) = exp(-i Im<ξ,η>) W(ξ+η)`` on each probe."""
    phase = cmath.exp(-1j * inner(xi, eta).imag)
    errors = []
    for p in probes:
        lhs = weyl_apply(xi, weyl_apply(eta, p))
        rhs = phase * weyl_apply(xi + eta, p)
        errors.append(discrepancy(lhs, rhs))
    return RelationReport("weyl", errors, tol)


def check_covariance(ctx: RepContext, x, xi: SparseVector, probes, tol: float = 1e-9) -> RelationReport:
    """``W(V_x ξ) Γ(V_x) = Γ(V_x) W(ξ)`` on each probe."""
    vxi = v_shift(ctx, x, xi)
    errors = []
    for p in probes:
        lhs = weyl_apply(vxi, gamma_apply(ctx, x, p))
        rhs = gamma_apply(ctx, x, weyl_apply(xi, p))
        errors.append(discrepancy(lhs, rhs))
    return RelationReport("covariance", errors, tol)


def gram_min_eigenvalue(combos) -> float:
    g = exp_gram(combos)
    return float(np.linalg.eigvalsh((g + g.conj().T) / 2).min())
