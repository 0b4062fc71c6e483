"""
Weyl operators on exponential vectors
=====================================

Exponential vectors make the Fock space computable without truncation.
We check the Weyl relation with a nontrivial phase and the covariance
of the CCR flow under second quantisation of the shifts.
"""

import cmath

from ccr_opposite import (
    RepContext,
    SparseVector,
    cone_from_generators,
    cone_module,
    inner,
)
from ccr_opposite.fock import (
    ExpCombo,
    check_covariance,
    check_weyl_relation,
    exp_inner,
    weyl_apply,
)

e = SparseVector.basis
xi, eta = 1j * e((0, 0)), e((0, 0)) + 0.5 * e((1, 0))

print("<e(0), e(0)> =", exp_inner(ExpCombo.vacuum(), ExpCombo.vacuum()))
print("<e(e0), e(e0)> =", exp_inner(ExpCombo.exp(e((0, 0))), ExpCombo.exp(e((0, 0)))))

w = weyl_apply(xi, ExpCombo.vacuum())
print("W(xi) e(0) has norm^2", exp_inner(w, w).real)

print("phase exp(-i Im<xi, eta>) =", cmath.exp(-1j * inner(xi, eta).imag))
rep = check_weyl_relation(xi, eta, [ExpCombo.vacuum(), ExpCombo.exp(0.3 * e((2, 1)))])
print("Weyl relation:", rep.passed, "max error", rep.max_error)

ctx = RepContext(cone_module(cone_from_generators(2, [[1, 0], [0, 1]])))
rep = check_covariance(ctx, (1, 2), 0.4 * e((0, 1)) - 0.2j * e((3, 0)), [ExpCombo.vacuum()])
print("covariance:", rep.passed, "max error", rep.max_error)
