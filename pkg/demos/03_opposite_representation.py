"""
Three models of the opposite representation
===========================================

The shift semigroup on l2(A) has a unitary dilation by the bilateral
shift.  Its compression to the complement of A, the abstract opposite
built from kernel pairs, and the shift on l2(B) for the opposite module
B all agree.  Each check below compares them on random sparse vectors.
"""

from ccr_opposite import RepContext, SparseVector, cone_from_generators, cone_module
from ccr_opposite.hilbert import purity_escape, v_adjoint, v_shift, w_shift
from ccr_opposite.opposite import T, class_inner, inversion_to_VB

ctx = RepContext(cone_module(cone_from_generators(2, [[1, 0], [0, 1]])))
e = SparseVector.basis

f = e((0, 0)) + 2j * e((1, 3))
print("V_(1,1) f    =", v_shift(ctx, (1, 1), f))
print("V_(1,1)^* f  =", v_adjoint(ctx, (1, 1), f))

# W acts on the complement; a vector there is eventually pushed into A
g = e((-2, 1))
print("W_(1,1) g    =", w_shift(ctx, (1, 1), g))
n, bound = purity_escape(ctx, (3, 5), (1, 1))
print("escape index of (3, 5) along (1, 1):", n, "Archimedean bound:", bound)

c = T(ctx, g)
print("T g is represented by", c.xi, "at", c.a, "; norm^2 =", class_inner(ctx, c, c).real)

for check in inversion_to_VB(ctx, cases=50, seed=3):
    print(f"{check.status:5} {check.name}")
