"""
Cones, lattice modules and their opposites
==========================================

A cone given by generators is converted to inequalities with exact
rational arithmetic.  Lattice modules are finite unions of translated
cones; the opposite module is the reflected complement.
"""

from ccr_opposite import (
    archimedean_bound,
    cone_from_generators,
    cone_module,
    member,
    opposite,
    outside_witness,
)
from ccr_opposite.modules import Window, minimal_elements_in_window

skew = cone_from_generators(2, [[1, 0], [1, 1]])
print("inward normals:", skew.halfspaces)
print("extreme rays:  ", skew.rays)

# how far along (2, 1) until we dominate (5, 7)?
print("Archimedean bound:", archimedean_bound(skew, (2, 1), (5, 7)))
print("outside both P and -P:", [str(t) for t in outside_witness(skew)])

# a module with two corners, and its opposite, drawn on a small window
A = cone_module(skew, [(0, 1), (2, 0)])
B = opposite(A)
for y in range(4, -5, -1):
    row = ""
    for x in range(-6, 7):
        row += "A" if member(A, (x, y)) else ("B" if member(B, (x, y)) else ".")
    print(row)

# the corners are recovered as the minimal elements
print("minimal elements of A:", sorted(minimal_elements_in_window(A, Window(8))))
print("opposite(opposite(A)) is A:", opposite(B) == A)
