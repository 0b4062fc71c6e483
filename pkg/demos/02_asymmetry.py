"""
The quadrant is not a translate of its opposite
===============================================

In one dimension the half-line and its opposite differ by a shift.  In
the plane they do not: the quadrant has a corner, while the opposite
module has no extreme points at all.  The certificate below records both
facts and can be replayed independently.
"""

import json

from ccr_opposite import (
    certify_asymmetry,
    cone_from_generators,
    cone_module,
    opposite,
    translate_equivalent,
)
from ccr_opposite.modules import replay_certificate

halfline = cone_module(cone_from_generators(1, [[1]]))
d = translate_equivalent(halfline, opposite(halfline))
print("d = 1:", d.verdict, "with z =", d.z)

quadrant = cone_from_generators(2, [[1, 0], [0, 1]])
cert = certify_asymmetry(quadrant)
print("d = 2:", cert.verdict)
print(json.dumps(cert.to_json(), default=str)[:400], "...")
print("replays:", replay_certificate(cert))
