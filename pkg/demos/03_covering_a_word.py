"""
Covering one word
=================

The bottom row is handled first.  Its new-support block picks the scalar
that agrees with the most positions; subtracting it never touches later
blocks.
"""

import numpy as np

from chaincover import chained_rm, cover_t, exact_nearest

ch = chained_rm(2, 1, 3)
v0 = np.array([1, 0, 0, 1, 1, 1, 0, 1])

for tie in ("min", "max"):
    res = cover_t(ch, [v0], tie_break=tie)
    print(tie, "trace", res.trace)
    print("   codeword", res.codewords[0], "I =", sorted(res.support), "bound", res.bound)

# the true nearest codeword, for comparison
cw, dist = exact_nearest(ch.gamma, v0)
print("nearest", cw, "distance", dist)
