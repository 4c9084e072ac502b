"""The four indirect-influence operators side by side on one small matrix.

A direct-influence matrix only sees single edges.  Each operator extends
it to chains of edges in a different way:

* micmac counts paths of one fixed length k,
* pagerank weighs infinitely long paths through a teleportation mix,
* heat_kernel diffuses influence with exp(lambda*(D - I)),
* pwp sums every path length at once, length k weighted by lambda^k / k!.

Run with:  python demos/indirect_operators.py
"""

import numpy as np

from tradenet import column_normalize, heat_kernel, micmac, pagerank_limit, pwp

# four nodes in a chain 3 -> 2 -> 1 -> 0 plus one shortcut 3 -> 0;
# entry [a, b] is the direct influence of b on a
direct = np.array(
    [
        [0.0, 0.5, 0.0, 0.1],
        [0.0, 0.0, 0.4, 0.0],
        [0.0, 0.0, 0.0, 0.6],
        [0.0, 0.0, 0.0, 0.0],
    ]
)

np.set_printoptions(precision=4, suppress=True)

print("direct influences:")
print(direct)

print("\nmicmac, k=2 (paths of length exactly 2):")
print(micmac(direct, k=2))

print("\npwp, lambda=1 (all path lengths, factorially damped):")
print(pwp(direct, 1.0))

print("\nheat kernel, lambda=1:")
print(heat_kernel(direct, 1.0))

print("\npagerank, p=0.86 (on the column-normalized matrix):")
print(pagerank_limit(column_normalize(direct)))

# Note how entry [0, 3] differs: the direct shortcut is 0.1, micmac k=2
# only sees the two-step routes, while pwp blends the direct edge with
# the 3 -> 2 -> 1 -> 0 chain.  Pagerank forgets the starting point
# entirely; its columns are all the same stationary vector.
