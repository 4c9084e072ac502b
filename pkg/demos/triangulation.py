"""How an intermediary inflates influence between weakly linked countries.

Three countries where the pair (Cuba, US) trades little directly, but
both trade with Spain.  Removing the Spain edges shows how much of the
indirect US-on-Cuba influence rides on that intermediary.

Run with:  python demos/triangulation.py
"""

import numpy as np

from tradenet import InfluenceMatrix, MatrixKind, normalized_increment, pwp

labels = ("CUB", "ESP", "USA")

# 2011 direct trade shares: entry [a, b] is b's share of a's trade
values = np.zeros((3, 3))
values[0, 1] = 0.068  # Spain's share of Cuba's trade
values[0, 2] = 0.030  # the US's share of Cuba's trade
values[1, 2] = 0.038  # the US's share of Spain's trade
direct = InfluenceMatrix(labels, values, MatrixKind.direct_trade())

indirect = pwp(direct, 1.0)

print("direct  US -> Cuba:", f"{direct.entry('CUB', 'USA'):.4f}")
print("indirect US -> Cuba:", f"{indirect.entry('CUB', 'USA'):.4f}")

increment = normalized_increment(direct, indirect, "CUB", "USA")
print(f"normalized increment: {increment:+.1%}")

# Drop the intermediary: zero every edge touching Spain and recompute.
pruned_values = np.array(values)
pruned_values[1, :] = 0.0
pruned_values[:, 1] = 0.0
pruned = InfluenceMatrix(labels, pruned_values, MatrixKind.direct_trade())

without_spain = pwp(pruned, 1.0)
print("indirect US -> Cuba without the Spain edges:",
      f"{without_spain.entry('CUB', 'USA'):.4f}")

gain = indirect.entry("CUB", "USA") - without_spain.entry("CUB", "USA")
print(f"contribution of the US -> Spain -> Cuba chain: {gain:.5f}")
