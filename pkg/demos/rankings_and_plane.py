"""Rankings, the dependence-influence plane, and comparing rank orders.

Generates a reproducible random continent of twelve countries, ranks them
by direct and by indirect influence, places them on the plane, and
measures how far apart the two rankings are.

Run with:  python demos/rankings_and_plane.py
"""

import numpy as np

from tradenet import (
    BilateralFlow,
    CountryRecord,
    WeightKind,
    build_direct_matrix,
    build_network,
    plane,
    pwp,
    rank,
    ranking_distance,
)

rng = np.random.default_rng(7)
codes = [f"{chr(65 + i)}{chr(65 + i)}X" for i in range(12)]
names = [f"Country {c[:2]}" for c in codes]

# random flows; declared totals are kept equal to the flow sums so every
# trade-share row sums to exactly 1
flows, exports, imports = [], dict.fromkeys(codes, 0.0), dict.fromkeys(codes, 0.0)
for a in codes:
    for b in codes:
        if a != b and rng.random() < 0.6:
            e, i = rng.uniform(1e3, 1e6, size=2)
            flows.append(BilateralFlow(a, b, e, i))
            exports[a] += e
            imports[a] += i

countries = [
    CountryRecord(c, n, gdp=2.5 * (exports[c] + imports[c]) + 1.0,
                  total_exports=exports[c], total_imports=imports[c])
    for c, n in zip(codes, names)
]
network = build_network(countries, flows)

direct = build_direct_matrix(network, WeightKind.OFFER)
indirect = pwp(direct, 1.0)

direct_rank = rank(direct, "influence")
indirect_rank = rank(indirect, "influence")

print("top five by direct influence:  ",
      [row.code for row in direct_rank.rows[:5]])
print("top five by indirect influence:",
      [row.code for row in indirect_rank.rows[:5]])

distance = ranking_distance(direct_rank.positions(), indirect_rank.positions())
print(f"distance between the two rankings: {distance:.4f}")

print("\ndependence-influence plane of the indirect matrix:")
sector_names = {
    1: "influential independent",
    2: "influential dependent",
    3: "low influence independent",
    4: "low influence dependent",
}
for point in plane(indirect):
    print(f"  {point.code}  d={point.dependence:.4f}  f={point.influence:.4f}"
          f"  sector {point.sector} ({sector_names[point.sector]})")
