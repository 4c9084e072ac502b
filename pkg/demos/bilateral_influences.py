"""Bilateral influence shares from raw 2011 US/China trade figures.

Builds a two-country network from each side's own books and reads off how
much of each economy's international trade, and of its total offer
(GDP + imports), involves the other.

Run with:  python demos/bilateral_influences.py
"""

from tradenet import (
    BilateralFlow,
    CountryRecord,
    WeightKind,
    build_direct_matrix,
    build_network,
    offer_influence,
    pair_connectedness,
    trade_influence,
)

# 2011 aggregates in thousands of USD
us = CountryRecord("USA", "United States",
                   gdp=14_991_300_000,
                   total_exports=1_479_730_169,
                   total_imports=2_262_585_634)
china = CountryRecord("CHN", "China",
                      gdp=7_321_935_025,
                      total_exports=1_898_388_435,
                      total_imports=1_743_394_866)

# each row is one country's record of its trade with the other
flows = [
    BilateralFlow("USA", "CHN", exports=103_878_414, imports=417_302_859),
    BilateralFlow("CHN", "USA", exports=325_010_987, imports=123_124_009),
]

network = build_network([us, china], flows)

print("Trade shares (fraction of international trade involving the partner)")
print(f"  US   <- China: {trade_influence(network, 'USA', 'CHN'):.3f}")
print(f"  China <- US  : {trade_influence(network, 'CHN', 'USA'):.3f}")

print("Offer shares (fraction of GDP + imports involving the partner)")
print(f"  US   <- China: {offer_influence(network, 'USA', 'CHN'):.4f}")
print(f"  China <- US  : {offer_influence(network, 'CHN', 'USA'):.4f}")

# The two weightings disagree about who leans on whom: China tops the
# trade share in both directions, but the US's far larger GDP flips the
# offer share the other way.

import warnings
from tradenet.errors import ConsistencyWarning

with warnings.catch_warnings():
    # only the mutual flow is recorded here, so rows cannot reach the
    # countries' declared world totals; silence the data-gap warning
    warnings.simplefilter("ignore", ConsistencyWarning)
    matrix = build_direct_matrix(network, WeightKind.TRADE)

print("Direct trade matrix (row depends on column):")
for i, code in enumerate(matrix.labels):
    cells = "  ".join(f"{v:.3f}" for v in matrix.values[i])
    print(f"  {code}: {cells}")

print(f"Pair connectedness US/China: {pair_connectedness(matrix, 'USA', 'CHN'):.3f}")
