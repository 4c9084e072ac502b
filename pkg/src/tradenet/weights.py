"""Direct-influence matrices built from bilateral trade data.

Two weightings are supported.  The trade share of partner B in country A's
international trade is

    (E(B,A) + I(B,A)) / (E(A) + I(A))

where the numerator is A's recorded exports-plus-imports with B and the
denominator A's declared world totals.  The offer share replaces the
denominator with A's total offer, GDP(A) + I(A), so it also weighs B
against A's domestic trade.

Rows always divide by the country's *declared* totals.  When a country's
flow records do not add up to those totals (common in real data, where not
every partner is recorded) the trade-share row sums below 1 and a
:class:`~tradenet.errors.ConsistencyWarning` is emitted naming the country
and the attained ratio.
"""

from __future__ import annotations

import enum
import math
import warnings

import numpy as np

from .errors import ConsistencyWarning, IsolatedCountryError, ZeroOfferDenominatorError
from .model import InfluenceMatrix, MatrixKind, TradeNetwork

__all__ = ["WeightKind", "trade_influence", "offer_influence", "build_direct_matrix"]

# relative flow-total mismatch beyond which a ConsistencyWarning is emitted;
# loose enough to ignore float rounding, tight enough to flag real data gaps
_CONSISTENCY_RTOL = 1e-9


class WeightKind(enum.Enum):
    """Which denominator a direct-influence matrix divides by."""

    TRADE = "trade"
    OFFER = "offer"

    @property
    def matrix_kind(self) -> MatrixKind:
        if self is WeightKind.TRADE:
            return MatrixKind.direct_trade()
        return MatrixKind.direct_offer()


def trade_influence(network: TradeNetwork, a: str, b: str) -> float:
    """Share of ``a``'s international trade that involves ``b``.

    Uses ``a``'s own reporter-side record; returns 0 when ``a`` recorded no
    trade with ``b``.

    Raises
    ------
    IsolatedCountryError
        If ``a`` declares zero total trade.
    """
    if a == b:
        raise ValueError("trade influence is undefined for a country on itself")
    rec = network.country(a)
    network.country(b)
    denom = rec.total_trade
    if denom == 0:
        raise IsolatedCountryError(f"{a} declares no international trade")
    return network.reported_trade(a, b) / denom


def offer_influence(network: TradeNetwork, a: str, b: str) -> float:
    """Share of ``a``'s total offer (GDP + imports) that involves ``b``.

    Raises
    ------
    ZeroOfferDenominatorError
        If ``a`` has GDP + imports = 0.
    """
    if a == b:
        raise ValueError("offer influence is undefined for a country on itself")
    rec = network.country(a)
    network.country(b)
    denom = rec.offer
    if denom == 0:
        raise ZeroOfferDenominatorError(f"{a} has zero GDP + imports")
    return network.reported_trade(a, b) / denom


def build_direct_matrix(network: TradeNetwork, kind: WeightKind) -> InfluenceMatrix:
    """Assemble the full direct-influence matrix for one weighting.

    Entry ``[a, b]`` is the influence of ``b`` on ``a`` per ``kind``'s
    formula; the diagonal is zero.  Countries with zero declared trade get
    an all-zero row rather than an error, so commercially isolated vertices
    stay representable.

    Raises
    ------
    ZeroOfferDenominatorError
        For ``kind=OFFER``, if a country has flow records but zero offer.

    Warns
    -----
    ConsistencyWarning
        For ``kind=TRADE``, for each country whose recorded flows do not
        sum to its declared totals (its row then sums to flows/declared
        instead of 1).
    """
    codes = network.codes
    index = {code: i for i, code in enumerate(codes)}
    values = np.zeros((network.n, network.n))

    reported: dict[str, float] = {code: 0.0 for code in codes}
    for flow in network.flows:
        reported[flow.reporter] += flow.total

    denoms: dict[str, float] = {}
    for rec in network.countries:
        denom = rec.total_trade if kind is WeightKind.TRADE else rec.offer
        if denom == 0 and reported[rec.code] > 0:
            if kind is WeightKind.OFFER:
                raise ZeroOfferDenominatorError(
                    f"{rec.code} has flow records but zero GDP + imports"
                )
            warnings.warn(
                f"{rec.code} has flow records but declares no trade totals "
                "(row left at zero, ratio undefined)",
                ConsistencyWarning,
                stacklevel=2,
            )
        denoms[rec.code] = denom

    for flow in network.flows:
        denom = denoms[flow.reporter]
        if denom > 0:
            values[index[flow.reporter], index[flow.partner]] = flow.total / denom

    if kind is WeightKind.TRADE:
        for rec in network.countries:
            declared = rec.total_trade
            if declared > 0 and not math.isclose(
                reported[rec.code], declared, rel_tol=_CONSISTENCY_RTOL
            ):
                ratio = reported[rec.code] / declared
                warnings.warn(
                    f"flows of {rec.code} sum to {ratio:.6g} of its declared totals",
                    ConsistencyWarning,
                    stacklevel=2,
                )

    return InfluenceMatrix(codes, values, kind.matrix_kind)
