"""Immutable data model for countries, bilateral flows, and trade networks.

A trade network is a directed graph whose vertices are countries and whose
edges carry trade between them.  Countries are kept in alphabetical order by
display name, which fixes the index map used by every matrix in the package.

All types are frozen after construction and safe to share across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import (
    DuplicateCountryError,
    DuplicateFlowError,
    NegativeAmountError,
    SelfFlowError,
    UnknownCountryError,
)

__all__ = [
    "CountryRecord",
    "BilateralFlow",
    "TradeNetwork",
    "MatrixKind",
    "InfluenceMatrix",
    "BiDegree",
    "build_network",
    "bidegree",
]

_CODE_RE = re.compile(r"[A-Z0-9]{2,3}")


def _check_amount(value: float, what: str, owner: str) -> float:
    value = float(value)
    if not np.isfinite(value):
        raise ValueError(f"{what} of {owner} is not finite: {value}")
    if value < 0:
        raise NegativeAmountError(f"{what} of {owner} is negative: {value}")
    return value


@dataclass(frozen=True)
class CountryRecord:
    """One country's aggregates, in thousands of US dollars.

    ``total_exports`` and ``total_imports`` are the country's declared
    world totals, not sums of its bilateral flow records; real datasets
    routinely disagree between the two.
    """

    code: str
    name: str
    gdp: float
    total_exports: float
    total_imports: float

    def __post_init__(self) -> None:
        if not _CODE_RE.fullmatch(self.code):
            raise ValueError(f"country code must be 2-3 uppercase chars, got {self.code!r}")
        if not self.name:
            raise ValueError(f"country {self.code} has an empty name")
        for attr in ("gdp", "total_exports", "total_imports"):
            object.__setattr__(self, attr, _check_amount(getattr(self, attr), attr, self.code))

    @property
    def total_trade(self) -> float:
        """Declared exports plus imports."""
        return self.total_exports + self.total_imports

    @property
    def offer(self) -> float:
        """GDP plus declared imports: the pool of goods traded in the country."""
        return self.gdp + self.total_imports


@dataclass(frozen=True)
class BilateralFlow:
    """Trade between an ordered country pair, per the reporter's own books.

    ``exports`` and ``imports`` are what the reporter records as its exports
    to and imports from the partner.  Mirror records (the partner's view of
    the same trade) are separate flows and are never reconciled.
    """

    reporter: str
    partner: str
    exports: float
    imports: float

    def __post_init__(self) -> None:
        if self.reporter == self.partner:
            raise SelfFlowError(f"flow {self.reporter}->{self.partner} is a self-flow")
        owner = f"flow ({self.reporter}, {self.partner})"
        for attr in ("exports", "imports"):
            object.__setattr__(self, attr, _check_amount(getattr(self, attr), attr, owner))
        if self.exports == 0 and self.imports == 0:
            raise ValueError(f"{owner} records no trade in either direction")

    @property
    def total(self) -> float:
        return self.exports + self.imports


@dataclass(frozen=True)
class TradeNetwork:
    """A fixed set of countries plus their bilateral flow records.

    Build through :func:`build_network`, which validates and orders the
    inputs; the constructor assumes countries are already sorted by name.
    """

    countries: tuple[CountryRecord, ...]
    flows: tuple[BilateralFlow, ...]
    _by_code: dict = field(init=False, repr=False, compare=False)
    _flow_index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_by_code", {c.code: c for c in self.countries})
        object.__setattr__(
            self, "_flow_index", {(f.reporter, f.partner): f for f in self.flows}
        )

    @property
    def n(self) -> int:
        return len(self.countries)

    @property
    def codes(self) -> tuple[str, ...]:
        """Country codes in network (name-alphabetical) order."""
        return tuple(c.code for c in self.countries)

    def country(self, code: str) -> CountryRecord:
        try:
            return self._by_code[code]
        except KeyError:
            raise UnknownCountryError(f"unknown country code {code!r}") from None

    def index(self, code: str) -> int:
        self.country(code)
        return self.codes.index(code)

    def flow(self, reporter: str, partner: str) -> BilateralFlow | None:
        """The reporter's record of trade with the partner, if any."""
        return self._flow_index.get((reporter, partner))

    def reported_trade(self, reporter: str, partner: str) -> float:
        """Exports + imports between the pair, per the reporter's books; 0 if unrecorded."""
        f = self.flow(reporter, partner)
        return f.total if f is not None else 0.0


def build_network(
    countries: list[CountryRecord] | tuple[CountryRecord, ...],
    flows: list[BilateralFlow] | tuple[BilateralFlow, ...] = (),
) -> TradeNetwork:
    """Validate and assemble a :class:`TradeNetwork`.

    Countries are sorted alphabetically by display name and flows by
    (reporter, partner), so the result is independent of input order.

    Raises
    ------
    DuplicateCountryError, UnknownCountryError, DuplicateFlowError
        Naming the offending record.  Self-flows and negative amounts are
        rejected when the records themselves are constructed.
    """
    seen: dict[str, CountryRecord] = {}
    names: dict[str, str] = {}
    for rec in countries:
        if rec.code in seen:
            raise DuplicateCountryError(f"country code {rec.code} appears twice")
        if rec.name in names:
            raise DuplicateCountryError(
                f"country name {rec.name!r} shared by {names[rec.name]} and {rec.code}"
            )
        seen[rec.code] = rec
        names[rec.name] = rec.code

    pairs: set[tuple[str, str]] = set()
    for f in flows:
        for code in (f.reporter, f.partner):
            if code not in seen:
                raise UnknownCountryError(
                    f"flow ({f.reporter}, {f.partner}) references unknown country {code}"
                )
        key = (f.reporter, f.partner)
        if key in pairs:
            raise DuplicateFlowError(f"duplicate flow record for pair {key}")
        pairs.add(key)

    ordered = tuple(sorted(countries, key=lambda c: c.name))
    ordered_flows = tuple(sorted(flows, key=lambda f: (f.reporter, f.partner)))
    return TradeNetwork(ordered, ordered_flows)


@dataclass(frozen=True)
class MatrixKind:
    """Tag describing how an influence matrix was produced.

    ``family`` is one of ``direct-trade``, ``direct-offer``, ``indirect``;
    indirect matrices also carry the operator name and its parameters.
    """

    family: str
    method: str | None = None
    params: tuple[tuple[str, float], ...] = ()

    _FAMILIES = ("direct-trade", "direct-offer", "indirect")

    def __post_init__(self) -> None:
        if self.family not in self._FAMILIES:
            raise ValueError(f"unknown matrix kind {self.family!r}")
        if (self.family == "indirect") != (self.method is not None):
            raise ValueError("method must be given exactly for indirect matrices")
        object.__setattr__(self, "params", tuple(sorted(self.params)))

    @classmethod
    def direct_trade(cls) -> "MatrixKind":
        return cls("direct-trade")

    @classmethod
    def direct_offer(cls) -> "MatrixKind":
        return cls("direct-offer")

    @classmethod
    def indirect(cls, method: str, **params: float) -> "MatrixKind":
        return cls("indirect", method, tuple(params.items()))

    @property
    def is_direct(self) -> bool:
        return self.family != "indirect"

    def __str__(self) -> str:
        if self.is_direct:
            return self.family
        args = ", ".join(f"{k}={v:g}" for k, v in self.params)
        return f"indirect-{self.method}({args})"


@dataclass(frozen=True, eq=False)
class InfluenceMatrix:
    """A dense labelled influence matrix.

    ``values[a, b]`` is the influence of country ``b`` on country ``a``,
    equal to the dependence of ``a`` on ``b``.  Row sums are therefore
    dependencies and column sums influences.  Direct matrices have a zero
    diagonal (no self-trade).
    """

    labels: tuple[str, ...]
    values: np.ndarray
    kind: MatrixKind

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        values = np.array(self.values, dtype=float)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise ValueError(f"influence matrix must be square, got shape {values.shape}")
        if len(self.labels) != values.shape[0]:
            raise ValueError(
                f"{len(self.labels)} labels for a {values.shape[0]}x{values.shape[1]} matrix"
            )
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("matrix labels must be unique")
        if self.kind.is_direct and values.size and np.any(np.diagonal(values) != 0):
            raise ValueError("direct influence matrices must have a zero diagonal")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, code: str) -> int:
        try:
            return self.labels.index(code)
        except ValueError:
            raise UnknownCountryError(f"unknown country code {code!r}") from None

    def entry(self, a: str, b: str) -> float:
        """Influence of ``b`` on ``a`` (dependence of ``a`` on ``b``)."""
        return float(self.values[self.index(a), self.index(b)])

    def with_values(self, values: np.ndarray, kind: MatrixKind) -> "InfluenceMatrix":
        """Same labels, new values and kind."""
        return InfluenceMatrix(self.labels, values, kind)


class BiDegree(NamedTuple):
    dependence: float
    influence: float


def bidegree(m: InfluenceMatrix, code: str) -> BiDegree:
    """Dependence (row sum) and influence (column sum) of one country.

    Applies to direct and indirect matrices alike.
    """
    i = m.index(code)
    return BiDegree(float(m.values[i, :].sum()), float(m.values[:, i].sum()))
