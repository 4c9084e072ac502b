"""CSV ingestion and serialization of trade datasets.

Two comma-separated UTF-8 files with mandatory headers describe a dataset:

* countries: ``code,name,gdp,total_exports,total_imports``
* flows:     ``reporter,partner,exports,imports``

Amounts are plain decimals in thousands of US dollars (decimal point, no
thousands separators).  Every parse error carries the 1-based line number
of the offending row.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    DuplicateCodeError,
    DuplicatePairError,
    MalformedRowError,
    MissingColumnError,
    NegativeAmountError,
    SelfFlowError,
)
from .model import BilateralFlow, CountryRecord, TradeNetwork, build_network

__all__ = [
    "COUNTRY_COLUMNS",
    "FLOW_COLUMNS",
    "DatasetManifest",
    "load_countries",
    "load_flows",
    "save_countries",
    "save_flows",
    "subset",
    "load_network",
]

logger = logging.getLogger(__name__)

COUNTRY_COLUMNS = ("code", "name", "gdp", "total_exports", "total_imports")
FLOW_COLUMNS = ("reporter", "partner", "exports", "imports")


def _open_rows(path: str | Path, columns: tuple[str, ...]):
    """Yield (line_number, field dict) per data row after header validation."""
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise MissingColumnError(f"{path}: file is empty, header row required") from None
        header = [h.strip() for h in header]
        missing = [c for c in columns if c not in header]
        if missing:
            raise MissingColumnError(f"{path}: missing column(s) {', '.join(missing)}")
        positions = {c: header.index(c) for c in columns}
        for row in reader:
            line = reader.line_num
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise MalformedRowError(
                    f"{path}:{line}: expected {len(header)} fields, got {len(row)}"
                )
            yield line, {c: row[positions[c]].strip() for c in columns}


def _amount(text: str, column: str, path, line: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise MalformedRowError(f"{path}:{line}: {column} is not a number: {text!r}") from None
    if value != value or value in (float("inf"), float("-inf")):
        raise MalformedRowError(f"{path}:{line}: {column} is not finite: {text!r}")
    if value < 0:
        raise NegativeAmountError(f"{path}:{line}: {column} is negative: {text}")
    return value


def load_countries(path: str | Path) -> list[CountryRecord]:
    """Parse a countries CSV into records, preserving file order."""
    records: list[CountryRecord] = []
    first_line: dict[str, int] = {}
    for line, fields in _open_rows(path, COUNTRY_COLUMNS):
        code = fields["code"]
        if code in first_line:
            raise DuplicateCodeError(
                f"{path}:{line}: code {code} already defined on line {first_line[code]}"
            )
        amounts = {c: _amount(fields[c], c, path, line) for c in COUNTRY_COLUMNS[2:]}
        try:
            record = CountryRecord(code=code, name=fields["name"], **amounts)
        except ValueError as exc:
            raise MalformedRowError(f"{path}:{line}: {exc}") from None
        first_line[code] = line
        records.append(record)
    return records


def load_flows(path: str | Path) -> list[BilateralFlow]:
    """Parse a flows CSV; rows recording zero trade both ways are dropped."""
    flows: list[BilateralFlow] = []
    first_line: dict[tuple[str, str], int] = {}
    dropped = 0
    for line, fields in _open_rows(path, FLOW_COLUMNS):
        reporter, partner = fields["reporter"], fields["partner"]
        if reporter == partner:
            raise SelfFlowError(f"{path}:{line}: self-flow for {reporter}")
        pair = (reporter, partner)
        if pair in first_line:
            raise DuplicatePairError(
                f"{path}:{line}: pair {pair} already defined on line {first_line[pair]}"
            )
        first_line[pair] = line
        exports = _amount(fields["exports"], "exports", path, line)
        imports = _amount(fields["imports"], "imports", path, line)
        if exports == 0 and imports == 0:
            dropped += 1
            continue
        try:
            flows.append(
                BilateralFlow(reporter=reporter, partner=partner, exports=exports, imports=imports)
            )
        except ValueError as exc:
            raise MalformedRowError(f"{path}:{line}: {exc}") from None
    if dropped:
        logger.info("%s: dropped %d zero-trade row(s)", path, dropped)
    return flows


def save_countries(records, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(COUNTRY_COLUMNS)
        for rec in records:
            writer.writerow(
                [rec.code, rec.name, repr(rec.gdp), repr(rec.total_exports), repr(rec.total_imports)]
            )


def save_flows(flows, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(FLOW_COLUMNS)
        for flow in flows:
            writer.writerow([flow.reporter, flow.partner, repr(flow.exports), repr(flow.imports)])


def subset(network: TradeNetwork, codes) -> TradeNetwork:
    """Restrict a network to the given countries.

    Keeps only flows with both endpoints retained.  Country aggregates
    (GDP and declared totals) are left untouched: a regional matrix still
    divides by world totals, so regional rows need not sum to 1.
    """
    keep = set(codes)
    for code in sorted(keep):
        network.country(code)
    countries = [c for c in network.countries if c.code in keep]
    flows = [f for f in network.flows if f.reporter in keep and f.partner in keep]
    return build_network(countries, flows)


@dataclass(frozen=True)
class DatasetManifest:
    """Where a dataset lives and how to restrict it."""

    countries_path: str | Path
    flows_path: str | Path
    year_label: str = ""
    region_filter: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if not str(self.countries_path) or not str(self.flows_path):
            raise ValueError("manifest paths must be non-empty")
        if self.region_filter is not None:
            object.__setattr__(self, "region_filter", tuple(self.region_filter))


def load_network(manifest: DatasetManifest) -> TradeNetwork:
    """Load, assemble, and optionally regionally restrict a dataset.

    Raises
    ------
    UnknownCountryError
        If a region-filter code does not resolve against the loaded data.
    """
    countries = load_countries(manifest.countries_path)
    flows = load_flows(manifest.flows_path)
    network = build_network(countries, flows)
    if manifest.region_filter is not None:
        network = subset(network, manifest.region_filter)
    return network
