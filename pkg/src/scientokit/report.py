"""Deterministic report emission: typed tables, fixed-decimal formatting,
CSV/JSON writers and the report document wrapper."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path

from . import __version__


def round_half_up(value: float, places: int) -> float:
    """Decimal half-up rounding (report tables never use banker's rounding)."""
    q = Decimal(1).scaleb(-places)
    return float(Decimal(repr(value)).quantize(q, rounding=ROUND_HALF_UP))


def fmt(value, places: int = 2) -> str:
    """Fixed-decimal string; empty for missing values."""
    if value is None:
        return ""
    q = Decimal(1).scaleb(-places)
    return str(Decimal(repr(float(value))).quantize(q, rounding=ROUND_HALF_UP))


@dataclass
class Table:
    name: str
    columns: list[str]
    rows: list[list]

    def to_csv(self) -> str:
        lines = [",".join(self.columns)]
        for row in self.rows:
            lines.append(",".join(_cell(v) for v in row))
        return "\n".join(lines) + "\n"

    def to_records(self) -> list[dict]:
        return [dict(zip(self.columns, row)) for row in self.rows]


def _cell(value) -> str:
    if value is None:
        return ""
    s = str(value)
    if any(ch in s for ch in ",\"\n"):
        s = '"' + s.replace('"', '""') + '"'
    return s


@dataclass
class ReportDocument:
    """Named tables plus run metadata.

    With deterministic=True the timestamp is suppressed, making repeat runs
    byte-identical for identical inputs and configuration.
    """

    configuration: dict = field(default_factory=dict)
    input_digests: dict = field(default_factory=dict)
    deterministic: bool = False
    tables: list[Table] = field(default_factory=list)

    def add(self, table: Table) -> None:
        self.tables.append(table)

    def add_input(self, label: str, payload) -> None:
        if isinstance(payload, str):
            payload = payload.encode("utf-8")
        self.input_digests[label] = hashlib.sha256(payload).hexdigest()

    def metadata(self) -> dict:
        meta = {
            "tool": "scientokit",
            "version": __version__,
            "configuration": dict(sorted(self.configuration.items())),
            "inputs": dict(sorted(self.input_digests.items())),
        }
        if not self.deterministic:
            meta["timestamp"] = datetime.now(timezone.utc).isoformat()
        return meta

    def write(self, out_dir, fmt_name: str = "csv") -> list[Path]:
        """Write all tables plus report.json metadata; returns written paths."""
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        written = []
        if fmt_name == "csv":
            for table in self.tables:
                path = out / f"{table.name}.csv"
                path.write_text(table.to_csv(), encoding="utf-8")
                written.append(path)
        elif fmt_name == "json":
            for table in self.tables:
                path = out / f"{table.name}.json"
                payload = json.dumps(table.to_records(), indent=2, sort_keys=True)
                path.write_text(payload + "\n", encoding="utf-8")
                written.append(path)
        else:
            raise ValueError(f"unknown format {fmt_name!r}")
        meta_path = out / "report.json"
        meta_path.write_text(
            json.dumps(self.metadata(), indent=2, sort_keys=True) + "\n",
            encoding="utf-8")
        written.append(meta_path)
        return written
