"""Campaign reports: deterministic, machine-readable, replayable.

A report is campaign metadata plus an ordered record stream and a summary
footer.  Serialization is byte-stable: fixed top-level key order, one compact
record per line, sorted keys inside every object, and no wall-clock content.
The JSON layout is written header-first so partially written files from an
interrupted campaign still contain every completed record on its own line.
"""

from __future__ import annotations

import csv
import io as _io
import json
from dataclasses import dataclass, field

FORMAT_VERSION = 1


@dataclass
class ExperimentReport:
    campaign: str
    params: dict
    records: list[dict]
    summary: dict
    version: int = FORMAT_VERSION

    @property
    def holds(self) -> bool:
        return bool(self.summary.get("holds"))

    @property
    def counterexamples(self) -> list:
        return list(self.summary.get("counterexamples", []))

    def to_json(self) -> str:
        out = ["{"]
        out.append(f'"campaign": {json.dumps(self.campaign)},')
        out.append(f'"params": {json.dumps(self.params, sort_keys=True)},')
        out.append(f'"version": {self.version},')
        out.append('"records": [')
        body = ",\n".join(
            json.dumps(rec, sort_keys=True, separators=(",", ":"))
            for rec in self.records
        )
        if body:
            out.append(body)
        out.append("],")
        out.append(f'"summary": {json.dumps(self.summary, sort_keys=True)}')
        out.append("}")
        return "\n".join(out) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ExperimentReport":
        obj = json.loads(text)
        return cls(
            campaign=obj["campaign"],
            params=obj["params"],
            records=obj["records"],
            summary=obj["summary"],
            version=obj.get("version", FORMAT_VERSION),
        )

    def to_csv(self) -> str:
        """Flattened record rows; summary appended as '#'-prefixed lines."""
        columns = sorted({key for rec in self.records for key in rec})
        buf = _io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for rec in self.records:
            writer.writerow([_cell(rec.get(col)) for col in columns])
        buf.write(f"# campaign: {self.campaign}\n")
        buf.write(f"# version: {self.version}\n")
        buf.write(f"# params: {json.dumps(self.params, sort_keys=True)}\n")
        buf.write(f"# summary: {json.dumps(self.summary, sort_keys=True)}\n")
        return buf.getvalue()


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (dict, list, tuple, bool)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def make_summary(
    instances: int, counterexamples: list, extra: dict | None = None
) -> dict:
    """Uniform summary block; `holds` is true exactly when no counterexamples."""
    summary = {
        "instances": instances,
        "counterexamples": counterexamples,
        "holds": not counterexamples,
    }
    if extra:
        summary.update(extra)
    return summary


@dataclass
class ReportWriter:
    """Helper that accumulates records and closes into a report."""

    campaign: str
    params: dict
    records: list[dict] = field(default_factory=list)

    def add(self, record: dict) -> None:
        self.records.append(record)

    def finish(self, counterexamples: list, extra: dict | None = None) -> ExperimentReport:
        return ExperimentReport(
            campaign=self.campaign,
            params=self.params,
            records=self.records,
            summary=make_summary(len(self.records), counterexamples, extra),
        )
