"""Run reports: strict JSON schema, CSV flattening, exit-code policy.

A report serializes to a single JSON document with sorted keys, so
serialize -> parse -> serialize is byte-identical.  Unknown fields are
rejected on read, both at the top level and per outcome record.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from typing import Any

from . import __version__

_TOP_KEYS = {"command", "parameters", "outcomes", "artifact_version", "elapsed_seconds"}

# per-kind required and optional outcome fields
_SCHEMAS: dict[str, tuple[set[str], set[str]]] = {
    "check": (
        {"kind", "statement", "status", "lhs", "rhs", "witness", "note"},
        {"params", "graph6"},
    ),
    "spectral": (
        {"kind", "graph6", "q", "residual", "iterations", "method"},
        {"note"},
    ),
    "bound": (
        {"kind", "graph6", "name", "value", "relation"},
        {"note"},
    ),
    "construct": (
        {"kind", "family", "params", "graph6", "n", "m"},
        set(),
    ),
    "search": (
        {
            "kind",
            "graph6",
            "q_low",
            "q_high",
            "feasible",
            "seed",
            "restarts",
            "accepted_moves",
            "matched_family",
            "near_ties",
        },
        set(),
    ),
    "suite": (
        {
            "kind",
            "statements",
            "instances",
            "holds",
            "equality_case",
            "violated",
            "precondition_unmet",
            "indeterminate",
            "violating",
            "by_statement",
        },
        set(),
    ),
}


@dataclass
class RunReport:
    command: str
    parameters: dict[str, Any]
    outcomes: list[dict[str, Any]]
    artifact_version: str = __version__
    elapsed_seconds: float = 0.0

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "parameters": self.parameters,
            "outcomes": self.outcomes,
            "artifact_version": self.artifact_version,
            "elapsed_seconds": self.elapsed_seconds,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def validate_outcome(record: dict[str, Any]) -> None:
    if not isinstance(record, dict):
        raise ValueError("outcome record must be an object")
    kind = record.get("kind")
    if kind not in _SCHEMAS:
        raise ValueError(f"unknown outcome kind {kind!r}")
    required, optional = _SCHEMAS[kind]
    keys = set(record)
    missing = required - keys
    if missing:
        raise ValueError(f"{kind} record missing fields {sorted(missing)}")
    unknown = keys - required - optional
    if unknown:
        raise ValueError(f"{kind} record has unknown fields {sorted(unknown)}")


def parse_report(text: str) -> RunReport:
    """Parse and validate a report document; unknown fields are an error."""
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("report must be a JSON object")
    keys = set(data)
    if keys != _TOP_KEYS:
        extra = sorted(keys - _TOP_KEYS)
        missing = sorted(_TOP_KEYS - keys)
        raise ValueError(f"report fields mismatch: extra {extra}, missing {missing}")
    if not isinstance(data["outcomes"], list):
        raise ValueError("outcomes must be a list")
    for record in data["outcomes"]:
        validate_outcome(record)
    return RunReport(
        command=data["command"],
        parameters=data["parameters"],
        outcomes=data["outcomes"],
        artifact_version=data["artifact_version"],
        elapsed_seconds=data["elapsed_seconds"],
    )


_CSV_COLUMNS = ("kind", "name", "status", "value", "lhs", "rhs", "graph6", "note")


def _flatten(record: dict[str, Any]) -> dict[str, Any]:
    kind = record["kind"]
    row: dict[str, Any] = {c: "" for c in _CSV_COLUMNS}
    row["kind"] = kind
    if kind == "check":
        row.update(
            name=record["statement"],
            status=record["status"],
            lhs=record["lhs"],
            rhs=record["rhs"],
            graph6=record.get("graph6", ""),
            note=record["note"],
        )
    elif kind == "spectral":
        row.update(
            name=record["method"],
            value=record["q"],
            graph6=record["graph6"],
            note=record.get("note", ""),
        )
    elif kind == "bound":
        row.update(
            name=record["name"],
            value="" if record["value"] is None else record["value"],
            graph6=record["graph6"],
            note=record.get("note", ""),
        )
    elif kind == "construct":
        row.update(name=record["family"], graph6=record["graph6"], value=record["m"])
    elif kind == "search":
        row.update(
            name="search",
            status="feasible" if record["feasible"] else "infeasible",
            value=record["q_low"],
            graph6=record["graph6"],
            note=record["matched_family"] or "",
        )
    elif kind == "suite":
        row.update(
            name="suite",
            status="violated" if record["violated"] else "ok",
            value=record["instances"],
            lhs=record["violated"],
            rhs=record["indeterminate"],
            note=",".join(record["statements"]),
        )
    return row


def write_csv(report: RunReport, path: str) -> None:
    """One flat row per outcome record."""
    with open(path, "w", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=_CSV_COLUMNS)
        writer.writeheader()
        for record in report.outcomes:
            writer.writerow(_flatten(record))


def exit_code_for(outcomes: list[dict[str, Any]]) -> int:
    """0: nothing violated or indeterminate; 1: violation; 2: indeterminate."""
    violated = False
    indeterminate = False
    for record in outcomes:
        if record.get("kind") == "check":
            violated = violated or record["status"] == "violated"
            indeterminate = indeterminate or record["status"] == "indeterminate"
        elif record.get("kind") == "suite":
            violated = violated or record["violated"] > 0
            indeterminate = indeterminate or record["indeterminate"] > 0
    if violated:
        return 1
    if indeterminate:
        return 2
    return 0
