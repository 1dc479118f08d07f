"""Structured check records and report serialization.

A report is a suite name plus per-check records (inputs, expected, actual,
tolerance, status, provenance, error estimate), a configuration echo and an
environment stamp.  Serialization is deterministic: no timestamps, sorted
keys, repr-stable floats; a fixed seed therefore reproduces byte-identical
files.  Overall status is FAIL iff any record fails; skipped checks stay in
the record list with an explicit SKIP status and reason.
"""

from __future__ import annotations

import csv
import json
import platform
from dataclasses import dataclass, field, asdict
from pathlib import Path

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CheckRecord:
    check_id: str
    module: str
    description: str
    status: str  # PASS | FAIL | SKIP
    expected: object = None
    actual: object = None
    tolerance: float | None = None
    inputs: dict = field(default_factory=dict)
    provenance: str = ""  # closed-form | quadrature | extrapolated | symbolic
    error_estimate: float | None = None
    detail: str = ""


def check(check_id: str, module: str, description: str, ok: bool, *, expected=None,
          actual=None, tolerance=None, inputs=None, provenance="", error_estimate=None,
          detail="") -> CheckRecord:
    return CheckRecord(check_id, module, description, "PASS" if ok else "FAIL",
                       _plain(expected), _plain(actual), tolerance, _plain(inputs or {}),
                       provenance, error_estimate, detail)


def skip(check_id: str, module: str, description: str, reason: str) -> CheckRecord:
    return CheckRecord(check_id, module, description, "SKIP", detail=reason)


def _plain(obj):
    """JSON-safe copy of numbers, arrays, complex values and containers."""
    import numpy as np

    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, complex):
        if obj.imag == 0.0:
            return obj.real
        return {"re": obj.real, "im": obj.imag}
    return obj


@dataclass
class Report:
    suite: str
    records: list
    config_echo: dict
    schema_version: int = SCHEMA_VERSION

    @property
    def overall_status(self) -> str:
        return "FAIL" if any(r.status == "FAIL" for r in self.records) else "PASS"

    def counts(self) -> dict:
        out = {"PASS": 0, "FAIL": 0, "SKIP": 0}
        for r in self.records:
            out[r.status] += 1
        return out

    def environment(self) -> dict:
        import numpy
        import scipy

        return {
            "python": platform.python_version(),
            "numpy": numpy.__version__,
            "scipy": scipy.__version__,
            "machine": platform.machine(),
        }

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "suite": self.suite,
            "overall_status": self.overall_status,
            "counts": self.counts(),
            "environment": self.environment(),
            "config": self.config_echo,
            "checks": [asdict(r) for r in self.records],
        }

    def write_json(self, path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n",
                        encoding="utf-8")
        return path

    def write_csv(self, path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="", encoding="utf-8") as fh:
            fh.write(f"# gblab-report schema_version={self.schema_version} suite={self.suite}\n")
            writer = csv.writer(fh)
            writer.writerow(["check_id", "module", "status", "description", "expected",
                             "actual", "tolerance", "provenance", "error_estimate"])
            for r in self.records:
                writer.writerow([r.check_id, r.module, r.status, r.description,
                                 json.dumps(r.expected, sort_keys=True),
                                 json.dumps(r.actual, sort_keys=True),
                                 r.tolerance, r.provenance, r.error_estimate])
        return path

    def failures(self) -> list:
        return [r for r in self.records if r.status == "FAIL"]


def write_table(path, kind: str, header: list, rows: list) -> Path:
    """Plot-ready comma-separated table with a schema-version comment line."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        fh.write(f"# gblab-scan schema_version={SCHEMA_VERSION} kind={kind}\n")
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_format_cell(c) for c in row])
    return path


def _format_cell(c):
    import numpy as np

    if isinstance(c, (np.floating, np.integer)):
        c = c.item()
    if isinstance(c, float):
        return repr(c)
    if isinstance(c, complex):
        return f"{c.real!r}{'+' if c.imag >= 0 else '-'}{abs(c.imag)!r}j"
    return c
