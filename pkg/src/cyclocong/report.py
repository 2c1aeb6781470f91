"""Pass/fail records emitted by the verification harness, and their serialization."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, Union

__all__ = ["divides", "CongruenceReport", "CheckReport", "Report", "sort_reports", "emit_report", "FORMATS"]

FORMATS = ("json-lines", "csv")
CSV_FIELDS = ("claim_id", "params", "dividend", "modulus", "verdict", "witness")


def divides(m: int, a: int) -> bool:
    """``a == 0 (mod |m|)``, with ``divides(0, a)`` true only for ``a == 0``."""
    if m == 0:
        return a == 0
    return a % abs(m) == 0


@dataclass(frozen=True)
class CongruenceReport:
    """One divisibility claim; the verdict is derived, never stored."""

    claim_id: str
    params: dict
    dividend: int
    modulus: int
    witness: str | None = None

    @property
    def passed(self) -> bool:
        return divides(self.modulus, self.dividend)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def record(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "params": dict(self.params),
            "dividend": str(self.dividend),
            "modulus": str(self.modulus),
            "verdict": self.verdict,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class CheckReport:
    """An identity or inequality check with a boolean outcome."""

    claim_id: str
    params: dict
    ok: bool
    witness: str | None = None

    @property
    def passed(self) -> bool:
        return self.ok

    @property
    def verdict(self) -> str:
        return "pass" if self.ok else "fail"

    def record(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "params": dict(self.params),
            "dividend": None,
            "modulus": None,
            "verdict": self.verdict,
            "witness": self.witness,
        }


Report = Union[CongruenceReport, CheckReport]


def _sort_key(r: Report):
    p = r.params
    rest = tuple(
        (k, (0, v, "") if isinstance(v, int) else (1, 0, str(v)))
        for k, v in sorted(p.items())
        if k not in ("n", "k")
    )
    return (r.claim_id, p.get("n", 0), p.get("k", 0), rest)


def sort_reports(reports: Iterable[Report]) -> list[Report]:
    return sorted(reports, key=_sort_key)


def _params_text(params: dict) -> str:
    return ";".join(f"{k}={params[k]}" for k in sorted(params))


def emit_report(reports: Iterable[Report], fmt: str = "json-lines") -> bytes:
    """Serialize reports in stable ``(claim_id, n, k)`` order.

    ``json-lines``: one object per line with keys in :data:`CSV_FIELDS`
    order; integers are decimal strings so big values survive any JSON
    reader. ``csv``: header row then one row per report, params flattened as
    ``key=value`` pairs joined by ``;``.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown report format {fmt!r}; expected one of {FORMATS}")
    ordered = sort_reports(reports)
    if fmt == "json-lines":
        lines = []
        for r in ordered:
            rec = r.record()
            rec["params"] = {k: rec["params"][k] for k in sorted(rec["params"])}
            lines.append(json.dumps(rec, ensure_ascii=False) + "\n")
        return "".join(lines).encode()
    if not ordered:
        return b""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in ordered:
        rec = r.record()
        writer.writerow(
            [
                rec["claim_id"],
                _params_text(rec["params"]),
                "" if rec["dividend"] is None else rec["dividend"],
                "" if rec["modulus"] is None else rec["modulus"],
                rec["verdict"],
                rec["witness"] or "",
            ]
        )
    return buf.getvalue().encode()
