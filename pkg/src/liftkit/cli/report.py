"""Suite reports: canonical, byte-stable text and JSON renderings.

JSON layout::

    { "suite": str, "bound": int,
      "laws": [ { "id": str, "citation": str,
                  "status": "pass"|"fail"|"experimental",
                  "checked": int,
                  "counterexample": {"left": str, "right": str}|null } ] }
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class LawRecord:
    id: str
    citation: str
    status: str  # pass | fail | experimental
    checked: int
    counterexample: tuple[str, str] | None = None
    notes: tuple[str, ...] = ()  # text report only


@dataclass(frozen=True)
class Report:
    suite: str
    bound: int
    records: tuple[LawRecord, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.records)

    def to_json(self) -> str:
        doc = {
            "suite": self.suite,
            "bound": self.bound,
            "laws": [
                {
                    "id": r.id,
                    "citation": r.citation,
                    "status": r.status,
                    "checked": r.checked,
                    "counterexample": (
                        {"left": r.counterexample[0], "right": r.counterexample[1]}
                        if r.counterexample
                        else None
                    ),
                }
                for r in self.records
            ],
        }
        return json.dumps(doc, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"suite {self.suite} (bound {self.bound})"]
        width = max((len(r.id) for r in self.records), default=0)
        for r in self.records:
            lines.append(
                f"  {r.status.upper():<12} {r.id:<{width}}  "
                f"checked={r.checked}  [{r.citation}]"
            )
            if r.counterexample:
                lines.append(f"{'':15}counterexample left:  {r.counterexample[0]}")
                lines.append(f"{'':15}counterexample right: {r.counterexample[1]}")
            for note in r.notes:
                lines.append(f"{'':15}note: {note}")
        passed = sum(r.status == "pass" for r in self.records)
        failed = sum(r.status == "fail" for r in self.records)
        exp = sum(r.status == "experimental" for r in self.records)
        lines.append(
            f"  -- {passed} passed, {failed} failed, {exp} experimental --"
        )
        return "\n".join(lines) + "\n"


def merge(reports: list[Report]) -> str:
    return "".join(r.to_text() for r in reports)
