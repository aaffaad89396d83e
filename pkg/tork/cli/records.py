"""
`cli.records` defines the JSONL run records written by `tork enum` and the
summary aggregated over them.

Every record carries its own input, so a finding can be re-checked without
the file or enumeration that produced it.
"""

import hashlib
import json
from collections import Counter
from fractions import Fraction
from typing import Any,Literal

from pydantic import BaseModel,ConfigDict

from ..conjectures import PROVED,CheckReport
from ..exactla import format_rational
from ..koszul import (
    BettiTable,
    euler_characteristic,
    hrk,
    hrk_ratio,
    poincare_vector,
    projective_dimension,
)


InputKind = Literal["complex"]



def canonical_json(value:Any) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def input_hash(value:Any) -> str:
    """sha256 of the canonical serialization (sorted keys, no whitespace)."""
    return hashlib.sha256(canonical_json(value).encode("utf-8")).hexdigest()



class Stats(BaseModel):
    model_config = ConfigDict(frozen=True)

    hrk: int
    pd: int | None = None
    euler: int
    poincare: list[int]
    hrk_ratio: str | None = None

    @classmethod
    def of(cls, B:BettiTable, n:int|None=None) -> "Stats":
        ratio = None if n is None else format_rational(hrk_ratio(B, n))
        return cls(
            hrk = hrk(B),
            pd = None if B.is_zero() else projective_dimension(B),
            euler = euler_characteristic(B),
            poincare = poincare_vector(B),
            hrk_ratio = ratio,
        )


class RunRecord(BaseModel):
    """
    One computed input.

    Enumerated inputs carry their `index` and, in sampled mode, the `seed`.
    `wall_ms` and `timestamp` are the only fields that vary between identical
    runs.
    """
    model_config = ConfigDict(frozen=True)

    kind: InputKind
    input: dict
    input_hash: str
    index: int | None = None
    seed: int | None = None
    table: dict
    stats: Stats
    reports: list[dict] = []
    wall_ms: int | None = None
    timestamp: str | None = None

    @classmethod
    def build(
            cls,
            kind:InputKind,
            data:dict,
            B:BettiTable,
            reports:list[CheckReport],
            n:int|None=None,
            **descriptor,
        ) -> "RunRecord":
        return cls(
            kind = kind,
            input = data,
            input_hash = input_hash(data),
            table = B.to_json(),
            stats = Stats.of(B, n),
            reports = [report.to_json() for report in reports],
            **descriptor,
        )

    def to_line(self, timestamp:bool=True) -> str:
        exclude = None if timestamp else {"wall_ms", "timestamp"}
        return canonical_json(self.model_dump(exclude=exclude, exclude_none=True)) + "\n"

    def proved_failures(self) -> list[str]:
        return [r["suite"] for r in self.reports if r["kind"] == "proved" and r["overall"] == "fail"]



class Summary:
    """Counts of outcomes per suite, hrk and pd distributions and the records
    with the smallest `hrk / 2^{m-n}`."""

    def __init__(self):
        self.records = 0
        self.skipped = 0
        self.suites : dict[str, Counter] = {}
        self.hrk = Counter()
        self.pd = Counter()
        self.min_ratio : Fraction | None = None
        self.extremal : list[dict] = []

    def add(self, record:RunRecord) -> None:
        self.records += 1
        self.hrk[record.stats.hrk] += 1
        if record.stats.pd is not None:
            self.pd[record.stats.pd] += 1
        for report in record.reports:
            self.suites.setdefault(report["suite"], Counter())[report["overall"]] += 1
        if record.stats.hrk_ratio is not None:
            ratio = Fraction(record.stats.hrk_ratio)
            entry = {"index": record.index, "input_hash": record.input_hash, "input": record.input}
            if self.min_ratio is None or ratio < self.min_ratio:
                self.min_ratio = ratio
                self.extremal = [entry]
            elif ratio == self.min_ratio:
                self.extremal.append(entry)

    @property
    def proved_failures(self) -> int:
        return sum(counts["fail"] for name,counts in self.suites.items() if name in PROVED)

    def to_json(self) -> dict:
        return {
            "records": self.records,
            "skipped": self.skipped,
            "suites": {
                name:{status:counts[status] for status in ("pass", "fail", "na")}
                for name,counts in sorted(self.suites.items())
            },
            "hrk": {str(k):v for k,v in sorted(self.hrk.items())},
            "pd": {str(k):v for k,v in sorted(self.pd.items())},
            "min_hrk_ratio": None if self.min_ratio is None else format_rational(self.min_ratio),
            "extremal": self.extremal,
            "proved_failures": self.proved_failures,
        }

    def to_line(self) -> str:
        return canonical_json({"summary": self.to_json()}) + "\n"

    def to_tsv(self) -> str:
        lines = ["suite\tpass\tfail\tna"]
        for name,counts in sorted(self.suites.items()):
            lines.append(f"{name}\t{counts['pass']}\t{counts['fail']}\t{counts['na']}")
        lines.append("")
        lines.append("hrk\tcount")
        lines += [f"{k}\t{v}" for k,v in sorted(self.hrk.items())]
        lines.append("")
        lines.append("pd\tcount")
        lines += [f"{k}\t{v}" for k,v in sorted(self.pd.items())]
        lines.append("")
        lines.append(f"records\t{self.records}")
        lines.append(f"skipped\t{self.skipped}")
        ratio = "" if self.min_ratio is None else format_rational(self.min_ratio)
        lines.append(f"min_hrk_ratio\t{ratio}")
        lines += [f"extremal\t{entry['index']}\t{entry['input_hash']}" for entry in self.extremal]
        return "\n".join(lines) + "\n"
