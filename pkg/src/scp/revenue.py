"""Log-proportional revenue attribution and transparency summaries.

Every creator's weight is the sum over their audited accesses of
(method weight x response bytes); shares divide a revenue pool in
proportion to those weights. Arithmetic runs on exact rationals so that
globally rescaling the method weights provably leaves every share
unchanged bit-for-bit; rounding (banker's, 6 decimal places) happens
once, at report emission.
"""

from dataclasses import dataclass
from datetime import datetime
from fractions import Fraction
from typing import Any

from scp.errors import UnknownMethodError, ValidationError
from scp.licenses import LicenseStore
from scp.models import AuditRecord, to_iso

DEFAULT_METHOD_WEIGHTS = {
    "getCreatorContent": 10,
    "searchCreators": 3,
    "getCreatorProfile": 2,
    "getCreatorScore": 1,
    "verifyAuthenticity": 0.5,
    "getAccessLog": 0,
}

ROUND_PLACES = 6


def _to_fraction(value) -> Fraction:
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


@dataclass
class MethodWeights:
    """Per-method data-intensity weights (dimensionless, non-negative).

    Content retrieval must outweigh profile reads, which must outweigh
    authenticity checks; construction enforces that ordering.
    """

    weights: dict[str, Fraction]

    def __post_init__(self):
        self.weights = {name: _to_fraction(w) for name, w in self.weights.items()}
        for name, w in self.weights.items():
            if w < 0:
                raise ValidationError(f"negative weight for {name}")
        required = ("getCreatorContent", "getCreatorProfile", "verifyAuthenticity")
        if all(name in self.weights for name in required):
            content, profile, verify = (self.weights[n] for n in required)
            if not (content > profile > verify):
                raise ValidationError(
                    "weights must satisfy getCreatorContent > getCreatorProfile > verifyAuthenticity"
                )

    @classmethod
    def defaults(cls) -> "MethodWeights":
        return cls(dict(DEFAULT_METHOD_WEIGHTS))

    def scaled(self, k) -> "MethodWeights":
        factor = _to_fraction(k)
        if factor <= 0:
            raise ValidationError("scale factor must be positive")
        return MethodWeights({name: w * factor for name, w in self.weights.items()})

    def weight_for(self, method: str) -> Fraction:
        try:
            return self.weights[method]
        except KeyError:
            raise UnknownMethodError(f"no weight configured for method {method!r}") from None

    def to_wire(self) -> dict[str, float]:
        return {name: float(w) for name, w in self.weights.items()}


def records_in_window(
    records: list[AuditRecord], t0: datetime | None, t1: datetime | None
) -> list[AuditRecord]:
    """Records with t0 <= timestamp <= t1 (bounds inclusive, None = open)."""
    out = []
    for record in records:
        if t0 is not None and record.timestamp < t0:
            continue
        if t1 is not None and record.timestamp > t1:
            continue
        out.append(record)
    return out


def compute_weights(
    records: list[AuditRecord],
    weights: MethodWeights | None = None,
    split_credit: bool = False,
) -> dict[str, Fraction]:
    """Per-creator attribution weights over a window of audit records.

    A record touching k creators credits its full weight x bytes term to
    each of them; with split_credit the term divides evenly instead.
    """
    weights = weights or MethodWeights.defaults()
    out: dict[str, Fraction] = {}
    for record in records:
        term = weights.weight_for(record.method) * record.response_size_bytes
        if not record.creator_ids:
            continue
        if split_credit:
            term = term / len(record.creator_ids)
        for creator_id in record.creator_ids:
            out[creator_id] = out.get(creator_id, Fraction(0)) + term
    return out


def compute_shares(
    weights_map: dict[str, Fraction],
    total_revenue,
    period: tuple[datetime, datetime] | None = None,
    access_counts: dict[str, int] | None = None,
) -> dict[str, Any]:
    """Divide a revenue pool proportionally to creator weights.

    All-zero weights make the report degenerate: every share is 0 and the
    pool is left undistributed.
    """
    revenue = _to_fraction(total_revenue)
    if revenue < 0:
        raise ValidationError("total revenue must be non-negative")
    total_weight = sum(weights_map.values(), Fraction(0))
    degenerate = total_weight == 0

    rows = []
    for creator_id in sorted(weights_map):
        w = weights_map[creator_id]
        share = Fraction(0) if degenerate else revenue * w / total_weight
        rows.append(
            {
                "creator_id": creator_id,
                "access_count": (access_counts or {}).get(creator_id, 0),
                "weight": float(w),
                "share": float(round(share, ROUND_PLACES)),
            }
        )

    report: dict[str, Any] = {
        "total_revenue": float(round(revenue, ROUND_PLACES)),
        "degenerate": degenerate,
        "rows": rows,
    }
    if period is not None:
        report["period"] = {"from": to_iso(period[0]), "to": to_iso(period[1])}
    return report


def build_revenue_report(
    records: list[AuditRecord],
    total_revenue,
    period: tuple[datetime, datetime],
    weights: MethodWeights | None = None,
    split_credit: bool = False,
) -> dict[str, Any]:
    """Window the records, compute weights and counts, emit the report."""
    windowed = records_in_window(records, period[0], period[1])
    weights_map = compute_weights(windowed, weights, split_credit=split_credit)
    counts: dict[str, int] = {}
    for record in windowed:
        for creator_id in record.creator_ids:
            counts[creator_id] = counts.get(creator_id, 0) + 1
    return compute_shares(weights_map, total_revenue, period=period, access_counts=counts)


def export_transparency_summary(
    records: list[AuditRecord],
    licenses: LicenseStore,
    period: tuple[datetime, datetime],
) -> dict[str, Any]:
    """Machine-readable access summary for a reporting window.

    Lists every creator accessed with content IDs and byte totals, every
    consumer with request/byte totals, and the distinct license term
    categories in force across the window's issued licenses.
    """
    windowed = records_in_window(records, period[0], period[1])

    creator_rows: dict[str, dict[str, Any]] = {}
    consumer_rows: dict[str, dict[str, Any]] = {}
    term_categories: dict[str, dict[str, Any]] = {}

    for record in windowed:
        for creator_id in record.creator_ids:
            row = creator_rows.setdefault(
                creator_id,
                {"creator_id": creator_id, "content_ids": set(), "total_bytes": 0, "access_count": 0},
            )
            row["content_ids"].update(record.content_ids)
            row["total_bytes"] += record.response_size_bytes
            row["access_count"] += 1
        crow = consumer_rows.setdefault(
            record.consumer_id,
            {"consumer_id": record.consumer_id, "request_count": 0, "total_bytes": 0},
        )
        crow["request_count"] += 1
        crow["total_bytes"] += record.response_size_bytes
        if record.license_id:
            envelope = licenses.get(record.license_id)
            if envelope is not None:
                terms = envelope.terms.to_wire()
                key = "|".join(f"{k}={terms[k]}" for k in sorted(terms))
                term_categories[key] = terms

    return {
        "window": {"from": to_iso(period[0]), "to": to_iso(period[1])},
        "creators": [
            {**row, "content_ids": sorted(row["content_ids"])}
            for row in (creator_rows[c] for c in sorted(creator_rows))
        ],
        "consumers": [consumer_rows[c] for c in sorted(consumer_rows)],
        "license_term_categories": [term_categories[k] for k in sorted(term_categories)],
    }
