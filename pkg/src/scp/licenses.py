"""License issuance and revocation.

Licenses are never deleted: aborted requests leave their Phase-3 license
behind marked revoked (reason "aborted"), preserving append-only
semantics while guaranteeing no released envelope references it.
"""

import threading
from datetime import datetime, timedelta
from typing import Any

from scp.canonical import fingerprint
from scp.errors import LicenseStoreError
from scp.models import LicenseEnvelope, LicenseTerms, new_id, parse_iso


class LicenseStore:
    def __init__(self):
        self._licenses: dict[str, LicenseEnvelope] = {}
        self._lock = threading.Lock()
        self.fail_next_issues = 0  # fault injection hook for tests

    def __len__(self) -> int:
        return len(self._licenses)

    def issue(
        self, consumer_id: str, data: Any, terms: LicenseTerms, now: datetime
    ) -> LicenseEnvelope:
        """Persist and return a fresh active license for ``data``."""
        envelope = LicenseEnvelope(
            license_id=new_id("lic"),
            consumer_id=consumer_id,
            terms=terms,
            content_fingerprint=fingerprint(data),
            issued_at=now,
            expires_at=now + timedelta(days=terms.expiry_days),
            status="active",
        )
        with self._lock:
            if self.fail_next_issues > 0:
                self.fail_next_issues -= 1
                raise LicenseStoreError("injected license store failure")
            self._licenses[envelope.license_id] = envelope
        return envelope

    def get(self, license_id: str) -> LicenseEnvelope | None:
        with self._lock:
            return self._licenses.get(license_id)

    def all(self) -> list[LicenseEnvelope]:
        with self._lock:
            return list(self._licenses.values())

    def revoke(self, license_id: str, reason: str) -> bool:
        """Revoke one active license; returns True if status changed."""
        with self._lock:
            envelope = self._licenses.get(license_id)
            if envelope is None or envelope.status != "active":
                return False
            envelope.mark_revoked(reason)
            return True

    def expire_overdue(self, now: datetime) -> int:
        """Flip active licenses past their expiry to expired."""
        flipped = 0
        with self._lock:
            for envelope in self._licenses.values():
                if envelope.status == "active" and envelope.expires_at <= now:
                    envelope.mark_expired()
                    flipped += 1
        return flipped

    def to_wire(self) -> list[dict[str, Any]]:
        with self._lock:
            rows = []
            for envelope in self._licenses.values():
                row = envelope.to_wire()
                row["revoked_reason"] = envelope.revoked_reason
                rows.append(row)
            return rows

    @classmethod
    def from_wire(cls, rows: list[dict[str, Any]]) -> "LicenseStore":
        store = cls()
        for row in rows:
            envelope = LicenseEnvelope(
                license_id=row["license_id"],
                consumer_id=row["consumer_id"],
                terms=LicenseTerms(**row["terms"]),
                content_fingerprint=row["content_fingerprint"],
                issued_at=parse_iso(row["issued_at"]),
                expires_at=parse_iso(row["expires_at"]),
                status=row["status"],
                revoked_reason=row.get("revoked_reason"),
            )
            store._licenses[envelope.license_id] = envelope
        return store
