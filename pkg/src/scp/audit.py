"""Append-only, hash-chained audit log.

Appends are linearized through one lock so record N's prev_hash is always
the hash of the immediately preceding committed record, even under
concurrent requests. There is no update or delete.
"""

import threading
from datetime import datetime
from typing import Any, Iterable

from scp.canonical import fingerprint
from scp.errors import AuditWriteError
from scp.models import GENESIS_HASH, AuditRecord, new_id


def compute_record_hash(record: AuditRecord) -> str:
    return fingerprint(record.hash_basis())


class AuditChain:
    """In-memory audit chain with a serialized append point."""

    def __init__(self):
        self._records: list[AuditRecord] = []
        self._lock = threading.Lock()
        self.fail_next_appends = 0  # fault injection hook for tests

    def __len__(self) -> int:
        return len(self._records)

    def append(
        self,
        timestamp: datetime,
        consumer_id: str,
        method: str,
        params_digest: str,
        creator_ids: list[str],
        content_ids: list[str],
        response_size_bytes: int,
        license_id: str,
    ) -> str:
        """Append one record and return its log_id.

        Any failure raises AuditWriteError; the caller must fail the whole
        request so no data is ever released unaudited.
        """
        with self._lock:
            if self.fail_next_appends > 0:
                self.fail_next_appends -= 1
                raise AuditWriteError("injected audit write failure")
            prev_hash = self._records[-1].record_hash if self._records else GENESIS_HASH
            record = AuditRecord(
                log_id=new_id("log"),
                timestamp=timestamp,
                consumer_id=consumer_id,
                method=method,
                params_digest=params_digest,
                creator_ids=list(creator_ids),
                content_ids=list(content_ids),
                response_size_bytes=response_size_bytes,
                license_id=license_id,
                prev_hash=prev_hash,
            )
            record.record_hash = compute_record_hash(record)
            self._records.append(record)
            return record.log_id

    def records(self) -> list[AuditRecord]:
        """Snapshot of the chain in append order."""
        with self._lock:
            return list(self._records)

    def get(self, log_id: str) -> AuditRecord | None:
        with self._lock:
            for record in self._records:
                if record.log_id == log_id:
                    return record
        return None

    def to_wire(self) -> list[dict[str, Any]]:
        return [r.to_wire() for r in self.records()]

    @classmethod
    def from_wire(cls, rows: Iterable[dict[str, Any]]) -> "AuditChain":
        from scp.models import parse_iso

        chain = cls()
        for row in rows:
            record = AuditRecord(
                log_id=row["log_id"],
                timestamp=parse_iso(row["timestamp"]),
                consumer_id=row["consumer_id"],
                method=row["method"],
                params_digest=row["params_digest"],
                creator_ids=list(row["creator_ids"]),
                content_ids=list(row["content_ids"]),
                response_size_bytes=row["response_size_bytes"],
                license_id=row["license_id"],
                prev_hash=row["prev_hash"],
                record_hash=row["record_hash"],
            )
            chain._records.append(record)
        return chain


def verify_chain(records: list[AuditRecord]) -> tuple[bool, int | None]:
    """Check every record hash and link; returns (ok, first bad index)."""
    prev_hash = GENESIS_HASH
    for i, record in enumerate(records):
        if record.prev_hash != prev_hash:
            return False, i
        if compute_record_hash(record) != record.record_hash:
            return False, i
        prev_hash = record.record_hash
    return True, None
