"""Domain types: creators, content, consumers, licenses, audit records.

Timestamps are UTC ISO-8601 at seconds precision everywhere on the wire;
internally entities keep ``datetime`` objects. Wire renderings use the
exact field names of the protocol envelope.
"""

import re
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Callable

from scp.canonical import fingerprint_bytes
from scp.errors import ValidationError

VERTICALS = ("travel", "food", "technology", "journalism", "fashion")
PLATFORMS = ("youtube", "instagram", "substack", "tiktok", "blog")
CONSUMER_TYPES = ("llm_provider", "enterprise", "research")
ROLES = ("consumer", "creator_console", "admin")
USAGE_TYPES = ("inference_context", "batch_analytics")

GENESIS_HASH = "0" * 64
HEX64_RE = re.compile(r"^[0-9a-f]{64}$")

Clock = Callable[[], datetime]


def utc_now() -> datetime:
    return datetime.now(timezone.utc)


def to_iso(ts: datetime) -> str:
    """Render a timestamp as UTC ISO-8601 with seconds precision (Z suffix)."""
    return ts.astimezone(timezone.utc).replace(microsecond=0).strftime("%Y-%m-%dT%H:%M:%SZ")


def parse_iso(text: str) -> datetime:
    """Parse an ISO-8601 timestamp; naive values are taken as UTC."""
    try:
        ts = datetime.fromisoformat(text.replace("Z", "+00:00"))
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"bad timestamp {text!r}") from exc
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc)


def new_id(prefix: str) -> str:
    return f"{prefix}-{uuid.uuid4()}"


@dataclass
class LicenseTerms:
    """Consumer-facing usage terms. Defaults are the protocol defaults."""

    usage_type: str = "inference_context"
    retention_allowed: bool = False
    training_allowed: bool = False
    revocable: bool = True
    attribution_required: bool = True
    expiry_days: int = 30

    def __post_init__(self):
        if self.usage_type not in USAGE_TYPES:
            raise ValidationError(f"bad usage_type {self.usage_type!r}")
        if not isinstance(self.expiry_days, int) or self.expiry_days < 1:
            raise ValidationError("expiry_days must be a positive integer")

    def to_wire(self) -> dict[str, Any]:
        return {
            "usage_type": self.usage_type,
            "retention_allowed": self.retention_allowed,
            "training_allowed": self.training_allowed,
            "revocable": self.revocable,
            "attribution_required": self.attribution_required,
            "expiry_days": self.expiry_days,
        }


@dataclass
class LicenseEnvelope:
    """One issued license: terms bound to a consumer and a content fingerprint.

    Status moves one-way: active -> expired or active -> revoked.
    """

    license_id: str
    consumer_id: str
    terms: LicenseTerms
    content_fingerprint: str
    issued_at: datetime
    expires_at: datetime
    status: str = "active"
    revoked_reason: str | None = None  # internal; not part of the wire format

    def __post_init__(self):
        if not HEX64_RE.match(self.content_fingerprint):
            raise ValidationError("content_fingerprint must be 64 lowercase hex chars")

    def mark_revoked(self, reason: str) -> None:
        if self.status == "active":
            self.status = "revoked"
            self.revoked_reason = reason

    def mark_expired(self) -> None:
        if self.status == "active":
            self.status = "expired"

    def to_wire(self) -> dict[str, Any]:
        return {
            "license_id": self.license_id,
            "consumer_id": self.consumer_id,
            "terms": self.terms.to_wire(),
            "content_fingerprint": self.content_fingerprint,
            "issued_at": to_iso(self.issued_at),
            "expires_at": to_iso(self.expires_at),
            "status": self.status,
        }


@dataclass
class Attribution:
    """Ordered creator/content IDs credited for one response."""

    creator_ids: list[str] = field(default_factory=list)
    content_ids: list[str] = field(default_factory=list)

    def __post_init__(self):
        if len(set(self.creator_ids)) != len(self.creator_ids):
            raise ValidationError("duplicate creator_ids in attribution")
        if len(set(self.content_ids)) != len(self.content_ids):
            raise ValidationError("duplicate content_ids in attribution")

    def to_wire(self) -> dict[str, Any]:
        return {"creator_ids": list(self.creator_ids), "content_ids": list(self.content_ids)}


@dataclass
class AuditRecord:
    """One immutable access event; the chain makes tampering evident.

    ``record_hash`` is the SHA-256 fingerprint of every other field
    including ``prev_hash``, so each record seals its predecessor.
    """

    log_id: str
    timestamp: datetime
    consumer_id: str
    method: str
    params_digest: str
    creator_ids: list[str]
    content_ids: list[str]
    response_size_bytes: int
    license_id: str
    prev_hash: str
    record_hash: str = ""

    def hash_basis(self) -> dict[str, Any]:
        """The structured value the record hash is computed over."""
        return {
            "log_id": self.log_id,
            "timestamp": to_iso(self.timestamp),
            "consumer_id": self.consumer_id,
            "method": self.method,
            "params_digest": self.params_digest,
            "creator_ids": list(self.creator_ids),
            "content_ids": list(self.content_ids),
            "response_size_bytes": self.response_size_bytes,
            "license_id": self.license_id,
            "prev_hash": self.prev_hash,
        }

    def to_wire(self) -> dict[str, Any]:
        wire = self.hash_basis()
        wire["record_hash"] = self.record_hash
        return wire


@dataclass
class CreatorProfile:
    creator_id: str
    display_name: str
    bio: str
    verticals: list[str]
    consent_status: str = "active"
    created_at: datetime = field(default_factory=utc_now)

    def __post_init__(self):
        if not self.verticals:
            raise ValidationError(f"{self.creator_id}: verticals must be non-empty")
        for v in self.verticals:
            if v not in VERTICALS:
                raise ValidationError(f"{self.creator_id}: unknown vertical {v!r}")
        if self.consent_status not in ("active", "revoked"):
            raise ValidationError(f"bad consent_status {self.consent_status!r}")

    @property
    def primary_vertical(self) -> str:
        return self.verticals[0]


@dataclass
class PlatformAccount:
    creator_id: str
    platform: str
    handle: str
    follower_count: int
    engagement_rate: float
    account_created_at: datetime
    posts_per_week: float = 0.0

    def __post_init__(self):
        if self.platform not in PLATFORMS:
            raise ValidationError(f"unknown platform {self.platform!r}")
        if self.follower_count < 0:
            raise ValidationError("follower_count must be non-negative")
        if not 0.0 <= self.engagement_rate <= 1.0:
            raise ValidationError("engagement_rate must be in [0,1]")
        if self.posts_per_week < 0:
            raise ValidationError("posts_per_week must be non-negative")


@dataclass
class ContentItem:
    content_id: str
    creator_id: str
    platform: str
    title: str
    body: str
    topics: list[str]
    published_at: datetime
    content_hash: str = ""
    size_bytes: int = 0

    def __post_init__(self):
        if self.platform not in PLATFORMS:
            raise ValidationError(f"unknown platform {self.platform!r}")
        body_bytes = self.body.encode("utf-8")
        expected_hash = fingerprint_bytes(body_bytes)
        if not self.content_hash:
            self.content_hash = expected_hash
        elif self.content_hash != expected_hash:
            raise ValidationError(f"{self.content_id}: content_hash does not match body")
        if not self.size_bytes:
            self.size_bytes = len(body_bytes)
        elif self.size_bytes != len(body_bytes):
            raise ValidationError(f"{self.content_id}: size_bytes does not match body")

    def embedding_text(self) -> str:
        return " ".join([self.title, self.body, " ".join(self.topics)])


@dataclass
class Consumer:
    """An authenticated caller. ``creator_id`` binds creator_console keys."""

    consumer_id: str
    name: str
    consumer_type: str
    organization_id: str
    api_key_hash: str
    role: str = "consumer"
    creator_id: str | None = None

    def __post_init__(self):
        if self.consumer_type not in CONSUMER_TYPES:
            raise ValidationError(f"unknown consumer_type {self.consumer_type!r}")
        if self.role not in ROLES:
            raise ValidationError(f"unknown role {self.role!r}")
        if not self.organization_id:
            raise ValidationError("organization_id must be non-empty")
        if self.role == "creator_console" and not self.creator_id:
            raise ValidationError("creator_console keys must be bound to a creator_id")
