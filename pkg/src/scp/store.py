"""Dual-store backend: structured entities, vector index, knowledge graph.

Every mutation keeps the three stores in step, so one ContentItem always
has exactly one vector entry and one PUBLISHED edge. The store is
in-memory with snapshot-to-file export; reloading a snapshot preserves
audit-chain verification.
"""

import json
import threading
from pathlib import Path
from typing import Any

from scp.audit import AuditChain
from scp.canonical import fingerprint_bytes
from scp.embedding import embed
from scp.errors import IntegrityError, NotFoundError
from scp.graph import KnowledgeGraph
from scp.licenses import LicenseStore
from scp.models import (
    Consumer,
    ContentItem,
    CreatorProfile,
    PlatformAccount,
    new_id,
    parse_iso,
    to_iso,
)
from scp.vectors import VectorEntry, VectorIndex


class ScpStore:
    def __init__(self):
        self.creators: dict[str, CreatorProfile] = {}
        self.accounts: dict[tuple[str, str], PlatformAccount] = {}
        self.content: dict[str, ContentItem] = {}
        self.consumers: dict[str, Consumer] = {}
        self.licenses = LicenseStore()
        self.audit = AuditChain()
        self.vectors = VectorIndex()
        self.graph = KnowledgeGraph()
        self.alerts: list[dict[str, Any]] = []
        self._lock = threading.RLock()
        self._key_index: dict[str, str] = {}  # api_key_hash -> consumer_id

    # -- creators / accounts / content -------------------------------------

    def upsert_creator(self, profile: CreatorProfile) -> None:
        with self._lock:
            self.creators[profile.creator_id] = profile
            self.graph.add_creator(profile.creator_id, profile.verticals)

    def upsert_account(self, account: PlatformAccount) -> None:
        with self._lock:
            if account.creator_id not in self.creators:
                raise IntegrityError(f"unknown creator {account.creator_id!r}")
            key = (account.creator_id, account.platform)
            if key in self.accounts:
                raise IntegrityError(f"duplicate account for {key}")
            self.accounts[key] = account
            self.graph.add_account(account.creator_id, account.platform)

    def upsert_content(self, item: ContentItem) -> None:
        with self._lock:
            creator = self.creators.get(item.creator_id)
            if creator is None:
                raise IntegrityError(f"unknown creator {item.creator_id!r}")
            if (item.creator_id, item.platform) not in self.accounts:
                raise IntegrityError(
                    f"creator {item.creator_id} has no {item.platform} account"
                )
            self.content[item.content_id] = item
            self.graph.add_content(item.content_id, item.creator_id, item.platform, item.topics)
            self.vectors.upsert(
                VectorEntry(
                    embedding=embed(item.embedding_text()),
                    creator_id=item.creator_id,
                    content_id=item.content_id,
                    vertical=creator.primary_vertical,
                    platform=item.platform,
                )
            )

    def get_creator(self, creator_id: str) -> CreatorProfile:
        creator = self.creators.get(creator_id)
        if creator is None:
            raise NotFoundError(f"unknown creator {creator_id!r}")
        return creator

    def creator_accounts(self, creator_id: str) -> list[PlatformAccount]:
        """All platform accounts of a creator, ordered by platform name."""
        self.get_creator(creator_id)
        accounts = [a for (cid, _), a in self.accounts.items() if cid == creator_id]
        return sorted(accounts, key=lambda a: a.platform)

    def creator_content(self, creator_id: str) -> list[ContentItem]:
        self.get_creator(creator_id)
        return [c for c in self.content.values() if c.creator_id == creator_id]

    def creator_corpus_bytes(self, creator_id: str) -> int:
        return sum(c.size_bytes for c in self.creator_content(creator_id))

    def find_content_by_hash(self, content_hash: str) -> ContentItem | None:
        for item in self.content.values():
            if item.content_hash == content_hash:
                return item
        return None

    # -- consumers ----------------------------------------------------------

    def register_consumer(
        self,
        name: str,
        consumer_type: str,
        organization_id: str,
        role: str = "consumer",
        creator_id: str | None = None,
        api_key: str | None = None,
    ) -> tuple[Consumer, str]:
        """Register a consumer; returns (consumer, plaintext api key)."""
        key = api_key or new_id("key")
        key_hash = fingerprint_bytes(key.encode("utf-8"))
        with self._lock:
            if key_hash in self._key_index:
                raise IntegrityError("api key already registered")
            if creator_id is not None and creator_id not in self.creators:
                raise IntegrityError(f"unknown creator {creator_id!r}")
            consumer = Consumer(
                consumer_id=new_id("con"),
                name=name,
                consumer_type=consumer_type,
                organization_id=organization_id,
                api_key_hash=key_hash,
                role=role,
                creator_id=creator_id,
            )
            self.consumers[consumer.consumer_id] = consumer
            self._key_index[key_hash] = consumer.consumer_id
        return consumer, key

    def authenticate(self, api_key: str | None) -> Consumer | None:
        if not api_key:
            return None
        key_hash = fingerprint_bytes(api_key.encode("utf-8"))
        consumer_id = self._key_index.get(key_hash)
        if consumer_id is None:
            return None
        return self.consumers.get(consumer_id)

    def get_consumer(self, consumer_id: str) -> Consumer | None:
        return self.consumers.get(consumer_id)

    # -- seed documents -------------------------------------------------------

    def load_seed_document(self, doc: dict[str, Any]) -> dict[str, int]:
        """Upsert a whole seed document (creators, accounts, content items)."""
        counts = {"creators": 0, "platform_accounts": 0, "content_items": 0}
        for row in doc.get("creators", []):
            self.upsert_creator(
                CreatorProfile(
                    creator_id=row["creator_id"],
                    display_name=row["display_name"],
                    bio=row["bio"],
                    verticals=list(row["verticals"]),
                    consent_status=row.get("consent_status", "active"),
                    created_at=parse_iso(row["created_at"]),
                )
            )
            counts["creators"] += 1
        for row in doc.get("platform_accounts", []):
            self.upsert_account(
                PlatformAccount(
                    creator_id=row["creator_id"],
                    platform=row["platform"],
                    handle=row["handle"],
                    follower_count=row["follower_count"],
                    engagement_rate=row["engagement_rate"],
                    account_created_at=parse_iso(row["account_created_at"]),
                    posts_per_week=row.get("posts_per_week", 0.0),
                )
            )
            counts["platform_accounts"] += 1
        for row in doc.get("content_items", []):
            self.upsert_content(
                ContentItem(
                    content_id=row["content_id"],
                    creator_id=row["creator_id"],
                    platform=row["platform"],
                    title=row["title"],
                    body=row["body"],
                    topics=list(row["topics"]),
                    published_at=parse_iso(row["published_at"]),
                    content_hash=row.get("content_hash", ""),
                    size_bytes=row.get("size_bytes", 0),
                )
            )
            counts["content_items"] += 1
        return counts

    # -- snapshot persistence -------------------------------------------------

    def snapshot(self) -> dict[str, Any]:
        with self._lock:
            return {
                "creators": [
                    {
                        "creator_id": c.creator_id,
                        "display_name": c.display_name,
                        "bio": c.bio,
                        "verticals": list(c.verticals),
                        "consent_status": c.consent_status,
                        "created_at": to_iso(c.created_at),
                    }
                    for c in self.creators.values()
                ],
                "platform_accounts": [
                    {
                        "creator_id": a.creator_id,
                        "platform": a.platform,
                        "handle": a.handle,
                        "follower_count": a.follower_count,
                        "engagement_rate": a.engagement_rate,
                        "account_created_at": to_iso(a.account_created_at),
                        "posts_per_week": a.posts_per_week,
                    }
                    for a in self.accounts.values()
                ],
                "content_items": [
                    {
                        "content_id": c.content_id,
                        "creator_id": c.creator_id,
                        "platform": c.platform,
                        "title": c.title,
                        "body": c.body,
                        "topics": list(c.topics),
                        "published_at": to_iso(c.published_at),
                        "content_hash": c.content_hash,
                        "size_bytes": c.size_bytes,
                    }
                    for c in self.content.values()
                ],
                "consumers": [
                    {
                        "consumer_id": c.consumer_id,
                        "name": c.name,
                        "consumer_type": c.consumer_type,
                        "organization_id": c.organization_id,
                        "api_key_hash": c.api_key_hash,
                        "role": c.role,
                        "creator_id": c.creator_id,
                    }
                    for c in self.consumers.values()
                ],
                "licenses": self.licenses.to_wire(),
                "audit_log": self.audit.to_wire(),
                "alerts": list(self.alerts),
            }

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.snapshot(), indent=2, sort_keys=True))

    @classmethod
    def load(cls, path: str | Path) -> "ScpStore":
        doc = json.loads(Path(path).read_text())
        store = cls()
        store.load_seed_document(doc)
        for row in doc.get("consumers", []):
            consumer = Consumer(
                consumer_id=row["consumer_id"],
                name=row["name"],
                consumer_type=row["consumer_type"],
                organization_id=row["organization_id"],
                api_key_hash=row["api_key_hash"],
                role=row["role"],
                creator_id=row.get("creator_id"),
            )
            store.consumers[consumer.consumer_id] = consumer
            store._key_index[consumer.api_key_hash] = consumer.consumer_id
        store.licenses = LicenseStore.from_wire(doc.get("licenses", []))
        store.audit = AuditChain.from_wire(doc.get("audit_log", []))
        store.alerts = list(doc.get("alerts", []))
        return store
