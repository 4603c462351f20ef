"""Store coherence: structured entities, vector index, graph, snapshots."""

from datetime import datetime, timezone

import pytest

from scp.audit import verify_chain
from scp.datagen import generate_corpus
from scp.errors import IntegrityError, NotFoundError
from scp.models import ContentItem, CreatorProfile, LicenseTerms, PlatformAccount
from scp.store import ScpStore

TS = datetime(2025, 1, 5, tzinfo=timezone.utc)


def _store_with_creator() -> ScpStore:
    store = ScpStore()
    store.upsert_creator(CreatorProfile("cid-001", "Ana", "bio", ["food"], created_at=TS))
    store.upsert_account(PlatformAccount("cid-001", "blog", "ana.bl", 100, 0.05, TS))
    return store


def test_content_requires_existing_creator_and_account():
    store = _store_with_creator()
    with pytest.raises(IntegrityError):
        store.upsert_content(
            ContentItem("cnt-001", "cid-404", "blog", "t", "b", [], TS)
        )
    with pytest.raises(IntegrityError):
        store.upsert_content(
            ContentItem("cnt-001", "cid-001", "youtube", "t", "b", [], TS)
        )


def test_account_requires_creator_and_uniqueness():
    store = _store_with_creator()
    with pytest.raises(IntegrityError):
        store.upsert_account(PlatformAccount("cid-404", "blog", "h", 0, 0.0, TS))
    with pytest.raises(IntegrityError):
        store.upsert_account(PlatformAccount("cid-001", "blog", "h2", 0, 0.0, TS))


def test_store_coherence_one_vector_one_published_edge():
    store = _store_with_creator()
    store.upsert_content(
        ContentItem("cnt-001", "cid-001", "blog", "t", "soup notes", ["soups"], TS)
    )
    assert len(store.vectors) == 1
    assert store.graph.published_edge_count("cnt-001") == 1
    entry = store.vectors.entries()[0]
    assert entry.metadata == {
        "creator_id": "cid-001",
        "content_id": "cnt-001",
        "vertical": "food",
        "platform": "blog",
    }


def test_get_creator_not_found():
    with pytest.raises(NotFoundError):
        ScpStore().get_creator("cid-404")


def test_creator_accounts_sorted_by_platform():
    store = _store_with_creator()
    store.upsert_account(PlatformAccount("cid-001", "youtube", "h", 1, 0.01, TS))
    store.upsert_account(PlatformAccount("cid-001", "instagram", "h", 1, 0.01, TS))
    assert [a.platform for a in store.creator_accounts("cid-001")] == [
        "blog",
        "instagram",
        "youtube",
    ]


def test_corpus_bytes_and_hash_lookup():
    store = _store_with_creator()
    store.upsert_content(ContentItem("cnt-001", "cid-001", "blog", "t", "abcd", [], TS))
    store.upsert_content(ContentItem("cnt-002", "cid-001", "blog", "t", "efghij", [], TS))
    assert store.creator_corpus_bytes("cid-001") == 10
    item = store.find_content_by_hash(store.content["cnt-002"].content_hash)
    assert item.content_id == "cnt-002"
    assert store.find_content_by_hash("0" * 64) is None


def test_register_and_authenticate_consumer():
    store = ScpStore()
    consumer, key = store.register_consumer("Acme", "llm_provider", "org-acme")
    assert store.authenticate(key).consumer_id == consumer.consumer_id
    assert store.authenticate("wrong") is None
    assert store.authenticate(None) is None
    assert store.authenticate("") is None


def test_duplicate_api_key_rejected():
    store = ScpStore()
    store.register_consumer("A", "llm_provider", "org", api_key="same-key")
    with pytest.raises(IntegrityError):
        store.register_consumer("B", "llm_provider", "org", api_key="same-key")


def test_load_seed_document_counts_and_vectors():
    store = ScpStore()
    doc = generate_corpus(42)
    counts = store.load_seed_document(doc)
    assert counts == {
        "creators": len(doc["creators"]),
        "platform_accounts": len(doc["platform_accounts"]),
        "content_items": len(doc["content_items"]),
    }
    assert counts["creators"] == 10
    assert len(store.vectors) == counts["content_items"]


def test_snapshot_round_trip_preserves_chain(tmp_path):
    store = ScpStore()
    store.load_seed_document(generate_corpus(7))
    consumer, key = store.register_consumer("Acme", "llm_provider", "org-acme")
    lic = store.licenses.issue(consumer.consumer_id, {"x": 1}, LicenseTerms(), TS)
    for i in range(5):
        store.audit.append(
            timestamp=TS,
            consumer_id=consumer.consumer_id,
            method="getCreatorProfile",
            params_digest="a" * 64,
            creator_ids=["cid-001"],
            content_ids=[],
            response_size_bytes=10 + i,
            license_id=lic.license_id,
        )

    path = tmp_path / "snapshot.json"
    store.save(path)
    reloaded = ScpStore.load(path)

    assert verify_chain(reloaded.audit.records()) == (True, None)
    assert len(reloaded.audit) == 5
    assert reloaded.authenticate(key).consumer_id == consumer.consumer_id
    assert reloaded.licenses.get(lic.license_id).status == "active"
    assert set(reloaded.creators) == set(store.creators)
    assert len(reloaded.vectors) == len(store.vectors)
    assert reloaded.graph.creator_platforms("cid-001") == store.graph.creator_platforms("cid-001")
