"""Synthetic corpus generator: determinism, ranges, integrity."""

import hashlib
import json

from scp.datagen import BASE_DATE, generate_corpus, main, write_corpus
from scp.models import parse_iso
from scp.store import ScpStore


def test_same_seed_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    write_corpus(a, seed=42)
    write_corpus(b, seed=42)
    assert a.read_bytes() == b.read_bytes()


def test_different_seeds_differ():
    assert generate_corpus(42) != generate_corpus(43)


def test_counts_in_documented_ranges(corpus):
    creators = corpus["creators"]
    accounts = corpus["platform_accounts"]
    items = corpus["content_items"]
    assert len(creators) == 10
    assert 80 <= len(items) <= 150
    per_creator_accounts = {}
    for account in accounts:
        per_creator_accounts[account["creator_id"]] = (
            per_creator_accounts.get(account["creator_id"], 0) + 1
        )
    assert set(per_creator_accounts) == {c["creator_id"] for c in creators}
    assert all(1 <= n <= 3 for n in per_creator_accounts.values())
    per_creator_items = {}
    for item in items:
        per_creator_items[item["creator_id"]] = per_creator_items.get(item["creator_id"], 0) + 1
    assert all(8 <= n <= 15 for n in per_creator_items.values())


def test_field_ranges(corpus):
    for account in corpus["platform_accounts"]:
        assert 500 <= account["follower_count"] <= 500_000
        assert 0.005 <= account["engagement_rate"] <= 0.12
        assert account["platform"] in {"youtube", "instagram", "tiktok", "substack", "blog"}
    verticals = {"travel", "food", "technology", "journalism", "fashion"}
    for creator in corpus["creators"]:
        assert creator["verticals"] and set(creator["verticals"]) <= verticals
        assert creator["consent_status"] == "active"


def test_timestamps_fixed_relative_to_base_date(corpus):
    for item in corpus["content_items"]:
        assert parse_iso(item["published_at"]) <= BASE_DATE
    for creator in corpus["creators"]:
        assert parse_iso(creator["created_at"]) < BASE_DATE


def test_content_hashes_are_real(corpus):
    for item in corpus["content_items"]:
        assert item["content_hash"] == hashlib.sha256(item["body"].encode()).hexdigest()
        assert item["size_bytes"] == len(item["body"].encode())


def test_corpus_loads_into_store(corpus):
    store = ScpStore()
    counts = store.load_seed_document(corpus)
    assert counts["creators"] == 10
    assert counts["content_items"] == len(corpus["content_items"])
    # every item is immediately searchable
    assert len(store.vectors) == counts["content_items"]


def test_cli_entry_point(tmp_path, capsys):
    out = tmp_path / "corpus.json"
    main(["--seed", "7", "--out", str(out)])
    doc = json.loads(out.read_text())
    assert len(doc["creators"]) == 10
    assert "creators" in capsys.readouterr().out or out.exists()
