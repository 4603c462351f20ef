"""Domain type invariants."""

import hashlib
from datetime import datetime, timezone

import pytest

from scp.errors import ValidationError
from scp.models import (
    Attribution,
    Consumer,
    ContentItem,
    CreatorProfile,
    LicenseEnvelope,
    LicenseTerms,
    PlatformAccount,
    parse_iso,
    to_iso,
)

TS = datetime(2025, 3, 10, 8, 30, 15, tzinfo=timezone.utc)


def test_iso_rendering_seconds_precision():
    assert to_iso(TS) == "2025-03-10T08:30:15Z"
    assert to_iso(TS.replace(microsecond=999999)) == "2025-03-10T08:30:15Z"
    assert parse_iso("2025-03-10T08:30:15Z") == TS


def test_parse_iso_naive_is_utc():
    assert parse_iso("2025-03-10T08:30:15").tzinfo is not None
    with pytest.raises(ValidationError):
        parse_iso("not a timestamp")


def test_license_terms_defaults():
    terms = LicenseTerms()
    assert terms.to_wire() == {
        "usage_type": "inference_context",
        "retention_allowed": False,
        "training_allowed": False,
        "revocable": True,
        "attribution_required": True,
        "expiry_days": 30,
    }


def test_license_terms_validation():
    with pytest.raises(ValidationError):
        LicenseTerms(usage_type="resale")
    with pytest.raises(ValidationError):
        LicenseTerms(expiry_days=0)


def _license(status="active"):
    return LicenseEnvelope(
        license_id="lic-1",
        consumer_id="con-1",
        terms=LicenseTerms(),
        content_fingerprint="0" * 64,
        issued_at=TS,
        expires_at=TS,
        status=status,
    )


def test_license_status_one_way():
    lic = _license()
    lic.mark_revoked("creator_revoked")
    assert lic.status == "revoked"
    assert lic.revoked_reason == "creator_revoked"
    lic.mark_expired()
    assert lic.status == "revoked"

    lic2 = _license()
    lic2.mark_expired()
    lic2.mark_revoked("late")
    assert lic2.status == "expired"
    assert lic2.revoked_reason is None


def test_license_wire_hides_internal_reason():
    lic = _license()
    lic.mark_revoked("aborted")
    assert "revoked_reason" not in lic.to_wire()


def test_attribution_rejects_duplicates():
    with pytest.raises(ValidationError):
        Attribution(creator_ids=["cid-001", "cid-001"])
    with pytest.raises(ValidationError):
        Attribution(content_ids=["cnt-001", "cnt-001"])


def test_creator_profile_vertical_validation():
    with pytest.raises(ValidationError):
        CreatorProfile("cid-1", "n", "b", verticals=[])
    with pytest.raises(ValidationError):
        CreatorProfile("cid-1", "n", "b", verticals=["gardening"])
    profile = CreatorProfile("cid-1", "n", "b", verticals=["food", "travel"])
    assert profile.primary_vertical == "food"


def test_platform_account_validation():
    with pytest.raises(ValidationError):
        PlatformAccount("cid-1", "myspace", "h", 10, 0.5, TS)
    with pytest.raises(ValidationError):
        PlatformAccount("cid-1", "youtube", "h", -1, 0.5, TS)
    with pytest.raises(ValidationError):
        PlatformAccount("cid-1", "youtube", "h", 10, 1.5, TS)


def test_content_item_hash_autocompute_and_check():
    body = "three sentences about noodles"
    item = ContentItem("cnt-1", "cid-1", "blog", "t", body, ["food"], TS)
    assert item.content_hash == hashlib.sha256(body.encode()).hexdigest()
    assert item.size_bytes == len(body.encode())

    with pytest.raises(ValidationError):
        ContentItem("cnt-1", "cid-1", "blog", "t", body, [], TS, content_hash="ab" * 32)
    with pytest.raises(ValidationError):
        ContentItem("cnt-1", "cid-1", "blog", "t", body, [], TS, size_bytes=1)


def test_consumer_role_binding():
    with pytest.raises(ValidationError):
        Consumer("c-1", "n", "llm_provider", "org", "h" * 64, role="creator_console")
    console = Consumer(
        "c-1", "n", "llm_provider", "org", "h" * 64, role="creator_console", creator_id="cid-1"
    )
    assert console.creator_id == "cid-1"
    with pytest.raises(ValidationError):
        Consumer("c-1", "n", "llm_provider", "", "h" * 64)
    with pytest.raises(ValidationError):
        Consumer("c-1", "n", "bot_farm", "org", "h" * 64)
