"""The six SCP v1.0 method handlers.

Each handler is a pure function of (store, params, ctx) returning
(data, creator_ids, content_ids); the lifecycle executor wraps it with
licensing and audit. Attribution always lists exactly the creator and
content IDs present in the data payload.

Consent semantics: once a creator revokes, consumer-facing methods that
would serve that creator's data are denied (profile/content/score raise,
verification of their content raises, search silently excludes them).
Creator-console surfaces such as getAccessLog stay available, since the
console is how the creator watches post-revocation denial attempts.
"""

from dataclasses import dataclass, field
from typing import Any, Callable

from scp.embedding import cosine, embed
from scp.errors import ConsentRevokedError, ForbiddenError, NotFoundError, ValidationError
from scp.models import HEX64_RE, Clock, Consumer, ContentItem, parse_iso, to_iso, utc_now
from scp.scoring import ScoringConfig, compute_scores
from scp.store import ScpStore

METHOD_NAMES = (
    "getCreatorProfile",
    "searchCreators",
    "getCreatorContent",
    "getCreatorScore",
    "verifyAuthenticity",
    "getAccessLog",
)


@dataclass
class MethodContext:
    clock: Clock = utc_now
    scoring: ScoringConfig = field(default_factory=ScoringConfig)


HandlerResult = tuple[dict[str, Any], list[str], list[str]]
Handler = Callable[[ScpStore, dict[str, Any], MethodContext], HandlerResult]


def _require_str(params: dict[str, Any], key: str) -> str:
    value = params.get(key)
    if not isinstance(value, str) or not value:
        raise ValidationError(f"{key} must be a non-empty string")
    return value


def _optional_str(params: dict[str, Any], key: str) -> str | None:
    value = params.get(key)
    if value is None:
        return None
    if not isinstance(value, str) or not value:
        raise ValidationError(f"{key} must be a non-empty string when present")
    return value


def _positive_int(params: dict[str, Any], key: str, default: int) -> int:
    value = params.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValidationError(f"{key} must be a positive integer")
    return value


def _check_consent(store: ScpStore, creator_id: str) -> None:
    creator = store.get_creator(creator_id)
    if creator.consent_status == "revoked":
        raise ConsentRevokedError(
            f"creator {creator_id} has revoked consent", creator_ids=[creator_id]
        )


def _account_payload(account) -> dict[str, Any]:
    return {
        "platform": account.platform,
        "handle": account.handle,
        "follower_count": account.follower_count,
        "engagement_rate": account.engagement_rate,
        "account_created_at": to_iso(account.account_created_at),
        "posts_per_week": account.posts_per_week,
    }


def _content_payload(item: ContentItem) -> dict[str, Any]:
    return {
        "content_id": item.content_id,
        "platform": item.platform,
        "title": item.title,
        "body": item.body,
        "topics": list(item.topics),
        "published_at": to_iso(item.published_at),
        "content_hash": item.content_hash,
        "size_bytes": item.size_bytes,
    }


def get_creator_profile(store: ScpStore, params: dict, ctx: MethodContext) -> HandlerResult:
    creator_id = _require_str(params, "creator_id")
    _check_consent(store, creator_id)
    creator = store.get_creator(creator_id)
    accounts = store.creator_accounts(creator_id)
    scores = compute_scores(accounts, store.creator_content(creator_id), ctx.clock(), ctx.scoring)
    data = {
        "creator_id": creator.creator_id,
        "display_name": creator.display_name,
        "bio": creator.bio,
        "verticals": list(creator.verticals),
        "created_at": to_iso(creator.created_at),
        "platforms": [_account_payload(a) for a in accounts],
        "scores": {"creator_id": creator.creator_id, **scores},
    }
    return data, [creator_id], []


def search_creators(store: ScpStore, params: dict, ctx: MethodContext) -> HandlerResult:
    query = _require_str(params, "query")
    vertical = _optional_str(params, "vertical")
    platform = _optional_str(params, "platform")
    max_results = _positive_int(params, "max_results", 10)

    # Candidate pool is the full ranked scan, not a fixed oversample:
    # a 3x pool can starve distinct-creator coverage when one creator
    # dominates the top of the ranking, and results must match an
    # exhaustive scan exactly.
    matches = store.vectors.query(
        embed(query), n=None, vertical=vertical, platform=platform
    )

    # Keep each creator's best-scoring match; earlier (higher-ranked) wins ties.
    best: dict[str, Any] = {}
    for match in matches:
        creator = store.creators.get(match.creator_id)
        if creator is None or creator.consent_status == "revoked":
            continue
        current = best.get(match.creator_id)
        if current is None or match.score > current.score:
            best[match.creator_id] = match

    ranked = sorted(best.values(), key=lambda m: (-m.score, m.creator_id))[:max_results]

    results = []
    for match in ranked:
        creator = store.get_creator(match.creator_id)
        results.append(
            {
                "creator_id": creator.creator_id,
                "display_name": creator.display_name,
                "verticals": list(creator.verticals),
                "platforms": store.graph.creator_platforms(creator.creator_id),
                "best_match_score": match.score,
                "matched_content_id": match.content_id,
            }
        )

    data = {"query": query, "results": results}
    return data, [r["creator_id"] for r in results], [r["matched_content_id"] for r in results]


def get_creator_content(store: ScpStore, params: dict, ctx: MethodContext) -> HandlerResult:
    creator_id = _require_str(params, "creator_id")
    platform = _optional_str(params, "platform")
    topic = _optional_str(params, "topic")
    limit = _positive_int(params, "limit", 10)
    _check_consent(store, creator_id)

    items = store.creator_content(creator_id)
    if platform is not None:
        items = [c for c in items if c.platform == platform]

    if topic is None:
        # Structured path: newest first, content_id breaks timestamp ties.
        items.sort(key=lambda c: (-c.published_at.timestamp(), c.content_id))
        chosen = [(_content_payload(c), None) for c in items[:limit]]
    else:
        topic_vec = embed(topic)
        scored = [(cosine(topic_vec, embed(c.embedding_text())), c) for c in items]
        scored.sort(key=lambda pair: (-pair[0], pair[1].content_id))
        chosen = [(_content_payload(c), score) for score, c in scored[:limit]]

    payloads = []
    for payload, score in chosen:
        if score is not None:
            payload = {**payload, "match_score": score}
        payloads.append(payload)

    data = {"creator_id": creator_id, "items": payloads}
    return data, [creator_id], [p["content_id"] for p in payloads]


def get_creator_score(store: ScpStore, params: dict, ctx: MethodContext) -> HandlerResult:
    creator_id = _require_str(params, "creator_id")
    _check_consent(store, creator_id)
    scores = compute_scores(
        store.creator_accounts(creator_id),
        store.creator_content(creator_id),
        ctx.clock(),
        ctx.scoring,
    )
    data = {"creator_id": creator_id, **scores}
    return data, [creator_id], []


def verify_authenticity(store: ScpStore, params: dict, ctx: MethodContext) -> HandlerResult:
    content_hash = _require_str(params, "content_hash")
    if not HEX64_RE.match(content_hash):
        raise ValidationError("content_hash must be 64 lowercase hex chars")
    item = store.find_content_by_hash(content_hash)
    if item is None:
        return {"verified": False}, [], []
    _check_consent(store, item.creator_id)
    data = {
        "verified": True,
        "content_id": item.content_id,
        "creator_id": item.creator_id,
        "published_at": to_iso(item.published_at),
    }
    return data, [item.creator_id], [item.content_id]


def get_access_log(store: ScpStore, params: dict, ctx: MethodContext) -> HandlerResult:
    creator_id = _require_str(params, "creator_id")
    store.get_creator(creator_id)
    since = params.get("since")
    until = params.get("until")
    since_ts = parse_iso(since) if since else None
    until_ts = parse_iso(until) if until else None

    events = []
    for seq, record in enumerate(store.audit.records()):
        if creator_id not in record.creator_ids:
            continue
        if since_ts is not None and record.timestamp < since_ts:
            continue
        if until_ts is not None and record.timestamp > until_ts:
            continue
        consumer = store.get_consumer(record.consumer_id)
        events.append(
            (
                seq,
                {
                    "log_id": record.log_id,
                    "timestamp": to_iso(record.timestamp),
                    "consumer_id": record.consumer_id,
                    "consumer_name": consumer.name if consumer else None,
                    "consumer_type": consumer.consumer_type if consumer else None,
                    "method": record.method,
                    "content_ids": list(record.content_ids),
                    "response_size_bytes": record.response_size_bytes,
                    "license_id": record.license_id,
                },
            )
        )
    # Newest first; append order breaks same-second ties.
    events.sort(key=lambda pair: (pair[1]["timestamp"], pair[0]), reverse=True)
    data = {"creator_id": creator_id, "events": [e for _, e in events]}
    return data, [creator_id], []


HANDLERS: dict[str, Handler] = {
    "getCreatorProfile": get_creator_profile,
    "searchCreators": search_creators,
    "getCreatorContent": get_creator_content,
    "getCreatorScore": get_creator_score,
    "verifyAuthenticity": verify_authenticity,
    "getAccessLog": get_access_log,
}


def authorize(consumer: Consumer, method: str, params: dict[str, Any]) -> None:
    """Role matrix for the six methods; raises ForbiddenError on mismatch."""
    if method not in HANDLERS:
        raise NotFoundError(f"unknown method {method!r}")
    if method == "getAccessLog":
        if consumer.role == "admin":
            return
        if consumer.role == "creator_console" and consumer.creator_id == params.get("creator_id"):
            return
        raise ForbiddenError("getAccessLog requires the creator's console key or an admin key")
    if consumer.role in ("consumer", "admin"):
        return
    raise ForbiddenError(f"role {consumer.role!r} may not call {method}")
