"""Threat-model guardrails: org rate limits, access budgets, aggregation alerts.

Checked between method execution and license generation, once the
response size is known but before anything is released. Rate limits and
byte budgets block (429, attempt audited upstream); aggregation alerts
only warn the creator that one consumer is hoovering up their corpus.
Every trip is recorded as an Alert so consoles can show it.
"""

import threading
from collections import deque
from dataclasses import dataclass
from datetime import datetime, timedelta
from typing import Any

from scp.errors import GuardrailDenied, ValidationError
from scp.models import Clock, Consumer, new_id, to_iso, utc_now
from scp.store import ScpStore

RATE_WINDOW = timedelta(minutes=1)
BUDGET_WINDOW = timedelta(hours=24)


@dataclass
class GuardrailConfig:
    org_requests_per_minute: int = 60
    per_creator_per_consumer_daily_byte_budget: int = 5 * 1024 * 1024
    aggregation_alert_fraction: float = 0.5

    def __post_init__(self):
        if self.org_requests_per_minute < 1:
            raise ValidationError("org_requests_per_minute must be positive")
        if self.per_creator_per_consumer_daily_byte_budget < 1:
            raise ValidationError("daily byte budget must be positive")
        if not 0.0 < self.aggregation_alert_fraction <= 1.0:
            raise ValidationError("aggregation_alert_fraction must be in (0,1]")


class GuardrailEngine:
    def __init__(self, store: ScpStore, config: GuardrailConfig | None = None, clock: Clock = utc_now):
        self.store = store
        self.config = config or GuardrailConfig()
        self.clock = clock
        self._lock = threading.Lock()
        self._org_attempts: dict[str, deque[datetime]] = {}
        self._byte_usage: dict[tuple[str, str], deque[tuple[datetime, int]]] = {}

    def enforce(
        self, consumer: Consumer, method: str, creator_ids: list[str], response_size_bytes: int
    ) -> None:
        """Allow the request or raise GuardrailDenied(reason).

        Rolling windows: one minute for org request counts, 24 hours for
        per-(creator, consumer) byte budgets and aggregation fractions.
        Denied attempts still count toward the org rate window; denied
        bytes are never added to budgets (nothing was served).
        """
        now = self.clock()
        with self._lock:
            self._check_org_rate(consumer, now)
            self._check_budgets(consumer, creator_ids, response_size_bytes, now)
            self._record_and_alert_aggregation(consumer, creator_ids, response_size_bytes, now)

    def _check_org_rate(self, consumer: Consumer, now: datetime) -> None:
        attempts = self._org_attempts.setdefault(consumer.organization_id, deque())
        cutoff = now - RATE_WINDOW
        while attempts and attempts[0] <= cutoff:
            attempts.popleft()
        prior = len(attempts)
        attempts.append(now)
        limit = self.config.org_requests_per_minute
        if prior >= limit:
            self._emit_alert(
                kind="rate_limited",
                creator_id=None,
                consumer=consumer,
                window=(cutoff, now),
                measured=float(prior + 1),
                threshold=float(limit),
                now=now,
            )
            raise GuardrailDenied(
                "rate_limited",
                f"organization {consumer.organization_id} exceeded {limit} requests/minute",
            )

    def _window_bytes(self, key: tuple[str, str], cutoff: datetime) -> int:
        usage = self._byte_usage.setdefault(key, deque())
        while usage and usage[0][0] <= cutoff:
            usage.popleft()
        return sum(size for _, size in usage)

    def _check_budgets(
        self, consumer: Consumer, creator_ids: list[str], size: int, now: datetime
    ) -> None:
        budget = self.config.per_creator_per_consumer_daily_byte_budget
        cutoff = now - BUDGET_WINDOW
        for creator_id in creator_ids:
            used = self._window_bytes((creator_id, consumer.consumer_id), cutoff)
            if used + size > budget:
                self._emit_alert(
                    kind="budget_exceeded",
                    creator_id=creator_id,
                    consumer=consumer,
                    window=(cutoff, now),
                    measured=float(used + size),
                    threshold=float(budget),
                    now=now,
                )
                raise GuardrailDenied(
                    "budget_exceeded",
                    f"daily byte budget for ({creator_id}, {consumer.consumer_id}) exhausted",
                )

    def _record_and_alert_aggregation(
        self, consumer: Consumer, creator_ids: list[str], size: int, now: datetime
    ) -> None:
        fraction = self.config.aggregation_alert_fraction
        cutoff = now - BUDGET_WINDOW
        for creator_id in creator_ids:
            key = (creator_id, consumer.consumer_id)
            before = self._window_bytes(key, cutoff)
            self._byte_usage[key].append((now, size))
            corpus = self.store.creator_corpus_bytes(creator_id)
            if corpus <= 0:
                continue
            measured = (before + size) / corpus
            crossed = measured >= fraction and (before / corpus) < fraction
            if crossed:
                self._emit_alert(
                    kind="aggregation",
                    creator_id=creator_id,
                    consumer=consumer,
                    window=(cutoff, now),
                    measured=measured,
                    threshold=fraction,
                    now=now,
                )

    def _emit_alert(
        self,
        kind: str,
        creator_id: str | None,
        consumer: Consumer,
        window: tuple[datetime, datetime],
        measured: float,
        threshold: float,
        now: datetime,
    ) -> None:
        alert: dict[str, Any] = {
            "alert_id": new_id("alr"),
            "kind": kind,
            "creator_id": creator_id,
            "consumer_id": consumer.consumer_id,
            "organization_id": consumer.organization_id,
            "window": {"from": to_iso(window[0]), "to": to_iso(window[1])},
            "measured": measured,
            "threshold": threshold,
            "created_at": to_iso(now),
        }
        self.store.alerts.append(alert)
