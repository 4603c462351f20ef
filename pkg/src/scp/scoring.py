"""Heuristic Value and Trust scores over observable creator metadata.

Both scores are 100 x sum(weight_i x normalized_i) over their factors;
the weights per score sum to 1 and live in ScoringConfig so deployments
can recalibrate. These are intentionally simple baselines: every factor
is monotone in its input (more followers never lowers value, an older
account never lowers trust).

Statistic conventions, fixed for reproducibility:
  - consistency = 1 - cv(inter-post gaps), clamped to [0,1]; cv is the
    population coefficient of variation. Fewer than two gaps, or an
    all-zero gap sequence, scores 0 (no evidence of a regular cadence);
    exactly two posts score 1 (a single gap has zero variation).
  - engagement dispersion across accounts = cv(rates), clamped to [0,1];
    one account is trivially consistent (0), zero accounts score 0.
  - account age is measured in years of 365.25 days.
"""

import math
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any

from scp.errors import ValidationError
from scp.models import ContentItem, PlatformAccount

YEAR_SECONDS = 365.25 * 86400.0

DEFAULT_VALUE_WEIGHTS = {
    "follower_reach": 0.35,
    "engagement_rate": 0.30,
    "content_consistency": 0.20,
    "cross_platform_presence": 0.15,
}
DEFAULT_TRUST_WEIGHTS = {
    "account_age": 0.40,
    "posting_regularity": 0.35,
    "cross_platform_consistency": 0.25,
}


@dataclass
class ScoringConfig:
    value_weights: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_VALUE_WEIGHTS))
    trust_weights: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_TRUST_WEIGHTS))

    def __post_init__(self):
        for name, weights, expected in (
            ("value", self.value_weights, set(DEFAULT_VALUE_WEIGHTS)),
            ("trust", self.trust_weights, set(DEFAULT_TRUST_WEIGHTS)),
        ):
            if set(weights) != expected:
                raise ValidationError(f"{name} weights must cover factors {sorted(expected)}")
            if any(w < 0 or w > 1 for w in weights.values()):
                raise ValidationError(f"{name} weights must lie in [0,1]")
            if abs(sum(weights.values()) - 1.0) > 1e-9:
                raise ValidationError(f"{name} weights must sum to 1")


def _clamp01(x: float) -> float:
    return min(1.0, max(0.0, x))


def _population_cv(values: list[float]) -> float | None:
    """Population std / mean; None when undefined (empty or zero mean)."""
    if not values:
        return None
    mean = sum(values) / len(values)
    if mean == 0.0:
        return None
    var = sum((v - mean) ** 2 for v in values) / len(values)
    return math.sqrt(var) / mean


def gap_consistency(published: list[datetime]) -> float:
    """1 - cv of inter-post gaps; 0 without at least one positive gap."""
    if len(published) < 2:
        return 0.0
    ordered = sorted(published)
    gaps = [
        (b - a).total_seconds() for a, b in zip(ordered, ordered[1:])
    ]
    cv = _population_cv(gaps)
    if cv is None:
        return 0.0
    return _clamp01(1.0 - cv)


def engagement_dispersion(rates: list[float]) -> float:
    """cv of engagement rates, clamped to [0,1]; <=1 account disperses 0."""
    if len(rates) <= 1:
        return 0.0
    cv = _population_cv(rates)
    if cv is None:
        return 0.0
    return _clamp01(cv)


def compute_scores(
    accounts: list[PlatformAccount],
    items: list[ContentItem],
    now: datetime,
    config: ScoringConfig | None = None,
) -> dict[str, Any]:
    """Score report payload: value_score, trust_score, factor breakdown."""
    config = config or ScoringConfig()

    total_followers = sum(a.follower_count for a in accounts)
    mean_engagement = (
        sum(a.engagement_rate for a in accounts) / len(accounts) if accounts else 0.0
    )
    consistency = gap_consistency([c.published_at for c in items])
    presence = len(accounts)
    oldest_age_years = (
        max((now - a.account_created_at).total_seconds() for a in accounts) / YEAR_SECONDS
        if accounts
        else 0.0
    )
    dispersion = engagement_dispersion([a.engagement_rate for a in accounts])
    consistency_across = 1.0 - dispersion if accounts else 0.0

    value_factors = {
        "follower_reach": (float(total_followers), _clamp01(math.log10(1 + total_followers) / 7.0)),
        "engagement_rate": (mean_engagement, _clamp01(mean_engagement)),
        "content_consistency": (consistency, consistency),
        "cross_platform_presence": (float(presence), _clamp01(presence / 5.0)),
    }
    trust_factors = {
        "account_age": (oldest_age_years, _clamp01(min(oldest_age_years, 10.0) / 10.0)),
        "posting_regularity": (consistency, consistency),
        "cross_platform_consistency": (consistency_across, _clamp01(consistency_across)),
    }

    def breakdown(factors: dict[str, tuple[float, float]], weights: dict[str, float]):
        out = {}
        score = 0.0
        for name, (raw, normalized) in factors.items():
            contribution = 100.0 * weights[name] * normalized
            score += contribution
            out[name] = {
                "raw": raw,
                "normalized": normalized,
                "weight": weights[name],
                "contribution": contribution,
            }
        return round(score, 6), out

    value_score, value_breakdown = breakdown(value_factors, config.value_weights)
    trust_score, trust_breakdown = breakdown(trust_factors, config.trust_weights)

    # Factor names are disjoint across the two scores, so one flat map works.
    factors = {**value_breakdown, **trust_breakdown}
    return {
        "value_score": value_score,
        "trust_score": trust_score,
        "factors": factors,
    }
