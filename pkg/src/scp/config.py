"""Server configuration: one JSON document for everything tunable.

Pointed at by the SCP_CONFIG environment variable (or --config). Every
section is optional; omitted sections use the documented defaults. The
admin API key is bootstrapped into the consumer registry at startup so
admin calls carry a real identity through the audit trail.
"""

import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from scp.guardrails import GuardrailConfig
from scp.models import LicenseTerms
from scp.revenue import MethodWeights
from scp.scoring import ScoringConfig

ENV_CONFIG = "SCP_CONFIG"

DEFAULT_HOST = "127.0.0.1"
DEFAULT_PORT = 8420


@dataclass
class ServerConfig:
    host: str = DEFAULT_HOST
    port: int = DEFAULT_PORT
    admin_api_key: str = "scp-admin-key"
    seed_data_path: str | None = None
    guardrails: GuardrailConfig = field(default_factory=GuardrailConfig)
    scoring: ScoringConfig = field(default_factory=ScoringConfig)
    method_weights: MethodWeights = field(default_factory=MethodWeights.defaults)
    split_credit: bool = False
    default_license_terms: LicenseTerms = field(default_factory=LicenseTerms)

    @classmethod
    def from_dict(cls, doc: dict[str, Any]) -> "ServerConfig":
        bind = doc.get("bind", {})
        scoring_doc = doc.get("scoring", {})
        scoring = ScoringConfig(
            **{k: scoring_doc[k] for k in ("value_weights", "trust_weights") if k in scoring_doc}
        )
        weights_doc = doc.get("method_weights")
        method_weights = (
            MethodWeights(weights_doc) if weights_doc else MethodWeights.defaults()
        )
        return cls(
            host=bind.get("host", DEFAULT_HOST),
            port=bind.get("port", DEFAULT_PORT),
            admin_api_key=doc.get("admin_api_key", "scp-admin-key"),
            seed_data_path=doc.get("seed_data_path"),
            guardrails=GuardrailConfig(**doc.get("guardrails", {})),
            scoring=scoring,
            method_weights=method_weights,
            split_credit=bool(doc.get("split_credit", False)),
            default_license_terms=LicenseTerms(**doc.get("default_license_terms", {})),
        )

    @classmethod
    def from_file(cls, path: str | Path) -> "ServerConfig":
        return cls.from_dict(json.loads(Path(path).read_text()))

    @classmethod
    def from_env(cls) -> "ServerConfig":
        path = os.environ.get(ENV_CONFIG)
        if path:
            return cls.from_file(path)
        return cls()
