"""Shared fixtures: seeded stores and an HTTP harness around the app."""

from datetime import datetime, timezone

import pytest
from fastapi.testclient import TestClient

from scp.config import ServerConfig
from scp.datagen import generate_corpus
from scp.guardrails import GuardrailConfig
from scp.server import create_app
from scp.store import ScpStore

ADMIN_KEY = "test-admin-key"
FIXED_NOW = datetime(2025, 7, 1, 12, 0, 0, tzinfo=timezone.utc)


def relaxed_guardrails() -> GuardrailConfig:
    """Limits high enough that ordinary test traffic never trips them."""
    return GuardrailConfig(
        org_requests_per_minute=1_000_000,
        per_creator_per_consumer_daily_byte_budget=10**15,
        aggregation_alert_fraction=1.0,
    )


@pytest.fixture(scope="session")
def corpus():
    return generate_corpus(42)


class Harness:
    """One app instance plus helpers for registering keys and calling methods."""

    def __init__(self, config: ServerConfig, store: ScpStore, clock=None):
        kwargs = {"clock": clock} if clock else {}
        self.store = store
        self.config = config
        self.app = create_app(config, store, **kwargs)
        self.client = TestClient(self.app, raise_server_exceptions=False)
        self.admin_key = config.admin_api_key

    def register(
        self,
        name: str = "consumer",
        role: str = "consumer",
        organization_id: str = "org-1",
        consumer_type: str = "llm_provider",
        creator_id: str | None = None,
    ) -> str:
        response = self.client.post(
            "/scp/v1/admin/consumers",
            json={
                "name": name,
                "consumer_type": consumer_type,
                "organization_id": organization_id,
                "role": role,
                "creator_id": creator_id,
            },
            headers={"X-SCP-API-Key": self.admin_key},
        )
        assert response.status_code == 200, response.text
        return response.json()["api_key"]

    def call(self, method: str, params: dict, key: str):
        return self.client.post(
            f"/scp/v1/{method}", json=params, headers={"X-SCP-API-Key": key}
        )

    def seed(self, doc: dict) -> None:
        response = self.client.post(
            "/scp/v1/admin/creators", json=doc, headers={"X-SCP-API-Key": self.admin_key}
        )
        assert response.status_code == 200, response.text


@pytest.fixture
def make_harness(corpus):
    def factory(
        seeded: bool = True,
        guardrails: GuardrailConfig | None = None,
        clock=None,
        **config_overrides,
    ) -> Harness:
        config = ServerConfig(
            admin_api_key=ADMIN_KEY,
            guardrails=guardrails or relaxed_guardrails(),
            **config_overrides,
        )
        harness = Harness(config, ScpStore(), clock=clock)
        if seeded:
            harness.seed(corpus)
        return harness

    return factory


@pytest.fixture
def harness(make_harness):
    return make_harness()
