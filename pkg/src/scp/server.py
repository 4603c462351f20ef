"""REST transport: the six protocol methods plus the admin surface.

Method endpoints are POST (every call carries a body and has the side
effect of license + audit); report endpoints are GET and run outside the
consumer lifecycle (no license is issued for them). Error bodies never
contain a data section.

Status mapping: 403 auth/role, 404 unknown entity or method path,
422 malformed params, 429 guardrail denial, 451 consent revoked,
500 license/audit persistence failure.
"""

import logging
from typing import Any

from fastapi import Body, FastAPI, Header, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from scp.config import ServerConfig
from scp.errors import (
    AuthError,
    ForbiddenError,
    GuardrailDenied,
    NotFoundError,
    ScpError,
    ValidationError,
)
from scp.guardrails import GuardrailEngine
from scp.lifecycle import LifecycleExecutor
from scp.methods import METHOD_NAMES, MethodContext
from scp.models import Clock, Consumer, parse_iso, utc_now
from scp.revenue import build_revenue_report, export_transparency_summary
from scp.store import ScpStore

logger = logging.getLogger("scp.server")

API_KEY_HEADER = "X-SCP-API-Key"


def revoke_creator_consent(store: ScpStore, creator_id: str) -> dict[str, Any]:
    """Revoke consent: kill every active license tied to the creator.

    Affected consumers are identified from the audit trail: the distinct
    holders of the licenses this call revoked.
    """
    creator = store.get_creator(creator_id)
    revoked = 0
    affected: set[str] = set()
    for record in store.audit.records():
        if creator_id not in record.creator_ids or not record.license_id:
            continue
        if store.licenses.revoke(record.license_id, reason="creator_revoked"):
            revoked += 1
            envelope = store.licenses.get(record.license_id)
            affected.add(envelope.consumer_id)
    creator.consent_status = "revoked"
    return {
        "creator_id": creator_id,
        "revoked_license_count": revoked,
        "affected_consumers": sorted(affected),
    }


def create_app(
    config: ServerConfig | None = None,
    store: ScpStore | None = None,
    clock: Clock = utc_now,
) -> FastAPI:
    config = config or ServerConfig()
    store = store or ScpStore()

    if config.seed_data_path:
        import json
        from pathlib import Path

        store.load_seed_document(json.loads(Path(config.seed_data_path).read_text()))

    if store.authenticate(config.admin_api_key) is None:
        store.register_consumer(
            name="admin",
            consumer_type="enterprise",
            organization_id="scp-operator",
            role="admin",
            api_key=config.admin_api_key,
        )

    guardrails = GuardrailEngine(store, config.guardrails, clock=clock)
    executor = LifecycleExecutor(
        store=store,
        clock=clock,
        context=MethodContext(clock=clock, scoring=config.scoring),
        guardrail=guardrails.enforce,
        default_terms=config.default_license_terms,
    )

    app = FastAPI(title="SCP Server", version="1.0", docs_url="/docs")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.store = store
    app.state.config = config
    app.state.executor = executor
    app.state.guardrails = guardrails

    @app.exception_handler(ScpError)
    async def scp_error_handler(request: Request, exc: ScpError):
        body: dict[str, Any] = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        if isinstance(exc, GuardrailDenied):
            body["error"]["reason"] = exc.reason
        return JSONResponse(status_code=exc.http_status, content=body)

    def authenticate(api_key: str | None) -> Consumer:
        consumer = store.authenticate(api_key)
        if consumer is None:
            raise AuthError("missing or unknown API key")
        return consumer

    def require_admin(api_key: str | None) -> Consumer:
        consumer = authenticate(api_key)
        if consumer.role != "admin":
            raise ForbiddenError("admin key required")
        return consumer

    def parse_window(from_ts: str, to_ts: str):
        try:
            return parse_iso(from_ts), parse_iso(to_ts)
        except (ValueError, TypeError) as exc:
            raise ValidationError(f"bad report window: {exc}") from exc

    def require_console_or_admin(api_key: str | None, creator_id: str) -> Consumer:
        consumer = authenticate(api_key)
        if consumer.role == "admin":
            return consumer
        if consumer.role == "creator_console" and consumer.creator_id == creator_id:
            return consumer
        raise ForbiddenError("requires this creator's console key or an admin key")

    def make_method_endpoint(method_name: str):
        def endpoint(
            body: dict[str, Any] = Body(default_factory=dict),
            api_key: str | None = Header(default=None, alias=API_KEY_HEADER),
        ):
            return executor.execute(api_key, method_name, body)

        endpoint.__name__ = method_name
        return endpoint

    for name in METHOD_NAMES:
        app.post(f"/scp/v1/{name}")(make_method_endpoint(name))

    @app.get("/scp/v1/health")
    def health():
        return {"status": "ok", "protocol": "SCP/1.0"}

    @app.post("/scp/v1/admin/consumers")
    def register_consumer(
        body: dict[str, Any] = Body(...),
        api_key: str | None = Header(default=None, alias=API_KEY_HEADER),
    ):
        require_admin(api_key)
        for field in ("name", "consumer_type", "organization_id"):
            if not body.get(field):
                raise ValidationError(f"{field} is required")
        consumer, key = store.register_consumer(
            name=body["name"],
            consumer_type=body["consumer_type"],
            organization_id=body["organization_id"],
            role=body.get("role", "consumer"),
            creator_id=body.get("creator_id"),
        )
        return {
            "consumer_id": consumer.consumer_id,
            "name": consumer.name,
            "consumer_type": consumer.consumer_type,
            "organization_id": consumer.organization_id,
            "role": consumer.role,
            "creator_id": consumer.creator_id,
            "api_key": key,
        }

    @app.post("/scp/v1/admin/creators")
    def seed_creators(
        body: dict[str, Any] = Body(...),
        api_key: str | None = Header(default=None, alias=API_KEY_HEADER),
    ):
        require_admin(api_key)
        counts = store.load_seed_document(body)
        return {"loaded": counts}

    @app.post("/scp/v1/creators/{creator_id}/revoke")
    def revoke_consent(
        creator_id: str,
        api_key: str | None = Header(default=None, alias=API_KEY_HEADER),
    ):
        require_console_or_admin(api_key, creator_id)
        return revoke_creator_consent(store, creator_id)

    @app.get("/scp/v1/creators/{creator_id}/alerts")
    def creator_alerts(
        creator_id: str,
        api_key: str | None = Header(default=None, alias=API_KEY_HEADER),
    ):
        require_console_or_admin(api_key, creator_id)
        store.get_creator(creator_id)
        alerts = [a for a in store.alerts if a.get("creator_id") == creator_id]
        return {"creator_id": creator_id, "alerts": alerts}

    @app.get("/scp/v1/reports/revenue")
    def revenue_report(
        api_key: str | None = Header(default=None, alias=API_KEY_HEADER),
        from_ts: str = Query(alias="from"),
        to_ts: str = Query(alias="to"),
        total: float = Query(ge=0),
    ):
        consumer = authenticate(api_key)
        if consumer.role not in ("admin", "creator_console"):
            raise ForbiddenError("reports require an admin or creator console key")
        period = parse_window(from_ts, to_ts)
        return build_revenue_report(
            store.audit.records(),
            total,
            period,
            weights=config.method_weights,
            split_credit=config.split_credit,
        )

    @app.get("/scp/v1/reports/transparency")
    def transparency_report(
        api_key: str | None = Header(default=None, alias=API_KEY_HEADER),
        from_ts: str = Query(alias="from"),
        to_ts: str = Query(alias="to"),
    ):
        require_admin(api_key)
        period = parse_window(from_ts, to_ts)
        return export_transparency_summary(store.audit.records(), store.licenses, period)

    return app
