"""Five-phase request lifecycle: authenticate, execute, license, audit, respond.

Any phase failure prevents all later phases and prevents data release:
  - Phase 1 failure (auth/role) aborts before anything is written.
  - Phase 2 consent denials are audited as attempts, then surfaced (451).
  - Guardrail denials (checked between Phases 2 and 3, once the response
    size is known but before anything is persisted) are audited with
    response_size_bytes=0 and surfaced (429).
  - Phase 4 (audit) failures revoke the Phase-3 license with reason
    "aborted" rather than deleting it, and fail the request (500).

Denied-but-audited attempts carry a denial marker inside the params
digest: digest = fingerprint({"params": ..., "denied": reason}); their
license_id is the empty string. Successful requests digest the raw
params and reference the issued license.
"""

from dataclasses import dataclass, field
from typing import Any, Callable

from scp import PROTOCOL_VERSION
from scp.canonical import canonicalize, fingerprint
from scp.errors import AuthError, ConsentRevokedError, GuardrailDenied
from scp.methods import HANDLERS, MethodContext, authorize
from scp.models import Attribution, Clock, Consumer, LicenseTerms, utc_now
from scp.store import ScpStore

GuardrailHook = Callable[[Consumer, str, list[str], int], None]


@dataclass
class LifecycleExecutor:
    store: ScpStore
    clock: Clock = utc_now
    context: MethodContext = field(default_factory=MethodContext)
    guardrail: GuardrailHook | None = None
    default_terms: LicenseTerms = field(default_factory=LicenseTerms)

    def __post_init__(self):
        self.context.clock = self.clock

    def execute(self, api_key: str | None, method: str, params: dict[str, Any]) -> dict[str, Any]:
        """Run one request through all five phases; returns the wire envelope."""
        # Phase 1: authenticate and authorize. Failures are not audited --
        # without a resolved identity there is nothing truthful to record.
        consumer = self.store.authenticate(api_key)
        if consumer is None:
            raise AuthError("missing or unknown API key")
        authorize(consumer, method, params)
        handler = HANDLERS[method]

        # Phase 2: execute the method against the data layer.
        try:
            data, creator_ids, content_ids = handler(self.store, params, self.context)
        except ConsentRevokedError as denial:
            self._audit_denied_attempt(
                consumer, method, params, denial.creator_ids, "consent_revoked"
            )
            raise

        response_size = len(canonicalize(data))

        # Guardrails run once sizes are known and before anything is released.
        if self.guardrail is not None:
            try:
                self.guardrail(consumer, method, creator_ids, response_size)
            except GuardrailDenied as denial:
                self._audit_denied_attempt(consumer, method, params, creator_ids, denial.reason)
                raise

        # Phase 3: license generation (fingerprint of the data payload).
        license_envelope = self.store.licenses.issue(
            consumer.consumer_id, data, self.default_terms, self.clock()
        )

        # Phase 4: audit log (blocking). On failure the license is revoked,
        # never deleted, and no envelope is released.
        try:
            log_id = self.store.audit.append(
                timestamp=self.clock(),
                consumer_id=consumer.consumer_id,
                method=method,
                params_digest=fingerprint(params),
                creator_ids=creator_ids,
                content_ids=content_ids,
                response_size_bytes=response_size,
                license_id=license_envelope.license_id,
            )
        except Exception:
            self.store.licenses.revoke(license_envelope.license_id, reason="aborted")
            raise

        # Phase 5: the response envelope.
        attribution = Attribution(creator_ids=creator_ids, content_ids=content_ids)
        return {
            "protocol": PROTOCOL_VERSION,
            "method": method,
            "data": data,
            "attribution": attribution.to_wire(),
            "license": license_envelope.to_wire(),
            "audit_log_id": log_id,
        }

    def _audit_denied_attempt(
        self,
        consumer: Consumer,
        method: str,
        params: dict[str, Any],
        creator_ids: list[str],
        reason: str,
    ) -> None:
        self.store.audit.append(
            timestamp=self.clock(),
            consumer_id=consumer.consumer_id,
            method=method,
            params_digest=fingerprint({"params": params, "denied": reason}),
            creator_ids=creator_ids,
            content_ids=[],
            response_size_bytes=0,
            license_id="",
        )
