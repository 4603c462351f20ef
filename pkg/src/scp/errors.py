"""Exception hierarchy shared across the protocol stack.

Each error maps to one transport status code (see ``scp.server``); the
lifecycle executor relies on these types to decide which phases may run
and whether an attempt still gets audited.
"""


class ScpError(Exception):
    """Base class for all protocol-level errors."""

    http_status = 500


class CanonicalizationError(ScpError):
    """Payload contains a value canonical serialization cannot represent."""

    http_status = 422


class AuthError(ScpError):
    """Missing or unknown API key. Identity unknown, nothing is audited."""

    http_status = 403


class ForbiddenError(ScpError):
    """Authenticated key lacks the role required for the operation."""

    http_status = 403


class NotFoundError(ScpError):
    """Referenced entity does not exist."""

    http_status = 404


class ValidationError(ScpError):
    """Malformed request parameters."""

    http_status = 422


class ConsentRevokedError(ScpError):
    """Creator has revoked consent; the attempt is denied but audited."""

    http_status = 451

    def __init__(self, message: str, creator_ids: list[str] | None = None):
        super().__init__(message)
        self.creator_ids = creator_ids or []


class GuardrailDenied(ScpError):
    """Request denied by a rate limit or access budget; attempt is audited."""

    http_status = 429

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class LicenseStoreError(ScpError):
    """License persistence failed; the whole request must fail."""

    http_status = 500


class AuditWriteError(ScpError):
    """Audit append failed; no data may be released."""

    http_status = 500


class IntegrityError(ScpError):
    """Store mutation violates referential integrity or uniqueness."""

    http_status = 422


class UnknownMethodError(ScpError):
    """An audit record names a method with no configured revenue weight."""

    http_status = 422
