"""SCP/1.0: attribution-aware access to creator content.

Every response is an atomic envelope of data + attribution + license +
audit reference. This package provides the protocol core (canonical
hashing, license issuance, hash-chained audit log, five-phase request
lifecycle), the dual-store data layer, the six v1.0 methods, revenue
attribution, the REST server, a JSON-RPC tool adapter, and tooling
(synthetic data generator, client CLI, latency benchmark).
"""

PROTOCOL_VERSION = "SCP/1.0"

from scp.canonical import canonicalize, fingerprint
from scp.errors import (
    AuditWriteError,
    AuthError,
    CanonicalizationError,
    ConsentRevokedError,
    ForbiddenError,
    GuardrailDenied,
    IntegrityError,
    LicenseStoreError,
    NotFoundError,
    ScpError,
    UnknownMethodError,
    ValidationError,
)

__all__ = [
    "PROTOCOL_VERSION",
    "canonicalize",
    "fingerprint",
    "ScpError",
    "AuthError",
    "ForbiddenError",
    "NotFoundError",
    "ValidationError",
    "ConsentRevokedError",
    "GuardrailDenied",
    "IntegrityError",
    "CanonicalizationError",
    "LicenseStoreError",
    "AuditWriteError",
    "UnknownMethodError",
]
