"""Deterministic canonical serialization and content fingerprinting.

Content fingerprints are SHA-256 over a canonical byte rendering of the
payload, so two parties agree on a fingerprint iff they agree on bytes.
Canonical form: UTF-8, object keys sorted by code point, no insignificant
whitespace, integers rendered plainly, floats in Python's shortest
round-trip form. Only JSON-representable values are accepted (maps with
string keys, lists, strings, booleans, integers, finite floats, null).
"""

import hashlib
import json
import math
from typing import Any

from scp.errors import CanonicalizationError


def _validate(value: Any, path: str) -> None:
    if value is None or isinstance(value, (bool, str)):
        return
    if isinstance(value, int):
        return
    if isinstance(value, float):
        if not math.isfinite(value):
            raise CanonicalizationError(f"non-finite number at {path}: {value!r}")
        return
    if isinstance(value, list):
        for i, item in enumerate(value):
            _validate(item, f"{path}[{i}]")
        return
    if isinstance(value, dict):
        for key in value:
            if not isinstance(key, str):
                raise CanonicalizationError(f"non-string map key at {path}: {key!r}")
            _validate(value[key], f"{path}.{key}")
        return
    raise CanonicalizationError(f"unsupported type at {path}: {type(value).__name__}")


def canonicalize(value: Any) -> bytes:
    """Render a structured payload as canonical UTF-8 bytes.

    Equal payloads (up to map ordering) always yield identical bytes;
    unsupported types or non-finite numbers raise CanonicalizationError.
    """
    _validate(value, "$")
    text = json.dumps(
        value,
        sort_keys=True,
        separators=(",", ":"),
        ensure_ascii=False,
        allow_nan=False,
    )
    return text.encode("utf-8")


def fingerprint(data: Any) -> str:
    """Lowercase hex SHA-256 of the canonical serialization of ``data``."""
    return hashlib.sha256(canonicalize(data)).hexdigest()


def fingerprint_bytes(raw: bytes) -> str:
    """Lowercase hex SHA-256 of raw bytes (content bodies, API keys)."""
    return hashlib.sha256(raw).hexdigest()
