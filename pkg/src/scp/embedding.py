"""Deterministic hash-based text embeddings.

Signed feature hashing over a lowercase bag of words: each token is
mapped to a dimension and a sign by two domain-separated FNV-1a 64-bit
hashes, counts are accumulated and the vector is L2-normalized. The hash
is fixed and documented so independent implementations agree:

    index(token) = fnv1a64(b"idx:" + utf8(token)) mod D
    sign(token)  = +1 if fnv1a64(b"sgn:" + utf8(token)) is even else -1

Empty or token-free text embeds to the zero vector, which indexes must
exclude from similarity ranking.
"""

import re

import numpy as np

DIMENSION = 256

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_TOKEN_RE = re.compile(r"[0-9a-z]+")


def fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for byte in data:
        h ^= byte
        h = (h * _FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


def tokenize(text: str) -> list[str]:
    return _TOKEN_RE.findall(text.lower())


def embed(text: str) -> np.ndarray:
    """Embed text into a unit vector of DIMENSION dims (zero if no tokens)."""
    vec = np.zeros(DIMENSION, dtype=np.float64)
    for token in tokenize(text):
        raw = token.encode("utf-8")
        idx = fnv1a64(b"idx:" + raw) % DIMENSION
        sign = 1.0 if fnv1a64(b"sgn:" + raw) % 2 == 0 else -1.0
        vec[idx] += sign
    norm = np.linalg.norm(vec)
    if norm > 0.0:
        vec /= norm
    return vec


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    """Cosine similarity; zero vectors score 0 against everything."""
    na = np.linalg.norm(a)
    nb = np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        return 0.0
    return float(np.dot(a, b) / (na * nb))
