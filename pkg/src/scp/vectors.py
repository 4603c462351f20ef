"""Exact cosine-similarity vector index with metadata filters.

Small-corpus design: queries are a full scan over all entries, so results
equal a brute-force oracle by construction. Ties break by content_id
ascending for reproducible orderings.
"""

from dataclasses import dataclass

import numpy as np


@dataclass
class VectorEntry:
    embedding: np.ndarray
    creator_id: str
    content_id: str
    vertical: str
    platform: str

    @property
    def metadata(self) -> dict[str, str]:
        return {
            "creator_id": self.creator_id,
            "content_id": self.content_id,
            "vertical": self.vertical,
            "platform": self.platform,
        }


@dataclass
class VectorMatch:
    score: float
    creator_id: str
    content_id: str
    vertical: str
    platform: str


class VectorIndex:
    def __init__(self):
        self._entries: dict[str, VectorEntry] = {}

    def __len__(self) -> int:
        return len(self._entries)

    def upsert(self, entry: VectorEntry) -> None:
        norm = float(np.linalg.norm(entry.embedding))
        if norm > 0.0 and abs(norm - 1.0) > 1e-9:
            entry.embedding = entry.embedding / norm
        self._entries[entry.content_id] = entry

    def entries(self) -> list[VectorEntry]:
        return list(self._entries.values())

    def query(
        self,
        query_vec: np.ndarray,
        n: int | None,
        vertical: str | None = None,
        platform: str | None = None,
    ) -> list[VectorMatch]:
        """Top-n entries by cosine similarity among those passing all filters.

        n=None returns the full ranking. Zero-vector entries are excluded
        from ranking. A zero query vector scores 0 against everything, so
        ordering falls back to the content_id tie-break.
        """
        if n is not None and n < 1:
            raise ValueError("n must be >= 1")
        qnorm = float(np.linalg.norm(query_vec))
        query_is_zero = qnorm == 0.0
        unit_query = query_vec if query_is_zero else query_vec / qnorm
        scored: list[VectorMatch] = []
        for entry in self._entries.values():
            if vertical is not None and entry.vertical != vertical:
                continue
            if platform is not None and entry.platform != platform:
                continue
            if float(np.linalg.norm(entry.embedding)) == 0.0:
                continue
            score = 0.0 if query_is_zero else float(np.dot(unit_query, entry.embedding))
            scored.append(
                VectorMatch(
                    score=score,
                    creator_id=entry.creator_id,
                    content_id=entry.content_id,
                    vertical=entry.vertical,
                    platform=entry.platform,
                )
            )
        scored.sort(key=lambda m: (-m.score, m.content_id))
        return scored if n is None else scored[:n]
