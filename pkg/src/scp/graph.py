"""Directed labeled knowledge graph over creators, accounts, and content.

Node keys are (kind, id) tuples; edges carry a ``kind`` label. The graph
mirrors the structured store after every mutation and serves enrichment
traversals (creator -> platform accounts, content -> topics).
"""

import networkx as nx

HAS_ACCOUNT = "HAS_ACCOUNT"
PUBLISHED = "PUBLISHED"
IN_VERTICAL = "IN_VERTICAL"
ABOUT_TOPIC = "ABOUT_TOPIC"


class KnowledgeGraph:
    def __init__(self):
        self._g = nx.MultiDiGraph()

    @property
    def nx_graph(self) -> nx.MultiDiGraph:
        return self._g

    def add_creator(self, creator_id: str, verticals: list[str]) -> None:
        self._g.add_node(("creator", creator_id), kind="Creator")
        for vertical in verticals:
            self._g.add_node(("vertical", vertical), kind="Vertical")
            self._ensure_edge(("creator", creator_id), ("vertical", vertical), IN_VERTICAL)

    def add_account(self, creator_id: str, platform: str) -> None:
        account = ("account", f"{creator_id}/{platform}")
        self._g.add_node(account, kind="PlatformAccount", creator_id=creator_id, platform=platform)
        self._ensure_edge(("creator", creator_id), account, HAS_ACCOUNT)

    def add_content(self, content_id: str, creator_id: str, platform: str, topics: list[str]) -> None:
        account = ("account", f"{creator_id}/{platform}")
        node = ("content", content_id)
        self._g.add_node(node, kind="ContentItem", creator_id=creator_id)
        self._ensure_edge(account, node, PUBLISHED)
        for topic in topics:
            self._g.add_node(("topic", topic), kind="Topic")
            self._ensure_edge(node, ("topic", topic), ABOUT_TOPIC)

    def _ensure_edge(self, src, dst, kind: str) -> None:
        existing = self._g.get_edge_data(src, dst) or {}
        if any(d.get("kind") == kind for d in existing.values()):
            return
        self._g.add_edge(src, dst, kind=kind)

    def creator_platforms(self, creator_id: str) -> list[str]:
        """Platforms the creator has accounts on, sorted by platform name."""
        platforms = []
        for _, dst, data in self._g.out_edges(("creator", creator_id), data=True):
            if data.get("kind") == HAS_ACCOUNT:
                platforms.append(self._g.nodes[dst]["platform"])
        return sorted(platforms)

    def published_edge_count(self, content_id: str) -> int:
        node = ("content", content_id)
        if node not in self._g:
            return 0
        count = 0
        for _, _, data in self._g.in_edges(node, data=True):
            if data.get("kind") == PUBLISHED:
                count += 1
        return count

    def content_topics(self, content_id: str) -> list[str]:
        topics = []
        for _, dst, data in self._g.out_edges(("content", content_id), data=True):
            if data.get("kind") == ABOUT_TOPIC:
                topics.append(dst[1])
        return sorted(topics)
