#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

from __future__ import annotations

from hashtag_drift.community import FrozenGraph, Partition
from hashtag_drift.registry import EXPORTER_REGISTRY

__all__ = ["BaseExporter", "export_graph"]


class BaseExporter:
    """Base for all graph exporters. Internal use only.

    The .export() method must be overridden and return the whole document as a string. Nodes are emitted in
        lexicographic order and edges as sorted (u, v) pairs so re-exporting the same graph gives identical bytes.

    Attributes:
        extension (str): File extension used when the document is written next to a snapshot
    """
    extension = ""

    def export(self, graph, partition=None):
        raise NotImplementedError("This is the base exporter intended for internal use only.")

    @staticmethod
    def community_of(graph, partition):
        """{node: community index}, -1 for nodes outside the partition"""
        index = partition.community_index() if partition is not None else {}
        return {n: index.get(n, -1) for n in sorted(graph.nodes)}


def export_graph(graph: FrozenGraph, partition: Partition = None, fmt="json", **options) -> str:
    """Serialise ``graph`` with the exporter registered as ``fmt`` (graphml, dot or json)"""
    return EXPORTER_REGISTRY.create(fmt, **options).export(graph, partition)
