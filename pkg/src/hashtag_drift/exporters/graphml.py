#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

from __future__ import annotations

import networkx as nx

from hashtag_drift.exporters.default import BaseExporter
from hashtag_drift.registry import EXPORTER_REGISTRY


@EXPORTER_REGISTRY.register("graphml")
class GraphMLExporter(BaseExporter):
    """GraphML document with an integer ``community`` attribute on every node"""
    extension = ".graphml"

    def export(self, graph, partition=None):
        g = nx.Graph(name="hashtags")
        for tag, community in self.community_of(graph, partition).items():
            g.add_node(tag, community=community)
        g.add_edges_from(sorted(graph.edges))
        return "\n".join(nx.generate_graphml(g)) + "\n"
