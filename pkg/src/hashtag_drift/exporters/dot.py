#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

from __future__ import annotations

import pydot

from hashtag_drift.exporters.default import BaseExporter
from hashtag_drift.registry import EXPORTER_REGISTRY

# Cycled by community index; colours carry no meaning across snapshots
PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
           "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78")
UNASSIGNED = "#ffffff"


@EXPORTER_REGISTRY.register("dot")
class DotExporter(BaseExporter):
    """Undirected DOT graph, nodes filled with the colour of their community

    Args:
        palette (tuple): Colours cycled by community index
    """
    extension = ".dot"

    def __init__(self, palette=PALETTE):
        self.palette = tuple(palette)

    def export(self, graph, partition=None):
        dot = pydot.Dot("hashtags", graph_type="graph")
        for tag, community in self.community_of(graph, partition).items():
            colour = self.palette[community % len(self.palette)] if community >= 0 else UNASSIGNED
            dot.add_node(pydot.Node(tag, style="filled", fillcolor=colour, community=str(community)))
        for u, v in sorted(graph.edges):
            dot.add_edge(pydot.Edge(u, v))
        return dot.to_string()
