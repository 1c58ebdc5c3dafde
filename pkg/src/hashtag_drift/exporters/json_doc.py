#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

from __future__ import annotations

import json

from hashtag_drift.exporters.default import BaseExporter
from hashtag_drift.registry import EXPORTER_REGISTRY


@EXPORTER_REGISTRY.register("json")
class JsonGraphExporter(BaseExporter):
    """``{"nodes": [{"tag", "community"}], "edges": [[u, v]]}``

    Args:
        indent (int): Indentation of the document, None for a single line
    """
    extension = ".json"

    def __init__(self, indent=None):
        self.indent = indent

    def export(self, graph, partition=None):
        doc = {
            "nodes": [{"tag": tag, "community": c} for tag, c in self.community_of(graph, partition).items()],
            "edges": [[u, v] for u, v in sorted(graph.edges)],
        }
        return json.dumps(doc, indent=self.indent, ensure_ascii=False) + "\n"
