#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

# Import all the exporters here so that they're all registered
from .default import BaseExporter, export_graph
from .graphml import GraphMLExporter
from .dot import DotExporter
from .json_doc import JsonGraphExporter
from .snapshot import snapshot_to_json, snapshot_to_dict, drift_to_dict, drift_report_to_json, report_to_json

__all__ = ["BaseExporter", "export_graph", "GraphMLExporter", "DotExporter", "JsonGraphExporter", "snapshot_to_json",
           "snapshot_to_dict", "drift_to_dict", "drift_report_to_json", "report_to_json"]
