#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

"""JSON documents for snapshots, drift summaries and run reports. Keys are emitted in a fixed order."""

from __future__ import annotations

import json
from collections import OrderedDict

__all__ = ["snapshot_to_dict", "snapshot_to_json", "drift_to_dict", "drift_report_to_json", "report_to_json", "rounded"]


def rounded(value, places=6):
    """Fixed-precision float for golden files (-0.0 becomes 0.0)"""
    return float("{:.{}f}".format(value, places)) + 0.0


def _dumps(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def snapshot_to_dict(s):
    return OrderedDict([
        ("period", s.period),
        ("posts", s.posts),
        ("node_count", s.node_count),
        ("edge_count", s.edge_count),
        ("pregraph_count", s.pregraph_count),
        ("modularity", rounded(s.best.modularity)),
        ("community_count", len(s.best.partition)),
        ("top_communities", [OrderedDict([("size", len(c)), ("members", list(c))]) for c in s.top_communities]),
        ("top_tags", [OrderedDict([("tag", t), ("count", n)]) for t, n in s.top_tags]),
    ])


def snapshot_to_json(s):
    return _dumps(snapshot_to_dict(s))


def drift_to_dict(d):
    return OrderedDict([
        ("from", d.from_period),
        ("to", d.to_period),
        ("largest_overlap", rounded(d.largest_overlap)),
        ("new_tags", d.new_tags),
        ("vanished_tags", d.vanished_tags),
        ("largest_sizes", list(d.largest_sizes)),
        ("community_counts", list(d.community_counts)),
        ("modularity", [rounded(q) for q in d.modularity]),
    ])


def _month_to_dict(m):
    return OrderedDict([
        ("month", m.month),
        ("posts", m.posts),
        ("top_tags", [OrderedDict([("tag", t), ("count", n)]) for t, n in m.top_tags]),
    ])


def report_to_json(report, graph_stats, months, peaks, drift):
    """Run report: counters, final graph size, monthly volume, peak months and drift summaries"""
    return _dumps(OrderedDict([
        ("run", report.as_dict()),
        ("graph", OrderedDict(graph_stats._asdict())),
        ("volume", [OrderedDict([("month", m.month), ("posts", m.posts)]) for m in months]),
        ("peaks", [_month_to_dict(m) for m in peaks]),
        ("drift", [drift_to_dict(d) for d in drift]),
    ]))


def drift_report_to_json(drift):
    return _dumps([drift_to_dict(d) for d in drift])
