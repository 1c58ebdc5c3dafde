import json

import networkx as nx
import pytest

from hashtag_drift.analytics import PeriodTally, build_snapshot
from hashtag_drift.community import FrozenGraph, Partition
from hashtag_drift.exporters import export_graph, report_to_json, snapshot_to_dict, snapshot_to_json
from hashtag_drift.exporters.dot import PALETTE, UNASSIGNED
from hashtag_drift.graph import GraphStats
from hashtag_drift.ingest import RunReport

FORMATS = ["graphml", "dot", "json"]


@pytest.mark.parametrize("fmt", FORMATS)
def test_empty_graph_documents(fmt):
    document = export_graph(FrozenGraph(), None, fmt)
    if fmt == "json":
        assert json.loads(document) == {"nodes": [], "edges": []}
    elif fmt == "graphml":
        assert nx.parse_graphml(document).number_of_nodes() == 0
    else:
        assert document.startswith("graph hashtags {")


@pytest.mark.parametrize("fmt", FORMATS)
def test_reexport_is_byte_identical(fmt, barbell):
    partition = Partition.of(["abc", "def"])
    assert export_graph(barbell, partition, fmt) == export_graph(FrozenGraph(barbell.nodes, barbell.edges),
                                                                 partition, fmt)


def test_dot_single_edge():
    document = export_graph(FrozenGraph.from_edges([("alpha", "beta")]), Partition.of(["alpha", "beta"]), "dot")
    assert document.count("--") == 1
    assert PALETTE[0] in document


def test_dot_unassigned_nodes():
    document = export_graph(FrozenGraph(frozenset(["alpha"])), None, "dot")
    assert UNASSIGNED in document


def test_graphml_community_attribute(barbell):
    document = export_graph(barbell, Partition.of(["abc", "def"]), "graphml")
    g = nx.parse_graphml(document)
    assert {n: d["community"] for n, d in g.nodes(data=True)} == dict(a=0, b=0, c=0, d=1, e=1, f=1)
    assert g.number_of_edges() == 7


def test_json_ordering():
    g = FrozenGraph.from_edges([("zeta", "alpha"), ("mid", "alpha")])
    doc = json.loads(export_graph(g, Partition.of([g.nodes]), "json"))
    assert [n["tag"] for n in doc["nodes"]] == ["alpha", "mid", "zeta"]
    assert doc["edges"] == [["alpha", "mid"], ["alpha", "zeta"]]


def _snapshot(graph):
    tally = PeriodTally(2018)
    tally.counts.update(prochoice=987, metoo=379)
    tally.posts = 1000
    return build_snapshot(2018, graph, tally)


def test_snapshot_to_json(barbell):
    text = snapshot_to_json(_snapshot(barbell))
    assert list(json.loads(text)) == ["period", "posts", "node_count", "edge_count", "pregraph_count",
                                      "modularity", "community_count", "top_communities", "top_tags"]
    doc = json.loads(text)
    assert doc["modularity"] == 0.357143
    assert [c["size"] for c in doc["top_communities"]] == [3, 3]
    assert doc["top_communities"][0]["members"] == ["a", "b", "c"]
    assert doc["top_tags"][0] == {"tag": "prochoice", "count": 987}
    assert text == snapshot_to_json(_snapshot(barbell))
    assert text.endswith("\n")


def test_snapshot_sizes_keep_their_order():
    edges = []
    for prefix, size in (("a", 5), ("b", 4), ("c", 2)):
        members = ["{}{}".format(prefix, i) for i in range(size)]
        edges += [(u, v) for i, u in enumerate(members) for v in members[i + 1:]]
    doc = snapshot_to_dict(_snapshot(FrozenGraph.from_edges(edges)))
    assert [c["size"] for c in doc["top_communities"]] == [5, 4, 2]


def test_empty_snapshot():
    doc = json.loads(snapshot_to_json(_snapshot(FrozenGraph())))
    assert doc["top_communities"] == []
    assert doc["node_count"] == 0


def test_report_to_json():
    doc = json.loads(report_to_json(RunReport(lines_read=3, posts_processed=2, skipped=1), GraphStats(1, 0, 2, 2),
                                    [], [], []))
    assert list(doc) == ["run", "graph", "volume", "peaks", "drift"]
    assert doc["run"]["skipped"] == 1
    assert doc["graph"] == {"node_count": 1, "edge_count": 0, "pregraph_count": 2, "post_seq": 2}
