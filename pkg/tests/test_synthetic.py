import hashlib
from datetime import datetime, timezone

import pytest

from hashtag_drift.analytics import drift_report
from hashtag_drift.engine import StreamEngine
from hashtag_drift.graph import GraphConfig
from hashtag_drift.ingest import run_stream
from hashtag_drift.synthetic import Phase, SynthConfig, default_phases, generate_synthetic, record_to_json


def _digest(cfg):
    h = hashlib.sha256()
    for record in generate_synthetic(cfg):
        h.update(record_to_json(record).encode("utf-8"))
    return h.hexdigest()


def test_equal_seeds_equal_streams():
    cfg = SynthConfig(seed=42, phases=default_phases(500))
    assert _digest(cfg) == _digest(SynthConfig(seed=42, phases=default_phases(500)))
    assert _digest(cfg) != _digest(SynthConfig(seed=43, phases=default_phases(500)))


def test_stream_shape():
    cfg = SynthConfig(phases=default_phases(300, n_phases=3), min_tags=2, max_tags=4)
    records = list(generate_synthetic(cfg))
    assert len(records) == 300
    assert all(a.timestamp <= b.timestamp for a, b in zip(records, records[1:]))
    for r in records:
        assert r.hashtags[0] == "#MyBodyMyChoice"
        assert 2 <= len(r.hashtags) - 1 <= 4
        assert len(set(r.hashtags)) == len(r.hashtags)


def test_default_phases():
    phases = default_phases(10, n_phases=3, pools_per_phase=2, pool_size=4)
    assert [p.posts for p in phases] == [3, 3, 4]
    assert phases[1].pools[0] == ("p1t0n0", "p1t0n1", "p1t0n2", "p1t0n3")
    assert default_phases(0) == ()
    assert list(generate_synthetic(SynthConfig(phases=()))) == []


@pytest.mark.parametrize("kwargs", [dict(posts=0, pools=(("a",),)), dict(posts=1, pools=()),
                                    dict(posts=1, pools=(("a",),), intensity=1.5)])
def test_phase_validation(kwargs):
    with pytest.raises(ValueError):
        Phase(**kwargs)


def test_always_co_posted_pair():
    cfg = SynthConfig(phases=(Phase(10, (("alpha", "beta"),)),), min_tags=2, max_tags=2)
    engine = StreamEngine(GraphConfig(min_freq=5))
    run_stream(generate_synthetic(cfg), engine)
    stats = engine.graph.stats()
    assert (stats.node_count, stats.edge_count) == (2, 1)


def _yearly_drift(n_phases):
    cfg = SynthConfig(seed=42, phases=default_phases(730, n_phases=n_phases, pools_per_phase=1, intensity=1.0),
                      min_tags=3, max_tags=3, start=datetime(2018, 1, 1, tzinfo=timezone.utc), step_seconds=86400)
    engine = StreamEngine(GraphConfig(window_size=6, min_freq=5))
    run_stream(generate_synthetic(cfg), engine)
    assert [s.period for s in engine.snapshots] == [2018, 2019]
    return drift_report(engine.snapshots)


def test_disjoint_phases_have_no_overlap():
    (drift,) = _yearly_drift(2)
    assert drift.largest_overlap == 0.0
    assert drift.largest_sizes == (6, 6)


def test_single_phase_keeps_its_community():
    (drift,) = _yearly_drift(1)
    assert drift.largest_overlap >= 0.8
