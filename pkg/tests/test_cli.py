import io
import json
import os
import sys

import pytest

from hashtag_drift.cli import main


def _write_posts(path, years=(2018, 2019)):
    with open(path, "w", encoding="utf-8") as fh:
        for year in years:
            for day in range(1, 29):
                tags = ["#MyBodyMyChoice", "#Topic{}".format(year), "#Shared", "#Day{}".format(day % 4)]
                fh.write(json.dumps({"timestamp": "{}-02-{:02d}T12:00:00Z".format(year, day), "hashtags": tags}))
                fh.write("\n")
    return str(path)


def _read_dir(path):
    return {name: (path / name).read_bytes() for name in sorted(os.listdir(path))}


def test_run_writes_snapshots_and_report(tmp_path):
    source = _write_posts(tmp_path / "posts.jsonl")
    out = tmp_path / "out"
    assert main(["run", "--input", source, "--out", str(out)]) == 0
    assert sorted(os.listdir(out)) == ["drift.json", "report.json", "snapshot-2018.json", "snapshot-2019.json"]
    report = json.loads((out / "report.json").read_text(encoding="utf-8"))
    assert report["run"]["posts_processed"] == 56
    assert report["run"]["snapshots"] == 2
    assert [m["month"] for m in report["volume"]] == ["2018-02", "2019-02"]
    snapshot = json.loads((out / "snapshot-2018.json").read_text(encoding="utf-8"))
    assert snapshot["top_tags"][0] == {"tag": "shared", "count": 28}
    assert len(json.loads((out / "drift.json").read_text(encoding="utf-8"))) == 1


def test_run_skips_undecodable_line(tmp_path):
    source = _write_posts(tmp_path / "posts.jsonl", years=(2018,))
    with open(source, "ab") as fh:
        fh.write(b'{"timestamp": "2018-03-01T00:00:00Z", "text": "\xff #Shared"}\n')
    out = tmp_path / "out"
    assert main(["run", "--input", source, "--out", str(out)]) == 0
    report = json.loads((out / "report.json").read_text(encoding="utf-8"))
    assert report["run"]["posts_processed"] == 28
    assert report["run"]["malformed"] == 1


def test_run_window_one(tmp_path):
    source = _write_posts(tmp_path / "posts.jsonl")
    out = tmp_path / "out"
    assert main(["run", "--input", source, "--out", str(out), "--window", "1"]) == 0
    for name in ("snapshot-2018.json", "snapshot-2019.json"):
        assert json.loads((out / name).read_text(encoding="utf-8"))["node_count"] <= 1


def test_run_window_from_environment(tmp_path, monkeypatch):
    source = _write_posts(tmp_path / "posts.jsonl")
    monkeypatch.setenv("HASHDRIFT_WINDOW_SIZE", "1")
    assert main(["run", "--input", source, "--out", str(tmp_path / "env")]) == 0
    assert json.loads((tmp_path / "env" / "snapshot-2019.json").read_text(encoding="utf-8"))["node_count"] <= 1
    assert main(["run", "--input", source, "--out", str(tmp_path / "flag"), "--window", "200"]) == 0
    assert json.loads((tmp_path / "flag" / "snapshot-2019.json").read_text(encoding="utf-8"))["node_count"] > 1


def test_run_exports(tmp_path):
    source = _write_posts(tmp_path / "posts.jsonl", years=(2018,))
    out = tmp_path / "out"
    assert main(["run", "--input", source, "--out", str(out), "--export", "graphml,dot,json"]) == 0
    assert {"graph-2018.graphml", "graph-2018.dot", "graph-2018.json"} <= set(os.listdir(out))


def test_run_missing_input(tmp_path):
    assert main(["run", "--input", str(tmp_path / "absent.jsonl"), "--out", str(tmp_path / "out")]) == 1


@pytest.mark.parametrize("argv", [["run", "--window", "zero"], ["run", "--window", "0"], ["run", "--cadence", "day"],
                                  ["run", "--export", "png"], ["synth", "--max-tags", "1", "--min-tags", "2"],
                                  ["synth", "--start", "soon"], ["unknown"]])
def test_bad_flags_exit_2(argv):
    with pytest.raises(SystemExit) as e:
        main(argv)
    assert e.value.code == 2


def test_synth_is_deterministic(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert main(["synth", "--seed", "42", "--posts", "100", "--output", str(a)]) == 0
    assert main(["synth", "--seed", "42", "--posts", "100", "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert len(a.read_text(encoding="utf-8").splitlines()) == 100


def test_synth_zero_posts(tmp_path, capsys):
    assert main(["synth", "--posts", "0"]) == 0
    assert capsys.readouterr().out == ""


def test_synth_piped_into_run(tmp_path, capsys, monkeypatch):
    assert main(["synth", "--seed", "7", "--posts", "400"]) == 0
    stream = capsys.readouterr().out
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(stream.encode("utf-8")), encoding="utf-8"))
    out = tmp_path / "out"
    assert main(["run", "--input", "-", "--out", str(out)]) == 0
    assert any(name.startswith("snapshot-") for name in os.listdir(out))


def _pipeline(tmp_path, name, posts):
    source = tmp_path / "{}.jsonl".format(name)
    out = tmp_path / name
    assert main(["synth", "--seed", "42", "--posts", str(posts), "--step", "3600", "--output", str(source)]) == 0
    assert main(["run", "--input", str(source), "--out", str(out), "--cadence", "month",
                 "--export", "graphml,dot,json"]) == 0
    return _read_dir(out)


def test_pipeline_is_byte_reproducible(tmp_path):
    first = _pipeline(tmp_path, "first", 3000)
    assert first == _pipeline(tmp_path, "second", 3000)
    assert len([n for n in first if n.startswith("snapshot-")]) == 5


@pytest.mark.slow
def test_pipeline_is_byte_reproducible_at_scale(tmp_path):
    assert _pipeline(tmp_path, "first", 50000) == _pipeline(tmp_path, "second", 50000)
