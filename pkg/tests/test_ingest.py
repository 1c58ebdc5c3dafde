import gzip
import json
from datetime import datetime, timedelta, timezone

import pytest

from hashtag_drift.engine import StreamEngine
from hashtag_drift.graph import GraphConfig
from hashtag_drift.ingest import RecordError, RunReport, SourceError, detect_format, parse_record, read_source, \
    run_stream
from hashtag_drift.readers import CsvReader, JsonLinesReader, parse_timestamp

UTC = timezone.utc


def _records(lines):
    return JsonLinesReader().read(lines)


def test_parse_record_hashtags():
    record = parse_record('{"timestamp":"2018-02-11T00:00:00Z","hashtags":["#ProChoice"]}')
    assert record.timestamp == datetime(2018, 2, 11, tzinfo=UTC)
    assert record.raw_tags() == ["#ProChoice"]
    assert not record.is_retweet


def test_parse_record_text():
    record = parse_record('{"timestamp":"2018-02-11T00:00:00Z","text":"hi #a #LongTag"}')
    assert record.text == "hi #a #LongTag"
    assert record.hashtags is None
    assert record.raw_tags() == ["#a", "#LongTag"]


@pytest.mark.parametrize("line", [
    "not json",
    "[1, 2]",
    '{"hashtags": ["#a"]}',
    '{"timestamp": "yesterday", "hashtags": ["#a"]}',
    '{"timestamp": "2018-02-11T00:00:00Z"}',
    '{"timestamp": "2018-02-11T00:00:00Z", "text": "x", "hashtags": ["#a"]}',
    '{"timestamp": "2018-02-11T00:00:00Z", "hashtags": "#a"}',
])
def test_parse_record_malformed(line):
    with pytest.raises(RecordError) as e:
        parse_record(line, line_number=7)
    assert e.value.line_number == 7
    assert "line 7" in str(e.value)


def test_field_mapping():
    line = '{"created_at": 1518307200, "tags": ["#x"], "rt": true}'
    record = parse_record(line, timestamp_field="created_at", hashtags_field="tags", retweet_field="rt")
    assert record.timestamp == datetime(2018, 2, 11, tzinfo=UTC)
    assert record.is_retweet


def test_retweet_text_prefix():
    record = parse_record('{"timestamp": 0, "text": "RT @someone: #copy"}')
    assert record.is_retweet


@pytest.mark.parametrize("value, expected", [
    ("2018-02-11T00:00:00Z", datetime(2018, 2, 11, tzinfo=UTC)),
    ("2018-02-11T01:00:00+01:00", datetime(2018, 2, 11, tzinfo=UTC)),
    ("2018-02-11 00:00:00", datetime(2018, 2, 11, tzinfo=UTC)),
    (1518307200, datetime(2018, 2, 11, tzinfo=UTC)),
    ("1518307200", datetime(2018, 2, 11, tzinfo=UTC)),
])
def test_parse_timestamp(value, expected):
    assert parse_timestamp(value) == expected


def test_csv_reader():
    lines = ["timestamp,hashtags,extra\n",
             "2018-02-11T00:00:00Z,#ProChoice;#MeToo,x\n",
             "\n",
             "2018-02-12T00:00:00Z,#a\n"]
    items = list(CsvReader().read(lines))
    assert items[0].hashtags == ("#ProChoice", "#MeToo")
    assert isinstance(items[1], RecordError)
    assert items[1].line_number == 4


def test_csv_text_column():
    items = list(CsvReader().read(['timestamp,text\n', '2018-02-11T00:00:00Z,"hello #World, again"\n']))
    assert items[0].raw_tags() == ["#World"]


def test_detect_format():
    assert detect_format("posts.csv") == "csv"
    assert detect_format("posts.CSV.gz") == "csv"
    assert detect_format("posts.jsonl.gz") == "jsonl"
    assert detect_format("-") == "jsonl"


def test_read_source_gzip(tmp_path):
    path = tmp_path / "posts.jsonl.gz"
    with gzip.open(path, "wt", encoding="utf-8") as fh:
        fh.write('{"timestamp": 0, "hashtags": ["#abc"]}\n\nnot json\n')
    items = list(read_source(str(path)))
    assert len(items) == 2
    assert items[0].raw_tags() == ["#abc"]
    assert isinstance(items[1], RecordError) and items[1].line_number == 3


def test_read_source_invalid_utf8_line(tmp_path):
    path = tmp_path / "posts.jsonl"
    path.write_bytes(
        b'{"timestamp": "2018-02-11T00:00:00Z", "hashtags": ["#alpha", "#beta"]}\n'
        b'{"timestamp": "2018-02-11T01:00:00Z", "text": "\xff\xfe #alpha"}\n'
        b'{"timestamp": "2018-02-11T02:00:00Z", "hashtags": ["#alpha", "#beta"]}\n')
    items = list(read_source(str(path)))
    assert isinstance(items[1], RecordError) and items[1].line_number == 2
    report = run_stream(read_source(str(path)), StreamEngine())
    assert report.malformed == 1
    assert report.posts_processed == 2
    assert report.lines_read == 3


def test_csv_invalid_utf8_row(tmp_path):
    path = tmp_path / "posts.csv"
    path.write_bytes(b"timestamp,hashtags\n2018-02-11T00:00:00Z,#\xffabc\n2018-02-11T00:00:00Z,#alpha;#beta\n")
    items = list(read_source(str(path)))
    assert isinstance(items[0], RecordError) and items[0].line_number == 2
    assert items[1].raw_tags() == ["#alpha", "#beta"]


def test_read_source_missing(tmp_path):
    with pytest.raises(SourceError):
        list(read_source(str(tmp_path / "absent.jsonl")))


def test_run_stream_empty_source():
    engine = StreamEngine()
    assert run_stream([], engine) == RunReport()
    assert engine.snapshots == []


def _lines(start, days, step=timedelta(days=1)):
    for i in range(days):
        t = start + i * step
        yield json.dumps({"timestamp": t.strftime("%Y-%m-%dT%H:%M:%SZ"), "hashtags": ["#alpha", "#beta"]})


def test_run_stream_skip_accounting():
    lines = list(_lines(datetime(2018, 2, 11, tzinfo=UTC), 6))
    lines.insert(2, "not json")
    lines.insert(4, '{"timestamp": "2018-03-01T00:00:00Z", "text": "RT @x #alpha"}')
    lines.append('{"timestamp": "2017-01-01T00:00:00Z", "hashtags": ["#old"]}')
    engine = StreamEngine()
    report = run_stream(_records(lines), engine)
    assert report.lines_read == 9
    assert (report.malformed, report.retweets, report.regressions) == (1, 1, 1)
    assert report.posts_processed + report.skipped == report.lines_read
    assert report.posts_processed == 6
    assert report.snapshots == 1
    assert engine.graph.stats().edge_count == 1


def test_run_stream_blank_lines_not_counted():
    lines = list(_lines(datetime(2018, 2, 11, tzinfo=UTC), 3))
    lines[1:1] = ["", "   "]
    report = run_stream(_records(lines), StreamEngine())
    assert report.lines_read == 3
    assert report.posts_processed + report.skipped == report.lines_read


def test_run_stream_keeps_retweets_when_asked():
    lines = ['{"timestamp": "2018-03-01T00:00:00Z", "text": "RT @x #alpha"}']
    report = run_stream(_records(lines), StreamEngine(), skip_retweets=False)
    assert report.posts_processed == 1


def test_run_stream_five_years():
    lines = _lines(datetime(2018, 2, 11, tzinfo=UTC), 1785)
    engine = StreamEngine(GraphConfig(min_freq=5))
    report = run_stream(_records(lines), engine)
    assert report.snapshots == 5
    assert [s.period for s in engine.snapshots] == [2018, 2019, 2020, 2021, 2022]
