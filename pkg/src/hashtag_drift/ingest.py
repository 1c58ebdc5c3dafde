#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

"""Stream drivers: opening sources, parsing records and replaying them through a StreamEngine."""

from __future__ import annotations

import gzip
import io
import logging
import sys
from dataclasses import asdict, dataclass

from tqdm import tqdm

from hashtag_drift.engine import TimestampRegression
from hashtag_drift.readers import RecordError, StreamRecord, parse_timestamp
from hashtag_drift.registry import READER_REGISTRY

logger = logging.getLogger(__name__)

__all__ = ["RunReport", "SourceError", "RecordError", "StreamRecord", "parse_timestamp", "parse_record",
           "detect_format", "open_source", "read_source", "run_stream"]


class SourceError(IOError):
    pass


def parse_record(line, fmt="jsonl", line_number=0, **reader_options):
    """Parse a single line with the reader registered as ``fmt``

    Raises:
        RecordError: If the line is malformed
    """
    return READER_REGISTRY.create(fmt, **reader_options).parse(line, line_number)


def detect_format(path):
    """'csv' for *.csv and *.csv.gz, 'jsonl' otherwise (including stdin)"""
    name = str(path).lower()
    if name.endswith(".gz"):
        name = name[:-3]
    return "csv" if name.endswith(".csv") else "jsonl"


def open_source(path):
    """Open a text source; '-' is stdin and *.gz is decompressed on the fly.

    Undecodable bytes are kept as surrogates so the reader can reject that line alone.

    Raises:
        SourceError: If the source can't be opened
    """
    if str(path) == "-":
        if not hasattr(sys.stdin, "buffer"):
            return sys.stdin
        return io.TextIOWrapper(sys.stdin.buffer, encoding="utf-8", errors="surrogateescape")
    try:
        if str(path).endswith(".gz"):
            return gzip.open(path, "rt", encoding="utf-8", errors="surrogateescape")
        return open(path, "r", encoding="utf-8", errors="surrogateescape")
    except OSError as e:
        raise SourceError("Cannot read '{}': {}".format(path, e))


def read_source(path, fmt=None, **reader_options):
    """Yield the records (or RecordErrors) of one source"""
    fmt = fmt or detect_format(path)
    reader = READER_REGISTRY.create(fmt, **reader_options)
    logger.info("Reading '{}' as {}".format(path, fmt))
    stream = open_source(path)
    try:
        for item in reader.read(stream):
            yield item
    except (OSError, EOFError, UnicodeDecodeError) as e:
        raise SourceError("Failed reading '{}': {}".format(path, e))
    finally:
        if str(path) != "-":
            stream.close()
        elif stream is not sys.stdin:
            stream.detach()  # leave sys.stdin open


@dataclass
class RunReport:
    """Counters of a replay. ``posts_processed + skipped == lines_read`` always holds.

    Blank lines are not records: readers drop them before counting, so lines_read is the number of non-blank lines.
    """
    lines_read: int = 0
    posts_processed: int = 0
    skipped: int = 0
    malformed: int = 0
    retweets: int = 0
    regressions: int = 0
    snapshots: int = 0

    def as_dict(self):
        return asdict(self)


def run_stream(source, engine, skip_retweets=True, progress=False, finalize=True):
    """Replay records through ``engine`` in order: prepare, roll over, tally, add to the graph.

    Args:
        source: Iterable of StreamRecord (RecordError items are counted as skipped lines)
        engine (StreamEngine): Engine to feed
        skip_retweets (bool): Skip records marked as retweets
        progress (bool): Show a tqdm progress bar on stderr
        finalize (bool): Flush the last period's snapshot at exhaustion

    Returns:
        RunReport
    """
    report = RunReport()
    for item in tqdm(source, disable=not progress, unit=" posts", mininterval=1.0):
        report.lines_read += 1
        if isinstance(item, RecordError):
            logger.warning("Skipping {}".format(item))
            report.skipped += 1
            report.malformed += 1
            continue
        if skip_retweets and item.is_retweet:
            report.skipped += 1
            report.retweets += 1
            continue
        try:
            snapshot = engine.process(engine.prepare(item.timestamp, item.raw_tags()))
        except TimestampRegression as e:
            logger.warning("Skipping line {}: {}".format(item.line_number, e))
            report.skipped += 1
            report.regressions += 1
            continue
        report.posts_processed += 1
        if snapshot is not None:
            report.snapshots += 1

    if finalize and engine.finalize() is not None:
        report.snapshots += 1
    logger.info("Processed {} posts, skipped {} of {} lines, emitted {} snapshots".format(
        report.posts_processed, report.skipped, report.lines_read, report.snapshots))
    return report
