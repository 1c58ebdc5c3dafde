#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

# Executable for replaying post streams into snapshots and for generating synthetic streams

from __future__ import annotations

import argparse
import itertools
import logging
import os
import sys

from hashtag_drift.analytics import drift_report, peak_months
from hashtag_drift.config import ConfigError, RunOptions, SynthOptions
from hashtag_drift.engine import StreamEngine
from hashtag_drift.exporters import drift_report_to_json, export_graph, report_to_json, snapshot_to_json
from hashtag_drift.ingest import SourceError, read_source, run_stream
from hashtag_drift.readers import parse_timestamp
from hashtag_drift.registry import EXPORTER_REGISTRY
from hashtag_drift.synthetic import SynthConfig, default_phases, generate_synthetic, record_to_json
from hashtag_drift.utility import WorkerTaskQueue

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


def _comma_list(value):
    return tuple(v.strip() for v in value.split(",") if v.strip())


def _default_arg_parser():
    parser = argparse.ArgumentParser(prog="hashtag-drift",
                                     description="Streaming hashtag co-occurrence graphs and drift snapshots. Every "
                                                 "option can also be set with a HASHDRIFT_<OPTION> environment "
                                                 "variable; flags take precedence.")
    parser.add_argument("--log-level", dest="log_level", default=None, help="Logging level (default INFO)")
    sub = parser.add_subparsers(dest="cmd", required=True)

    run = sub.add_parser("run", help="Replay posts and write one snapshot per period")
    run.add_argument("--input", "-i", dest="inputs", nargs="+", default=None,
                     help="Input file(s), '-' for stdin. *.gz is decompressed")
    run.add_argument("--format", dest="format", default=None, help="jsonl or csv (default: from the extension)")
    run.add_argument("--out", "-o", dest="out", default=None, help="Output directory (default out/)")
    run.add_argument("--window", dest="window_size", type=int, default=None, help="Window size (default 200)")
    run.add_argument("--min-freq", dest="min_freq", type=int, default=None,
                     help="Posts a tag needs before becoming a node (default 5)")
    run.add_argument("--min-len", dest="min_len", type=int, default=None, help="Shortest kept tag (default 3)")
    run.add_argument("--query-tag", dest="query_tag", default=None,
                     help="Collection query tag, excluded from posts (default mybodymychoice)")
    run.add_argument("--cadence", dest="cadence", choices=("year", "month"), default=None,
                     help="Snapshot period (default year)")
    run.add_argument("-k", dest="k", type=int, default=None, help="Communities and tags per report (default 5)")
    run.add_argument("--export", dest="exports", type=_comma_list, default=None,
                     help="Comma separated graph exports per snapshot: {}".format(
                         ",".join(EXPORTER_REGISTRY.available())))
    run.add_argument("--literal-counting", dest="literal_counting", action="store_true", default=None,
                     help="Count every visit of a pregraph tag, promoting on the visit after min-freq")
    run.add_argument("--pregraph-cap", dest="pregraph_cap", type=int, default=None,
                     help="Maximum tags waiting in the pregraph (default 10000)")
    run.add_argument("--slack-hours", dest="slack_hours", type=float, default=None,
                     help="Tolerated timestamp regression in hours (default 24)")
    run.add_argument("--keep-retweets", dest="skip_retweets", action="store_false", default=None,
                     help="Do not skip records marked as retweets")
    run.add_argument("--betweenness", dest="betweenness", default=None, help="brandes (default) or networkx")
    run.add_argument("--max-levels", dest="max_levels", type=int, default=None,
                     help="Stop Girvan-Newman after this many dendrogram levels")
    for name in ("timestamp", "text", "hashtags", "retweet"):
        run.add_argument("--{}-field".format(name), dest="{}_field".format(name), default=None,
                         help="Input field holding the {}".format(name))
    run.add_argument("--progress", dest="progress", action="store_true", default=None, help="Show a progress bar")

    synth = sub.add_parser("synth", help="Write a deterministic synthetic JSONL stream")
    synth.add_argument("--seed", dest="seed", type=int, default=None, help="Generator seed (default 42)")
    synth.add_argument("--posts", dest="posts", type=int, default=None, help="Number of posts (default 1000)")
    synth.add_argument("--phases", dest="phases", type=int, default=None, help="Topic phases (default 2)")
    synth.add_argument("--pools", dest="pools", type=int, default=None, help="Pools per phase (default 3)")
    synth.add_argument("--pool-size", dest="pool_size", type=int, default=None, help="Tags per pool (default 6)")
    synth.add_argument("--min-tags", dest="min_tags", type=int, default=None, help="Fewest tags per post")
    synth.add_argument("--max-tags", dest="max_tags", type=int, default=None, help="Most tags per post")
    synth.add_argument("--intensity", dest="intensity", type=float, default=None,
                       help="Probability a post stays within one pool (default 0.9)")
    synth.add_argument("--start", dest="start", default=None, help="First timestamp (default 2018-02-11T00:00:00Z)")
    synth.add_argument("--step", dest="step", type=int, default=None, help="Seconds between posts (default 600)")
    synth.add_argument("--query-tag", dest="query_tag", default=None, help="Tag added to every post")
    synth.add_argument("--output", dest="output", default=None, help="Output file, '-' for stdout")
    return parser


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _period_name(period):
    return str(period)


def _write_snapshot(out, snapshot, exports):
    name = _period_name(snapshot.period)
    _write(os.path.join(out, "snapshot-{}.json".format(name)), snapshot_to_json(snapshot))
    for fmt in exports:
        exporter = EXPORTER_REGISTRY.create(fmt)
        document = export_graph(snapshot.graph, snapshot.best.partition, fmt)
        _write(os.path.join(out, "graph-{}{}".format(name, exporter.extension)), document)


def cmd_run(options: RunOptions) -> int:
    """Replay the inputs, writing snapshot-<period>.json per period plus report.json and drift.json"""
    missing = [p for p in options.inputs if p != "-" and not os.path.isfile(p)]
    if missing:
        logger.error("Input file(s) not found: {}".format(", ".join(missing)))
        return EXIT_FAILURE
    try:
        os.makedirs(options.out, exist_ok=True)
    except OSError as e:
        logger.error("Cannot create output directory '{}': {}".format(options.out, e))
        return EXIT_FAILURE

    logger.info("Running with window={}, min_freq={}, min_len={}, query_tag='{}', cadence={}, k={}".format(
        options.window_size, options.min_freq, options.min_len, options.query_tag, options.cadence, options.k))

    # Snapshot and graph files are written by a worker while ingestion continues
    writer = WorkerTaskQueue(num_workers=1, discard=False)
    engine = StreamEngine(graph_config=options.graph_config(), query_tag=options.query_tag, min_len=options.min_len,
                          cadence=options.cadence, k=options.k, slack=options.slack,
                          betweenness=options.betweenness, max_levels=options.max_levels,
                          on_snapshot=lambda s: writer.add_task(_write_snapshot, (options.out, s, options.exports)))
    records = itertools.chain.from_iterable(
        read_source(path, options.format, **options.reader_options()) for path in options.inputs)
    try:
        report = run_stream(records, engine, skip_retweets=options.skip_retweets, progress=options.progress)
        writer.drain()
        drift = drift_report(engine.snapshots)
        _write(os.path.join(options.out, "drift.json"), drift_report_to_json(drift))
        _write(os.path.join(options.out, "report.json"),
               report_to_json(report, engine.graph.stats(), engine.months, peak_months(engine.months, 3), drift))
    except (SourceError, OSError) as e:
        logger.error(e)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_synth(options: SynthOptions) -> int:
    """Write a synthetic JSONL stream to a file or stdout"""
    cfg = SynthConfig(seed=options.seed,
                      phases=default_phases(options.posts, options.phases, options.pools, options.pool_size,
                                            options.intensity),
                      min_tags=options.min_tags, max_tags=options.max_tags, start=parse_timestamp(options.start),
                      step_seconds=options.step, query_tag=options.query_tag)
    lines = (record_to_json(r) + "\n" for r in generate_synthetic(cfg))
    try:
        if options.output == "-":
            for line in lines:
                sys.stdout.write(line)
            sys.stdout.flush()
        else:
            with open(options.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.writelines(lines)
    except OSError as e:
        logger.error("Cannot write '{}': {}".format(options.output, e))
        return EXIT_FAILURE
    return EXIT_OK


def main(argv=None):
    # Command line arguments always override environment variables
    parser = _default_arg_parser()
    args = parser.parse_args(argv)
    overrides = {k: v for k, v in vars(args).items() if k not in ("cmd", "log_level")}
    try:
        if args.cmd == "run":
            options = RunOptions.from_env(**overrides)
            options.validate()
        else:
            options = SynthOptions.from_env(**overrides)
            options.validate()
            parse_timestamp(options.start)
    except (ConfigError, ValueError) as e:
        parser.error(str(e))

    log_level = args.log_level or os.environ.get("HASHDRIFT_LOG_LEVEL", "INFO")
    logging.basicConfig(level=getattr(logging, str(log_level).upper(), logging.INFO), stream=sys.stderr,
                        format="[%(levelname)s] [%(name)s]: %(message)s")

    if args.cmd == "run":
        return cmd_run(options)
    return cmd_synth(options)


if __name__ == '__main__':
    sys.exit(main())
