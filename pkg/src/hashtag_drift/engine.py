#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

from __future__ import annotations

import logging
from datetime import timedelta

from hashtag_drift.analytics import DEFAULT_K, MonthSummary, PeriodTally, build_snapshot, period_of, top_k
from hashtag_drift.graph import GraphConfig, WindowedGraph
from hashtag_drift.normalizer import DEFAULT_MIN_LEN, normalize, prepare_post
from hashtag_drift.utility import function_timer

logger = logging.getLogger(__name__)

__all__ = ["StreamEngine", "TimestampRegression", "DEFAULT_QUERY_TAG"]

DEFAULT_QUERY_TAG = "mybodymychoice"


class TimestampRegression(ValueError):
    pass


class StreamEngine:
    """Owns the live graph and the period tallies, and turns period boundaries into snapshots.

    The graph is never reset between periods. A snapshot is built from a frozen copy of the graph when the first post
        of a later period arrives, and once more for the last period on finalize().

    Args:
        graph_config (GraphConfig): Window and frequency gate of the live graph
        query_tag (str): Tag every post was collected with; excluded from all posts
        min_len (int): Shortest accepted tag
        cadence (str): "year" or "month"
        k (int): Number of communities and tags in each snapshot
        slack (timedelta): Timestamp regressions up to this much are attributed to the current period
        betweenness (str): Betweenness backend used by community detection
        max_levels (int): Optional dendrogram depth limit
        on_snapshot (callable): Called with every Snapshot as soon as it is built

    Examples:
        >>> engine = StreamEngine()
        >>> for timestamp, raw_tags in stream:
        >>>     engine.process(engine.prepare(timestamp, raw_tags))
        >>> engine.finalize()
        >>> engine.snapshots
    """
    def __init__(self, graph_config=None, query_tag=DEFAULT_QUERY_TAG, min_len=DEFAULT_MIN_LEN, cadence="year",
                 k=DEFAULT_K, slack=timedelta(hours=24), betweenness="brandes", max_levels=None, on_snapshot=None):
        self.graph = WindowedGraph(graph_config or GraphConfig())
        self.query_tag = normalize(query_tag, 1) if query_tag else None
        self.min_len = min_len
        self.cadence = cadence
        self.k = k
        self.slack = slack
        self.betweenness = betweenness
        self.max_levels = max_levels
        self.on_snapshot = on_snapshot
        self.tally = None
        self.month_tally = None
        self.snapshots = []
        self.months = []
        self._high_water = None
        self._finalized = False

    def prepare(self, timestamp, raw_tags):
        return prepare_post(timestamp, raw_tags, self.query_tag, self.min_len)

    def maybe_rollover(self, timestamp):
        """Close the current period if ``timestamp`` starts a later one.

        Returns:
            Snapshot or None: The snapshot of the completed period

        Raises:
            TimestampRegression: If timestamp is earlier than the latest seen timestamp by more than the slack
        """
        if self._high_water is not None and timestamp < self._high_water - self.slack:
            raise TimestampRegression("Timestamp {} is more than {} behind {}".format(
                timestamp.isoformat(), self.slack, self._high_water.isoformat()))
        if self._high_water is None or timestamp > self._high_water:
            self._high_water = timestamp

        month = period_of(timestamp, "month")
        if self.month_tally is None:
            self.month_tally = PeriodTally(month, "month")
        elif month > self.month_tally.period:
            self._close_month()
            self.month_tally = PeriodTally(month, "month")

        period = period_of(timestamp, self.cadence)
        if self.tally is None:
            self.tally = PeriodTally(period, self.cadence)
        elif period > self.tally.period:
            snapshot = self._close_period()
            self.tally = PeriodTally(period, self.cadence)
            return snapshot
        return None

    @function_timer.interval_logger(interval=100000)
    def process(self, post):
        """Roll the period over if needed, tally the post and add it to the live graph

        Returns:
            Snapshot or None: Snapshot of a period completed by this post
        """
        if self._finalized:
            raise RuntimeError("Engine already finalized")
        snapshot = self.maybe_rollover(post.timestamp)
        self.tally.record_post(post, self.tally.period)
        self.month_tally.record_post(post, self.month_tally.period)
        self.graph.add_post(post)
        return snapshot

    def finalize(self):
        """Emit the last period's snapshot. Only the first call has an effect."""
        if self._finalized:
            return None
        self._finalized = True
        snapshot = None
        if self.tally is not None and self.tally.posts:
            snapshot = self._close_period()
        if self.month_tally is not None and self.month_tally.posts:
            self._close_month()
        return snapshot

    def _close_period(self):
        stats = self.graph.stats()
        snapshot = build_snapshot(self.tally.period, self.graph.freeze(), self.tally, k=self.k,
                                  pregraph_count=stats.pregraph_count, backend=self.betweenness,
                                  max_levels=self.max_levels)
        logger.info("Snapshot {}: {} posts, {} nodes, {} edges, {} communities, modularity {:.4f}".format(
            snapshot.period, snapshot.posts, snapshot.node_count, snapshot.edge_count,
            len(snapshot.best.partition), snapshot.best.modularity))
        self.snapshots.append(snapshot)
        if self.on_snapshot is not None:
            self.on_snapshot(snapshot)
        return snapshot

    def _close_month(self):
        self.months.append(MonthSummary(self.month_tally.period, self.month_tally.posts,
                                        tuple(top_k(self.month_tally, self.k))))
