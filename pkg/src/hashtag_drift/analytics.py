#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

"""Per-period frequency tallies, snapshots of the live graph and snapshot-to-snapshot drift summaries."""

from __future__ import annotations

import heapq
import logging
from collections import Counter
from dataclasses import dataclass, field
from datetime import timezone
from typing import List, Optional, Tuple, Union

from hashtag_drift.community import FrozenGraph, ScoredPartition, best_partition

logger = logging.getLogger(__name__)

__all__ = ["CADENCES", "DEFAULT_K", "PeriodMismatch", "PeriodTally", "Snapshot", "DriftSummary", "MonthSummary",
           "period_of", "record_post", "top_k", "build_snapshot", "largest_community", "jaccard", "drift_summary",
           "drift_report", "peak_months"]

CADENCES = ("year", "month")
DEFAULT_K = 5

PeriodLabel = Union[int, str]


class PeriodMismatch(ValueError):
    pass


def period_of(timestamp, cadence="year") -> PeriodLabel:
    """Calendar year (int) or ISO month ("YYYY-MM") of a timestamp, in UTC. Naive timestamps are taken as UTC."""
    if timestamp.tzinfo is None:
        ts = timestamp.replace(tzinfo=timezone.utc)
    else:
        ts = timestamp.astimezone(timezone.utc)
    if cadence == "year":
        return ts.year
    if cadence == "month":
        return "{:04d}-{:02d}".format(ts.year, ts.month)
    raise ValueError("Unknown cadence '{}', expected one of {}".format(cadence, CADENCES))


@dataclass
class PeriodTally:
    """Posts containing each tag within one period

    Attributes:
        counts (Counter): tag -> number of posts of the period containing it
        posts (int): Number of posts recorded, including those without tags
    """
    period: PeriodLabel
    cadence: str = "year"
    counts: Counter = field(default_factory=Counter)
    posts: int = 0

    def record_post(self, post, period=None):
        """Count each distinct tag of ``post`` once.

        Args:
            post (PostRecord): Prepared post
            period: Period the post is attributed to (defaults to the period of its timestamp)

        Raises:
            PeriodMismatch: If the post belongs to another period
        """
        if period is None:
            period = period_of(post.timestamp, self.cadence)
        if period != self.period:
            raise PeriodMismatch("Post of period {} recorded into the tally of {}".format(period, self.period))
        self.counts.update(set(post.hashtags))
        self.posts += 1


def record_post(tally, post, period=None):
    tally.record_post(post, period)


def top_k(tally, k=DEFAULT_K) -> List[Tuple[str, int]]:
    """k highest counts, descending, ties in ascending tag order"""
    if k < 1:
        raise ValueError("k must be >= 1, got {}".format(k))
    counts = tally.counts if isinstance(tally, PeriodTally) else tally
    return heapq.nsmallest(k, counts.items(), key=lambda kv: (-kv[1], kv[0]))


@dataclass(frozen=True)
class Snapshot:
    """Frozen record of one completed period.

    The frozen graph is kept for drift summaries and exports but is not part of the serialised snapshot.
    """
    period: PeriodLabel
    posts: int
    node_count: int
    edge_count: int
    pregraph_count: int
    best: ScoredPartition
    top_communities: Tuple[Tuple[str, ...], ...]
    top_tags: Tuple[Tuple[str, int], ...]
    graph: FrozenGraph = field(default_factory=FrozenGraph, repr=False, compare=False)


def build_snapshot(period, graph: FrozenGraph, tally: Optional[PeriodTally], k=DEFAULT_K, pregraph_count=0,
                   backend="brandes", max_levels=None) -> Snapshot:
    logger.info("Creating snapshot for {} ({} nodes, {} edges)".format(period, len(graph.nodes), len(graph.edges)))
    best = best_partition(graph, backend=backend, max_levels=max_levels)
    communities = tuple(tuple(sorted(c)) for c in best.partition.communities[:k])
    return Snapshot(
        period=period,
        posts=tally.posts if tally is not None else 0,
        node_count=len(graph.nodes),
        edge_count=len(graph.edges),
        pregraph_count=pregraph_count,
        best=best,
        top_communities=communities,
        top_tags=tuple(top_k(tally, k)) if tally is not None else (),
        graph=graph,
    )


@dataclass(frozen=True)
class DriftSummary:
    """How much the graph moved between two consecutive snapshots.

    ``largest_overlap`` is the Jaccard similarity of the two largest communities; their sizes are the drift's
    importance when a human judges the newer one to be off-context.
    """
    from_period: PeriodLabel
    to_period: PeriodLabel
    largest_overlap: float
    new_tags: int
    vanished_tags: int
    largest_sizes: Tuple[int, int] = (0, 0)
    community_counts: Tuple[int, int] = (0, 0)
    modularity: Tuple[float, float] = (0.0, 0.0)


def largest_community(snapshot):
    communities = snapshot.best.partition.communities
    return communities[0] if communities else frozenset()


def jaccard(a, b):
    a, b = set(a), set(b)
    if not a and not b:
        return 1.0
    return len(a & b) / len(a | b)


def drift_summary(prev: Snapshot, cur: Snapshot) -> DriftSummary:
    a, b = largest_community(prev), largest_community(cur)
    return DriftSummary(
        from_period=prev.period,
        to_period=cur.period,
        largest_overlap=jaccard(a, b),
        new_tags=len(cur.graph.nodes - prev.graph.nodes),
        vanished_tags=len(prev.graph.nodes - cur.graph.nodes),
        largest_sizes=(len(a), len(b)),
        community_counts=(len(prev.best.partition), len(cur.best.partition)),
        modularity=(prev.best.modularity, cur.best.modularity),
    )


def drift_report(snapshots) -> List[DriftSummary]:
    return [drift_summary(prev, cur) for prev, cur in zip(snapshots, snapshots[1:])]


@dataclass(frozen=True)
class MonthSummary:
    """Volume and most frequent tags of one calendar month, used to explain peaks in the stream"""
    month: str
    posts: int
    top_tags: Tuple[Tuple[str, int], ...] = ()


def peak_months(summaries, n=3) -> List[MonthSummary]:
    """The n months with most posts, earlier month first on ties"""
    return heapq.nsmallest(n, summaries, key=lambda s: (-s.posts, s.month))
