#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

"""Deterministic synthetic post streams whose topics change from phase to phase.

Each phase owns pools of related tags. A post picks one pool of the active phase and, with probability
``intensity``, draws all its tags from that pool; otherwise it draws from every pool of the phase, creating the
cross-topic noise real streams have.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from typing import Iterator, Tuple

import numpy as np

from hashtag_drift.readers import StreamRecord

__all__ = ["Phase", "SynthConfig", "default_phases", "generate_synthetic", "record_to_json"]


@dataclass(frozen=True)
class Phase:
    """
    Args:
        posts (int): Number of posts generated in this phase
        pools (tuple): Tag pools (tuples of tag names without '#')
        intensity (float): Probability that a post draws only from its own pool
    """
    posts: int
    pools: Tuple[Tuple[str, ...], ...]
    intensity: float = 1.0

    def __post_init__(self):
        if self.posts < 1:
            raise ValueError("Phase must have at least one post, got {}".format(self.posts))
        if not self.pools or not all(self.pools):
            raise ValueError("Phase pools must be non-empty")
        if not 0.0 <= self.intensity <= 1.0:
            raise ValueError("intensity must be within [0, 1], got {}".format(self.intensity))


@dataclass(frozen=True)
class SynthConfig:
    """
    Args:
        seed (int): Seed of the PCG64 generator; equal seeds give equal streams
        phases (tuple): Phases in stream order
        min_tags, max_tags (int): Inclusive range of tags drawn per post (capped by the pool size)
        start (datetime): Timestamp of the first post
        step_seconds (int): Gap between consecutive posts
        query_tag (str): Tag prepended to every post when include_query is set, as the collection query would be
    """
    seed: int = 42
    phases: Tuple[Phase, ...] = ()
    min_tags: int = 2
    max_tags: int = 4
    start: datetime = datetime(2018, 2, 11, tzinfo=timezone.utc)
    step_seconds: int = 600
    query_tag: str = "MyBodyMyChoice"
    include_query: bool = True

    def __post_init__(self):
        if not 1 <= self.min_tags <= self.max_tags:
            raise ValueError("Need 1 <= min_tags <= max_tags, got {} and {}".format(self.min_tags, self.max_tags))
        if self.step_seconds < 0:
            raise ValueError("step_seconds must be >= 0, got {}".format(self.step_seconds))


def default_phases(posts, n_phases=2, pools_per_phase=3, pool_size=6, intensity=0.9):
    """Split ``posts`` over ``n_phases`` phases with disjoint pools named ``p<phase>t<pool>n<index>``.

    The last phase takes the remainder; phases left without posts are dropped, so zero posts gives no phases.
    """
    if n_phases < 1 or pools_per_phase < 1 or pool_size < 1:
        raise ValueError("n_phases, pools_per_phase and pool_size must all be >= 1")
    per_phase = [posts // n_phases] * n_phases
    per_phase[-1] += posts - sum(per_phase)
    phases = []
    for p, count in enumerate(per_phase):
        if count < 1:
            continue
        pools = tuple(tuple("p{}t{}n{}".format(p, t, i) for i in range(pool_size)) for t in range(pools_per_phase))
        phases.append(Phase(count, pools, intensity))
    return tuple(phases)


def generate_synthetic(cfg: SynthConfig) -> Iterator[StreamRecord]:
    """Yield the stream described by ``cfg``. Timestamps never decrease."""
    rng = np.random.default_rng(cfg.seed)
    seq = 0
    for phase in cfg.phases:
        mixed = tuple(sorted({tag for pool in phase.pools for tag in pool}))
        for _ in range(phase.posts):
            pool = phase.pools[int(rng.integers(len(phase.pools)))]
            candidates = pool if rng.random() < phase.intensity else mixed
            n = min(int(rng.integers(cfg.min_tags, cfg.max_tags + 1)), len(candidates))
            picks = rng.choice(len(candidates), size=n, replace=False)
            tags = ["#" + candidates[int(i)] for i in picks]
            if cfg.include_query and cfg.query_tag:
                tags.insert(0, "#" + cfg.query_tag)
            yield StreamRecord(timestamp=cfg.start + timedelta(seconds=seq * cfg.step_seconds),
                               hashtags=tuple(tags), line_number=seq + 1)
            seq += 1


def record_to_json(record):
    """One JSONL line (without newline) in the canonical input schema"""
    ts = record.timestamp.astimezone(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    if record.hashtags is not None:
        return json.dumps({"timestamp": ts, "hashtags": list(record.hashtags)}, ensure_ascii=False)
    return json.dumps({"timestamp": ts, "text": record.text}, ensure_ascii=False)
