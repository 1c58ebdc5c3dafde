#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

"""Online, bounded and aging hashtag co-occurrence graph.

Tags are first counted in a pregraph and only become nodes once they have been seen in ``min_freq`` posts. The node
set is a window of at most ``window_size`` tags; admitting a tag into a full window evicts the oldest node. A node's
age is the number of posts processed since it last took part in a co-occurrence (or since it was inserted).
"""

from __future__ import annotations

import copy
import heapq
import logging
from collections import OrderedDict, namedtuple
from dataclasses import dataclass
from enum import Enum

from hashtag_drift.community import FrozenGraph

logger = logging.getLogger(__name__)

__all__ = ["GraphConfig", "GraphNode", "GraphStats", "PregraphEntry", "PromotionStatus", "WindowedGraph",
           "WindowNotFull"]

GraphStats = namedtuple("GraphStats", ["node_count", "edge_count", "pregraph_count", "post_seq"])


class WindowNotFull(RuntimeError):
    pass


class PromotionStatus(Enum):
    ALREADY_NODE = "already_node"
    STILL_PREGRAPH = "still_pregraph"
    PROMOTED = "promoted"


@dataclass(frozen=True)
class GraphConfig:
    """
    Args:
        window_size (int): Maximum number of nodes
        min_freq (int): Number of posts a tag must appear in before it becomes a node
        pregraph_cap (int): Maximum number of tags waiting in the pregraph, least recently seen forgotten first
        literal_counting (bool): Count pregraph tags once per visit (outer and co-hashtag loops) and promote on the
            visit after the count reached min_freq, connecting pairs while iterating
    """
    window_size: int = 200
    min_freq: int = 5
    pregraph_cap: int = 10000
    literal_counting: bool = False

    def __post_init__(self):
        for name in ("window_size", "min_freq", "pregraph_cap"):
            if getattr(self, name) < 1:
                raise ValueError("{} must be >= 1, got {}".format(name, getattr(self, name)))


@dataclass
class PregraphEntry:
    tag: str
    count: int
    last_seen_seq: int


@dataclass(frozen=True)
class GraphNode:
    tag: str
    age: int
    inserted_seq: int


class _Node:
    __slots__ = ("touched", "inserted_seq", "neighbours")

    def __init__(self, touched, inserted_seq):
        self.touched = touched
        self.inserted_seq = inserted_seq
        self.neighbours = set()


class WindowedGraph:
    """Single-writer co-occurrence graph fed one post at a time.

    Ages are kept relative to a clock advanced by grow_old, so aging every node costs O(1); a node's age is the clock
        minus the clock value at its last reset. Eviction candidates sit in a heap keyed by (touched, inserted_seq, tag);
        entries made stale by an age reset are skipped when popped and the heap is rebuilt once stale entries dominate.

    Args:
        config (GraphConfig): Window, frequency gate and pregraph bound

    Examples:
        >>> g = WindowedGraph(GraphConfig(window_size=200, min_freq=5))
        >>> for post in posts:
        >>>     g.add_post(post)
        >>> g.stats()
        GraphStats(node_count=..., edge_count=..., pregraph_count=..., post_seq=...)
    """
    def __init__(self, config=None):
        self.config = config or GraphConfig()
        self.post_seq = 0
        self.pregraph = OrderedDict()  # least recently seen first
        self.last_edge_ops = 0
        self._clock = 0
        self._nodes = {}
        self._edge_count = 0
        self._heap = []

    def __contains__(self, tag):
        return tag in self._nodes

    def __len__(self):
        return len(self._nodes)

    @property
    def nodes(self):
        """Copy of the node set as {tag: GraphNode}"""
        return {tag: GraphNode(tag, self._clock - n.touched, n.inserted_seq) for tag, n in self._nodes.items()}

    @property
    def edges(self):
        return {(u, v) for u, n in self._nodes.items() for v in n.neighbours if u < v}

    def age(self, tag):
        return self._clock - self._nodes[tag].touched

    def grow_old(self):
        """Increase every node's age by one"""
        self._clock += 1

    def observe_tag(self, tag):
        """Count a sighting of ``tag`` in the current post, promoting it to a node on reaching min_freq.

        A tag is counted at most once per post: a second call for the same tag before add_post finishes the post
            (i.e. with an unchanged post_seq) leaves the count untouched.

        Returns:
            PromotionStatus
        """
        if tag in self._nodes:
            return PromotionStatus.ALREADY_NODE
        entry = self.pregraph.get(tag)
        if entry is None:
            entry = self._new_pregraph_entry(tag, count=0)
        elif entry.last_seen_seq == self.post_seq and entry.count > 0:
            return PromotionStatus.STILL_PREGRAPH
        entry.count += 1
        self._touch_pregraph(entry)
        if entry.count >= self.config.min_freq:
            del self.pregraph[tag]
            self._insert(tag)
            return PromotionStatus.PROMOTED
        return PromotionStatus.STILL_PREGRAPH

    def evict_oldest(self):
        """Remove the oldest node and its edges.

        Ties on age go to the earliest inserted node, then to the lexicographically smallest tag.

        Raises:
            WindowNotFull: If the window still has room
        """
        if len(self._nodes) < self.config.window_size:
            raise WindowNotFull("evict_oldest called with {} of {} nodes".format(
                len(self._nodes), self.config.window_size))
        tag, node = self._pop_oldest()
        for other in node.neighbours:
            self._nodes[other].neighbours.discard(tag)
        self._edge_count -= len(node.neighbours)
        del self._nodes[tag]
        logger.debug("Evicted '%s' (age %d) at post %d", tag, self._clock - node.touched, self.post_seq)
        return tag

    def add_post(self, post):
        """Feed one prepared post (deduplicated, query tag removed) into the graph"""
        self.grow_old()
        if self.config.literal_counting:
            self.last_edge_ops = self._add_literal(post.hashtags)
        else:
            self.last_edge_ops = self._add_counted(post.hashtags)
        self.post_seq += 1

    def stats(self):
        return GraphStats(len(self._nodes), self._edge_count, len(self.pregraph), self.post_seq)

    def freeze(self):
        """Immutable copy of the current nodes and edges for community detection"""
        return FrozenGraph(frozenset(self._nodes), frozenset(self.edges))

    def copy(self):
        """Independent deep copy, safe to hand to another thread"""
        return copy.deepcopy(self)

    def _add_counted(self, hashtags):
        for tag in hashtags:
            self.observe_tag(tag)
        present = [tag for tag in hashtags if tag in self._nodes]
        ops = 0
        for i, u in enumerate(present):
            for v in present[i + 1:]:
                self._connect(u, v)
                ops += 1
        return ops

    def _add_literal(self, hashtags):
        ops = 0
        for tag in hashtags:
            if not self._visit_literal(tag):
                continue
            for co_tag in hashtags:
                if co_tag == tag:
                    continue
                if not self._visit_literal(co_tag):
                    continue
                if tag not in self._nodes:
                    break  # evicted to make room for co_tag
                self._connect(tag, co_tag)
                ops += 1
        return ops

    def _visit_literal(self, tag):
        if tag in self._nodes:
            return True
        entry = self.pregraph.get(tag)
        if entry is None:
            self._touch_pregraph(self._new_pregraph_entry(tag, count=1))
            return False
        if entry.count >= self.config.min_freq:
            del self.pregraph[tag]
            self._insert(tag)
            return True
        entry.count += 1
        self._touch_pregraph(entry)
        return False

    def _new_pregraph_entry(self, tag, count):
        if len(self.pregraph) >= self.config.pregraph_cap:
            forgotten, _ = self.pregraph.popitem(last=False)
            logger.debug("Pregraph full, forgetting '%s'", forgotten)
        entry = PregraphEntry(tag, count, self.post_seq)
        self.pregraph[tag] = entry
        return entry

    def _touch_pregraph(self, entry):
        entry.last_seen_seq = self.post_seq
        self.pregraph.move_to_end(entry.tag)

    def _insert(self, tag):
        if len(self._nodes) >= self.config.window_size:
            self.evict_oldest()
        node = self._nodes[tag] = _Node(self._clock, self.post_seq)
        self._push(tag, node)
        logger.debug("Promoted '%s' at post %d", tag, self.post_seq)

    def _connect(self, u, v):
        a, b = self._nodes[u], self._nodes[v]
        if v not in a.neighbours:
            a.neighbours.add(v)
            b.neighbours.add(u)
            self._edge_count += 1
        self._touch(u, a)
        self._touch(v, b)

    def _touch(self, tag, node):
        if node.touched != self._clock:
            node.touched = self._clock
            self._push(tag, node)

    def _push(self, tag, node):
        heapq.heappush(self._heap, (node.touched, node.inserted_seq, tag))
        if len(self._heap) > 4 * len(self._nodes) + 64:
            self._heap = [(n.touched, n.inserted_seq, t) for t, n in self._nodes.items()]
            heapq.heapify(self._heap)

    def _pop_oldest(self):
        while True:
            touched, inserted_seq, tag = heapq.heappop(self._heap)
            node = self._nodes.get(tag)
            if node is not None and node.touched == touched and node.inserted_seq == inserted_seq:
                return tag, node
