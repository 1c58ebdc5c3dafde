#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

"""Girvan-Newman community detection on frozen graph snapshots.

Edge betweenness is computed with Brandes' accumulation over unweighted BFS trees, counting every unordered node pair
once. Girvan-Newman removes one highest-betweenness edge at a time (ties to the lexicographically smallest edge) and
records a dendrogram level whenever the number of connected components grows; the level with the highest modularity
against the original graph is the reported partition.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Mapping, Optional, Sequence, Tuple

from hashtag_drift.registry import BETWEENNESS_REGISTRY
from hashtag_drift.utility import function_timer

logger = logging.getLogger(__name__)

__all__ = ["FrozenGraph", "Partition", "Dendrogram", "ScoredPartition", "DegenerateGraph", "BaseBetweenness",
           "BrandesBetweenness", "NetworkXBetweenness", "edge_betweenness", "girvan_newman", "modularity",
           "best_partition", "TIE_TOLERANCE"]

Edge = Tuple[str, str]

# Betweenness values closer than this are treated as equal when choosing the edge to remove
TIE_TOLERANCE = 1e-9


class DegenerateGraph(ValueError):
    pass


def _edge(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class FrozenGraph:
    """Immutable simple undirected graph. Edges are stored as (u, v) with u < v."""
    nodes: FrozenSet[str] = frozenset()
    edges: FrozenSet[Edge] = frozenset()

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ValueError("Self-loop on '{}'".format(u))
            if u > v:
                raise ValueError("Edge ({}, {}) is not ordered".format(u, v))
            if u not in self.nodes or v not in self.nodes:
                raise ValueError("Edge ({}, {}) has an endpoint outside the node set".format(u, v))

    @classmethod
    def from_edges(cls, edges, nodes=()):
        """Build from any iterable of pairs, adding endpoints to the node set"""
        ordered = frozenset(_edge(u, v) for u, v in edges if u != v)
        all_nodes = set(nodes)
        for u, v in ordered:
            all_nodes.update((u, v))
        return cls(frozenset(all_nodes), ordered)

    def adjacency(self):
        """{node: sorted neighbours}, nodes in sorted order"""
        adj = {n: [] for n in sorted(self.nodes)}
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        for neighbours in adj.values():
            neighbours.sort()
        return adj

    def to_networkx(self):
        import networkx as nx
        g = nx.Graph()
        g.add_nodes_from(sorted(self.nodes))
        g.add_edges_from(sorted(self.edges))
        return g


@dataclass(frozen=True)
class Partition:
    """Disjoint communities, ordered by size (descending) then smallest member"""
    communities: Tuple[FrozenSet[str], ...] = ()

    @classmethod
    def of(cls, communities):
        groups = [frozenset(c) for c in communities if c]
        groups.sort(key=lambda c: (-len(c), min(c)))
        return cls(tuple(groups))

    def __len__(self):
        return len(self.communities)

    def community_index(self):
        """{node: index of its community}"""
        return {n: i for i, c in enumerate(self.communities) for n in c}

    def refines(self, other):
        """True if every community here lies inside a single community of ``other``"""
        index = other.community_index()
        return all(len({index.get(n) for n in c}) == 1 for c in self.communities)


@dataclass(frozen=True)
class Dendrogram:
    levels: Tuple[Partition, ...] = ()


@dataclass(frozen=True)
class ScoredPartition:
    partition: Partition
    modularity: float
    level: int = 0


class BaseBetweenness:
    """Base for edge betweenness backends. Subclasses implement .compute() and register a name."""
    def compute(self, adjacency):
        """Betweenness of every edge in ``adjacency``

        Args:
            adjacency (Mapping[str, Sequence[str]]): Symmetric neighbour lists

        Returns:
            Dict[Tuple[str, str], float]: Unordered-pair betweenness keyed by (u, v), u < v
        """
        raise NotImplementedError("This is the base betweenness backend intended for internal use only.")


@BETWEENNESS_REGISTRY.register("brandes")
class BrandesBetweenness(BaseBetweenness):
    def compute(self, adjacency: Mapping[str, Sequence[str]]) -> Dict[Edge, float]:
        scores = {}
        for u in adjacency:
            for v in adjacency[u]:
                if u < v:
                    scores[(u, v)] = 0.0
        for s in sorted(adjacency):
            stack = []
            predecessors = {s: []}
            sigma = {s: 1}
            dist = {s: 0}
            queue = deque([s])
            while queue:
                v = queue.popleft()
                stack.append(v)
                for w in adjacency[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        sigma[w] = 0
                        predecessors[w] = []
                        queue.append(w)
                    if dist[w] == dist[v] + 1:
                        sigma[w] += sigma[v]
                        predecessors[w].append(v)
            # S returns vertices in order of non-increasing distance from s
            delta = dict.fromkeys(stack, 0.0)
            while stack:
                w = stack.pop()
                coeff = (1.0 + delta[w]) / sigma[w]
                for v in predecessors[w]:
                    c = sigma[v] * coeff
                    scores[_edge(v, w)] += c
                    delta[v] += c
        # Every unordered pair was accumulated from both ends
        return {e: b / 2.0 for e, b in scores.items()}


@BETWEENNESS_REGISTRY.register("networkx")
class NetworkXBetweenness(BaseBetweenness):
    def compute(self, adjacency):
        import networkx as nx
        g = nx.Graph()
        g.add_nodes_from(sorted(adjacency))
        g.add_edges_from((u, v) for u in sorted(adjacency) for v in adjacency[u] if u < v)
        return {_edge(u, v): float(b) for (u, v), b in nx.edge_betweenness_centrality(g, normalized=False).items()}


def _backend(backend):
    if isinstance(backend, BaseBetweenness):
        return backend
    return BETWEENNESS_REGISTRY.create(backend)


def edge_betweenness(g: FrozenGraph, backend="brandes") -> Dict[Edge, float]:
    """Sum over unordered node pairs of the fraction of their shortest paths using each edge"""
    return _backend(backend).compute(g.adjacency())


def _component(adjacency, start):
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def _components(adjacency):
    remaining = set(adjacency)
    components = []
    for n in sorted(adjacency):
        if n in remaining:
            comp = _component(adjacency, n)
            remaining.difference_update(comp)
            components.append(comp)
    return components


def _sub_adjacency(adjacency, members):
    return {n: sorted(adjacency[n]) for n in sorted(members)}


def _strongest_edge(scores):
    top = max(scores.values())
    return min(e for e, b in scores.items() if b >= top - TIE_TOLERANCE)


def girvan_newman(g: FrozenGraph, backend="brandes", max_levels: Optional[int] = None) -> Dendrogram:
    """Remove highest-betweenness edges until none remain, recording a level at every split.

    Only the component that lost an edge has its betweenness recomputed; scores in other components cannot change.

    Args:
        g (FrozenGraph): Graph to divide
        backend (str or BaseBetweenness): Betweenness backend name in BETWEENNESS_REGISTRY
        max_levels (int): Stop once this many levels have been recorded (None runs to all-singletons)
    """
    backend = _backend(backend)
    adjacency = {n: set() for n in g.nodes}
    for u, v in g.edges:
        adjacency[u].add(v)
        adjacency[v].add(u)

    components = _components(adjacency)
    levels = [Partition.of(components)]
    scores = {}
    for comp in components:
        if len(comp) > 1:
            scores.update(backend.compute(_sub_adjacency(adjacency, comp)))

    while scores and (max_levels is None or len(levels) < max_levels):
        u, v = _strongest_edge(scores)
        del scores[(u, v)]
        adjacency[u].discard(v)
        adjacency[v].discard(u)

        comp_u = _component(adjacency, u)
        affected = [comp_u]
        if v not in comp_u:
            comp_v = _component(adjacency, v)
            affected.append(comp_v)
            components = [c for c in components if u not in c] + affected
            levels.append(Partition.of(components))
            logger.debug("Girvan-Newman level %d: removed (%s, %s), %d communities",
                         len(levels) - 1, u, v, len(components))
        for comp in affected:
            if len(comp) > 1:
                scores.update(backend.compute(_sub_adjacency(adjacency, comp)))

    return Dendrogram(tuple(levels))


def modularity(g: FrozenGraph, p: Partition) -> float:
    """Newman-Girvan modularity of ``p`` against the edges of ``g``

    Raises:
        DegenerateGraph: If g has no edges
        ValueError: If p is not a partition of g's nodes
    """
    m = len(g.edges)
    if m == 0:
        raise DegenerateGraph("Modularity is undefined for a graph without edges")
    index = p.community_index()
    if len(index) != sum(len(c) for c in p.communities) or set(index) != set(g.nodes):
        raise ValueError("Partition does not cover the graph's nodes exactly once")

    internal = [0] * len(p)
    degree = [0] * len(p)
    for u, v in g.edges:
        cu, cv = index[u], index[v]
        degree[cu] += 1
        degree[cv] += 1
        if cu == cv:
            internal[cu] += 1
    return sum(internal[c] / m - (degree[c] / (2.0 * m)) ** 2 for c in range(len(p)))


@function_timer.interval_logger(interval=1)
def best_partition(g: FrozenGraph, backend="brandes", max_levels: Optional[int] = None) -> ScoredPartition:
    """Highest-modularity dendrogram level; ties go to the earliest (coarsest) level.

    A graph without edges yields the all-singletons partition with modularity 0.
    """
    if not g.edges:
        return ScoredPartition(Partition.of([n] for n in g.nodes), 0.0, 0)

    best = None
    for level, partition in enumerate(girvan_newman(g, backend=backend, max_levels=max_levels).levels):
        q = modularity(g, partition)
        if best is None or q > best.modularity + 1e-12:
            best = ScoredPartition(partition, q, level)
    return best
