"""Simple undirected graph with exact reciprocal-degree sums.

Node labels (strings or ints) are mapped to dense indices 0..n-1 in order
of first appearance; that index order is the canonical node order used by
every per-node sequence in this package (degrees, deltas, attributes).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from .errors import IsolatedNodeError, SelfLoopError, UnknownNodeError

NodeId = Hashable


class Graph:
    """Immutable simple undirected graph.

    No self-loops, no parallel edges; adjacency is symmetric and each
    neighbor tuple is sorted. ``duplicates_collapsed`` counts input edges
    that were dropped as duplicates during construction.
    """

    __slots__ = ("n", "m", "adj", "labels", "duplicates_collapsed", "_index")

    def __init__(self, adj: Sequence[Iterable[int]], labels: Sequence[NodeId] | None = None,
                 duplicates_collapsed: int = 0):
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(set(a))) for a in adj)
        self.n = len(self.adj)
        self.m = sum(len(a) for a in self.adj) // 2
        if labels is None:
            labels = tuple(range(self.n))
        self.labels: tuple[NodeId, ...] = tuple(labels)
        self.duplicates_collapsed = duplicates_collapsed
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != self.n:
            raise ValueError("node labels are not unique")

    def index_of(self, label: NodeId) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownNodeError(label) from None

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self.adj[i]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adj[i]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in self.adj[i] if i < j]

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj and self.labels == other.labels

    def __hash__(self):
        return hash((self.adj, self.labels))


def build_graph(edges: Iterable[tuple[NodeId, NodeId]],
                nodes: Sequence[NodeId] | None = None) -> Graph:
    """Build a simple graph from an edge list.

    Self-loops raise :class:`SelfLoopError`; duplicate edges are collapsed
    and counted. ``nodes`` optionally pins the canonical node order (and may
    include isolated nodes); otherwise order of first appearance is used.
    """
    labels: list[NodeId] = []
    index: dict[NodeId, int] = {}
    if nodes is not None:
        for lab in nodes:
            if lab not in index:
                index[lab] = len(labels)
                labels.append(lab)

    def idx(lab: NodeId) -> int:
        if lab not in index:
            if nodes is not None:
                raise UnknownNodeError(lab)
            index[lab] = len(labels)
            labels.append(lab)
        return index[lab]

    seen: set[tuple[int, int]] = set()
    duplicates = 0
    pairs: list[tuple[int, int]] = []
    for u, v in edges:
        if u == v:
            raise SelfLoopError(u)
        i, j = idx(u), idx(v)
        key = (i, j) if i < j else (j, i)
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        pairs.append(key)

    adj: list[list[int]] = [[] for _ in labels]
    for i, j in pairs:
        adj[i].append(j)
        adj[j].append(i)
    return Graph(adj, labels, duplicates_collapsed=duplicates)


def degrees(g: Graph) -> tuple[int, ...]:
    """Degree sequence in canonical node order."""
    return tuple(len(a) for a in g.adj)


def delta(g: Graph) -> tuple[Fraction, ...]:
    """Per-node sum of reciprocal neighbor degrees, as exact rationals.

    Raises :class:`IsolatedNodeError` if any node has degree 0.
    """
    deg = degrees(g)
    for i, d in enumerate(deg):
        if d == 0:
            raise IsolatedNodeError(g.labels[i])
    return tuple(sum(Fraction(1, deg[k]) for k in g.adj[j]) for j in range(g.n))


def components(g: Graph) -> list[set[int]]:
    """Connected components as sets of dense node indices."""
    seen = [False] * g.n
    out: list[set[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = {start}
        seen[start] = True
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.add(v)
                    stack.append(v)
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_regular(g: Graph) -> bool:
    """True iff all degrees in the whole graph are equal."""
    deg = degrees(g)
    return len(set(deg)) <= 1


def is_regular_per_component(g: Graph) -> bool:
    """True iff degrees are constant within each connected component."""
    deg = degrees(g)
    return all(len({deg[i] for i in comp}) == 1 for comp in components(g))
