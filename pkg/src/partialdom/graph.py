"""Immutable simple graphs stored as adjacency bit-rows, plus vertex sets over them."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

MAX_ORDER = 1024


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range parameters."""


def popcount(x: int) -> int:
    return x.bit_count()


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``range(n)`` backed by an integer bitmask."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise GraphError(f"vertex set {self.bits:#x} has bits outside [0, {self.n})")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int] = ()) -> VertexSet:
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} outside [0, {n})")
            bits |= 1 << v
        return cls(bits, n)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls((1 << n) - 1, n)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def _other(self, other: VertexSet) -> int:
        if other.n != self.n:
            raise GraphError(f"vertex sets over different orders {self.n} and {other.n}")
        return other.bits

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits | self._other(other), self.n)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & self._other(other), self.n)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & ~self._other(other), self.n)

    def __le__(self, other: VertexSet) -> bool:
        return self.bits & ~self._other(other) == 0

    def complement(self) -> VertexSet:
        return VertexSet(((1 << self.n) - 1) & ~self.bits, self.n)

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()}, n={self.n})"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[i]`` is an integer whose bit ``j`` is set iff ``i`` and ``j`` are adjacent.
    Construction validates symmetry, the absence of loops and the order limit.
    """

    n: int
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside [1, {MAX_ORDER}]")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        for i, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise GraphError(f"row {i} has bits outside [0, {self.n})")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside [0, {n})")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in iter_bits(self.adj[i] >> (i + 1) << (i + 1))]

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @cached_property
    def closed(self) -> tuple[int, ...]:
        """Closed-neighbourhood masks ``N[v]``."""
        return tuple(row | (1 << v) for v, row in enumerate(self.adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertex_set(self, vertices: Iterable[int] | VertexSet = ()) -> VertexSet:
        if isinstance(vertices, VertexSet):
            if vertices.n != self.n:
                raise GraphError(f"vertex set over order {vertices.n}, graph has order {self.n}")
            return vertices
        return VertexSet.of(self.n, vertices)

    def closed_neighborhood(self, s: int) -> int:
        """``N[S]`` as a mask, for a mask ``s``."""
        out = 0
        closed = self.closed
        for v in iter_bits(s):
            out |= closed[v]
        return out

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def distances_from(self, source: int) -> list[float]:
        dist: list[float] = [math.inf] * self.n
        dist[source] = 0
        frontier = 1 << source
        seen = frontier
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            nxt &= ~seen
            seen |= nxt
            for v in iter_bits(nxt):
                dist[v] = d
            frontier = nxt
        return dist

    def components(self) -> list[int]:
        """Vertex masks of the connected components, by lowest vertex."""
        out = []
        left = self.full_mask
        while left:
            seen = frontier = left & -left
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~seen
                seen |= frontier
            out.append(seen)
            left &= ~seen
        return out

    def induced(self, mask: int) -> tuple[Graph, list[int]]:
        """Subgraph induced by ``mask`` and the list mapping new to old indices."""
        old = list(iter_bits(mask))
        new = {v: i for i, v in enumerate(old)}
        rows = []
        for v in old:
            row = 0
            for w in iter_bits(self.adj[v] & mask):
                row |= 1 << new[w]
            rows.append(row)
        return Graph(len(old), tuple(rows)), old

    def is_connected(self) -> bool:
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full_mask


@dataclass(frozen=True)
class CoverageView:
    closed: VertexSet
    boundary: VertexSet
    undominated: VertexSet
    dom_count: int


def cover(g: Graph, s: Iterable[int] | VertexSet) -> CoverageView:
    """What ``S`` dominates: ``N[S]``, the boundary ``N[S] - S`` and the rest."""
    vs = g.vertex_set(s)
    closed = g.closed_neighborhood(vs.bits)
    return CoverageView(
        closed=VertexSet(closed, g.n),
        boundary=VertexSet(closed & ~vs.bits, g.n),
        undominated=VertexSet(g.full_mask & ~closed, g.n),
        dom_count=popcount(closed),
    )


@dataclass(frozen=True)
class GraphClass:
    n: int
    min_degree: int
    max_degree: int
    is_cubic: bool
    is_supercubic: bool
    is_connected: bool
    girth: float  # math.inf for forests

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["girth"] = None if math.isinf(self.girth) else int(self.girth)
        return d


def girth(g: Graph) -> float:
    """Length of a shortest cycle, by BFS from every vertex."""
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in iter_bits(g.adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def classify(g: Graph) -> GraphClass:
    degs = g.degrees()
    lo, hi = min(degs), max(degs)
    return GraphClass(
        n=g.n,
        min_degree=lo,
        max_degree=hi,
        is_cubic=lo == hi == 3,
        is_supercubic=lo >= 3,
        is_connected=g.is_connected(),
        girth=girth(g),
    )


def is_supercubic(g: Graph) -> bool:
    return min(g.degrees()) >= 3


def is_connected_cubic(g: Graph) -> bool:
    return all(d == 3 for d in g.degrees()) and g.is_connected()


def square_graph(g: Graph) -> Graph:
    """Same vertices; ``i ~ j`` iff ``0 < dist(i, j) <= 2``."""
    rows = []
    for v in range(g.n):
        row = g.adj[v]
        for w in iter_bits(g.adj[v]):
            row |= g.adj[w]
        rows.append(row & ~(1 << v))
    return Graph(g.n, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.adj + tuple(row << shift for row in h.adj))


def is_packing(g: Graph, s: Iterable[int] | VertexSet) -> bool:
    """True iff the closed neighbourhoods of ``S`` are pairwise disjoint."""
    seen = 0
    for v in g.vertex_set(s):
        if seen & g.closed[v]:
            return False
        seen |= g.closed[v]
    return True
