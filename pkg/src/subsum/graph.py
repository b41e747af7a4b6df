"""Graphs on packed adjacency rows and the subspace sum graph itself.

Vertex ``i`` is bit ``i`` of every adjacency row.  Distances and girth use
``math.inf`` as the "no path / no cycle" sentinel.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DimensionTooSmall, TooLarge
from .gf import FieldSpec
from .linalg import Subspace, stacked_rank, subspace_sum
from .subspaces import enumerate_proper_nontrivial, galois_number

INF = math.inf
MAX_ORDER = 20_000


def bits(mask: int) -> Iterable[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class BitGraph:
    """A simple undirected graph with adjacency stored as one int bitset per vertex."""

    def __init__(self, adj: Sequence[int]) -> None:
        self.adj = list(adj)
        for i, row in enumerate(self.adj):
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            if row >> len(self.adj):
                raise ValueError(f"vertex {i} has a neighbour outside the graph")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> BitGraph:
        adj = [0] * order
        for u, v in edges:
            if u == v or not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"bad edge ({u}, {v}) for order {order}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(adj)

    @classmethod
    def complete(cls, order: int) -> BitGraph:
        full = (1 << order) - 1
        return cls([full ^ (1 << i) for i in range(order)])

    @property
    def order(self) -> int:
        return len(self.adj)

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def complement(self) -> BitGraph:
        full = self.full_mask
        return BitGraph([full ^ row ^ (1 << i) for i, row in enumerate(self.adj)])

    def is_symmetric(self) -> bool:
        return all(self.adj[v] >> u & 1 for u in range(self.order) for v in bits(self.adj[u]))

    # -- degrees -------------------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def size(self) -> int:
        return sum(self.degree_sequence()) // 2

    # -- distances -----------------------------------------------------------

    def bfs(self, source: int) -> list[float]:
        dist: list[float] = [INF] * self.order
        dist[source] = 0
        frontier = 1 << source
        seen = frontier
        d = 0
        while frontier:
            d += 1
            reach = 0
            for u in bits(frontier):
                reach |= self.adj[u]
            frontier = reach & ~seen
            seen |= frontier
            for v in bits(frontier):
                dist[v] = d
        return dist

    def distance(self, u: int, v: int) -> float:
        return self.bfs(u)[v]

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        return INF not in self.bfs(0)

    def diameter(self) -> float:
        if self.order == 0:
            return 0
        return max(max(self.bfs(v)) for v in range(self.order))

    def girth(self) -> float:
        """Length of a shortest cycle, via BFS from every vertex."""
        best = INF
        for root in range(self.order):
            dist = [-1] * self.order
            parent = [-1] * self.order
            dist[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                if 2 * dist[u] + 1 >= best:
                    break
                for w in bits(self.adj[u]):
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif w != parent[u]:
                        best = min(best, dist[u] + dist[w] + 1)
        return best

    def is_eulerian(self) -> bool:
        """Connected with every degree even."""
        return self.is_connected() and all(d % 2 == 0 for d in self.degree_sequence())

    # -- set predicates used by witnesses and solvers -------------------------

    def mask(self, vertices: Iterable[int]) -> int:
        m = 0
        for v in vertices:
            m |= 1 << v
        return m

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        m = self.mask(vs)
        return all((m & ~(1 << v)) & ~self.adj[v] == 0 for v in vs)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        m = self.mask(vs)
        return all(self.adj[v] & m == 0 for v in vs)

    def is_maximal_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        if not self.is_clique(vs):
            return False
        common = self.full_mask
        for v in vs:
            common &= self.adj[v]
        return common == 0

    def is_maximal_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        if not self.is_independent(vs):
            return False
        covered = self.mask(vs)
        for v in vs:
            covered |= self.adj[v]
        return covered == self.full_mask

    def dominated(self, vertices: Iterable[int]) -> int:
        m = 0
        for v in vertices:
            m |= self.adj[v] | (1 << v)
        return m

    def is_dominating(self, vertices: Iterable[int]) -> bool:
        return self.dominated(vertices) == self.full_mask

    def is_total_dominating(self, vertices: Iterable[int]) -> bool:
        m = 0
        for v in vertices:
            m |= self.adj[v]
        return m == self.full_mask

    def induces_connected(self, vertices: Iterable[int]) -> bool:
        m = self.mask(vertices)
        if m == 0:
            return False
        seen = frontier = m & -m
        while frontier:
            reach = 0
            for u in bits(frontier):
                reach |= self.adj[u]
            frontier = reach & m & ~seen
            seen |= frontier
        return seen == m

    def is_proper_coloring(self, coloring: Sequence[int]) -> bool:
        return all(coloring[u] != coloring[v] for u, v in self.edges())

    def is_induced_cycle(self, cycle: Sequence[int]) -> bool:
        k = len(cycle)
        if k < 3 or len(set(cycle)) != k:
            return False
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j == i + 1 or (i == 0 and j == k - 1)
                if self.has_edge(cycle[i], cycle[j]) != consecutive:
                    return False
        return True

    def is_hamiltonian_cycle(self, cycle: Sequence[int]) -> bool:
        k = len(cycle)
        return (
            k == self.order >= 3
            and len(set(cycle)) == k
            and all(self.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k))
        )


class SubspaceGraph(BitGraph):
    """The subspace sum graph of GF(q)^n: vertices are the nontrivial proper
    subspaces, and two are adjacent when they sum to the whole space."""

    def __init__(self, field: FieldSpec, n: int, vertices: Sequence[Subspace], adj: Sequence[int]) -> None:
        super().__init__(adj)
        self.field = field
        self.n = n
        self.vertices = list(vertices)
        self.dim_of = [v.dim for v in self.vertices]

    @cached_property
    def index(self) -> dict[Subspace, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def index_of(self, w: Subspace) -> int:
        return self.index[w]

    def by_dimension(self, k: int) -> list[int]:
        return [i for i, d in enumerate(self.dim_of) if d == k]

    def label(self, i: int) -> str:
        return self.vertices[i].to_text()

    def __repr__(self) -> str:
        return f"SubspaceGraph({self.field}, n={self.n}, order={self.order}, size={self.size})"


def build_graph(f: FieldSpec, n: int, max_order: int = MAX_ORDER, generic: bool = False) -> SubspaceGraph:
    """Build the subspace sum graph; adjacency is decided by the rank of the stacked bases."""
    if n < 2:
        raise DimensionTooSmall(f"the ambient dimension must be at least 2, got {n}")
    order = galois_number(n, f.q) - 2
    if order > max_order:
        raise TooLarge(f"order {order} exceeds the cap {max_order}")
    vertices = enumerate_proper_nontrivial(f, n, max_count=max_order)
    adj = [0] * len(vertices)
    dims = [v.dim for v in vertices]
    for i, a in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            if dims[i] + dims[j] >= n and stacked_rank(a, vertices[j], generic=generic) == n:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return SubspaceGraph(f, n, vertices, adj)


def adjacency_by_sum(g: SubspaceGraph) -> list[int]:
    """Adjacency recomputed from canonical subspace sums (second code path)."""
    full = g.n
    adj = [0] * g.order
    for i, a in enumerate(g.vertices):
        for j in range(i + 1, g.order):
            if subspace_sum(a, g.vertices[j]).dim == full:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj
