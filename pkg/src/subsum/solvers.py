"""Exact (exhaustive) solvers for the hard graph invariants.

All searches visit vertices in ascending index order, so witnesses are
reproducible.  Each solver accepts a :class:`Budget`; running out raises
:class:`SearchBudgetExceeded` instead of silently returning a guess.
"""

from __future__ import annotations

import itertools
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import Disconnected, SearchBudgetExceeded
from .graph import BitGraph, bits


@dataclass(frozen=True)
class Budget:
    """Per-search limits.  ``nodes`` caps search-tree nodes (deterministic);
    ``ms`` caps wall-clock time (not reproducible, off by default)."""

    nodes: int | None = 5_000_000
    ms: int | None = None

    def start(self) -> _Meter:
        return _Meter(self)


class _Meter:
    def __init__(self, budget: Budget) -> None:
        self.nodes = budget.nodes
        self.deadline = None if budget.ms is None else time.monotonic() + budget.ms / 1000
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.nodes is not None and self.used > self.nodes:
            raise SearchBudgetExceeded(f"node budget {self.nodes} exhausted")
        if self.deadline is not None and self.used & 1023 == 0 and time.monotonic() > self.deadline:
            raise SearchBudgetExceeded("time budget exhausted")


def _meter(budget: Budget | None) -> _Meter:
    return (budget or Budget()).start()


# -- cliques -----------------------------------------------------------------

def _color_sort(adj: Sequence[int], P: int) -> tuple[list[int], list[int]]:
    """Greedy colour classes over P; returns vertices with their (non-decreasing) colour numbers."""
    order, colors = [], []
    color = 0
    U = P
    while U:
        color += 1
        Q = U
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~adj[v] & ~low
            U &= ~low
            order.append(v)
            colors.append(color)
    return order, colors


def max_clique(g: BitGraph, budget: Budget | None = None) -> list[int]:
    """A maximum clique by branch and bound with a greedy-colouring bound."""
    adj = g.adj
    meter = _meter(budget)
    best: list[int] = []
    R: list[int] = []

    def expand(P: int) -> None:
        nonlocal best
        order, colors = _color_sort(adj, P)
        for idx in range(len(order) - 1, -1, -1):
            if len(R) + colors[idx] <= len(best):
                return
            meter.tick()
            v = order[idx]
            R.append(v)
            sub = P & adj[v]
            if sub:
                expand(sub)
            elif len(R) > len(best):
                best = list(R)
            R.pop()
            P &= ~(1 << v)

    if g.order:
        expand(g.full_mask)
    return sorted(best)


def max_independent_set(g: BitGraph, budget: Budget | None = None) -> list[int]:
    return max_clique(g.complement(), budget)


# -- colouring ---------------------------------------------------------------

@dataclass(frozen=True)
class ColoringResult:
    value: int
    coloring: tuple[int, ...]
    method: str  # "witness" | "dsatur" | "search"
    clique_size: int


def dsatur_coloring(g: BitGraph) -> list[int]:
    """Greedy DSATUR colouring (no backtracking)."""
    adj = g.adj
    coloring = [-1] * g.order
    neighbor_colors = [0] * g.order
    uncolored = g.full_mask
    while uncolored:
        v = max(bits(uncolored), key=lambda u: (neighbor_colors[u].bit_count(), (adj[u] & uncolored).bit_count(), -u))
        c = 0
        while neighbor_colors[v] >> c & 1:
            c += 1
        coloring[v] = c
        uncolored &= ~(1 << v)
        for u in bits(adj[v]):
            neighbor_colors[u] |= 1 << c
    return coloring


def chromatic_number(
    g: BitGraph,
    hint_coloring: Sequence[int] | None = None,
    clique: Sequence[int] | None = None,
    budget: Budget | None = None,
) -> ColoringResult:
    """Exact chromatic number.

    The lower bound is the clique number.  A proper ``hint_coloring`` that
    already meets it certifies the answer with no search; otherwise a greedy
    DSATUR colouring gives the upper bound and DSATUR backtracking closes
    any gap.
    """
    if g.order == 0:
        return ColoringResult(0, (), "search", 0)
    if clique is None:
        clique = max_clique(g, budget)
    lower = len(clique)
    if hint_coloring is not None and g.is_proper_coloring(hint_coloring):
        used = len(set(hint_coloring))
        if used == lower:
            return ColoringResult(used, tuple(hint_coloring), "witness", lower)
    greedy = dsatur_coloring(g)
    upper = max(greedy) + 1
    if upper == lower:
        return ColoringResult(upper, tuple(greedy), "dsatur", lower)

    adj = g.adj
    meter = _meter(budget)
    best = list(greedy)
    coloring = [-1] * g.order
    # Seed the search with the clique on distinct colours; this breaks colour symmetry.
    for c, v in enumerate(clique):
        coloring[v] = c

    def neighbor_mask(v: int) -> int:
        m = 0
        for u in bits(adj[v]):
            if coloring[u] >= 0:
                m |= 1 << coloring[u]
        return m

    def pick(uncolored: int) -> int:
        return max(bits(uncolored), key=lambda u: (neighbor_mask(u).bit_count(), (adj[u] & uncolored).bit_count(), -u))

    def search(uncolored: int, k: int) -> bool:
        nonlocal upper, best
        if not uncolored:
            if k < upper:
                upper, best = k, list(coloring)
            return upper == lower
        meter.tick()
        v = pick(uncolored)
        forbidden = neighbor_mask(v)
        rest = uncolored & ~(1 << v)
        for c in range(min(k + 1, upper - 1)):
            if c + 1 >= upper:
                break
            if forbidden >> c & 1:
                continue
            coloring[v] = c
            if search(rest, max(k, c + 1)):
                return True
            coloring[v] = -1
        return False

    start = g.full_mask & ~g.mask(clique)
    search(start, lower)
    return ColoringResult(upper, tuple(best), "search", lower)


# -- domination --------------------------------------------------------------

DOMINATION_KINDS = ("gamma", "gamma_t", "gamma_c", "gamma_cl")


@dataclass
class DominationResult:
    values: dict[str, int | None] = field(default_factory=dict)
    witnesses: dict[str, list[int] | None] = field(default_factory=dict)


def _predicate(g: BitGraph, kind: str):
    if kind == "gamma":
        return g.is_dominating
    if kind == "gamma_t":
        return g.is_total_dominating
    if kind == "gamma_c":
        return lambda s: g.is_dominating(s) and g.induces_connected(s)
    if kind == "gamma_cl":
        return lambda s: g.is_dominating(s) and g.is_clique(s)
    raise ValueError(kind)


def min_dominating_set(
    g: BitGraph, kind: str = "gamma", upper: Sequence[int] | None = None, budget: Budget | None = None
) -> list[int] | None:
    """Smallest (then lexicographically first) set of the requested domination kind.

    ``upper`` is a known set of that kind; only strictly smaller sizes are
    searched when it is supplied.  Returns None when no such set exists.
    """
    test = _predicate(g, kind)
    meter = _meter(budget)
    if upper is not None and not test(list(upper)):
        upper = None
    limit = len(upper) - 1 if upper is not None else g.order
    # Cheap size bound: s vertices reach at most the s largest neighbourhoods.
    reach = sorted((row.bit_count() + (kind != "gamma_t") for row in g.adj), reverse=True)
    for size in range(1, limit + 1):
        if sum(reach[:size]) < g.order:
            continue
        try:
            for combo in itertools.combinations(range(g.order), size):
                meter.tick()
                if test(combo):
                    return list(combo)
        except SearchBudgetExceeded as exc:
            exc.bounds = (size, len(upper) if upper is not None else None)
            raise
    return sorted(upper) if upper is not None else None


def domination_numbers(
    g: BitGraph, witness: Sequence[int] | None = None, budget: Budget | None = None
) -> DominationResult:
    result = DominationResult()
    for kind in DOMINATION_KINDS:
        found = min_dominating_set(g, kind, upper=witness, budget=budget)
        result.witnesses[kind] = found
        result.values[kind] = None if found is None else len(found)
    return result


# -- perfectness -------------------------------------------------------------

def find_induced_odd_hole(g: BitGraph, min_len: int = 5, budget: Budget | None = None) -> list[int] | None:
    """An induced odd cycle of length >= min_len, or None after exhausting the search.

    Each cycle is grown as an induced path from its smallest vertex; a path
    vertex's closed neighbourhood is blocked once it becomes interior.
    """
    adj = g.adj
    meter = _meter(budget)
    path: list[int] = []

    def grow(s: int, last: int, blocked: int) -> list[int] | None:
        candidates = adj[last] & ~blocked
        for w in bits(candidates):
            meter.tick()
            if last != s and adj[s] >> w & 1:
                length = len(path) + 1
                if length >= min_len and length % 2 == 1:
                    return path + [w]
                continue
            path.append(w)
            inner = adj[last] | (1 << last) if last != s else 0
            hole = grow(s, w, blocked | inner | (1 << w))
            if hole:
                return hole
            path.pop()
        return None

    for s in range(g.order):
        path[:] = [s]
        lower = (1 << (s + 1)) - 1
        hole = grow(s, s, lower)
        if hole:
            return hole
    return None


def is_perfect(g: BitGraph, budget: Budget | None = None) -> tuple[bool, list[int] | None, str | None]:
    """Strong perfect graph test: no odd hole in the graph or its complement.

    Returns ``(perfect, hole, where)`` with ``where`` in {"graph", "complement"}.
    """
    hole = find_induced_odd_hole(g, budget=budget)
    if hole:
        return False, hole, "graph"
    hole = find_induced_odd_hole(g.complement(), budget=budget)
    if hole:
        return False, hole, "complement"
    return True, None, None


# -- Hamiltonicity ------------------------------------------------------------

@dataclass(frozen=True)
class HamiltonResult:
    value: bool
    cycle: list[int] | None = None
    # (independent set I, its neighbourhood Y) violating 1-toughness.
    certificate: tuple[list[int], list[int]] | None = None


def check_toughness_certificate(g: BitGraph, independent: Sequence[int], separator: Sequence[int]) -> bool:
    """True when removing ``separator`` leaves more components than its size.

    ``independent`` must be an independent set whose neighbours all lie in
    ``separator``; each of its vertices is then its own component of G - Y,
    and any vertex outside both sets adds at least one more.  A graph with
    such a pair is not 1-tough and so has no Hamiltonian cycle.
    """
    I, Y = g.mask(independent), g.mask(separator)
    if I & Y or not g.is_independent(independent):
        return False
    if any(g.adj[v] & ~Y for v in independent):
        return False
    components = len(independent) + (1 if g.full_mask & ~(I | Y) else 0)
    return components > len(separator)


def toughness_certificate(g: BitGraph) -> tuple[list[int], list[int]] | None:
    """Look for a 1-toughness violation among degree classes.

    For each degree value, greedily take an independent set of vertices of
    that degree (ascending index) and test it against its neighbourhood.
    """
    degrees = g.degree_sequence()
    for d in sorted(set(degrees)):
        chosen: list[int] = []
        blocked = 0
        for v in range(g.order):
            if degrees[v] == d and not blocked >> v & 1:
                chosen.append(v)
                blocked |= g.adj[v] | (1 << v)
        neighbours = 0
        for v in chosen:
            neighbours |= g.adj[v]
        separator = list(bits(neighbours))
        if check_toughness_certificate(g, chosen, separator):
            return chosen, separator
    return None


def hamiltonian_cycle(g: BitGraph, budget: Budget | None = None) -> list[int] | None:
    """A Hamiltonian cycle through vertex 0, or None once the search is exhausted."""
    N = g.order
    if N < 3 or any(row.bit_count() < 2 for row in g.adj):
        return None
    if not g.is_connected():
        return None
    adj = g.adj
    meter = _meter(budget)
    start = 0
    path = [start]

    def feasible(free: int, end: int) -> bool:
        # Every unvisited vertex still needs two usable neighbours.
        usable = free | (1 << end) | (1 << start)
        return all((adj[u] & usable).bit_count() >= 2 for u in bits(free))

    def extend(v: int, free: int) -> bool:
        if not free:
            return bool(adj[v] >> start & 1)
        meter.tick()
        if not adj[start] & free:
            return False
        cands = sorted(bits(adj[v] & free), key=lambda u: ((adj[u] & free).bit_count(), u))
        for u in cands:
            rest = free & ~(1 << u)
            if rest and not feasible(rest, u):
                continue
            path.append(u)
            if extend(u, rest):
                return True
            path.pop()
        return False

    if extend(start, g.full_mask & ~1):
        return list(path)
    return None


def is_hamiltonian(g: BitGraph, budget: Budget | None = None) -> HamiltonResult:
    """Exact Hamiltonicity: a toughness certificate settles "no" outright,
    otherwise backtracking either finds a cycle or exhausts the search."""
    if g.order >= 3:
        cert = toughness_certificate(g)
        if cert is not None:
            return HamiltonResult(False, certificate=cert)
    cycle = hamiltonian_cycle(g, budget)
    return HamiltonResult(cycle is not None, cycle=cycle)


# -- edge connectivity --------------------------------------------------------

def _max_flow(adj: Sequence[int], s: int, t: int, cap_limit: int) -> int:
    """Unit-capacity undirected max-flow by BFS augmenting paths, stopping at ``cap_limit``."""
    N = len(adj)
    residual = [[0] * N for _ in range(N)]
    for u in range(N):
        for v in bits(adj[u]):
            residual[u][v] = 1
    flow = 0
    while flow < cap_limit:
        parent = [-1] * N
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] < 0:
            u = queue.popleft()
            row = residual[u]
            for v in range(N):
                if row[v] > 0 and parent[v] < 0:
                    parent[v] = u
                    queue.append(v)
        if parent[t] < 0:
            break
        v = t
        while v != s:
            u = parent[v]
            residual[u][v] -= 1
            residual[v][u] += 1
            v = u
        flow += 1
    return flow


def edge_connectivity(g: BitGraph) -> int:
    """Global minimum edge cut: min over t of max-flow(0, t)."""
    if g.order < 2:
        return 0
    if not g.is_connected():
        raise Disconnected("edge connectivity needs a connected graph")
    best = min(g.degree_sequence())
    for t in range(1, g.order):
        best = min(best, _max_flow(g.adj, 0, t, best))
    return best
