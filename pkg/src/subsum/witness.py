"""Explicit constructions that certify the graph's structural claims.

Each builder returns a :class:`Witness` whose ``checks`` were evaluated on
the actual graph.  With ``strict=True`` (the default) a failed check raises
:class:`WitnessError`; the verification harness passes ``strict=False`` and
records the failure instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .errors import AlreadyAdjacent, DimensionTooSmall, ParityError, WitnessError, ZeroAnchor
from .graph import SubspaceGraph
from .linalg import Row, Subspace, extend_to_basis, parse_vector, subspace_intersection, subspace_sum, unit_vector


@dataclass
class Witness:
    name: str
    vertices: list[int]
    checks: dict[str, bool] = field(default_factory=dict)
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def require(self) -> Witness:
        if not self.ok:
            raise WitnessError(f"{self.name}: failed checks {self.failed()}")
        return self

    def to_json(self, g: SubspaceGraph | None = None) -> dict:
        out: dict[str, Any] = {"name": self.name, "vertices": self.vertices}
        if g is not None:
            out["labels"] = [g.label(v) for v in self.vertices]
        out["checks"] = self.checks
        out.update(self.detail)
        return out


def _finish(w: Witness, strict: bool) -> Witness:
    return w.require() if strict else w


def _vadd(g: SubspaceGraph, a: Row, b: Row) -> Row:
    f = g.field
    return tuple(f.add(x, y) for x, y in zip(a, b))


def _span(g: SubspaceGraph, vectors) -> Subspace:
    return Subspace.span(g.field, g.n, vectors)


def hyperplane_clique(g: SubspaceGraph, strict: bool = True) -> Witness:
    """All (n-1)-dimensional subspaces: a clique that cannot be enlarged."""
    vs = g.by_dimension(g.n - 1)
    w = Witness("hyperplane_clique", vs)
    w.checks["clique"] = g.is_clique(vs)
    w.checks["maximal"] = g.is_maximal_clique(vs)
    return _finish(w, strict)


def hyperplane_coloring(g: SubspaceGraph, strict: bool = True) -> Witness:
    """Colour each vertex by the first hyperplane (by index) containing it.

    Adjacent vertices never share a hyperplane, so this is a homomorphism
    onto the hyperplane clique and a proper colouring with that many colours.
    """
    hyper = g.by_dimension(g.n - 1)
    coloring = []
    for v in g.vertices:
        coloring.append(next(c for c, h in enumerate(hyper) if g.vertices[h].contains(v)))
    w = Witness("hyperplane_coloring", list(range(g.order)))
    w.detail["coloring"] = coloring
    w.detail["colors"] = len(set(coloring))
    w.checks["proper"] = g.is_proper_coloring(coloring)
    w.checks["colors_equal_hyperplanes"] = len(set(coloring)) == len(hyper)
    w.checks["hyperplanes_fixed"] = all(coloring[h] == c for c, h in enumerate(hyper))
    return _finish(w, strict)


def standard_dominating_set(g: SubspaceGraph, strict: bool = True) -> Witness:
    """The n coordinate hyperplanes <e_j : j != i>."""
    n = g.n
    vs = [g.index_of(_span(g, [unit_vector(n, j) for j in range(n) if j != i])) for i in range(n)]
    w = Witness("standard_dominating_set", vs)
    w.checks["dominating"] = g.is_dominating(vs)
    w.checks["total_dominating"] = g.is_total_dominating(vs)
    w.checks["connected"] = g.induces_connected(vs)
    w.checks["clique"] = g.is_clique(vs)
    w.checks["minimal"] = all(not g.is_dominating(vs[:i] + vs[i + 1:]) for i in range(n))
    return _finish(w, strict)


def independent_set_odd(g: SubspaceGraph, strict: bool = True) -> Witness:
    """For n = 2m+1: every vertex of dimension <= m."""
    if g.n % 2 == 0 or g.n < 3:
        raise ParityError(f"needs odd n >= 3, got n = {g.n}")
    m = g.n // 2
    vs = [i for i, d in enumerate(g.dim_of) if d <= m]
    w = Witness("independent_set_odd", vs)
    w.checks["independent"] = g.is_independent(vs)
    w.checks["maximal"] = g.is_maximal_independent(vs)
    return _finish(w, strict)


def independent_set_even(g: SubspaceGraph, anchor: Sequence[int] | str | None = None, strict: bool = True) -> Witness:
    """For n = 2m: every vertex of dimension <= m-1, plus the m-dimensional ones containing ``anchor``."""
    if g.n % 2:
        raise ParityError(f"needs even n, got n = {g.n}")
    if anchor is None:
        anchor = unit_vector(g.n, 0)
    elif isinstance(anchor, str):
        anchor = parse_vector(anchor, g.field, g.n)
    anchor = tuple(anchor)
    if not any(anchor):
        raise ZeroAnchor("the anchor vector must be nonzero")
    m = g.n // 2
    vs = [i for i, d in enumerate(g.dim_of) if d < m or (d == m and g.vertices[i].contains_vector(anchor))]
    w = Witness("independent_set_even", vs)
    w.detail["anchor"] = "".join(str(a) for a in anchor) if g.field.q <= 10 else ".".join(map(str, anchor))
    w.checks["independent"] = g.is_independent(vs)
    w.checks["maximal"] = g.is_maximal_independent(vs)
    return _finish(w, strict)


def triangle_through(g: SubspaceGraph, v: int, strict: bool = True) -> Witness:
    """A triangle (v, v2, v3): v2 spans the basis extension, v3 pairs the two bases."""
    W = g.vertices[v]
    alpha = list(W.basis)
    beta = list(extend_to_basis(W).rows)
    W2 = _span(g, beta)
    short, long_ = (alpha, beta) if len(alpha) <= len(beta) else (beta, alpha)
    k = len(short)
    W3 = _span(g, [_vadd(g, short[i], long_[i]) for i in range(k)] + long_[k:])
    vs = [v, g.index_of(W2), g.index_of(W3)]
    w = Witness("triangle", vs)
    w.checks["distinct"] = len(set(vs)) == 3
    w.checks["triangle"] = g.is_clique(vs)
    return _finish(w, strict)


def common_neighbor(g: SubspaceGraph, v1: int, v2: int, strict: bool = True) -> Witness:
    """A vertex adjacent to both of two distinct non-adjacent vertices (n >= 3)."""
    if g.n < 3:
        raise DimensionTooSmall("common neighbours of non-adjacent pairs need n >= 3")
    if v1 == v2:
        raise ValueError("the two vertices must be distinct")
    if g.has_edge(v1, v2):
        raise AlreadyAdjacent(f"vertices {v1} and {v2} are adjacent")
    A, B = g.vertices[v1], g.vertices[v2]
    meet = subspace_intersection(A, B)
    if meet.dim:
        case = 1
        W3 = _span(g, extend_to_basis(meet).rows)
    else:
        case = 2
        alpha, beta = (list(A.basis), list(B.basis)) if A.dim <= B.dim else (list(B.basis), list(A.basis))
        k = len(alpha)
        gamma = list(extend_to_basis(subspace_sum(A, B)).rows)
        W3 = _span(g, [_vadd(g, alpha[i], beta[i]) for i in range(k)] + beta[k:] + gamma)
    u = g.index_of(W3)
    w = Witness("common_neighbor", [v1, v2, u])
    w.detail["case"] = case
    w.checks["adjacent_to_both"] = g.has_edge(v1, u) and g.has_edge(v2, u)
    return _finish(w, strict)


C5_PAIRS = [(i, j) for i in range(5) for j in range(i + 1, 5)]


def paper_c5(g: SubspaceGraph, strict: bool = True) -> Witness:
    """The five subspaces <a1,a2,T>, <a3,a4,T>, <a1+a3,a2,T>, <a1,a4,T>, <a1+a3,a2+a4,T>
    (a_i = e_i, T = remaining unit vectors) and their full adjacency pattern.

    Only distinctness is enforced; whether the five form an induced 5-cycle
    is reported in ``detail`` and the ``induced_c5`` flag, never assumed.
    """
    n = g.n
    if n < 4:
        raise DimensionTooSmall(f"needs n >= 4, got n = {n}")
    e = [unit_vector(n, j) for j in range(n)]
    T = e[4:]
    a1, a2, a3, a4 = e[:4]
    gens = [
        [a1, a2],
        [a3, a4],
        [_vadd(g, a1, a3), a2],
        [a1, a4],
        [_vadd(g, a1, a3), _vadd(g, a2, a4)],
    ]
    vs = [g.index_of(_span(g, rows + T)) for rows in gens]
    cycle = {(i, (i + 1) % 5) for i in range(5)} | {((i + 1) % 5, i) for i in range(5)}
    edges = [[i + 1, j + 1] for i, j in C5_PAIRS if g.has_edge(vs[i], vs[j])]
    w = Witness("paper_c5", vs)
    w.detail["cycle_edges_present"] = [[i + 1, j + 1] for i, j in C5_PAIRS if (i, j) in cycle and g.has_edge(vs[i], vs[j])]
    w.detail["cycle_edges_missing"] = [[i + 1, j + 1] for i, j in C5_PAIRS if (i, j) in cycle and not g.has_edge(vs[i], vs[j])]
    w.detail["chords"] = [[i + 1, j + 1] for i, j in C5_PAIRS if (i, j) not in cycle and g.has_edge(vs[i], vs[j])]
    w.detail["edges"] = edges
    w.detail["induced_c5"] = g.is_induced_cycle(vs)
    w.checks["distinct"] = len(set(vs)) == 5
    return _finish(w, strict)


def first_nonadjacent_pair(g: SubspaceGraph) -> tuple[int, int] | None:
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if not g.has_edge(u, v):
                return u, v
    return None
