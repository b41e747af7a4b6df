"""Full invariant reports and cheap isomorphism fingerprints."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Any

from .errors import SearchBudgetExceeded
from .graph import BitGraph, SubspaceGraph
from . import solvers
from .solvers import Budget
from .witness import hyperplane_coloring, standard_dominating_set


def finite_or_none(x: float) -> int | None:
    return None if x == math.inf else int(x)


@dataclass
class InvariantReport:
    order: int
    size: int
    degree_sequence: list[int]
    min_degree: int
    max_degree: int
    is_connected: bool
    diameter: float
    girth: float
    is_eulerian: bool
    edge_connectivity: int | None
    clique_number: int | None
    chromatic_number: int | None
    independence_number: int | None
    gamma: int | None
    gamma_t: int | None
    gamma_c: int | None
    gamma_cl: int | None
    is_perfect: bool | None
    is_hamiltonian: bool | None
    witnesses: dict[str, Any] = field(default_factory=dict)
    unknown: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {}
        for key, value in self.__dict__.items():
            if key in ("diameter", "girth"):
                out[key] = finite_or_none(value)
                out[f"{key}_infinite"] = value == math.inf
            else:
                out[key] = value
        return out


def _dominating_hint(g: BitGraph) -> list[int] | None:
    if isinstance(g, SubspaceGraph):
        return standard_dominating_set(g, strict=False).vertices
    return None


def _coloring_hint(g: BitGraph) -> list[int] | None:
    if isinstance(g, SubspaceGraph):
        return hyperplane_coloring(g, strict=False).detail["coloring"]
    return None


def compute_invariants(g: BitGraph, budget: Budget | None = None, hamiltonian: bool = True) -> InvariantReport:
    """Every invariant by exact methods; searches that exhaust ``budget`` report None and are listed in ``unknown``."""
    unknown: list[str] = []
    witnesses: dict[str, Any] = {}

    def attempt(name, fn, *args):
        try:
            return fn(*args)
        except SearchBudgetExceeded:
            unknown.append(name)
            return None

    degrees = g.degree_sequence()
    connected = g.is_connected()
    lam = solvers.edge_connectivity(g) if connected else 0

    clique = attempt("clique_number", solvers.max_clique, g, budget)
    chi = None
    if clique is not None:
        witnesses["clique"] = clique
        res = attempt("chromatic_number", solvers.chromatic_number, g, _coloring_hint(g), clique, budget)
        if res is not None:
            chi = res.value
            witnesses["coloring"] = list(res.coloring)
    indep = attempt("independence_number", solvers.max_independent_set, g, budget)
    if indep is not None:
        witnesses["independent_set"] = indep

    hint = _dominating_hint(g)
    dom: dict[str, int | None] = {}
    for kind in solvers.DOMINATION_KINDS:
        found = attempt(kind, solvers.min_dominating_set, g, kind, hint, budget)
        dom[kind] = None if found is None else len(found)
        if found is not None:
            witnesses[f"{kind}_set"] = found

    perfect = attempt("is_perfect", solvers.is_perfect, g, budget)
    if perfect is not None and perfect[1]:
        witnesses["odd_hole"] = {"cycle": perfect[1], "in": perfect[2]}

    ham = attempt("is_hamiltonian", solvers.is_hamiltonian, g, budget) if hamiltonian else None
    if ham is not None:
        if ham.cycle:
            witnesses["hamiltonian_cycle"] = ham.cycle
        if ham.certificate:
            witnesses["toughness_certificate"] = {"independent": ham.certificate[0], "separator": ham.certificate[1]}

    return InvariantReport(
        order=g.order,
        size=g.size,
        degree_sequence=degrees,
        min_degree=min(degrees) if degrees else 0,
        max_degree=max(degrees) if degrees else 0,
        is_connected=connected,
        diameter=g.diameter(),
        girth=g.girth(),
        is_eulerian=g.is_eulerian(),
        edge_connectivity=lam,
        clique_number=None if clique is None else len(clique),
        chromatic_number=chi,
        independence_number=None if indep is None else len(indep),
        gamma=dom["gamma"],
        gamma_t=dom["gamma_t"],
        gamma_c=dom["gamma_c"],
        gamma_cl=dom["gamma_cl"],
        is_perfect=None if perfect is None else perfect[0],
        is_hamiltonian=None if ham is None else ham.value,
        witnesses=witnesses,
        unknown=unknown,
    )


def fingerprint(g: BitGraph, budget: Budget | None = None) -> tuple:
    """(order, degree multiset, diameter, girth, clique number, domination number)."""
    degrees = tuple(sorted(Counter(g.degree_sequence()).items()))
    omega = len(solvers.max_clique(g, budget))
    dom = solvers.min_dominating_set(g, "gamma", upper=_dominating_hint(g), budget=budget)
    gamma = None if dom is None else len(dom)
    return (g.order, degrees, g.diameter(), g.girth(), omega, gamma)
