"""Closed-form predictions for the subspace sum graph of GF(q)^n.

Everything here is pure integer/rational arithmetic on (n, k, q); nothing
touches a graph.  The printed degree and maximum-degree expressions are
kept exactly as stated, defects included, with :func:`degree_formula_candidate`
carrying the corrected count separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import NonIntegerTerm, RangeError
from .subspaces import galois_number, gaussian_binomial


def _check(n: int, q: int) -> None:
    if n < 2 or q < 2:
        raise RangeError(f"need n >= 2 and q >= 2, got n={n}, q={q}")


def _falling(base: int, q: int, start: int, stop: int) -> int:
    """prod_{i=start}^{stop-1} (base - q**i); empty product is 1."""
    out = 1
    for i in range(start, stop):
        out *= base - q**i
    return out


def _require_int(term: str, value: Fraction) -> int:
    if value.denominator != 1:
        raise NonIntegerTerm(term, value)
    return value.numerator


def predicted_order(n: int, q: int) -> int:
    _check(n, q)
    return galois_number(n, q) - 2


def predicted_clique_chromatic(n: int, q: int) -> int:
    """1 + q + ... + q**(n-1)."""
    _check(n, q)
    return sum(q**i for i in range(n))


def predicted_domination(n: int) -> int:
    if n < 2:
        raise RangeError(f"need n >= 2, got {n}")
    return n


def predicted_min_degree(n: int, q: int) -> int:
    _check(n, q)
    return q ** (n - 1)


def predicted_edge_connectivity(n: int, q: int) -> int:
    _check(n, q)
    return q ** (n - 1)


def paper_degree_terms(n: int, k: int, q: int) -> list[Fraction]:
    """The printed N_r for r = 0..k-1, as exact rationals.

    N_r = (q^k-1)...(q^k-q^(r-1)) * (q^n-q^k)...(q^n-q^(n-1))
          / ((q^(n-k+r)-1)...(q^(n-k+r)-q^(n-k+r-1)))
    """
    _check(n, q)
    if not 1 <= k <= n - 1:
        raise RangeError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    terms = []
    for r in range(k):
        num = _falling(q**k, q, 0, r) * _falling(q**n, q, k, n)
        m = n - k + r
        den = _falling(q**m, q, 0, m)
        terms.append(Fraction(num, den))
    return terms


def degree_formula_paper(n: int, k: int, q: int) -> int:
    """Sum of the printed N_r; raises NonIntegerTerm if some N_r is fractional."""
    return sum(_require_int(f"N_{r}(n={n}, k={k}, q={q})", t) for r, t in enumerate(paper_degree_terms(n, k, q)))


def paper_max_degree_terms(n: int, q: int) -> list[Fraction]:
    """Terms [n-1 choose r]_q * q^(n-r-1) / (q^r + ... + q + 1) for r = 0..n-2."""
    _check(n, q)
    return [
        Fraction(gaussian_binomial(n - 1, r, q) * q ** (n - r - 1), sum(q**i for i in range(r + 1)))
        for r in range(n - 1)
    ]


def predicted_max_degree_paper(n: int, q: int) -> int:
    return sum(_require_int(f"Delta term r={r} (n={n}, q={q})", t) for r, t in enumerate(paper_max_degree_terms(n, q)))


def candidate_degree_terms(n: int, k: int, q: int) -> list[int]:
    """N_r with the denominator counting ordered generating tuples of one target subspace:
    an ordered basis of the r-dimensional meet, then n-k vectors extending it."""
    _check(n, q)
    if not 1 <= k <= n - 1:
        raise RangeError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    terms = []
    for r in range(k):
        m = n - k + r
        num = _falling(q**k, q, 0, r) * _falling(q**n, q, k, n)
        den = _falling(q**r, q, 0, r) * _falling(q**m, q, r, m)
        value, rem = divmod(num, den)
        if rem:
            raise NonIntegerTerm(f"candidate N_{r}(n={n}, k={k}, q={q})", Fraction(num, den))
        terms.append(value)
    return terms


def degree_formula_candidate(n: int, k: int, q: int) -> int:
    return sum(candidate_degree_terms(n, k, q))


def predicted_eulerian(q: int) -> bool:
    return q % 2 == 0


def predicted_perfect(n: int) -> bool:
    return n == 3


def predicted_diameter(n: int) -> int:
    if n < 2:
        raise RangeError(f"need n >= 2, got {n}")
    return 1 if n == 2 else 2


def predicted_complete(n: int) -> bool:
    return n == 2


@dataclass(frozen=True)
class Prediction:
    name: str
    params: dict[str, int]
    value: Any
    source: str

    def to_json(self) -> dict:
        value = self.value
        if isinstance(value, Fraction):
            value = str(value)
        return {"name": self.name, "params": self.params, "value": value, "source": self.source}


def _attempt(fn, *args):
    try:
        return fn(*args)
    except NonIntegerTerm as exc:
        return f"NonIntegerTerm: {exc}"


def all_predictions(n: int, q: int) -> list[Prediction]:
    """Every closed-form prediction for GF(q)^n, in a fixed order."""
    _check(n, q)
    nq = {"n": n, "q": q}
    out = [
        Prediction("order", nq, predicted_order(n, q), "order = G(n,q) - 2"),
        Prediction("complete", {"n": n}, predicted_complete(n), "complete iff n = 2"),
        Prediction("diameter", {"n": n}, predicted_diameter(n), "diameter 2 for n >= 3"),
        Prediction("girth", {}, 3, "triangulated, girth 3"),
        Prediction("clique_number", nq, predicted_clique_chromatic(n, q), "omega = 1 + q + ... + q^(n-1)"),
        Prediction("chromatic_number", nq, predicted_clique_chromatic(n, q), "chi = 1 + q + ... + q^(n-1)"),
        Prediction("domination_number", {"n": n}, predicted_domination(n), "gamma = gamma_t = gamma_c = gamma_cl = n"),
        Prediction("min_degree", nq, predicted_min_degree(n, q), "delta = q^(n-1)"),
        Prediction("max_degree_paper", nq, _attempt(predicted_max_degree_paper, n, q), "printed Delta sum"),
        Prediction("edge_connectivity", nq, predicted_edge_connectivity(n, q), "lambda = q^(n-1)"),
        Prediction("eulerian", {"q": q}, predicted_eulerian(q), "Eulerian iff q even"),
        Prediction("perfect", {"n": n}, predicted_perfect(n), "perfect iff n = 3"),
    ]
    for k in range(1, n):
        nkq = {"n": n, "k": k, "q": q}
        out.append(Prediction(f"degree_formula_paper.k{k}", nkq, _attempt(degree_formula_paper, n, k, q), "printed sum of N_r"))
        out.append(Prediction(f"degree_formula_candidate.k{k}", nkq, degree_formula_candidate(n, k, q), "corrected N_r denominator"))
    return out
