"""Counting and enumerating the subspaces of GF(q)^n."""

from __future__ import annotations

import itertools
from typing import Iterator

from .errors import DimensionTooSmall, RangeError, TooLarge
from .gf import FieldSpec
from .linalg import Subspace

MAX_SUBSPACES = 1_000_000


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over a field of order q."""
    if not (0 <= k <= n) or q < 2:
        raise RangeError(f"gaussian_binomial needs 0 <= k <= n and q >= 2, got n={n}, k={k}, q={q}")
    num = den = 1
    for i in range(k):
        num *= q**n - q**i
        den *= q**k - q**i
    return num // den


def galois_number(n: int, q: int) -> int:
    """Total number of subspaces of GF(q)^n."""
    if n < 0 or q < 2:
        raise RangeError(f"galois_number needs n >= 0 and q >= 2, got n={n}, q={q}")
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def _rref_shapes(f: FieldSpec, n: int, k: int) -> Iterator[Subspace]:
    q = f.q
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        # Free slots: entries right of a row's pivot that sit in non-pivot columns.
        free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivot_set]
        template = [[0] * n for _ in range(k)]
        for i, pc in enumerate(pivots):
            template[i][pc] = 1
        for values in itertools.product(range(q), repeat=len(free)):
            for (i, j), a in zip(free, values):
                template[i][j] = a
            yield Subspace(f, n, tuple(tuple(row) for row in template))


def enumerate_subspaces(f: FieldSpec, n: int, k: int, max_count: int = MAX_SUBSPACES) -> list[Subspace]:
    """All k-dimensional subspaces in canonical form.

    Order: pivot-column sets lexicographically, then free entries as a
    base-q counter (last free slot fastest).
    """
    if not (0 <= k <= n):
        raise RangeError(f"need 0 <= k <= n, got k={k}, n={n}")
    count = gaussian_binomial(n, k, f.q)
    if count > max_count:
        raise TooLarge(f"{count} subspaces of dimension {k} exceed the cap {max_count}")
    return list(_rref_shapes(f, n, k))


def enumerate_proper_nontrivial(f: FieldSpec, n: int, max_count: int = MAX_SUBSPACES) -> list[Subspace]:
    """Every subspace of dimension 1..n-1, in ascending dimension."""
    if n < 2:
        raise DimensionTooSmall(f"the ambient dimension must be at least 2, got {n}")
    total = galois_number(n, f.q) - 2
    if total > max_count:
        raise TooLarge(f"{total} subspaces exceed the cap {max_count}")
    out: list[Subspace] = []
    for k in range(1, n):
        out.extend(_rref_shapes(f, n, k))
    return out
