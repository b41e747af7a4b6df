"""Exact linear algebra over GF(q): row reduction, rank and canonical subspaces.

GF(2) rows take a bit-packed path (column 0 is the most significant bit);
every public operation accepts ``generic=True`` to force the field-agnostic
path, which the test-suite cross-checks against the packed one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import AlreadyFull, AmbientMismatch
from .gf import FieldSpec

Row = tuple[int, ...]


@dataclass(frozen=True)
class MatrixGF:
    field: FieldSpec
    rows: tuple[Row, ...]
    ncols: int

    def __post_init__(self) -> None:
        if self.ncols < 1:
            raise ValueError("a matrix needs at least one column")
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError(f"row {row} does not have {self.ncols} entries")
            for a in row:
                self.field.check(a)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Sequence[int]], ncols: int | None = None) -> MatrixGF:
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for an empty matrix")
            ncols = len(rows[0])
        return cls(field, rows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def stack(self, other: MatrixGF) -> MatrixGF:
        if other.field != self.field or other.ncols != self.ncols:
            raise AmbientMismatch("cannot stack matrices of different shape or field")
        return MatrixGF(self.field, self.rows + other.rows, self.ncols)


@dataclass(frozen=True)
class RrefResult:
    matrix: MatrixGF
    rank: int
    pivot_cols: tuple[int, ...]


# -- row reduction kernels ---------------------------------------------------

def _pack(row: Sequence[int], n: int) -> int:
    v = 0
    for a in row:
        v = (v << 1) | a
    return v


def _unpack(v: int, n: int) -> Row:
    return tuple((v >> (n - 1 - j)) & 1 for j in range(n))


def _rref_bits(rows: list[int], n: int) -> tuple[list[int], list[int]]:
    """XOR elimination on packed rows.  Returns (nonzero rref rows, pivot columns)."""
    work = list(rows)
    pivots = []
    top = 0
    for col in range(n):
        bit = 1 << (n - 1 - col)
        for i in range(top, len(work)):
            if work[i] & bit:
                break
        else:
            continue
        work[top], work[i] = work[i], work[top]
        pr = work[top]
        for j in range(len(work)):
            if j != top and work[j] & bit:
                work[j] ^= pr
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def _rank_bits(rows: list[int], n: int) -> int:
    # Reduced echelon form is not needed for the rank; keep an xor basis keyed by leading bit.
    basis: dict[int, int] = {}
    for v in rows:
        while v:
            lead = v.bit_length()
            b = basis.get(lead)
            if b is None:
                basis[lead] = v
                break
            v ^= b
    return len(basis)


def _rref_generic(field: FieldSpec, rows: list[list[int]], n: int) -> tuple[list[list[int]], list[int]]:
    work = [list(r) for r in rows]
    pivots = []
    top = 0
    for col in range(n):
        for i in range(top, len(work)):
            if work[i][col]:
                break
        else:
            continue
        work[top], work[i] = work[i], work[top]
        pr = work[top]
        lead = pr[col]
        if lead != 1:
            s = field.inv(lead)
            pr[:] = [field.mul(s, a) for a in pr]
        for j in range(len(work)):
            if j == top:
                continue
            c = work[j][col]
            if c:
                row = work[j]
                row[:] = [field.sub(a, field.mul(c, b)) for a, b in zip(row, pr)]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def _is_gf2(field: FieldSpec) -> bool:
    return field.q == 2


def reduce_rows(field: FieldSpec, rows: Sequence[Sequence[int]], n: int, generic: bool = False) -> tuple[tuple[Row, ...], tuple[int, ...]]:
    """Nonzero rows of the RREF of ``rows`` together with the pivot columns."""
    if _is_gf2(field) and not generic:
        packed, pivots = _rref_bits([_pack(r, n) for r in rows], n)
        return tuple(_unpack(v, n) for v in packed), tuple(pivots)
    out, pivots = _rref_generic(field, [list(r) for r in rows], n)
    return tuple(tuple(r) for r in out), tuple(pivots)


def rank_rows(field: FieldSpec, rows: Sequence[Sequence[int]], n: int, generic: bool = False) -> int:
    if _is_gf2(field) and not generic:
        return _rank_bits([_pack(r, n) for r in rows], n)
    return len(_rref_generic(field, [list(r) for r in rows], n)[1])


def rref(m: MatrixGF, generic: bool = False) -> RrefResult:
    """Reduced row echelon form; zero rows are kept at the bottom."""
    nonzero, pivots = reduce_rows(m.field, m.rows, m.ncols, generic=generic)
    zero = ((0,) * m.ncols,) * (m.nrows - len(nonzero))
    return RrefResult(MatrixGF(m.field, nonzero + zero, m.ncols), len(pivots), pivots)


def rank(m: MatrixGF, generic: bool = False) -> int:
    return rank_rows(m.field, m.rows, m.ncols, generic=generic)


# -- subspaces ---------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(q)^n stored as its RREF basis (zero rows dropped).

    The canonical form makes ``==`` and ``hash`` agree with equality of the
    underlying vector sets.  Build instances with :meth:`span`; the raw
    constructor assumes ``basis`` is already canonical.
    """

    field: FieldSpec
    n: int
    basis: tuple[Row, ...]

    @classmethod
    def span(cls, field: FieldSpec, n: int, vectors: Iterable[Sequence[int]], generic: bool = False) -> Subspace:
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != n:
                raise AmbientMismatch(f"vector {v} does not live in GF({field.q})^{n}")
        basis, _ = reduce_rows(field, vectors, n, generic=generic)
        return cls(field, n, basis)

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> Subspace:
        return cls(field, n, ())

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> Subspace:
        return cls(field, n, tuple(unit_vector(n, j) for j in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def pivot_cols(self) -> tuple[int, ...]:
        return tuple(next(j for j, a in enumerate(row) if a) for row in self.basis)

    @cached_property
    def packed(self) -> tuple[int, ...]:
        """Basis rows as bit-packed ints (meaningful over GF(2) only)."""
        return tuple(_pack(r, self.n) for r in self.basis)

    def as_matrix(self) -> MatrixGF:
        return MatrixGF(self.field, self.basis, self.n)

    def contains_vector(self, v: Sequence[int]) -> bool:
        return rank_rows(self.field, self.basis + (tuple(v),), self.n) == self.dim

    def contains(self, other: Subspace) -> bool:
        _check_same_ambient(self, other)
        return stacked_rank(self, other) == self.dim

    def vectors(self):
        """Every vector of the subspace (exhaustive; small cases only)."""
        f = self.field
        for coeffs in itertools.product(range(f.q), repeat=self.dim):
            v = [0] * self.n
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = [f.add(a, f.mul(c, b)) for a, b in zip(v, row)]
            yield tuple(v)

    def to_text(self) -> str:
        """Rows as digit strings joined by commas, e.g. ``"101,011"``; ``"0"`` for the zero space."""
        if not self.basis:
            return "0"
        return ",".join(vector_text(row, self.field) for row in self.basis)

    def __str__(self) -> str:
        return f"<{self.to_text()}>"


def vector_text(row: Sequence[int], field: FieldSpec) -> str:
    if field.q <= 10:
        return "".join(str(a) for a in row)
    return ".".join(str(a) for a in row)


def parse_vector(text: str, field: FieldSpec, n: int) -> Row:
    parts = text.split(".") if "." in text else list(text)
    try:
        row = tuple(int(a) for a in parts)
    except ValueError:
        raise ValueError(f"cannot parse vector {text!r}") from None
    if len(row) != n:
        raise AmbientMismatch(f"vector {text!r} does not have {n} entries")
    for a in row:
        field.check(a)
    return row


def unit_vector(n: int, j: int) -> Row:
    return tuple(1 if i == j else 0 for i in range(n))


def _check_same_ambient(a: Subspace, b: Subspace) -> None:
    if a.field != b.field or a.n != b.n:
        raise AmbientMismatch(f"subspaces of GF({a.field.q})^{a.n} and GF({b.field.q})^{b.n}")


def stacked_rank(a: Subspace, b: Subspace, generic: bool = False) -> int:
    """Rank of the two bases stacked; equals dim(a + b)."""
    _check_same_ambient(a, b)
    if _is_gf2(a.field) and not generic:
        return _rank_bits(list(a.packed + b.packed), a.n)
    return rank_rows(a.field, a.basis + b.basis, a.n, generic=generic)


def subspace_sum(a: Subspace, b: Subspace, generic: bool = False) -> Subspace:
    _check_same_ambient(a, b)
    return Subspace.span(a.field, a.n, a.basis + b.basis, generic=generic)


def subspace_intersection(a: Subspace, b: Subspace, generic: bool = False) -> Subspace:
    """Zassenhaus: reduce [[a | a], [b | 0]]; rows with a zero left half span a ∩ b."""
    _check_same_ambient(a, b)
    n, f = a.n, a.field
    zeros = (0,) * n
    block = [r + r for r in a.basis] + [r + zeros for r in b.basis]
    if not block:
        return Subspace.zero(f, n)
    reduced, _ = reduce_rows(f, block, 2 * n, generic=generic)
    meet = [r[n:] for r in reduced if not any(r[:n])]
    return Subspace.span(f, n, meet, generic=generic)


def extend_to_basis(w: Subspace) -> MatrixGF:
    """Unit vectors e_j for each non-pivot column j of ``w``; together with ``w`` they span the space."""
    if w.dim >= w.n:
        raise AlreadyFull(f"{w} is already the whole space")
    pivots = set(w.pivot_cols)
    rows = tuple(unit_vector(w.n, j) for j in range(w.n) if j not in pivots)
    return MatrixGF(w.field, rows, w.n)
