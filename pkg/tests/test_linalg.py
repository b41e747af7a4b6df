import itertools
import random

import pytest

from conftest import field, rank_by_counting, span_set
from subsum.errors import AlreadyFull, AmbientMismatch
from subsum.linalg import (
    MatrixGF,
    Subspace,
    extend_to_basis,
    parse_vector,
    rank,
    reduce_rows,
    rref,
    stacked_rank,
    subspace_intersection,
    subspace_sum,
    unit_vector,
)
from subsum.subspaces import enumerate_proper_nontrivial, enumerate_subspaces


def vec(s):
    return tuple(int(c) for c in s)


def sp(q, *rows):
    return Subspace.span(field(q), len(rows[0]), [vec(r) for r in rows])


def test_rref_gf2_example():
    res = rref(MatrixGF.from_rows(field(2), [vec("110"), vec("011")]))
    assert res.rank == 2
    assert res.pivot_cols == (0, 1)
    assert res.matrix.rows == (vec("101"), vec("011"))


def test_rref_zero_and_identity():
    assert rref(MatrixGF.from_rows(field(3), [vec("000"), vec("000")])).rank == 0
    ident = MatrixGF.from_rows(field(3), [unit_vector(3, j) for j in range(3)])
    res = rref(ident)
    assert res.rank == 3 and res.matrix.rows == ident.rows


def test_rref_keeps_zero_rows_at_bottom():
    res = rref(MatrixGF.from_rows(field(2), [vec("11"), vec("11"), vec("01")]))
    assert res.matrix.rows == (vec("10"), vec("01"), vec("00"))


def test_rank_examples():
    assert stacked_rank(sp(2, "100"), sp(2, "010", "001")) == 3
    assert stacked_rank(sp(2, "100"), sp(2, "100", "010")) == 2
    m = MatrixGF.from_rows(field(3), [vec("12"), vec("21")])
    # 2 * (1,2) = (2,4) = (2,1) mod 3, so the rows are dependent
    assert rank_by_counting(field(3), m.rows, 2) == 1
    assert rank(m) == 1


def test_matrix_validation():
    with pytest.raises(ValueError):
        MatrixGF.from_rows(field(2), [vec("12")])
    with pytest.raises(ValueError):
        MatrixGF.from_rows(field(2), [vec("10"), vec("1")])
    with pytest.raises(AmbientMismatch):
        MatrixGF.from_rows(field(2), [vec("10")]).stack(MatrixGF.from_rows(field(3), [vec("10")]))


@pytest.mark.parametrize("q,n", [(2, 3), (3, 2), (4, 2), (2, 4)])
def test_rank_matches_span_counting(q, n):
    f = field(q)
    rng = random.Random(q * 100 + n)
    for _ in range(60):
        rows = [tuple(rng.randrange(q) for _ in range(n)) for _ in range(rng.randint(1, n + 1))]
        expected = rank_by_counting(f, rows, n)
        assert rank(MatrixGF.from_rows(f, rows)) == expected
        assert rank(MatrixGF.from_rows(f, rows), generic=True) == expected


def test_sum_and_intersection_examples():
    e1, e2, e3 = sp(2, "100"), sp(2, "010"), sp(2, "001")
    assert subspace_sum(e1, e2) == sp(2, "100", "010")
    w = sp(2, "110", "011")
    assert subspace_sum(w, w) == w
    # <e1+e2> + <e2+e3>
    assert subspace_sum(sp(2, "110"), sp(2, "011")) == w
    assert w.basis == (vec("101"), vec("011"))
    assert subspace_intersection(sp(2, "100", "010"), sp(2, "010", "001")) == e2
    assert subspace_intersection(w, w) == w
    assert subspace_intersection(sp(2, "100", "010"), e3).dim == 0


def test_extend_to_basis_examples():
    assert extend_to_basis(sp(2, "100")).rows == (vec("010"), vec("001"))
    assert extend_to_basis(sp(2, "110")).rows == (vec("010"), vec("001"))
    assert extend_to_basis(sp(2, "100", "010")).rows == (vec("001"),)
    with pytest.raises(AlreadyFull):
        extend_to_basis(Subspace.full(field(2), 3))


@pytest.mark.parametrize("n,q", [(3, 2), (2, 3), (2, 2), (3, 3)])
def test_dimension_formula_all_pairs(n, q):
    f = field(q)
    subs = [Subspace.zero(f, n)] + enumerate_proper_nontrivial(f, n) + [Subspace.full(f, n)]
    sets = {s: span_set(f, s.basis, n) for s in subs}
    for a, b in itertools.product(subs, repeat=2):
        s, m = subspace_sum(a, b), subspace_intersection(a, b)
        assert s.dim + m.dim == a.dim + b.dim
        assert sets[m] == sets[a] & sets[b]
        assert sets[s] == span_set(f, a.basis + b.basis, n)


def test_vector_sets_decide_equality():
    # two subspaces are equal exactly when their canonical forms are
    f = field(3)
    subs = enumerate_subspaces(f, 3, 1) + enumerate_subspaces(f, 3, 2)
    sets = [span_set(f, s.basis, 3) for s in subs]
    for i, j in itertools.combinations(range(len(subs)), 2):
        assert (subs[i] == subs[j]) == (sets[i] == sets[j])
        assert sets[i] != sets[j]
    for s, vs in zip(subs, sets):
        assert set(s.vectors()) == vs
        assert all(s.contains_vector(v) for v in vs)


def _random_mix(f, basis, n, rng):
    """Random invertible recombination of ``basis`` plus random redundant rows."""
    k = len(basis)
    while True:
        m = [[rng.randrange(f.q) for _ in range(k)] for _ in range(k)]
        rows = []
        for coeffs in m:
            v = [0] * n
            for c, row in zip(coeffs, basis):
                v = [f.add(a, f.mul(c, b)) for a, b in zip(v, row)]
            rows.append(tuple(v))
        if rank(MatrixGF.from_rows(f, rows, n)) == k:
            break
    extra = rng.randint(0, 2)
    for _ in range(extra):
        a, b = rng.randrange(k), rng.randrange(k)
        c = rng.randrange(f.q)
        rows.append(tuple(f.add(x, f.mul(c, y)) for x, y in zip(rows[a], rows[b])))
    rng.shuffle(rows)
    return rows


@pytest.mark.parametrize("n,q", [(3, 2), (2, 3), (3, 3), (4, 2), (3, 4)])
def test_canonical_form_under_random_basis_mixes(n, q):
    f = field(q)
    rng = random.Random(1000 * n + q)
    subs = enumerate_proper_nontrivial(f, n)
    for _ in range(1000):
        w = rng.choice(subs)
        rows = _random_mix(f, w.basis, n, rng)
        assert Subspace.span(f, n, rows) == w
        assert Subspace.span(f, n, rows, generic=True) == w


def test_gf2_fast_path_matches_generic():
    f = field(2)
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 7)
        rows = [tuple(rng.randrange(2) for _ in range(n)) for _ in range(rng.randint(0, 6))]
        assert reduce_rows(f, rows, n) == reduce_rows(f, rows, n, generic=True)


def test_text_forms():
    assert sp(2, "110", "011").to_text() == "101,011"
    assert Subspace.zero(field(2), 3).to_text() == "0"
    f = field(11)
    assert Subspace.span(f, 2, [(10, 3)]).to_text() == "1.8"
    assert parse_vector("1.10", f, 2) == (1, 10)
    assert parse_vector("101", field(2), 3) == (1, 0, 1)
    with pytest.raises(AmbientMismatch):
        parse_vector("10", field(2), 3)


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        subspace_sum(sp(2, "10"), sp(2, "100"))
    with pytest.raises(AmbientMismatch):
        Subspace.span(field(2), 3, [vec("10")])


def test_containment():
    assert sp(2, "100", "010").contains(sp(2, "110"))
    assert not sp(2, "100", "010").contains(sp(2, "001"))
