import itertools

import pytest
from hypothesis import given, strategies as st

from subsum.errors import DegreeOutOfRange, DivisionByZero, NotPrime, OrderTooLarge
from subsum.gf import FieldSpec, factor_prime_power, field_new, is_irreducible, smallest_irreducible

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64]


def test_prime_fields_have_trivial_extension():
    f = field_new(2, 1)
    assert (f.p, f.r, f.q) == (2, 1, 2)
    assert f.is_prime_field
    assert field_new(5, 1).q == 5


def test_gf4_modulus_is_the_unique_irreducible_quadratic():
    # coefficients low degree first: 1 + x + x^2
    assert field_new(2, 2).modulus == (1, 1, 1)


def test_gf8_modulus_is_smallest_irreducible_cubic():
    # x^3 + x + 1 is (1,1,0,1); x^3 + x^2 + 1 is (1,0,1,1).  Low-degree-first lex order picks the latter
    assert field_new(2, 3).modulus == (1, 0, 1, 1)
    assert is_irreducible((1, 1, 0, 1), 2)
    assert not is_irreducible((1, 0, 0, 1), 2)  # x^3 + 1 = (x + 1)(x^2 + x + 1)


def test_irreducibility_by_root_search_for_quadratics():
    # a monic quadratic over a prime field is irreducible iff it has no root
    for p in (2, 3, 5, 7):
        for c0, c1 in itertools.product(range(p), repeat=2):
            has_root = any((c0 + c1 * x + x * x) % p == 0 for x in range(p))
            assert is_irreducible((c0, c1, 1), p) == (not has_root)
    for p, r in [(3, 2), (5, 2), (2, 4), (3, 3)]:
        assert is_irreducible(smallest_irreducible(p, r), p)


@pytest.mark.parametrize("args,exc", [((4, 1), NotPrime), ((2, 0), DegreeOutOfRange), ((2, 17), OrderTooLarge)])
def test_field_new_errors(args, exc):
    with pytest.raises(exc):
        field_new(*args)


@pytest.mark.parametrize("q,expected", [(2, (2, 1)), (9, (3, 2)), (64, (2, 6)), (49, (7, 2)), (11, (11, 1))])
def test_factor_prime_power(q, expected):
    assert factor_prime_power(q) == expected


@pytest.mark.parametrize("q", [0, 1, 6, 12, 100])
def test_factor_rejects_non_prime_powers(q):
    with pytest.raises(NotPrime):
        factor_prime_power(q)


def test_examples():
    gf2, gf4, gf5 = field_new(2), field_new(2, 2), field_new(5)
    assert gf2.add(1, 1) == 0
    assert gf5.add(3, 4) == 2
    x = 2  # the element x in GF(4): digits (0, 1)
    assert gf4.add(x, x + 1) == 1
    assert gf5.inv(2) == 3
    assert gf4.mul(x, x) == 3  # x^2 = x + 1
    assert all(gf2.pow(1, k) == 1 for k in range(10))


def test_prime_field_matches_integer_arithmetic():
    for p in (2, 3, 5, 7, 11, 13):
        f = field_new(p)
        for a, b in itertools.product(range(p), repeat=2):
            assert f.add(a, b) == (a + b) % p
            assert f.sub(a, b) == (a - b) % p
            assert f.mul(a, b) == a * b % p
            if b:
                assert f.mul(f.div(a, b), b) == a


def _schoolbook(f, a, b):
    """Polynomial product reduced by the field modulus, written independently of the library."""
    pa, pb = f.digits(a), f.digits(b)
    prod = [0] * (2 * f.r)
    for i, x in enumerate(pa):
        for j, y in enumerate(pb):
            prod[i + j] = (prod[i + j] + x * y) % f.p
    m = list(f.modulus)
    for d in range(len(prod) - 1, f.r - 1, -1):
        c = prod[d]
        if c:
            for i, mi in enumerate(m):
                prod[d - f.r + i] = (prod[d - f.r + i] - c * mi) % f.p
    return f.from_digits(prod[: f.r])


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_exhaustive(q):
    f = FieldSpec.from_order(q)
    elems = range(q)
    for a in elems:
        assert f.add(a, 0) == a and f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
    for a, b in itertools.product(elems, repeat=2):
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.mul(a, b) == f.mul_direct(a, b) == _schoolbook(f, a, b)
    if q <= 16:
        for a, b, c in itertools.product(elems, repeat=3):
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
            assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_multiplicative_group_is_cyclic_of_order_q_minus_1(q):
    f = FieldSpec.from_order(q)
    for a in range(1, q):
        assert f.pow(a, q - 1) == 1
    assert any(len({f.pow(g, e) for e in range(q - 1)}) == q - 1 for g in range(1, q))


def test_division_by_zero():
    f = field_new(3)
    with pytest.raises(DivisionByZero):
        f.inv(0)
    with pytest.raises(ZeroDivisionError):
        f.div(1, 0)


def test_large_field_without_tables_agrees_with_schoolbook():
    f = field_new(2, 13)  # beyond the log-table threshold
    for a, b in [(1, 1), (5, 7), (8191, 2), (4097, 4095), (1234, 5678)]:
        assert f.mul(a, b) == _schoolbook(f, a, b)
    assert f.mul(1234, f.inv(1234)) == 1


@given(st.integers(0, 26), st.integers(0, 26), st.integers(0, 26))
def test_gf27_distributive(a, b, c):
    f = field_new(3, 3)
    assert f.mul(a, f.sub(b, c)) == f.sub(f.mul(a, b), f.mul(a, c))


def test_element_check():
    f = field_new(2, 2)
    assert f.check(3) == 3
    with pytest.raises(ValueError):
        f.check(4)
