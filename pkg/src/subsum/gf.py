"""Exact arithmetic in GF(q), q = p**r.

Elements are plain ints in ``range(q)``.  An element's base-``p`` digits are
the coefficients (low degree first) of its polynomial representative modulo
the field's defining polynomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .errors import DegreeOutOfRange, DivisionByZero, NotPrime, OrderTooLarge

MAX_ORDER = 2**16
LOG_TABLE_MAX = 2**12
ADD_TABLE_MAX = 2**8


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# -- polynomials over GF(p), coefficient tuples low-to-high -----------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m``."""
    a = _trim(list(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * c) % p
        _trim(a)
    return a


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division of a monic ``poly`` by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg < 1 or poly[-1] != 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = tuple(tail) + (1,)
            if not _poly_mod(list(poly), divisor, p):
                return False
    return True


def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``r`` (low coefficients compared first)."""
    if r == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=r):
        cand = tuple(tail) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible of degree {r} over GF({p})")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    """The finite field GF(p**r) with a deterministic defining polynomial.

    Use :func:`field_new` (or :meth:`from_order`) rather than constructing
    directly; the constructor trusts its arguments.
    """

    p: int
    r: int
    q: int
    modulus: tuple[int, ...] = dc_field(default=(0, 1))

    @classmethod
    def from_order(cls, q: int, max_order: int = MAX_ORDER) -> FieldSpec:
        p, r = factor_prime_power(q)
        return field_new(p, r, max_order=max_order)

    @property
    def is_prime_field(self) -> bool:
        return self.r == 1

    def __str__(self) -> str:
        return f"GF({self.q})"

    def to_json(self) -> dict:
        return {"p": self.p, "r": self.r, "q": self.q, "modulus": list(self.modulus)}

    def check(self, a: int) -> int:
        if not (isinstance(a, int) and 0 <= a < self.q):
            raise ValueError(f"{a!r} is not an element of {self}")
        return a

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.r):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    def from_digits(self, digits) -> int:
        value = 0
        for d in reversed(list(digits)):
            value = value * self.p + d
        return value

    # -- additive structure -------------------------------------------------

    def _add_digits(self, a: int, b: int, sign: int = 1) -> int:
        p = self.p
        value, place = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            value += ((da + sign * db) % p) * place
            place *= p
        return value

    @cached_property
    def _add_table(self) -> list[list[int]] | None:
        if self.is_prime_field or self.q > ADD_TABLE_MAX:
            return None
        return [[self._add_digits(a, b) for b in range(self.q)] for a in range(self.q)]

    def add(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        table = self._add_table
        if table is not None:
            return table[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        if self.r == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self._add_digits(0, a, sign=-1)

    def sub(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    # -- multiplicative structure -------------------------------------------

    def mul_direct(self, a: int, b: int) -> int:
        """Schoolbook polynomial product reduced by the modulus."""
        if self.r == 1:
            return a * b % self.p
        p = self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.r - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self.from_digits(_poly_mod(prod, self.modulus, p))

    @cached_property
    def _log_tables(self) -> tuple[list[int], list[int]] | None:
        if self.r == 1 or self.q > LOG_TABLE_MAX:
            return None
        order = self.q - 1
        for g in range(2, self.q):
            exp = [0] * (2 * order)
            x = 1
            for i in range(order):
                exp[i] = x
                x = self.mul_direct(x, g)
                if x == 1 and i < order - 1:
                    break
            else:
                log = [0] * self.q
                for i in range(order):
                    log[exp[i]] = i
                for i in range(order, 2 * order):
                    exp[i] = exp[i - order]
                return exp, log
        raise AssertionError("multiplicative group has no generator")  # unreachable

    def mul(self, a: int, b: int) -> int:
        if self.r == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        tables = self._log_tables
        if tables is None:
            return self.mul_direct(a, b)
        exp, log = tables
        return exp[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self}")
        if self.r == 1:
            return pow(a, -1, self.p)
        tables = self._log_tables
        if tables is not None:
            exp, log = tables
            return exp[(self.q - 1 - log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result


def field_new(p: int, r: int = 1, max_order: int = MAX_ORDER) -> FieldSpec:
    """Return GF(p**r) with the lexicographically smallest monic irreducible modulus."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if r < 1:
        raise DegreeOutOfRange(f"extension degree must be >= 1, got {r}")
    q = p**r
    if q > max_order:
        raise OrderTooLarge(f"q = {q} exceeds the configured bound {max_order}")
    return FieldSpec(p=p, r=r, q=q, modulus=smallest_irreducible(p, r))


def factor_prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` into ``(p, r)`` with ``q == p**r``; raises NotPrime otherwise."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = next(d for d in itertools.count(2) if q % d == 0)
    r, rest = 0, q
    while rest % p == 0:
        rest //= p
        r += 1
    if rest != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, r
