"""Exact arithmetic in GF(p^r).

Elements are residue-coefficient vectors (constant term first) modulo a
canonical monic irreducible.  Every element also has a canonical index:
the base-p value of its coefficient vector with the constant term as the
least significant digit, so index 0 is zero and index 1 is one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DegreeOutOfRange, DivisionByZero, MixedFields, NonPrime

MAX_EXTENSION_DEGREE = 8

# Above this order, index-level add/mul tables are not precomputed and
# operations fall back to per-call polynomial arithmetic.
FIELD_TABLE_CAP = 512


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Split q as p^r with p prime, or raise NonPrime."""
    if q < 2:
        raise NonPrime(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                raise NonPrime(f"{q} is not a prime power")
            r = 0
            m = q
            while m % p == 0:
                m //= p
                r += 1
            if m != 1:
                raise NonPrime(f"{q} is not a prime power")
            return p, r
    raise NonPrime(f"{q} is not a prime power")


# ---------------------------------------------------------------------------
# Polynomials over Z_p: tuples of residues, constant term first, no trailing
# zero coefficients (the zero polynomial is the empty tuple).
# ---------------------------------------------------------------------------


def _poly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_divmod(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Quotient and remainder of a by b over Z_p; b must be nonzero."""
    rem = list(a)
    db = len(b) - 1
    lead_inv = pow(b[-1], p - 2, p) if p > 2 else b[-1]
    quot = [0] * max(len(a) - db, 1)
    while len(rem) - 1 >= db and any(rem):
        if rem[-1] == 0:
            rem.pop()
            continue
        shift = len(rem) - 1 - db
        factor = (rem[-1] * lead_inv) % p
        quot[shift] = factor
        for i, bi in enumerate(b):
            rem[shift + i] = (rem[shift + i] - factor * bi) % p
        rem.pop()
    return _poly_trim(quot), _poly_trim(rem)


def _monic_polys(degree: int, p: int):
    """Yield all monic polynomials of the given degree over Z_p."""
    for v in range(p ** degree):
        coeffs = []
        m = v
        for _ in range(degree):
            coeffs.append(m % p)
            m //= p
        yield tuple(coeffs) + (1,)


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Exhaustive divisor scan; adequate for the degrees in scope."""
    degree = len(poly) - 1
    if degree < 1:
        return False
    if degree == 1:
        return True
    for d in range(1, degree // 2 + 1):
        for divisor in _monic_polys(d, p):
            _, rem = _poly_divmod(poly, divisor, p)
            if not rem:
                return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree r over Z_p.

    Candidates are ordered by the base-p value of the non-leading
    coefficient vector, constant term varying fastest.
    """
    for candidate in _monic_polys(r, p):
        if is_irreducible(candidate, p):
            return candidate
    raise AssertionError(f"no irreducible of degree {r} over Z_{p}")


# ---------------------------------------------------------------------------
# Descriptors and elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldDescriptor:
    """Immutable recipe for GF(p^r): prime, degree, and the monic modulus."""

    p: int
    r: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p ** self.r

    def __repr__(self) -> str:
        return f"FieldDescriptor(GF({self.p}^{self.r}))" if self.r > 1 else f"FieldDescriptor(GF({self.p}))"


@dataclass(frozen=True)
class FieldElement:
    """A field element as a length-r residue vector, constant term first."""

    field: FieldDescriptor
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.field.r:
            raise ValueError(f"expected {self.field.r} coefficients, got {len(self.coeffs)}")
        if any(not (0 <= c < self.field.p) for c in self.coeffs):
            raise ValueError(f"coefficients must lie in [0, {self.field.p})")

    @property
    def index(self) -> int:
        i = 0
        for c in reversed(self.coeffs):
            i = i * self.field.p + c
        return i

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return field_add(self, other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return field_mul(self, other)

    def __neg__(self) -> "FieldElement":
        return field_neg(self)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return field_add(self, field_neg(other))

    def __repr__(self) -> str:
        return f"FieldElement({','.join(str(c) for c in self.coeffs)})"


def field_make(p: int, r: int) -> FieldDescriptor:
    """Canonical descriptor for GF(p^r); deterministic across runs."""
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if not 1 <= r <= MAX_EXTENSION_DEGREE:
        raise DegreeOutOfRange(f"degree {r} outside [1, {MAX_EXTENSION_DEGREE}]")
    return FieldDescriptor(p, r, smallest_irreducible(p, r))


def _same_field(x: FieldElement, y: FieldElement) -> FieldDescriptor:
    if x.field != y.field:
        raise MixedFields(f"{x.field!r} vs {y.field!r}")
    return x.field


def field_add(x: FieldElement, y: FieldElement) -> FieldElement:
    f = _same_field(x, y)
    return FieldElement(f, tuple((a + b) % f.p for a, b in zip(x.coeffs, y.coeffs)))


def field_neg(x: FieldElement) -> FieldElement:
    f = x.field
    return FieldElement(f, tuple((-a) % f.p for a in x.coeffs))


def field_mul(x: FieldElement, y: FieldElement) -> FieldElement:
    f = _same_field(x, y)
    gf = galois_field(f)
    return gf.element(gf.mul(x.index, y.index))


def field_inv(x: FieldElement) -> FieldElement:
    gf = galois_field(x.field)
    return gf.element(gf.inv(x.index))


def field_enumerate(f: FieldDescriptor) -> list[FieldElement]:
    """All q elements in canonical index order (zero, one, ...)."""
    gf = galois_field(f)
    return [gf.element(i) for i in range(gf.order)]


class GaloisField:
    """Index-level arithmetic engine for one FieldDescriptor.

    Indices are base-p encodings of coefficient vectors (constant term
    least significant).  For orders up to FIELD_TABLE_CAP full add/mul
    tables are precomputed; larger fields compute per call.
    """

    def __init__(self, descriptor: FieldDescriptor):
        self.descriptor = descriptor
        self.p = descriptor.p
        self.r = descriptor.r
        self.order = descriptor.order
        self._mod_tail = descriptor.modulus[:-1]
        self.add_table: list[tuple[int, ...]] | None = None
        self.mul_table: list[tuple[int, ...]] | None = None
        self.neg_table: tuple[int, ...] | None = None
        if self.order <= FIELD_TABLE_CAP:
            self._build_tables()

    # -- coefficient/index codecs ------------------------------------------

    def coeffs_of(self, i: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.r):
            out.append(i % self.p)
            i //= self.p
        return tuple(out)

    def index_of(self, coeffs) -> int:
        i = 0
        for c in reversed(tuple(coeffs)):
            i = i * self.p + c
        return i

    def element(self, i: int) -> FieldElement:
        return FieldElement(self.descriptor, self.coeffs_of(i))

    # -- raw polynomial ops -------------------------------------------------

    def _add_raw(self, i: int, j: int) -> int:
        if self.r == 1:
            return (i + j) % self.p
        a, b = self.coeffs_of(i), self.coeffs_of(j)
        return self.index_of((x + y) % self.p for x, y in zip(a, b))

    def _neg_raw(self, i: int) -> int:
        if self.r == 1:
            return (-i) % self.p
        return self.index_of((-c) % self.p for c in self.coeffs_of(i))

    def _mul_raw(self, i: int, j: int) -> int:
        p, r = self.p, self.r
        if r == 1:
            return (i * j) % p
        a, b = self.coeffs_of(i), self.coeffs_of(j)
        prod = [0] * (2 * r - 1)
        for s, ai in enumerate(a):
            if ai:
                for t, bj in enumerate(b):
                    prod[s + t] = (prod[s + t] + ai * bj) % p
        # reduce by the monic modulus: t^r = -(tail)
        for s in range(2 * r - 2, r - 1, -1):
            c = prod[s]
            if c:
                prod[s] = 0
                for t, m in enumerate(self._mod_tail):
                    prod[s - r + t] = (prod[s - r + t] - c * m) % p
        return self.index_of(prod[:r])

    def _build_tables(self) -> None:
        n = self.order
        self.add_table = [tuple(self._add_raw(i, j) for j in range(n)) for i in range(n)]
        self.mul_table = [tuple(self._mul_raw(i, j) for j in range(n)) for i in range(n)]
        self.neg_table = tuple(self._neg_raw(i) for i in range(n))

    # -- public index-level ops ----------------------------------------------

    def add(self, i: int, j: int) -> int:
        if self.add_table is not None:
            return self.add_table[i][j]
        return self._add_raw(i, j)

    def neg(self, i: int) -> int:
        if self.neg_table is not None:
            return self.neg_table[i]
        return self._neg_raw(i)

    def mul(self, i: int, j: int) -> int:
        if self.mul_table is not None:
            return self.mul_table[i][j]
        return self._mul_raw(i, j)

    def inv(self, i: int) -> int:
        """Multiplicative inverse by extended Euclid on polynomials."""
        if i == 0:
            raise DivisionByZero("inverse of zero")
        p = self.p
        if self.r == 1:
            return pow(i, p - 2, p)
        a = _poly_trim(list(self.coeffs_of(i)))
        # invariants: old_s*a + (..)*modulus = old_r
        old_r, r = a, self.descriptor.modulus
        old_s, s = (1,), ()
        while r:
            q, rem = _poly_divmod(old_r, r, p)
            old_r, r = r, rem
            qs = _poly_mul(q, s, p)
            new_s = [0] * max(len(old_s), len(qs))
            for t, c in enumerate(old_s):
                new_s[t] = c
            for t, c in enumerate(qs):
                new_s[t] = (new_s[t] - c) % p
            old_s, s = s, _poly_trim(new_s)
        # old_r is a nonzero constant gcd: scale old_s by its inverse
        scale = pow(old_r[0], p - 2, p)
        inv_coeffs = [0] * self.r
        for t, c in enumerate(old_s):
            inv_coeffs[t] = (c * scale) % p
        return self.index_of(inv_coeffs)

    def pow(self, i: int, e: int) -> int:
        result = 1
        base = i
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result


@lru_cache(maxsize=None)
def galois_field(descriptor: FieldDescriptor) -> GaloisField:
    return GaloisField(descriptor)


def galois_field_of_order(q: int) -> GaloisField:
    """GF(q) for a prime power q, factored internally."""
    p, r = factor_prime_power(q)
    return galois_field(field_make(p, r))
