"""Concrete finite unital rings with a canonical 0-based element indexing.

Every construction assigns each element an index in [0, |R|) with index 0
the additive zero.  All arithmetic is exact integer arithmetic on indices;
rings at or below MEMO_CAP elements precompute full add/mul tables at
construction time and are immutable afterwards.

Index encodings (mixed radix, per construction):
  ZMod(n)              index = residue
  Field(GF(p^r))       index = base-p value of the coefficient vector,
                       constant term least significant
  Matrix(k, GF(q))     columns packed left to right, most significant
                       first; within a column the top entry is most
                       significant (entries are field element indices)
  PolyQuotient         coefficient vector of base-ring indices, constant
                       term least significant
  TrivialExtension     (a, u_1..u_m) with a most significant, u_m fastest
  Product              component indices, last factor fastest
  Table                the raw table index
  Quotient             cosets sorted by their minimal parent index
"""

from __future__ import annotations

import json
from array import array
from typing import Iterable, Iterator, Sequence

from .errors import (
    ImproperIdeal,
    MixedRings,
    NotAnIdeal,
    SizeCapExceeded,
    ValidationError,
)
from .finfield import (
    FieldDescriptor,
    factor_prime_power,
    field_make,
    galois_field,
    is_irreducible,
    is_prime,
)

# Full |R| x |R| operation tables are frozen at construction up to this size.
MEMO_CAP = 4096

# Explicit Cayley-table rings are audited in O(N^3); keep them small.
TABLE_RING_CAP = 256

# Default guard for pair-enumeration engines; None disables.
DEFAULT_SIZE_CAP = 4096


def _row_typecode(size: int) -> str:
    return "H" if size <= 65536 else "l"


class Ring:
    """Base class: immutable descriptor plus index-level exact arithmetic."""

    size: int
    one_index: int

    # -- construction-time plumbing -----------------------------------------

    def _init_tables(self) -> None:
        self._hash: int | None = None
        self._commutative: bool | None = None
        self._mul_rows: list[array] | None = None
        self._add_rows: list[array] | None = None
        self._neg_list: list[int] | None = None
        if self.size <= MEMO_CAP:
            self._build_tables()
            self._neg_list = [self._neg(i) for i in range(self.size)]

    def _build_tables(self) -> None:
        rng = range(self.size)
        code = _row_typecode(self.size)
        self._mul_rows = [array(code, [self._mul(i, j) for j in rng]) for i in rng]
        self._add_rows = [array(code, [self._add(i, j) for j in rng]) for i in rng]

    # -- structural operations, one set per construction ---------------------

    def _add(self, i: int, j: int) -> int:
        raise NotImplementedError

    def _mul(self, i: int, j: int) -> int:
        raise NotImplementedError

    def _neg(self, i: int) -> int:
        raise NotImplementedError

    def decode(self, i: int):
        """Structural form of element i; encode() inverts it."""
        raise NotImplementedError

    def encode(self, form) -> int:
        raise NotImplementedError

    def describe(self) -> str:
        """Ring-spec text; parseable for every grammar-backed construction."""
        raise NotImplementedError

    def key(self) -> tuple:
        """Hashable construction recipe; defines ring equality."""
        raise NotImplementedError

    def format_element(self, i: int) -> str:
        """Element literal text (round-trips through the literal parser)."""
        return f"#{i}"

    # -- public index-level API ----------------------------------------------

    def add_index(self, i: int, j: int) -> int:
        rows = self._add_rows
        return rows[i][j] if rows is not None else self._add(i, j)

    def mul_index(self, i: int, j: int) -> int:
        rows = self._mul_rows
        return rows[i][j] if rows is not None else self._mul(i, j)

    def neg_index(self, i: int) -> int:
        neg = self._neg_list
        return neg[i] if neg is not None else self._neg(i)

    def sub_index(self, i: int, j: int) -> int:
        return self.add_index(i, self.neg_index(j))

    def mul_row(self, i: int) -> Sequence[int]:
        """Row i of the multiplication table: [i*0, i*1, ..., i*(n-1)]."""
        rows = self._mul_rows
        if rows is not None:
            return rows[i]
        return array(_row_typecode(self.size), [self._mul(i, j) for j in range(self.size)])

    def add_row(self, i: int) -> Sequence[int]:
        rows = self._add_rows
        if rows is not None:
            return rows[i]
        return array(_row_typecode(self.size), [self._add(i, j) for j in range(self.size)])

    def element(self, i: int) -> "RingElement":
        if not 0 <= i < self.size:
            raise ValidationError(f"index {i} outside [0, {self.size})")
        return RingElement(self, i)

    def zero(self) -> "RingElement":
        return RingElement(self, 0)

    def one(self) -> "RingElement":
        return RingElement(self, self.one_index)

    def is_commutative(self) -> bool:
        if self._commutative is None:
            n = self.size
            self._commutative = all(
                self.mul_index(i, j) == self.mul_index(j, i)
                for i in range(n) for j in range(i + 1, n)
            )
        return self._commutative

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.key() == other.key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __repr__(self) -> str:
        return f"<Ring {self.describe()} (|R|={self.size})>"


class RingElement:
    """An element of a concrete ring, identified by its canonical index."""

    __slots__ = ("ring", "index")

    def __init__(self, ring: Ring, index: int):
        self.ring = ring
        self.index = index

    @property
    def form(self):
        return self.ring.decode(self.index)

    def _same_ring(self, other: "RingElement") -> Ring:
        if not isinstance(other, RingElement):
            raise TypeError(f"expected RingElement, got {type(other).__name__}")
        if self.ring != other.ring:
            raise MixedRings(f"{self.ring.describe()} vs {other.ring.describe()}")
        return self.ring

    def __add__(self, other: "RingElement") -> "RingElement":
        r = self._same_ring(other)
        return RingElement(r, r.add_index(self.index, other.index))

    def __mul__(self, other: "RingElement") -> "RingElement":
        r = self._same_ring(other)
        return RingElement(r, r.mul_index(self.index, other.index))

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, self.ring.neg_index(self.index))

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RingElement)
                and self.index == other.index and self.ring == other.ring)

    def __hash__(self) -> int:
        return hash((self.index, self.ring))

    def __repr__(self) -> str:
        return f"<{self.ring.format_element(self.index)} in {self.ring.describe()}>"


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


class ZModRing(Ring):
    """Integers modulo n; index equals residue."""

    def __init__(self, n: int):
        if n < 2:
            raise ValidationError(f"ZMod needs modulus >= 2, got {n}")
        self.n = n
        self.size = n
        self.one_index = 1
        self._init_tables()
        self._commutative = True

    def _build_tables(self) -> None:
        n = self.n
        code = _row_typecode(n)
        self._mul_rows = [array(code, [(i * j) % n for j in range(n)]) for i in range(n)]
        self._add_rows = [array(code, [(i + j) % n for j in range(n)]) for i in range(n)]

    def _add(self, i, j):
        return (i + j) % self.n

    def _mul(self, i, j):
        return (i * j) % self.n

    def _neg(self, i):
        return (-i) % self.n

    def decode(self, i):
        return i

    def encode(self, form):
        return int(form) % self.n

    def describe(self):
        return f"Z{self.n}"

    def key(self):
        return ("zmod", self.n)

    def format_element(self, i):
        return str(i)


class FieldRing(Ring):
    """GF(p^r) viewed as a ring; delegates to the field's index engine."""

    def __init__(self, descriptor: FieldDescriptor):
        self.descriptor = descriptor
        self.field = galois_field(descriptor)
        self.size = self.field.order
        self.one_index = 1
        self._init_tables()
        self._commutative = True

    def _build_tables(self) -> None:
        gf = self.field
        code = _row_typecode(self.size)
        if gf.mul_table is not None:
            self._mul_rows = [array(code, row) for row in gf.mul_table]
            self._add_rows = [array(code, row) for row in gf.add_table]
        else:
            super()._build_tables()

    def _add(self, i, j):
        return self.field._add_raw(i, j)

    def _mul(self, i, j):
        return self.field._mul_raw(i, j)

    def _neg(self, i):
        return self.field._neg_raw(i)

    def decode(self, i):
        return self.field.element(i)

    def encode(self, form):
        return form.index if hasattr(form, "index") else self.field.index_of(form)

    def describe(self):
        return f"GF{self.size}"

    def key(self):
        return ("gf", self.descriptor.p, self.descriptor.r, self.descriptor.modulus)

    def format_element(self, i):
        return ",".join(str(c) for c in self.field.coeffs_of(i))


class MatrixRing(Ring):
    """k-by-k matrices over GF(q); forms are row tuples of field indices."""

    def __init__(self, k: int, descriptor: FieldDescriptor):
        if k < 1:
            raise ValidationError(f"matrix dimension must be >= 1, got {k}")
        self.k = k
        self.descriptor = descriptor
        self.field = galois_field(descriptor)
        self.q = self.field.order
        self.Q = self.q ** k          # one packed column
        self.size = self.q ** (k * k)
        self.one_index = self._encode_identity()
        self._init_tables()
        self._commutative = (k == 1)

    # -- column packing helpers ----------------------------------------------

    def _colcodes(self, i: int) -> list[int]:
        k, Q = self.k, self.Q
        out = [0] * k
        for j in range(k - 1, -1, -1):
            out[j] = i % Q
            i //= Q
        return out

    def _colvec(self, code: int) -> list[int]:
        k, q = self.k, self.q
        v = [0] * k
        for i in range(k - 1, -1, -1):
            v[i] = code % q
            code //= q
        return v

    def _encode_identity(self) -> int:
        k = self.k
        rows = tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))
        return self.encode(rows)

    def decode(self, i):
        k = self.k
        cols = [self._colvec(c) for c in self._colcodes(i)]
        return tuple(tuple(cols[j][r] for j in range(k)) for r in range(k))

    def encode(self, form) -> int:
        k, q, Q = self.k, self.q, self.Q
        idx = 0
        for j in range(k):
            code = 0
            for i in range(k):
                code = code * q + form[i][j]
            idx = idx * Q + code
        return idx

    # -- arithmetic ------------------------------------------------------------

    def _add(self, i, j):
        gf = self.field
        a, b = self.decode(i), self.decode(j)
        return self.encode(tuple(tuple(gf.add(x, y) for x, y in zip(ra, rb))
                                 for ra, rb in zip(a, b)))

    def _neg(self, i):
        gf = self.field
        return self.encode(tuple(tuple(gf.neg(x) for x in row) for row in self.decode(i)))

    def _mul(self, i, j):
        gf = self.field
        k = self.k
        a, b = self.decode(i), self.decode(j)
        out = []
        for r in range(k):
            row = []
            for c in range(k):
                s = 0
                for t in range(k):
                    s = gf.add(s, gf.mul(a[r][t], b[t][c]))
                row.append(s)
            out.append(tuple(row))
        return self.encode(tuple(out))

    def _build_tables(self) -> None:
        if self.k == 1:
            super()._build_tables()
            return
        # Column-packed build: A*B combines per-column images of A, and
        # addition combines a Q*Q column-sum table.  q^(2k) <= q^(k*k) <=
        # MEMO_CAP here, so the field tables always exist.
        k, q, Q, n = self.k, self.q, self.Q, self.size
        gf = self.field
        fadd, fmul = gf.add_table, gf.mul_table
        code = _row_typecode(n)
        vecs = [self._colvec(c) for c in range(Q)]
        colcodes = [self._colcodes(i) for i in range(n)]
        decoded = [self.decode(i) for i in range(n)]

        mul_rows = []
        for a in range(n):
            arows = decoded[a]
            amap = [0] * Q
            for c in range(Q):
                v = vecs[c]
                acc = 0
                for r in range(k):
                    ar = arows[r]
                    s = 0
                    for t in range(k):
                        s = fadd[s][fmul[ar[t]][v[t]]]
                    acc = acc * q + s
                amap[c] = acc
            vals = []
            for b in range(n):
                idx = 0
                for cc in colcodes[b]:
                    idx = idx * Q + amap[cc]
                vals.append(idx)
            mul_rows.append(array(code, vals))
        self._mul_rows = mul_rows

        coladd = [[0] * Q for _ in range(Q)]
        for c1 in range(Q):
            v1 = vecs[c1]
            row = coladd[c1]
            for c2 in range(Q):
                v2 = vecs[c2]
                acc = 0
                for t in range(k):
                    acc = acc * q + fadd[v1[t]][v2[t]]
                row[c2] = acc
        add_rows = []
        for a in range(n):
            ca = colcodes[a]
            vals = []
            for b in range(n):
                cb = colcodes[b]
                idx = 0
                for t in range(k):
                    idx = idx * Q + coladd[ca[t]][cb[t]]
                vals.append(idx)
            add_rows.append(array(code, vals))
        self._add_rows = add_rows

    def describe(self):
        return f"M{self.k}(GF{self.q})"

    def key(self):
        return ("matrix", self.k, self.descriptor.p, self.descriptor.r,
                self.descriptor.modulus)

    def format_element(self, i):
        gf = self.field
        def entry(e: int) -> str:
            text = ",".join(str(c) for c in gf.coeffs_of(e))
            return f"({text})" if gf.r > 1 else text
        rows = self.decode(i)
        return "[" + ",".join("[" + ",".join(entry(e) for e in row) + "]" for row in rows) + "]"


class PolyQuotientRing(Ring):
    """base[t]/(modulus) for a commutative base and monic modulus.

    Forms are coefficient vectors of base-ring element indices, constant
    term first.  Covers chain rings GF(q)[t]/(t^m) and Galois rings
    Z_{p^k}[t]/(f) with f irreducible mod p.
    """

    def __init__(self, base: Ring, modulus: Sequence[int], label: str | None = None):
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) < 2:
            raise ValidationError("modulus must have degree >= 1")
        if modulus[-1] != base.one_index:
            raise ValidationError("modulus must be monic over the base ring")
        if any(not 0 <= c < base.size for c in modulus):
            raise ValidationError("modulus coefficients outside the base ring")
        if not base.is_commutative():
            raise ValidationError("polynomial quotient base must be commutative")
        self.base = base
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.size = base.size ** self.degree
        self.one_index = base.one_index  # constant coefficient digit
        self._label = label
        self._init_tables()
        self._commutative = True

    def decode(self, i):
        s = self.base.size
        out = []
        for _ in range(self.degree):
            out.append(i % s)
            i //= s
        return tuple(out)

    def encode(self, form) -> int:
        s = self.base.size
        idx = 0
        for c in reversed(tuple(form)):
            idx = idx * s + c
        return idx

    def _add(self, i, j):
        base = self.base
        a, b = self.decode(i), self.decode(j)
        return self.encode(base.add_index(x, y) for x, y in zip(a, b))

    def _neg(self, i):
        base = self.base
        return self.encode(base.neg_index(c) for c in self.decode(i))

    def _mul(self, i, j):
        base = self.base
        d = self.degree
        a, b = self.decode(i), self.decode(j)
        prod = [0] * (2 * d - 1) if d > 1 else [0]
        for s, ai in enumerate(a):
            if ai:
                for t, bj in enumerate(b):
                    if bj:
                        prod[s + t] = base.add_index(prod[s + t], base.mul_index(ai, bj))
        for s in range(2 * d - 2, d - 1, -1):
            c = prod[s]
            if c:
                prod[s] = 0
                for t in range(d):
                    m = self.modulus[t]
                    if m:
                        prod[s - d + t] = base.add_index(
                            prod[s - d + t], base.neg_index(base.mul_index(c, m)))
        return self.encode(prod[:d])

    def describe(self):
        if self._label is not None:
            return self._label
        return f"polyquot({self.base.describe()},deg{self.degree})"

    def key(self):
        return ("polyquot", self.base.key(), self.modulus)

    def format_element(self, i):
        parts = []
        for c in self.decode(i):
            text = self.base.format_element(c)
            parts.append(f"({text})" if "," in text else text)
        return ",".join(parts)


class TrivialExtensionRing(Ring):
    """GF(q) plus a q^m square-zero part: (a,u)(b,v) = (ab, av + bu)."""

    def __init__(self, descriptor: FieldDescriptor, m: int):
        if m < 1:
            raise ValidationError(f"extension rank must be >= 1, got {m}")
        self.descriptor = descriptor
        self.field = galois_field(descriptor)
        self.q = self.field.order
        self.m = m
        self.size = self.q ** (m + 1)
        self.one_index = self.q ** m          # (1, 0, ..., 0)
        self._init_tables()
        self._commutative = True

    def decode(self, i):
        q, m = self.q, self.m
        u = [0] * m
        for t in range(m - 1, -1, -1):
            u[t] = i % q
            i //= q
        return (i, tuple(u))

    def encode(self, form) -> int:
        a, u = form
        idx = a
        for c in u:
            idx = idx * self.q + c
        return idx

    def _add(self, i, j):
        gf = self.field
        (a, u), (b, v) = self.decode(i), self.decode(j)
        return self.encode((gf.add(a, b), tuple(gf.add(x, y) for x, y in zip(u, v))))

    def _neg(self, i):
        gf = self.field
        a, u = self.decode(i)
        return self.encode((gf.neg(a), tuple(gf.neg(x) for x in u)))

    def _mul(self, i, j):
        gf = self.field
        (a, u), (b, v) = self.decode(i), self.decode(j)
        w = tuple(gf.add(gf.mul(a, y), gf.mul(b, x)) for x, y in zip(u, v))
        return self.encode((gf.mul(a, b), w))

    def describe(self):
        return f"triv({self.q},{self.m})"

    def key(self):
        return ("triv", self.descriptor.p, self.descriptor.r,
                self.descriptor.modulus, self.m)

    def format_element(self, i):
        gf = self.field
        a, u = self.decode(i)
        def entry(e: int) -> str:
            text = ",".join(str(c) for c in gf.coeffs_of(e))
            return f"({text})" if gf.r > 1 else text
        return "(" + ",".join([entry(a)] + [entry(x) for x in u]) + ")"


class ProductRing(Ring):
    """Direct product of two or more rings; last component varies fastest."""

    def __init__(self, factors: Sequence[Ring]):
        factors = tuple(factors)
        if len(factors) < 2:
            raise ValidationError("product needs at least 2 factors")
        self.factors = factors
        self.size = 1
        for f in factors:
            self.size *= f.size
        self.one_index = self.encode(tuple(f.one_index for f in factors))
        self._init_tables()
        self._commutative = all(f.is_commutative() for f in factors)

    def decode(self, i):
        out = [0] * len(self.factors)
        for t in range(len(self.factors) - 1, -1, -1):
            n = self.factors[t].size
            out[t] = i % n
            i //= n
        return tuple(out)

    def encode(self, form) -> int:
        idx = 0
        for f, c in zip(self.factors, form):
            idx = idx * f.size + c
        return idx

    def _add(self, i, j):
        a, b = self.decode(i), self.decode(j)
        return self.encode(tuple(f.add_index(x, y)
                                 for f, x, y in zip(self.factors, a, b)))

    def _neg(self, i):
        return self.encode(tuple(f.neg_index(x)
                                 for f, x in zip(self.factors, self.decode(i))))

    def _mul(self, i, j):
        a, b = self.decode(i), self.decode(j)
        return self.encode(tuple(f.mul_index(x, y)
                                 for f, x, y in zip(self.factors, a, b)))

    def describe(self):
        return " x ".join(f.describe() for f in self.factors)

    def key(self):
        return ("product",) + tuple(f.key() for f in self.factors)

    def format_element(self, i):
        parts = []
        for f, c in zip(self.factors, self.decode(i)):
            text = f.format_element(c)
            if "," in text and not (text.startswith("(") or text.startswith("[")):
                text = f"({text})"
            parts.append(text)
        return "(" + ",".join(parts) + ")"


class TableRing(Ring):
    """Ring given by explicit Cayley tables; fully audited at load."""

    def __init__(self, add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]],
                 one: int, source_path: str | None = None):
        n = len(add)
        if n < 2:
            raise ValidationError("table ring must have at least 2 elements")
        if n > TABLE_RING_CAP:
            raise ValidationError(f"table ring capped at {TABLE_RING_CAP} elements, got {n}")
        add_t = tuple(tuple(int(x) for x in row) for row in add)
        mul_t = tuple(tuple(int(x) for x in row) for row in mul)
        self._audit(n, add_t, mul_t, one)
        self.size = n
        self.one_index = one
        self._table_add = add_t
        self._table_mul = mul_t
        self.source_path = source_path
        self._init_tables()

    @staticmethod
    def _audit(n: int, add, mul, one: int) -> None:
        for name, tab in (("add", add), ("mul", mul)):
            if len(tab) != n or any(len(row) != n for row in tab):
                raise ValidationError(f"{name} table is not {n}x{n}")
            if any(not 0 <= x < n for row in tab for x in row):
                raise ValidationError(f"{name} table entry out of range")
        rng = range(n)
        if any(add[0][j] != j or add[j][0] != j for j in rng):
            raise ValidationError("element 0 is not the additive identity")
        if any(add[i][j] != add[j][i] for i in rng for j in rng):
            raise ValidationError("addition is not commutative")
        if any(0 not in add[i] for i in rng):
            raise ValidationError("some element has no additive inverse")
        for i in rng:
            ai = add[i]
            for j in rng:
                aij = add[i][j]
                row_j = add[j]
                for k in rng:
                    if add[aij][k] != ai[row_j[k]]:
                        raise ValidationError("addition is not associative")
        if not 0 <= one < n:
            raise ValidationError("designated identity index out of range")
        if any(mul[one][j] != j or mul[j][one] != j for j in rng):
            raise ValidationError("designated 1 is not a two-sided identity")
        if any(mul[0][j] != 0 or mul[j][0] != 0 for j in rng):
            raise ValidationError("0 does not annihilate under multiplication")
        for i in rng:
            mi = mul[i]
            for j in rng:
                mij = mul[i][j]
                row_j = mul[j]
                for k in rng:
                    if mul[mij][k] != mi[row_j[k]]:
                        raise ValidationError("multiplication is not associative")
        for i in rng:
            mi = mul[i]
            for j in rng:
                for k in rng:
                    if mi[add[j][k]] != add[mi[j]][mi[k]]:
                        raise ValidationError("left distributivity fails")
                    if mul[add[j][k]][i] != add[mul[j][i]][mul[k][i]]:
                        raise ValidationError("right distributivity fails")

    def _build_tables(self) -> None:
        code = _row_typecode(self.size)
        self._mul_rows = [array(code, row) for row in self._table_mul]
        self._add_rows = [array(code, row) for row in self._table_add]

    def _add(self, i, j):
        return self._table_add[i][j]

    def _mul(self, i, j):
        return self._table_mul[i][j]

    def _neg(self, i):
        return self._table_add[i].index(0)

    def decode(self, i):
        return i

    def encode(self, form):
        return int(form)

    def describe(self):
        return f"table:{self.source_path}" if self.source_path else f"table:<{self.size} elements>"

    def key(self):
        return ("table", self.one_index, self._table_add, self._table_mul)


class QuotientRing(Ring):
    """R/I for a validated proper two-sided ideal; elements are cosets.

    The canonical representative of a coset is its minimal parent index
    and cosets are indexed in representative order, so coset 0 is I.
    """

    def __init__(self, parent: Ring, members: Iterable[int]):
        members = frozenset(int(x) for x in members)
        validate_ideal(parent, members)
        if len(members) == parent.size:
            raise ImproperIdeal("ideal equals the whole ring")
        self.parent = parent
        self.members = members
        pn = parent.size
        ideal = sorted(members)
        cmap = [-1] * pn  # parent index -> minimal index of its coset
        for x in range(pn):
            if cmap[x] >= 0:
                continue
            coset = sorted(parent.add_index(x, i) for i in ideal)
            rep = coset[0]
            for y in coset:
                cmap[y] = rep
        reps = sorted(set(cmap))
        self._cmap = cmap
        self._reps = reps
        self._qidx = {rep: t for t, rep in enumerate(reps)}
        self.size = len(reps)
        self.one_index = self._qidx[cmap[parent.one_index]]
        self._assert_well_defined()
        self._init_tables()

    def _assert_well_defined(self) -> None:
        parent, cmap = self.parent, self._cmap
        for x in range(parent.size):
            rowx = parent.mul_row(x)
            rowr = parent.mul_row(cmap[x])
            for y in range(parent.size):
                if cmap[rowx[y]] != cmap[rowr[cmap[y]]]:
                    raise NotAnIdeal("multiplication is not well-defined on cosets")

    def _add(self, i, j):
        p = self.parent
        return self._qidx[self._cmap[p.add_index(self._reps[i], self._reps[j])]]

    def _mul(self, i, j):
        p = self.parent
        return self._qidx[self._cmap[p.mul_index(self._reps[i], self._reps[j])]]

    def _neg(self, i):
        return self._qidx[self._cmap[self.parent.neg_index(self._reps[i])]]

    def coset_index_of(self, parent_index: int) -> int:
        """Quotient index of the coset containing a parent element."""
        return self._qidx[self._cmap[parent_index]]

    def representative(self, i: int) -> int:
        return self._reps[i]

    def decode(self, i):
        rep = self._reps[i]
        return tuple(x for x in range(self.parent.size) if self._cmap[x] == rep)

    def encode(self, form):
        return self.coset_index_of(min(form))

    def describe(self):
        return f"quotient({self.parent.describe()},|I|={len(self.members)})"

    def key(self):
        return ("quotient", self.parent.key(), tuple(sorted(self.members)))


# ---------------------------------------------------------------------------
# Ideal validation and module-level operations
# ---------------------------------------------------------------------------


def validate_ideal(ring: Ring, members: frozenset[int]) -> None:
    """Raise NotAnIdeal unless members is a two-sided ideal of the ring."""
    if not members:
        raise NotAnIdeal("ideal is empty")
    if 0 not in members:
        raise NotAnIdeal("ideal does not contain 0")
    if any(not 0 <= x < ring.size for x in members):
        raise NotAnIdeal("ideal contains out-of-range indices")
    for x in members:
        row = ring.add_row(x)
        if any(row[y] not in members for y in members):
            raise NotAnIdeal("ideal is not closed under addition")
    for x in members:
        row = ring.mul_row(x)
        if any(row[a] not in members for a in range(ring.size)):
            raise NotAnIdeal("ideal is not closed under right multiplication")
    for a in range(ring.size):
        row = ring.mul_row(a)
        if any(row[x] not in members for x in members):
            raise NotAnIdeal("ideal is not closed under left multiplication")


def quotient_make(ring: Ring, ideal) -> QuotientRing:
    """Quotient by a two-sided proper ideal (an Ideal or an index set)."""
    members = getattr(ideal, "members", ideal)
    return QuotientRing(ring, members)


def ring_size(ring: Ring) -> int:
    return ring.size


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def ring_neg(a: RingElement) -> RingElement:
    return -a


def ring_enumerate(ring: Ring, cap: int | None = DEFAULT_SIZE_CAP) -> Iterator[RingElement]:
    """All elements in index order; guarded by the size cap."""
    if cap is not None and ring.size > cap:
        raise SizeCapExceeded(ring.size, cap)
    for i in range(ring.size):
        yield RingElement(ring, i)


# ---------------------------------------------------------------------------
# Factories
# ---------------------------------------------------------------------------


def zmod(n: int) -> ZModRing:
    return ZModRing(n)


def field_ring(q: int) -> FieldRing:
    p, r = factor_prime_power(q)
    return FieldRing(field_make(p, r))


def matrix_ring(k: int, q: int) -> MatrixRing:
    p, r = factor_prime_power(q)
    return MatrixRing(k, field_make(p, r))


def chain_ring(q: int, m: int) -> PolyQuotientRing:
    """GF(q)[t]/(t^m): the local chain ring of order q^m."""
    if m < 1:
        raise ValidationError(f"chain ring exponent must be >= 1, got {m}")
    base = field_ring(q)
    modulus = [0] * m + [base.one_index]
    return PolyQuotientRing(base, modulus, label=f"chain({q},{m})")


def galois_ring(p: int, k: int, r: int, modulus: Sequence[int] | None = None) -> PolyQuotientRing:
    """Z_{p^k}[t]/(f) with f monic of degree r and irreducible mod p."""
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    if k < 1 or r < 1:
        raise ValidationError("Galois ring needs k >= 1 and r >= 1")
    base = zmod(p ** k)
    if modulus is None:
        lift = field_make(p, r).modulus
        modulus = [int(c) for c in lift]
    else:
        modulus = [int(c) % (p ** k) for c in modulus]
        if len(modulus) != r + 1 or modulus[-1] != 1:
            raise ValidationError(f"modulus must be monic of degree {r}")
        reduced = tuple(c % p for c in modulus)
        if reduced[-1] != 1 or not is_irreducible(reduced, p):
            raise ValidationError("modulus reduction mod p must be irreducible")
    return PolyQuotientRing(base, modulus, label=f"GR({p},{k},{r})")


def trivial_extension(q: int, m: int) -> TrivialExtensionRing:
    p, r = factor_prime_power(q)
    return TrivialExtensionRing(field_make(p, r), m)


def product(*factors: Ring) -> ProductRing:
    return ProductRing(factors)


def table_ring(add, mul, one: int, source_path: str | None = None) -> TableRing:
    return TableRing(add, mul, one, source_path)


def table_ring_from_json(path: str) -> TableRing:
    """Load {"size": N, "one": i, "add": [[...]], "mul": [[...]]}."""
    with open(path, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    try:
        size = int(payload["size"])
        one = int(payload["one"])
        add = payload["add"]
        mul = payload["mul"]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"table ring JSON missing field: {exc}") from exc
    if len(add) != size or len(mul) != size:
        raise ValidationError("table ring JSON: declared size does not match tables")
    return TableRing(add, mul, one, source_path=path)
