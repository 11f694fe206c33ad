"""Structural data of a finite ring: units, zero-divisors, annihilators,
the radical power chain, and the local-ring classification (q, n).

Everything here is exhaustive over element indices; rings are expected to
be at corpus scale (a few hundred elements).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import NotLocal
from .rings import Ring, RingElement, quotient_make, validate_ideal


@dataclass(frozen=True)
class Ideal:
    """A validated two-sided ideal, stored as an element-index set."""

    ring: Ring
    members: frozenset[int]

    def __post_init__(self):
        validate_ideal(self.ring, self.members)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_zero(self) -> bool:
        return self.members == frozenset({0})

    @property
    def is_proper(self) -> bool:
        return len(self.members) < self.ring.size

    def sorted_members(self) -> list[int]:
        return sorted(self.members)

    def __contains__(self, index: int) -> bool:
        return index in self.members


def additive_closure(ring: Ring, generators: Iterable[int],
                     stop_when_full: bool = False) -> frozenset[int]:
    """Smallest additive subgroup containing the generators.

    With stop_when_full, returns the full index set as soon as the closure
    is forced to be the whole group (size beyond half the ring).
    """
    n = ring.size
    closure: set[int] = {0}
    for g in sorted(set(generators)):
        if g in closure:
            continue
        grown = set(closure)
        cur = g
        while cur not in closure:
            grown.update(ring.add_index(s, cur) for s in closure)
            cur = ring.add_index(cur, g)
        closure = grown
        if stop_when_full and len(closure) > n // 2:
            return frozenset(range(n))  # subgroup order divides n
    return frozenset(closure)


def units(ring: Ring) -> frozenset[int]:
    """Indices with a multiplicative inverse (one-sided suffices here)."""
    one = ring.one_index
    return frozenset(u for u in range(ring.size) if one in ring.mul_row(u))


def _zero_positions(row) -> Iterable[int]:
    start = 0
    while True:
        try:
            pos = row.index(0, start)
        except ValueError:
            return
        yield pos
        start = pos + 1


def _divisor_flags(ring: Ring) -> tuple[list[bool], list[bool]]:
    """(left, right) zero-divisor flags per index, straight from the definition."""
    n = ring.size
    left = [False] * n
    right = [False] * n
    for a in range(n):
        row = ring.mul_row(a)
        if row.count(0) >= 2:        # a*0 = 0 always; a second zero is a witness
            left[a] = True
        if a != 0:
            for x in _zero_positions(row):
                right[x] = True
    return left, right


def zero_divisors(ring: Ring) -> frozenset[int]:
    """Indices x with some y != 0 such that xy = 0 or yx = 0 (0 included)."""
    left, right = _divisor_flags(ring)
    return frozenset(x for x in range(ring.size) if left[x] or right[x])


def left_right_symmetry_check(ring: Ring) -> bool:
    """True iff every one-sided zero-divisor is two-sided (falsifier hook)."""
    left, right = _divisor_flags(ring)
    return left == right


def right_annihilator(a: RingElement) -> frozenset[int]:
    """{y : ay = 0} as an index set."""
    return frozenset(_zero_positions(a.ring.mul_row(a.index)))


def right_annihilator_size(ring: Ring, index: int) -> int:
    return ring.mul_row(index).count(0)


def jacobson_radical(ring: Ring) -> Ideal:
    """{x : 1 - ax is a unit for every a}, as a validated ideal."""
    return structure_report(ring).radical_chain[0]


def radical_powers(ring: Ring) -> tuple[Ideal, ...]:
    """[J, J^2, ..., J^t = {0}], strictly decreasing."""
    return structure_report(ring).radical_chain


def principal_two_sided_ideal(ring: Ring, g: RingElement | int) -> Ideal:
    """Smallest two-sided ideal containing g (additive closure of agb)."""
    gi = g.index if isinstance(g, RingElement) else int(g)
    return Ideal(ring, principal_ideal_members(ring, gi))


def principal_ideal_members(ring: Ring, gi: int) -> frozenset[int]:
    """Index set of the two-sided ideal generated by element gi."""
    n = ring.size
    if gi == 0:
        return frozenset({0})
    left_multiples = {ring.mul_index(a, gi) for a in range(n)}
    generators: set[int] = set()
    for x in left_multiples:
        generators.update(ring.mul_row(x))
        if ring.one_index in generators:
            return frozenset(range(n))
    return additive_closure(ring, generators, stop_when_full=True)


@dataclass(frozen=True)
class StructureReport:
    """Classification data every probability formula dispatches on."""

    ring: Ring
    units: frozenset[int]
    zero_divisors: frozenset[int]
    radical_chain: tuple[Ideal, ...]
    nilpotency_index: int
    is_local: bool
    q: int | None
    n: int | None
    is_max_chain: bool
    is_j2_zero: bool

    @property
    def radical(self) -> Ideal:
        return self.radical_chain[0]

    def radical_layer(self, index: int) -> int:
        """Largest k with the element inside the k-th radical power.

        Units sit at layer 0 (the whole ring); only meaningful for
        nonzero indices, since 0 lies in every power.
        """
        if index == 0:
            raise ValueError("layer of 0 is not defined; every power contains it")
        k = 0
        for ideal in self.radical_chain:
            if index in ideal.members:
                k += 1
            else:
                break
        return k


def _radical_members(ring: Ring, unit_set: frozenset[int]) -> frozenset[int]:
    n = ring.size
    one = ring.one_index
    members = []
    for x in range(n):
        if x in unit_set:
            continue
        ok = True
        for a in range(n):
            ax = ring.mul_index(a, x)
            if ring.add_index(one, ring.neg_index(ax)) not in unit_set:
                ok = False
                break
        if ok:
            members.append(x)
    return frozenset(members)


def _radical_chain(ring: Ring, j_members: frozenset[int]) -> tuple[Ideal, ...]:
    chain = [Ideal(ring, j_members)]
    while not chain[-1].is_zero:
        prev = chain[-1].members
        seed = {ring.mul_index(a, b) for a in prev for b in j_members}
        nxt = additive_closure(ring, seed)
        if len(nxt) >= len(prev):
            raise AssertionError("radical powers failed to decrease strictly")
        chain.append(Ideal(ring, nxt))
    return tuple(chain)


def _nonunits_add_closed(ring: Ring, unit_set: frozenset[int]) -> bool:
    nonunits = [x for x in range(ring.size) if x not in unit_set]
    for x in nonunits:
        row = ring.add_row(x)
        for y in nonunits:
            if row[y] in unit_set:
                return False
    return True


@lru_cache(maxsize=None)
def structure_report(ring: Ring) -> StructureReport:
    """Full structural classification; cached per ring descriptor."""
    unit_set = units(ring)
    zd = zero_divisors(ring)
    j_members = _radical_members(ring, unit_set)
    chain = _radical_chain(ring, j_members)
    t = len(chain)

    is_local = _nonunits_add_closed(ring, unit_set)
    q = n = None
    if is_local:
        nonunits = frozenset(x for x in range(ring.size) if x not in unit_set)
        if nonunits != j_members:
            raise AssertionError("non-units form an ideal but differ from the radical")
        residue = quotient_make(ring, j_members)
        residue_units = units(residue)
        if len(residue_units) != residue.size - 1:
            raise AssertionError("residue ring of a local ring is not a field")
        q = residue.size
        m, n = ring.size, 0
        while m > 1 and m % q == 0:
            m //= q
            n += 1
        if m != 1:
            raise AssertionError("local ring order is not a power of the residue order")

    return StructureReport(
        ring=ring,
        units=unit_set,
        zero_divisors=zd,
        radical_chain=chain,
        nilpotency_index=t,
        is_local=is_local,
        q=q,
        n=n,
        is_max_chain=is_local and t == n,
        is_j2_zero=t <= 2,
    )


def classify_local(ring: Ring) -> StructureReport:
    """Locality classification entry point; alias of structure_report."""
    return structure_report(ring)


def _is_power_of(value: int, base: int) -> bool:
    while value > 1 and value % base == 0:
        value //= base
    return value == 1


def ideal_size_power_check(ring: Ring) -> bool:
    """All principal one-sided ideals, radical powers, and right
    annihilators have size a power of the residue field order."""
    report = structure_report(ring)
    if not report.is_local:
        raise NotLocal(f"{ring.describe()} is not local")
    q = report.q
    n = ring.size
    for ideal in report.radical_chain:
        if not _is_power_of(ideal.size, q):
            return False
    columns: list[set[int]] = [set() for _ in range(n)]
    for a in range(n):
        row = ring.mul_row(a)
        if not _is_power_of(len(set(row)), q):          # aR
            return False
        if not _is_power_of(row.count(0), q):           # ann_r(a)
            return False
        for x in range(n):
            columns[x].add(row[x])
    return all(_is_power_of(len(col), q) for col in columns)  # Ra


def unit_plus_radical_check(ring: Ring) -> bool:
    """True iff u + j is a unit for every unit u and radical member j."""
    report = structure_report(ring)
    unit_set = report.units
    for u in unit_set:
        row = ring.add_row(u)
        for j in report.radical.members:
            if row[j] not in unit_set:
                return False
    return True
