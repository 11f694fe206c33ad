"""Exact engines for the multiplication probability of a finite ring.

Three independent routes are kept deliberately separate so that each can
serve as an oracle for the others:

  prob_brute   - the definitional count over all |R|^2 ordered pairs,
  prob_annsum  - the annihilator-sum identity (sum of |ann_r(a)| over the
                 elements a whose row reaches x),
  pair_counts  - a single pass binning every ordered pair by its product
                 (the workhorse behind full spectra).

All values are exact integer pairs; nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import MixedRings, SizeCapExceeded, ValidationError
from .rings import DEFAULT_SIZE_CAP, MatrixRing, Ring, RingElement
from .structure import StructureReport, structure_report


@dataclass(frozen=True)
class ProbFraction:
    """An exact probability as (hit count, total); reduced only on display."""

    hits: int
    total: int

    def __post_init__(self):
        if self.total <= 0:
            raise ValueError("total must be positive")
        if not 0 <= self.hits <= self.total:
            raise ValueError(f"hits {self.hits} outside [0, {self.total}]")

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.hits, self.total)

    def reduced(self) -> tuple[int, int]:
        g = gcd(self.hits, self.total)
        return self.hits // g, self.total // g

    def decimal_str(self, digits: int = 12) -> str:
        with localcontext() as ctx:
            ctx.prec = digits
            return str(Decimal(self.hits) / Decimal(self.total))

    def __mul__(self, other: "ProbFraction") -> "ProbFraction":
        return ProbFraction(self.hits * other.hits, self.total * other.total)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProbFraction):
            return NotImplemented
        return self.hits * other.total == other.hits * self.total

    def __lt__(self, other: "ProbFraction") -> bool:
        return self.hits * other.total < other.hits * self.total

    def __le__(self, other: "ProbFraction") -> bool:
        return self.hits * other.total <= other.hits * self.total

    def __gt__(self, other: "ProbFraction") -> bool:
        return other < self

    def __ge__(self, other: "ProbFraction") -> bool:
        return other <= self

    def __hash__(self) -> int:
        return hash(self.reduced())

    def __str__(self) -> str:
        num, den = self.reduced()
        return f"{num}/{den}"


def _index_of(ring: Ring, x: RingElement | int) -> int:
    if isinstance(x, RingElement):
        if x.ring != ring:
            raise MixedRings(f"{x.ring.describe()} element used in {ring.describe()}")
        return x.index
    i = int(x)
    if not 0 <= i < ring.size:
        raise ValidationError(f"index {i} outside [0, {ring.size})")
    return i


def _check_cap(ring: Ring, cap: int | None) -> None:
    if cap is not None and ring.size > cap:
        raise SizeCapExceeded(ring.size, cap)


def delta(a: RingElement, x: RingElement) -> int:
    """1 if some b solves ab = x, else 0 (scan over the full row)."""
    ring = a.ring
    xi = _index_of(ring, x)
    return 1 if xi in ring.mul_row(a.index) else 0


def prob_brute(ring: Ring, x: RingElement | int,
               cap: int | None = DEFAULT_SIZE_CAP) -> ProbFraction:
    """Definitional oracle: count ordered pairs (a, b) with ab = x."""
    _check_cap(ring, cap)
    xi = _index_of(ring, x)
    n = ring.size
    hits = 0
    for a in range(n):
        hits += ring.mul_row(a).count(xi)
    return ProbFraction(hits, n * n)


def prob_annsum(ring: Ring, x: RingElement | int,
                cap: int | None = DEFAULT_SIZE_CAP) -> ProbFraction:
    """Annihilator-sum engine: add |ann_r(a)| whenever x lies in aR."""
    _check_cap(ring, cap)
    xi = _index_of(ring, x)
    n = ring.size
    hits = 0
    for a in range(n):
        row = ring.mul_row(a)
        if xi in row:
            hits += row.count(0)
    return ProbFraction(hits, n * n)


@lru_cache(maxsize=None)
def _pair_counts(ring: Ring) -> tuple[int, ...]:
    n = ring.size
    counts = [0] * n
    for a in range(n):
        for v in ring.mul_row(a):
            counts[v] += 1
    return tuple(counts)


def pair_counts(ring: Ring, cap: int | None = DEFAULT_SIZE_CAP) -> tuple[int, ...]:
    """Hit count per product index from one pass over all ordered pairs."""
    _check_cap(ring, cap)
    return _pair_counts(ring)


def annsum_counts(ring: Ring, cap: int | None = DEFAULT_SIZE_CAP) -> tuple[int, ...]:
    """All-x analogue of prob_annsum in one sweep (for cross-validation)."""
    _check_cap(ring, cap)
    n = ring.size
    counts = [0] * n
    for a in range(n):
        row = ring.mul_row(a)
        ann = row.count(0)
        for reached in set(row):
            counts[reached] += ann
    return tuple(counts)


@dataclass(frozen=True)
class SpectrumEntry:
    label: str
    representative: int
    class_size: int
    prob: ProbFraction


@dataclass(frozen=True)
class SpectrumReport:
    """Per-class multiplication probabilities over the whole ring."""

    ring: Ring
    counts: tuple[int, ...]
    entries: tuple[SpectrumEntry, ...]

    @property
    def total(self) -> int:
        return self.ring.size ** 2

    def prob_of(self, index: int) -> ProbFraction:
        return ProbFraction(self.counts[index], self.total)


def _class_label(ring: Ring, report: StructureReport, index: int) -> str:
    if index == 0:
        return "zero"
    if isinstance(ring, MatrixRing):
        from .closedform import matrix_rank
        return f"rank {matrix_rank(ring.element(index))}"
    if index in report.units:
        return "unit"
    if report.is_local:
        return f"J^{report.radical_layer(index)}"
    return "zero-divisor"


def spectrum(ring: Ring, cap: int | None = DEFAULT_SIZE_CAP) -> SpectrumReport:
    """Group elements into classes of equal probability and shared label."""
    counts = pair_counts(ring, cap)
    report = structure_report(ring)
    total = ring.size ** 2
    groups: dict[tuple[str, int], list[int]] = {}
    for i in range(ring.size):
        key = (_class_label(ring, report, i), counts[i])
        groups.setdefault(key, [0, ring.size])
        groups[key][0] += 1
        groups[key][1] = min(groups[key][1], i)
    entries = [
        SpectrumEntry(label=label, representative=rep, class_size=size,
                      prob=ProbFraction(hits, total))
        for (label, hits), (size, rep) in groups.items()
    ]
    entries.sort(key=lambda e: e.representative)
    return SpectrumReport(ring=ring, counts=counts, entries=tuple(entries))
