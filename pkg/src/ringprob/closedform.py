"""Closed-form probability formulas and bounds from structural parameters.

Every function here evaluates exact rationals from (q, n, rank, radical
layer, ...) alone, without enumerating pairs; the enumeration engines in
`probability` are the oracles these formulas are verified against.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BadDimensionOrder,
    FormulaUnavailable,
    NotChain,
    NotJ2Zero,
    NotLocal,
    NTooSmall,
    ValidationError,
)
from .finfield import factor_prime_power
from .probability import ProbFraction, _check_cap, _index_of, pair_counts, prob_annsum
from .rings import DEFAULT_SIZE_CAP, MatrixRing, ProductRing, Ring, RingElement
from .structure import structure_report

ZERO_CLASS = "zero"
NONZERO_ZERO_DIVISOR = "nonzero_zero_divisor"
NONZERO_RADICAL = "nonzero_radical"


@dataclass(frozen=True)
class FormulaResult:
    """An exact value plus the formula tag and its verified hypotheses."""

    value: ProbFraction
    formula: str
    applicability: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class MatrixClass:
    """Target class for the matrix-ring formula: q, matrix size, rank."""

    q: int
    dim: int
    rank: int

    def __post_init__(self):
        factor_prime_power(self.q)  # raises NonPrime unless q is a prime power
        if self.dim < 1:
            raise ValidationError(f"matrix dimension must be >= 1, got {self.dim}")
        if not 0 <= self.rank <= self.dim:
            raise ValidationError(f"rank {self.rank} outside [0, {self.dim}]")


def subspace_count(q: int, n: int, r: int, k: int) -> int:
    """Number of k-dimensional subspaces of F_q^n containing a fixed
    r-dimensional subspace: the product of (q^(n-r) - q^i)/(q^(k-r) - q^i)
    over i < k - r, evaluated as one exact big-integer division."""
    if not (0 <= r <= k <= n):
        raise BadDimensionOrder(f"need 0 <= r <= k <= n, got r={r}, k={k}, n={n}")
    if q < 2:
        raise ValidationError(f"field order must be >= 2, got {q}")
    num = den = 1
    for i in range(k - r):
        num *= q ** (n - r) - q ** i
        den *= q ** (k - r) - q ** i
    count, rem = divmod(num, den)
    if rem:
        raise AssertionError("subspace count product is not integral")
    return count


def matrix_rank(x: RingElement) -> int:
    """Rank by Gaussian elimination over GF(q), inverting pivots exactly."""
    ring = x.ring
    if not isinstance(ring, MatrixRing):
        raise ValidationError("matrix_rank needs an element of a matrix ring")
    gf = ring.field
    k = ring.k
    rows = [list(r) for r in ring.decode(x.index)]
    rank = 0
    for col in range(k):
        pivot = next((r for r in range(rank, k) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = gf.inv(rows[rank][col])
        rows[rank] = [gf.mul(inv, v) for v in rows[rank]]
        for r in range(k):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [gf.add(v, gf.neg(gf.mul(f, p)))
                           for v, p in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def prob_matrix_formula(cls: MatrixClass) -> FormulaResult:
    """Closed form for M_dim(GF(q)) at a target of the given rank.

    Hit count per rank-k stratum: q^(dim*(dim-k)) times the number of
    k-spaces containing the target's column space times the number of
    surjections onto such a space; denominator q^(2*dim^2)."""
    q, dim, r = cls.q, cls.dim, cls.rank
    hits = 0
    for k in range(r, dim + 1):
        surjections = 1
        for i in range(k):
            surjections *= q ** dim - q ** i
        hits += q ** (dim * (dim - k)) * subspace_count(q, dim, r, k) * surjections
    total = q ** (2 * dim * dim)
    return FormulaResult(
        value=ProbFraction(hits, total),
        formula="matrix",
        applicability={"q": q, "dim": dim, "rank": r},
    )


def prob_unit_formula(ring: Ring) -> FormulaResult:
    """|R*| / |R|^2, the exact value for any unit target."""
    report = structure_report(ring)
    return FormulaResult(
        value=ProbFraction(len(report.units), ring.size ** 2),
        formula="unit",
        applicability={"units": len(report.units)},
    )


def general_bounds(ring: Ring, x_class: str) -> tuple[ProbFraction, ProbFraction]:
    """Exact lower/upper bounds from |R|, |R*|, |Z(R)| for the two
    non-unit classes (zero, or a nonzero zero-divisor)."""
    report = structure_report(ring)
    size = ring.size
    z = len(report.zero_divisors)
    u = len(report.units)
    sq = size * size
    if x_class == ZERO_CLASS:
        lo = ProbFraction(2 * size + z - 2, sq)
        hi = ProbFraction(2 * size - 2 * z + z * z, sq)
    elif x_class == NONZERO_ZERO_DIVISOR:
        lo = ProbFraction(u * (2 + z), z * sq)
        hi = ProbFraction(size - 2 * z + z * z, sq)
    else:
        raise ValidationError(f"unknown x class {x_class!r}")
    return lo, hi


def local_bounds(ring: Ring, x_class: str) -> tuple[ProbFraction, ProbFraction]:
    """Sharper bounds for local rings of order q^n with n >= 2."""
    report = structure_report(ring)
    if not report.is_local:
        raise NotLocal(f"{ring.describe()} is not local")
    q, n = report.q, report.n
    if n < 2:
        raise NTooSmall(f"local bounds need n >= 2, got n={n}")
    if x_class == ZERO_CLASS:
        lo = ProbFraction(3 * q ** (n - 1) - q ** (n - 2) - 1, q ** (2 * n - 1))
        hi = ProbFraction(q ** (n - 1) + 2 * q - 2, q ** (n + 1))
    elif x_class == NONZERO_RADICAL:
        lo = ProbFraction((q - 1) * (q ** (n - 2) + 1), q ** (2 * n - 1))
        hi = ProbFraction(q ** (n - 1) + q - 2, q ** (n + 1))
    else:
        raise ValidationError(f"unknown x class {x_class!r}")
    return lo, hi


def prob_chain_formula(ring: Ring, x: RingElement | int) -> FormulaResult:
    """Closed form for local rings whose radical chain has maximal length:
    (k+1)(q-1)/q^(n+1) on the k-th radical layer, ((n+1)q - n)/q^(n+1) at 0."""
    report = structure_report(ring)
    if not (report.is_local and report.is_max_chain):
        raise NotChain(f"{ring.describe()} is not a maximal-chain local ring")
    q, n = report.q, report.n
    xi = _index_of(ring, x)
    applicability = {"local": True, "max_chain": True, "q": q, "n": n}
    if xi == 0:
        value = ProbFraction((n + 1) * q - n, q ** (n + 1))
        applicability["target"] = "zero"
    else:
        k = report.radical_layer(xi)
        value = ProbFraction((k + 1) * (q - 1), q ** (n + 1))
        applicability["layer"] = k
    return FormulaResult(value=value, formula="chain", applicability=applicability)


def prob_j2zero_formula(ring: Ring, x: RingElement | int) -> FormulaResult:
    """Closed form for local rings with square-zero radical: three-way
    dispatch on zero / nonzero radical member / non-member."""
    report = structure_report(ring)
    if not (report.is_local and report.is_j2_zero):
        raise NotJ2Zero(f"{ring.describe()} is not local with square-zero radical")
    q, n = report.q, report.n
    xi = _index_of(ring, x)
    applicability = {"local": True, "j2_zero": True, "q": q, "n": n}
    if xi == 0:
        value = ProbFraction(q ** (n - 1) + 2 * q - 2, q ** (n + 1))
        applicability["target"] = "zero"
    elif xi in report.radical.members:
        value = ProbFraction(2 * (q - 1), q ** (n + 1))
        applicability["target"] = "radical"
    else:
        value = ProbFraction(q - 1, q ** (n + 1))
        applicability["target"] = "unit"
    return FormulaResult(value=value, formula="j2zero", applicability=applicability)


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prob_zn(n: int, x: int) -> FormulaResult:
    """Exact value over the integers mod n via the prime-power split:
    chain closed form on each Z_{p^e} factor, multiplied together."""
    if n < 2:
        raise ValidationError(f"modulus must be >= 2, got {n}")
    x = int(x) % n
    value = ProbFraction(1, 1)
    factors = _factorize(n)
    for p, e in sorted(factors.items()):
        pe = p ** e
        xi = x % pe
        if xi == 0:
            part = ProbFraction((e + 1) * p - e, p ** (e + 1))
        else:
            k = 0
            while xi % p == 0:
                xi //= p
                k += 1
            part = ProbFraction((k + 1) * (p - 1), p ** (e + 1))
        value = value * part
    return FormulaResult(
        value=value,
        formula="zn",
        applicability={"n": n, "factors": factors},
    )


def corollary_43_predicates(ring: Ring) -> tuple[bool, bool, bool, bool]:
    """The four extremal statements for a local ring of order q^n, n >= 2:
    lower-bound equality on every nonzero radical member, upper-bound
    equality likewise, zero-target lower-bound equality, and |R| = q^2.
    Their pairwise equivalence is asserted by the test suite, not here."""
    report = structure_report(ring)
    if not report.is_local:
        raise NotLocal(f"{ring.describe()} is not local")
    q, n = report.q, report.n
    if n < 2:
        raise NTooSmall(f"equivalence predicates need n >= 2, got n={n}")
    counts = pair_counts(ring, cap=None)
    total = ring.size ** 2
    nonzero_j = [x for x in report.radical.members if x != 0]
    lower = ProbFraction((q - 1) * (q ** (n - 2) + 1), q ** (2 * n - 1))
    upper = ProbFraction(q ** (n - 1) + q - 2, q ** (n + 1))
    zero_lower = ProbFraction(3 * q ** (n - 1) - q ** (n - 2) - 1, q ** (2 * n - 1))
    p1 = all(ProbFraction(counts[x], total) == lower for x in nonzero_j)
    p2 = all(ProbFraction(counts[x], total) == upper for x in nonzero_j)
    p3 = ProbFraction(counts[0], total) == zero_lower
    p4 = ring.size == q * q
    return p1, p2, p3, p4


def corollary_44_predicate(ring: Ring) -> tuple[bool, bool]:
    """(zero-target probability equals its upper bound, radical squares
    to zero) for a local ring; equivalence is asserted by tests."""
    report = structure_report(ring)
    if not report.is_local:
        raise NotLocal(f"{ring.describe()} is not local")
    q, n = report.q, report.n
    counts = pair_counts(ring, cap=None)
    lhs = (ProbFraction(counts[0], ring.size ** 2)
           == ProbFraction(q ** (n - 1) + 2 * q - 2, q ** (n + 1)))
    return lhs, report.is_j2_zero


def prob_formula(ring: Ring, x: RingElement | int) -> FormulaResult:
    """Closed form only; raises FormulaUnavailable when none applies."""
    report = structure_report(ring)
    xi = _index_of(ring, x)
    if xi in report.units:
        return prob_unit_formula(ring)
    if isinstance(ring, MatrixRing):
        cls = MatrixClass(q=ring.q, dim=ring.k, rank=matrix_rank(ring.element(xi)))
        return prob_matrix_formula(cls)
    if report.is_local and report.is_max_chain:
        return prob_chain_formula(ring, xi)
    if report.is_local and report.is_j2_zero:
        return prob_j2zero_formula(ring, xi)
    if isinstance(ring, ProductRing):
        comps = ring.decode(xi)
        value = ProbFraction(1, 1)
        tags = []
        for factor, comp in zip(ring.factors, comps):
            sub = prob_formula(factor, comp)
            value = value * sub.value
            tags.append(sub.formula)
        return FormulaResult(
            value=value,
            formula="product",
            applicability={"components": tags},
        )
    raise FormulaUnavailable(f"no closed form applies to {ring.describe()}")


def prob_auto(ring: Ring, x: RingElement | int,
              cap: int | None = DEFAULT_SIZE_CAP) -> FormulaResult:
    """Formula dispatch with the annihilator-sum engine as the fallback."""
    _check_cap(ring, cap)
    try:
        return prob_formula(ring, x)
    except FormulaUnavailable:
        return FormulaResult(
            value=prob_annsum(ring, x, cap=cap),
            formula="annsum",
            applicability={"fallback": True},
        )
