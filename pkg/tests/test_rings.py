"""Ring constructions: indexing, arithmetic, axioms, quotients, tables."""

import random

import pytest

from ringprob.corpus import default_corpus, upper_triangular_tables
from ringprob.errors import (
    ImproperIdeal,
    MixedRings,
    NotAnIdeal,
    SizeCapExceeded,
    ValidationError,
)
from ringprob.rings import (
    ProductRing,
    TableRing,
    chain_ring,
    field_ring,
    galois_ring,
    matrix_ring,
    product,
    quotient_make,
    ring_enumerate,
    ring_size,
    trivial_extension,
    zmod,
)


class TestSizes:
    def test_zmod(self):
        assert ring_size(zmod(12)) == 12

    def test_matrix(self):
        assert ring_size(matrix_ring(2, 2)) == 16

    def test_product(self):
        assert ring_size(product(zmod(2), matrix_ring(2, 2))) == 32

    def test_quotient(self):
        assert ring_size(quotient_make(zmod(12), {0, 6})) == 6

    def test_chain_and_galois(self):
        assert ring_size(chain_ring(3, 3)) == 27
        assert ring_size(galois_ring(2, 2, 2)) == 16

    def test_size_matches_enumeration(self):
        for _, ring in default_corpus():
            assert sum(1 for _ in ring_enumerate(ring)) == ring.size


class TestArithmetic:
    def test_zmod_product(self):
        z4 = zmod(4)
        assert (z4.element(2) * z4.element(3)).index == 2

    def test_matrix_square(self):
        # [[1,1],[0,1]]^2 over F_2, multiplied out by hand: entries
        # (1*1, 1*1+1*1, 0, 1*1) -> identity.
        m2 = matrix_ring(2, 2)
        a = m2.element(m2.encode(((1, 1), (0, 1))))
        assert (a * a).form == ((1, 0), (0, 1))

    def test_trivial_extension_square_zero(self):
        tv = trivial_extension(2, 1)
        u = tv.element(tv.encode((0, (1,))))
        assert (u * u).index == 0

    def test_mixed_rings_rejected(self):
        with pytest.raises(MixedRings):
            zmod(4).element(1) + zmod(6).element(1)
        with pytest.raises(MixedRings):
            zmod(4).element(1) * zmod(6).element(1)

    def test_neg_and_sub(self):
        z5 = zmod(5)
        assert (-z5.element(2)).index == 3
        assert (z5.element(1) - z5.element(3)).index == 3


class TestEnumerationOrder:
    def test_zmod_order(self):
        assert [e.index for e in ring_enumerate(zmod(3))] == [0, 1, 2]

    def test_product_last_coordinate_fastest(self):
        pr = product(zmod(2), zmod(2))
        assert [pr.decode(e.index) for e in ring_enumerate(pr)] == [
            (0, 0), (0, 1), (1, 0), (1, 1)]

    def test_quotient_cosets(self):
        q = quotient_make(zmod(4), {0, 2})
        assert [q.decode(i) for i in range(q.size)] == [(0, 2), (1, 3)]
        assert [q.representative(i) for i in range(q.size)] == [0, 1]

    def test_size_cap(self):
        with pytest.raises(SizeCapExceeded):
            list(ring_enumerate(zmod(100), cap=50))
        assert sum(1 for _ in ring_enumerate(zmod(100), cap=None)) == 100


class TestCanonicalIndexing:
    def test_encode_decode_bijection(self):
        for _, ring in default_corpus():
            for i in range(ring.size):
                assert ring.encode(ring.decode(i)) == i

    def test_zero_and_one(self):
        for _, ring in default_corpus():
            one = ring.one_index
            for i in range(ring.size):
                assert ring.add_index(0, i) == i
                assert ring.mul_index(one, i) == i
                assert ring.mul_index(i, one) == i
                assert ring.add_index(i, ring.neg_index(i)) == 0


class TestRingAxioms:
    """Exhaustive triples up to 256 elements, seeded random triples above."""

    @pytest.mark.parametrize("name", [n for n, _ in default_corpus()])
    def test_associativity_and_distributivity(self, name):
        ring = dict(default_corpus())[name]
        n = ring.size
        if n <= 256:
            triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
        else:
            rnd = random.Random(12345)
            triples = ((rnd.randrange(n), rnd.randrange(n), rnd.randrange(n))
                       for _ in range(100_000))
        mul, add = ring.mul_index, ring.add_index
        for a, b, c in triples:
            assert mul(mul(a, b), c) == mul(a, mul(b, c))
            assert add(add(a, b), c) == add(a, add(b, c))
            assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
            assert mul(add(a, b), c) == add(mul(a, c), mul(b, c))

    def test_addition_commutes(self):
        for _, ring in default_corpus():
            n = ring.size
            for a in range(n):
                row = ring.add_row(a)
                for b in range(a + 1, n):
                    assert row[b] == ring.add_index(b, a)


class TestProductRing:
    def test_componentwise_multiplication(self):
        pr = product(zmod(2), zmod(4))
        for i in range(pr.size):
            for j in range(pr.size):
                (a1, a2), (b1, b2) = pr.decode(i), pr.decode(j)
                assert pr.decode(pr.mul_index(i, j)) == ((a1 * b1) % 2, (a2 * b2) % 4)

    def test_needs_two_factors(self):
        with pytest.raises(ValidationError):
            ProductRing([zmod(2)])


class TestQuotients:
    def test_z4_mod_two_is_z2(self):
        q = quotient_make(zmod(4), {0, 2})
        assert q.size == 2
        assert q.add_index(1, 1) == 0

    def test_z6_mod_three_matches_z3(self):
        q = quotient_make(zmod(6), {0, 3})
        z3 = zmod(3)
        assert q.size == 3
        # representatives are 0,1,2, so tables must agree entrywise
        for i in range(3):
            for j in range(3):
                assert q.add_index(i, j) == z3.add_index(i, j)
                assert q.mul_index(i, j) == z3.mul_index(i, j)

    def test_quotient_by_zero_ideal_is_identity(self):
        for ring in (zmod(9), chain_ring(2, 2)):
            q = quotient_make(ring, {0})
            assert q.size == ring.size
            for i in range(ring.size):
                for j in range(ring.size):
                    assert q.mul_index(i, j) == ring.mul_index(i, j)
                    assert q.add_index(i, j) == ring.add_index(i, j)

    def test_rejects_non_ideal(self):
        with pytest.raises(NotAnIdeal):
            quotient_make(zmod(4), {0, 1})
        with pytest.raises(NotAnIdeal):
            quotient_make(zmod(4), {0, 3})

    def test_rejects_improper_ideal(self):
        with pytest.raises(ImproperIdeal):
            quotient_make(zmod(4), {0, 1, 2, 3})

    @staticmethod
    def _nested_ideal_pairs(ring):
        from ringprob.structure import principal_ideal_members
        distinct = {principal_ideal_members(ring, g) for g in range(ring.size)}
        proper = [m for m in distinct if len(m) < ring.size]
        return [(a, b) for a in proper for b in proper if a < b and a <= b]

    def test_quotient_of_quotient(self):
        # (R/I)/(K/I) must match R/K through the canonical coset bijection.
        cases = [
            (zmod(12), {0, 6}, {0, 3, 6, 9}),
            (zmod(12), {0, 6}, {0, 2, 4, 6, 8, 10}),
            (zmod(8), {0, 4}, {0, 2, 4, 6}),
            (chain_ring(2, 3), {0, 4}, {0, 2, 4, 6}),
        ]
        for _, ring in default_corpus():
            if ring.size <= 64:
                cases.extend((ring, inner, outer)
                             for inner, outer in self._nested_ideal_pairs(ring))
        for ring, inner, outer in cases:
            q1 = quotient_make(ring, inner)
            image = {q1.coset_index_of(x) for x in outer}
            q2 = quotient_make(q1, image)
            direct = quotient_make(ring, outer)
            assert q2.size == direct.size
            # map a direct coset to the nested one through representatives
            to_nested = {
                i: q2.coset_index_of(q1.coset_index_of(direct.representative(i)))
                for i in range(direct.size)
            }
            assert sorted(to_nested.values()) == list(range(q2.size))
            for i in range(direct.size):
                for j in range(direct.size):
                    assert to_nested[direct.mul_index(i, j)] == \
                        q2.mul_index(to_nested[i], to_nested[j])
                    assert to_nested[direct.add_index(i, j)] == \
                        q2.add_index(to_nested[i], to_nested[j])


class TestTableRing:
    def test_fixture_construction_loads(self):
        payload = upper_triangular_tables()
        ring = TableRing(payload["add"], payload["mul"], payload["one"])
        assert ring.size == 8
        assert not ring.is_commutative()

    def test_rejects_trivial_ring(self):
        with pytest.raises(ValidationError):
            TableRing([[0]], [[0]], 0)
        with pytest.raises(ValidationError):
            zmod(1)

    def test_rejects_non_associative_multiplication(self):
        # Z_4 addition with a doctored product table.
        add = [[(i + j) % 4 for j in range(4)] for i in range(4)]
        mul = [[(i * j) % 4 for j in range(4)] for i in range(4)]
        mul[3][3] = 2  # breaks 3*(3*3) = (3*3)*3
        with pytest.raises(ValidationError):
            TableRing(add, mul, 1)

    def test_rejects_bad_identity(self):
        add = [[(i + j) % 4 for j in range(4)] for i in range(4)]
        mul = [[(i * j) % 4 for j in range(4)] for i in range(4)]
        with pytest.raises(ValidationError):
            TableRing(add, mul, 2)

    def test_rejects_broken_zero(self):
        add = [[(i + j + 1) % 3 for j in range(3)] for i in range(3)]
        mul = [[(i * j) % 3 for j in range(3)] for i in range(3)]
        with pytest.raises(ValidationError):
            TableRing(add, mul, 1)


class TestConstructionValidation:
    def test_galois_ring_rejects_reducible_modulus(self):
        with pytest.raises(ValidationError):
            galois_ring(2, 2, 2, modulus=[0, 0, 1])  # t^2 is reducible mod 2
        ring = galois_ring(2, 2, 2, modulus=[1, 1, 1])
        assert ring.size == 16

    def test_poly_quotient_needs_commutative_base(self):
        from ringprob.rings import PolyQuotientRing
        m2 = matrix_ring(2, 2)
        with pytest.raises(ValidationError):
            PolyQuotientRing(m2, [0, m2.one_index])

    def test_poly_quotient_needs_monic_modulus(self):
        from ringprob.rings import PolyQuotientRing
        with pytest.raises(ValidationError):
            PolyQuotientRing(zmod(4), [0, 2])

    def test_field_ring_rejects_non_prime_power(self):
        with pytest.raises(ValidationError):
            field_ring(6)


class TestMemoTables:
    """The fast table builders must agree with the structural operations."""

    @pytest.mark.parametrize("ring_factory", [
        lambda: matrix_ring(3, 2),
        lambda: matrix_ring(2, 4),
        lambda: chain_ring(3, 3),
        lambda: trivial_extension(3, 2),
        lambda: product(zmod(2), matrix_ring(2, 2)),
    ])
    def test_tables_match_structural_ops(self, ring_factory):
        ring = ring_factory()
        rnd = random.Random(7)
        pairs = [(rnd.randrange(ring.size), rnd.randrange(ring.size))
                 for _ in range(300)]
        for i, j in pairs:
            assert ring.mul_index(i, j) == ring._mul(i, j)
            assert ring.add_index(i, j) == ring._add(i, j)
        for i in {i for i, _ in pairs}:
            assert ring.neg_index(i) == ring._neg(i)
