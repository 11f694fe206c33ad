"""Field layer: canonical moduli, exact arithmetic, enumeration order."""

import pytest

from ringprob.errors import DegreeOutOfRange, DivisionByZero, MixedFields, NonPrime
from ringprob.finfield import (
    FieldElement,
    field_add,
    field_enumerate,
    field_inv,
    field_make,
    field_mul,
    field_neg,
    galois_field,
    is_irreducible,
    smallest_irreducible,
)


def poly_eval(coeffs, x, p):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


class TestFieldMake:
    def test_prime_field_modulus_is_t(self):
        assert field_make(2, 1).modulus == (0, 1)

    def test_gf4_modulus_unique_irreducible(self):
        # Oracle: the other monic quadratics over F_2 all have a root.
        for tail in [(0, 0), (1, 0), (0, 1)]:
            poly = tail + (1,)
            assert any(poly_eval(poly, x, 2) == 0 for x in (0, 1))
        assert field_make(2, 2).modulus == (1, 1, 1)

    def test_gf9_modulus_smallest_by_scan(self):
        # Oracle: degree-2 polys are reducible over F_3 iff they have a root.
        best = None
        for value in range(9):
            tail = (value % 3, value // 3)
            poly = tail + (1,)
            if all(poly_eval(poly, x, 3) != 0 for x in range(3)):
                best = poly
                break
        assert best == (1, 0, 1)
        assert field_make(3, 2).modulus == best

    def test_deterministic(self):
        assert field_make(5, 3) == field_make(5, 3)

    def test_rejects_composite(self):
        with pytest.raises(NonPrime):
            field_make(6, 1)

    def test_rejects_degree_out_of_range(self):
        with pytest.raises(DegreeOutOfRange):
            field_make(2, 9)
        with pytest.raises(DegreeOutOfRange):
            field_make(2, 0)

    @pytest.mark.parametrize("p,r", [(2, 3), (3, 3), (5, 2), (7, 2), (2, 8)])
    def test_modulus_is_irreducible(self, p, r):
        assert is_irreducible(smallest_irreducible(p, r), p)


class TestArithmetic:
    def test_gf4_t_squared(self):
        f = field_make(2, 2)
        t = FieldElement(f, (0, 1))
        assert field_mul(t, t) == FieldElement(f, (1, 1))

    def test_mul_identity(self):
        for q_spec in [(2, 2), (3, 2), (2, 3)]:
            f = field_make(*q_spec)
            one = FieldElement(f, (1,) + (0,) * (f.r - 1))
            for x in field_enumerate(f):
                assert field_mul(x, one) == x

    def test_char2_addition(self):
        f = field_make(2, 1)
        one = FieldElement(f, (1,))
        assert field_add(one, one) == FieldElement(f, (0,))

    def test_neg(self):
        f = field_make(3, 1)
        assert field_neg(FieldElement(f, (1,))) == FieldElement(f, (2,))

    def test_mixed_fields_rejected(self):
        a = FieldElement(field_make(2, 1), (1,))
        b = FieldElement(field_make(3, 1), (1,))
        with pytest.raises(MixedFields):
            field_add(a, b)
        with pytest.raises(MixedFields):
            field_mul(a, b)

    def test_operator_sugar(self):
        f = field_make(2, 2)
        t = FieldElement(f, (0, 1))
        one = FieldElement(f, (1, 0))
        assert t + t == FieldElement(f, (0, 0))
        assert t * t == t + one
        assert -t == t
        assert t - t == FieldElement(f, (0, 0))


class TestInverse:
    def test_gf2(self):
        f = field_make(2, 1)
        assert field_inv(FieldElement(f, (1,))) == FieldElement(f, (1,))

    def test_gf4_inv_t(self):
        f = field_make(2, 2)
        t = FieldElement(f, (0, 1))
        assert field_inv(t) == FieldElement(f, (1, 1))
        assert field_mul(t, field_inv(t)) == FieldElement(f, (1, 0))

    def test_gf3_self_inverse(self):
        f = field_make(3, 1)
        two = FieldElement(f, (2,))
        assert field_inv(two) == two

    def test_zero_rejected(self):
        f = field_make(2, 2)
        with pytest.raises(DivisionByZero):
            field_inv(FieldElement(f, (0, 0)))

    @pytest.mark.parametrize("p,r", [(2, 3), (3, 2), (5, 1), (7, 1), (3, 3),
                                     (2, 8), (5, 3)])
    def test_inverse_matches_exhaustive_scan(self, p, r):
        gf = galois_field(field_make(p, r))
        one = 1
        for x in range(1, gf.order):
            by_scan = next(y for y in range(1, gf.order) if gf.mul(x, y) == one)
            assert gf.inv(x) == by_scan


class TestEnumeration:
    def test_gf2_order(self):
        elems = field_enumerate(field_make(2, 1))
        assert [e.coeffs for e in elems] == [(0,), (1,)]

    def test_gf3_order(self):
        elems = field_enumerate(field_make(3, 1))
        assert [e.coeffs for e in elems] == [(0,), (1,), (2,)]

    def test_gf4_zero_then_one(self):
        elems = field_enumerate(field_make(2, 2))
        assert len(elems) == 4
        assert elems[0].coeffs == (0, 0)
        assert elems[1].coeffs == (1, 0)

    def test_index_round_trip(self):
        for p, r in [(2, 2), (3, 2), (2, 4)]:
            gf = galois_field(field_make(p, r))
            for i in range(gf.order):
                assert gf.element(i).index == i


class TestGroupLaws:
    @pytest.mark.parametrize("p,r", [(2, 1), (3, 1), (2, 2), (3, 2), (2, 3)])
    def test_lagrange(self, p, r):
        gf = galois_field(field_make(p, r))
        q = gf.order
        for x in range(1, q):
            assert gf.pow(x, q - 1) == 1

    @pytest.mark.parametrize("p,r", [(2, 2), (3, 2), (5, 1)])
    def test_units_closed_under_inverse(self, p, r):
        gf = galois_field(field_make(p, r))
        nonzero = set(range(1, gf.order))
        assert {gf.inv(x) for x in nonzero} == nonzero

    def test_additive_group_order(self):
        for p, r in [(2, 3), (3, 2)]:
            f = field_make(p, r)
            assert len(field_enumerate(f)) == p ** r
