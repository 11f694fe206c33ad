"""Probability engines against definitional oracles and each other."""

import pytest

from ringprob.corpus import default_corpus
from ringprob.errors import MixedRings, SizeCapExceeded
from ringprob.probability import (
    ProbFraction,
    annsum_counts,
    delta,
    pair_counts,
    prob_annsum,
    prob_brute,
    spectrum,
)
from ringprob.rings import field_ring, matrix_ring, product, zmod


def zn_pair_oracle(n):
    """Pure-integer pair count per residue, independent of the ring layer."""
    counts = [0] * n
    for a in range(n):
        for b in range(n):
            counts[(a * b) % n] += 1
    return counts


class TestProbFraction:
    def test_validation(self):
        with pytest.raises(ValueError):
            ProbFraction(-1, 4)
        with pytest.raises(ValueError):
            ProbFraction(5, 4)
        with pytest.raises(ValueError):
            ProbFraction(0, 0)

    def test_exact_equality_cross_multiplied(self):
        assert ProbFraction(4, 16) == ProbFraction(1, 4)
        assert ProbFraction(4, 16) != ProbFraction(5, 16)
        assert hash(ProbFraction(4, 16)) == hash(ProbFraction(1, 4))

    def test_ordering(self):
        assert ProbFraction(1, 3) < ProbFraction(1, 2)
        assert ProbFraction(2, 4) <= ProbFraction(1, 2)
        assert ProbFraction(3, 4) > ProbFraction(2, 3)

    def test_display_is_reduced(self):
        assert str(ProbFraction(15, 36)) == "5/12"
        assert ProbFraction(15, 36).reduced() == (5, 12)

    def test_decimal_is_twelve_significant_digits(self):
        assert ProbFraction(15, 36).decimal_str() == "0.416666666667"
        assert ProbFraction(1, 4).decimal_str() == "0.25"

    def test_multiplication(self):
        prod = ProbFraction(3, 4) * ProbFraction(5, 9)
        assert prod == ProbFraction(15, 36)
        assert (prod.hits, prod.total) == (15, 36)


class TestDelta:
    def test_solvable(self):
        z4 = zmod(4)
        assert delta(z4.element(2), z4.element(2)) == 1

    def test_zero_row_misses_two(self):
        z4 = zmod(4)
        assert delta(z4.element(0), z4.element(2)) == 0

    def test_even_row_misses_one(self):
        z4 = zmod(4)
        assert delta(z4.element(2), z4.element(1)) == 0

    def test_mixed_rings(self):
        with pytest.raises(MixedRings):
            delta(zmod(4).element(1), zmod(6).element(1))


class TestBrute:
    def test_z2_zero(self):
        # pairs (0,0), (0,1), (1,0)
        assert prob_brute(zmod(2), 0) == ProbFraction(3, 4)

    def test_z2_one(self):
        assert prob_brute(zmod(2), 1) == ProbFraction(1, 4)

    def test_z4_two_with_literal_oracle(self):
        pairs = [(a, b) for a in range(4) for b in range(4) if (a * b) % 4 == 2]
        assert sorted(pairs) == [(1, 2), (2, 1), (2, 3), (3, 2)]
        got = prob_brute(zmod(4), 2)
        assert (got.hits, got.total) == (len(pairs), 16)

    def test_size_cap(self):
        with pytest.raises(SizeCapExceeded):
            prob_brute(zmod(64), 0, cap=10)
        assert prob_brute(zmod(64), 0, cap=None).total == 64 * 64


class TestAnnsum:
    def test_z4_hand_evaluation(self):
        # contributions at x=2: a=1 and a=3 contribute |ann|=1 each,
        # a=2 contributes |{0,2}| = 2
        assert prob_annsum(zmod(4), 2) == ProbFraction(4, 16)

    def test_unit_target_counts_units(self):
        for _, ring in default_corpus():
            from ringprob.structure import units
            got = prob_annsum(ring, ring.one_index, cap=None)
            assert got.hits == len(units(ring))

    def test_z2_zero(self):
        assert prob_annsum(zmod(2), 0) == ProbFraction(3, 4)


class TestEngineEquivalence:
    def test_counts_agree_everywhere(self):
        for _, ring in default_corpus():
            assert pair_counts(ring, cap=None) == annsum_counts(ring, cap=None)

    def test_functions_agree_per_target(self):
        for _, ring in default_corpus():
            if ring.size > 128:
                targets = range(0, ring.size, ring.size // 16)
            else:
                targets = range(ring.size)
            for x in targets:
                assert prob_brute(ring, x, cap=None) == prob_annsum(ring, x, cap=None)

    def test_zmod_counts_match_pure_integer_oracle(self):
        for n in range(2, 13):
            assert list(pair_counts(zmod(n))) == zn_pair_oracle(n)


class TestNormalization:
    def test_every_pair_lands_somewhere(self):
        for _, ring in default_corpus():
            assert sum(pair_counts(ring, cap=None)) == ring.size ** 2


class TestSpectrum:
    def test_zmod4_classes(self):
        report = spectrum(zmod(4))
        by_label = {e.label: e for e in report.entries}
        assert by_label["zero"].prob == ProbFraction(8, 16)
        assert by_label["unit"].prob == ProbFraction(2, 16)
        assert by_label["unit"].class_size == 2
        assert by_label["J^1"].prob == ProbFraction(4, 16)

    def test_gf3_spectrum(self):
        report = spectrum(field_ring(3))
        probs = {e.label: e.prob for e in report.entries}
        assert probs["zero"] == ProbFraction(5, 9)
        assert probs["unit"] == ProbFraction(2, 9)
        # (2q-1)/q^2 and (q-1)/q^2 at q = 3
        assert probs["zero"] == ProbFraction(2 * 3 - 1, 9)

    def test_m2f2_rank_classes(self):
        report = spectrum(matrix_ring(2, 2))
        data = {e.label: (e.class_size, e.prob.hits) for e in report.entries}
        assert data == {"zero": (1, 58), "rank 1": (9, 18), "rank 2": (6, 6)}

    def test_labels_partition_ring(self):
        for _, ring in default_corpus():
            report = spectrum(ring, cap=None)
            assert sum(e.class_size for e in report.entries) == ring.size

    def test_representative_is_minimal(self):
        report = spectrum(zmod(12))
        for entry in report.entries:
            assert report.counts[entry.representative] == entry.prob.hits

    def test_product_ring_spectrum_multiplies(self):
        pr = product(zmod(2), zmod(4))
        counts = pair_counts(pr)
        c2, c4 = pair_counts(zmod(2)), pair_counts(zmod(4))
        for x in range(pr.size):
            a, b = pr.decode(x)
            assert counts[x] == c2[a] * c4[b]


class TestQuotientRings:
    """Quotient constructions feed the same engines as everything else."""

    def test_engines_agree_on_quotients(self):
        from ringprob.rings import matrix_ring, quotient_make

        quotients = [
            quotient_make(zmod(12), {0, 6}),
            quotient_make(zmod(27), {0, 9, 18}),
            quotient_make(matrix_ring(2, 2), {0}),
        ]
        for quot in quotients:
            assert pair_counts(quot) == annsum_counts(quot)
            for x in range(quot.size):
                assert prob_brute(quot, x) == prob_annsum(quot, x)

    def test_quotient_probabilities_match_isomorphic_ring(self):
        from ringprob.rings import quotient_make

        # Z12 / 6Z12 has the arithmetic of Z6 on representatives
        quot = quotient_make(zmod(12), {0, 6})
        assert list(pair_counts(quot)) == list(pair_counts(zmod(6)))
