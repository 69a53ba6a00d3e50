import random
from decimal import Decimal
from fractions import Fraction

import pytest

from octanet.radicals import (
    NegativeRadicand,
    NonInvertibleDenominator,
    RadicalValue,
    format_rational,
    sqrt_int,
    sqrt_of_rational,
    squarefree_split,
)

SQUAREFREE_POOL = (1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23,
                   26, 29, 30, 31, 33, 35, 38, 46, 55, 57, 58, 66, 78, 86, 94,
                   110, 330)


def rv(x):
    return RadicalValue(x)


def random_value(rng, max_terms=4, coeff_bound=60):
    terms = {}
    for k in rng.sample(SQUAREFREE_POOL, rng.randint(1, max_terms)):
        num = rng.randint(-coeff_bound, coeff_bound)
        den = rng.randint(1, coeff_bound)
        terms[k] = Fraction(num, den)
    return RadicalValue.from_terms(terms)


class TestSquarefreeSplit:
    def test_examples(self):
        assert squarefree_split(8) == (2, 2)
        assert squarefree_split(330) == (1, 330)
        assert squarefree_split(1) == (1, 1)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            squarefree_split(0)

    def test_roundtrip_small_sweep(self):
        for m in range(1, 20001):
            s, k = squarefree_split(m)
            assert s * s * k == m

    def test_squarefree_against_naive_oracle(self):
        def naive(m):
            s = 1
            d = 2
            while d * d <= m:
                while m % (d * d) == 0:
                    m //= d * d
                    s *= d
                d += 1
            return s, m

        rng = random.Random(7)
        cases = list(range(1, 3000)) + [rng.randint(1, 10**8) for _ in range(300)]
        for m in cases:
            assert squarefree_split(m) == naive(m)


class TestFieldOps:
    def test_like_terms_add(self):
        assert 3 * sqrt_int(2) + 5 * sqrt_int(2) == 8 * sqrt_int(2)

    def test_mul_reduces_radicand(self):
        assert sqrt_int(2) * sqrt_int(8) == rv(4)

    def test_conjugate_product(self):
        assert (1 + sqrt_int(2)) * (1 - sqrt_int(2)) == rv(-1)

    def test_div_single_term(self):
        assert (2 * sqrt_int(32)) / 12 == RadicalValue.from_terms({2: Fraction(2, 3)})
        assert sqrt_int(5) / sqrt_int(5) == rv(1)

    def test_div_rejects_multi_term_denominator(self):
        with pytest.raises(NonInvertibleDenominator):
            rv(1) / (1 + sqrt_int(2))

    def test_div_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            sqrt_int(3) / rv(0)

    def test_from_terms_normalizes(self):
        assert RadicalValue.from_terms({32: 2}) == 8 * sqrt_int(2)
        assert RadicalValue.from_terms({4: 1, 9: 1}) == rv(5)

    def test_ring_laws_random(self):
        rng = random.Random(20260810)
        for _ in range(400):
            a, b, c = (random_value(rng) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a - a == rv(0)


class TestSqrtOfRational:
    def test_paper_edge_terms(self):
        assert sqrt_of_rational(Fraction(6, 16)) == sqrt_int(6) / 4
        assert sqrt_of_rational(Fraction(10, 32)) == sqrt_int(5) / 4
        assert sqrt_of_rational(0) == rv(0)

    def test_negative_rejected(self):
        with pytest.raises(NegativeRadicand):
            sqrt_of_rational(Fraction(-1, 3))

    def test_square_roundtrip_random(self):
        rng = random.Random(99)
        for _ in range(1000):
            q = Fraction(rng.randint(0, 10**6), rng.randint(1, 10**4))
            root = sqrt_of_rational(q)
            assert root * root == rv(q)


class TestApprox:
    def test_examples(self):
        assert (rv(36) + 24 * sqrt_int(2)).approx(4) == "69.9411"
        assert rv(Fraction(99, 32)).approx(6) == "3.093750"
        assert (sqrt_int(94) / 48).approx(4) == "0.2020"

    def test_negative_and_zero(self):
        assert (-sqrt_int(2)).approx(5) == "-1.41421"
        assert rv(0).approx(3) == "0.000"

    def test_rational_ties_round_to_even(self):
        assert rv(Fraction(1, 8)).approx(2) == "0.12"
        assert rv(Fraction(3, 8)).approx(2) == "0.38"
        assert rv(Fraction(-1, 8)).approx(2) == "-0.12"

    def test_high_precision_stable(self):
        v = sqrt_int(2)
        long = v.approx(40)
        assert long.startswith("1.4142135623730950488016887242096980785696")

    def test_format_rational(self):
        assert format_rational(Fraction(3), 2) == "3.00"
        assert format_rational(Fraction(-7, 2), 1) == "-3.5"


class TestUniqueness:
    def test_equality_iff_tiny_difference(self):
        rng = random.Random(4242)
        for _ in range(400):
            a = random_value(rng)
            b = random_value(rng)
            diff = Decimal((a - b).approx(40))
            if a == b:
                assert diff == 0
            else:
                assert abs(diff) >= Decimal("1e-30")
            # identical maps always collapse to exactly zero
            assert Decimal((a - a).approx(40)) == 0


class TestRendering:
    def test_canonical_text(self):
        assert str(rv(36) + 24 * sqrt_int(2)) == "36 + 24*sqrt(2)"
        assert str(rv(0)) == "0"
        assert str(sqrt_int(2) - rv(Fraction(3, 4))) == "-3/4 + sqrt(2)"
        assert str(-sqrt_int(5)) == "-sqrt(5)"
        assert str(9 * sqrt_int(5) + Fraction(15, 2) * sqrt_int(6)) == \
            "9*sqrt(5) + 15/2*sqrt(6)"

    def test_terms_sorted_ascending(self):
        v = sqrt_int(14) + sqrt_int(5) + rv(2)
        assert [k for k, _ in v.terms()] == [1, 5, 14]

    def test_hashable_and_immutable(self):
        v = sqrt_int(2)
        assert hash(v) == hash(1 * sqrt_int(2))
        with pytest.raises(AttributeError):
            v._terms = {}
