"""Equivalence classes of weight-(0,1,a) actions and their counting formulas."""

import math

import pytest

from gtsystems.classification import (
    arithmetic_counts,
    canonical_ideal_key,
    class_count_formulas,
    classify_moves,
    equivalent_ideal_oracle,
    factorize,
    is_prime,
    orbit,
    prime_and_primepower_counts,
    totient,
)

# Verbatim reference partitions for small primes.
REFERENCE_PARTITIONS = {
    5: {(2, 3, 4)},
    7: {(2, 4, 6), (3, 5)},
    11: {(2, 6, 10), (3, 4, 5, 7, 8, 9)},
    13: {(2, 7, 12), (4, 10), (3, 5, 6, 8, 9, 11)},
    17: {(2, 9, 16), (3, 6, 8, 10, 12, 15), (4, 5, 7, 11, 13, 14)},
}


class TestBasicNumberTheory:
    def test_factorize(self):
        assert factorize(360) == {2: 3, 3: 2, 5: 1}
        assert factorize(97) == {97: 1}

    def test_totient_matches_scan(self):
        for n in range(2, 60):
            assert totient(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)

    def test_is_prime(self):
        primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
        for n in range(2, 50):
            assert is_prime(n) == (n in primes)


class TestOrbitsAndPartitions:
    def test_orbit_closed_under_moves(self):
        # The orbit of a is closed under a -> d - a + 1 and (when invertible)
        # a -> a^{-1} mod d.
        for d in (7, 12, 15, 42):
            for a in range(2, d):
                orb = set(orbit(d, a))
                for b in orb:
                    assert d - b + 1 in orb
                    if math.gcd(b, d) == 1:
                        assert pow(b, -1, d) in orb

    @pytest.mark.parametrize("d,expected", sorted(REFERENCE_PARTITIONS.items()))
    def test_reference_partitions(self, d, expected):
        got = {tuple(sorted(members)) for members, _kind in classify_moves(d).classes}
        assert got == expected

    def test_partition_covers_range(self):
        for d in (9, 10, 21, 30):
            part = classify_moves(d)
            all_members = [a for members, _ in part.classes for a in members]
            assert sorted(all_members) == list(range(2, d))

    def test_class_kinds_for_seven(self):
        kinds = {tuple(sorted(m)): kind for m, kind in classify_moves(7).classes}
        assert kinds[(2, 4, 6)] == "3"
        assert kinds[(3, 5)] == "2ii"

    def test_three_element_class_is_the_special_one(self):
        # For odd d the unique 3-element class is {2, d-1, (d+1)/2}.
        for d in (7, 11, 13, 17, 25):
            for members, kind in classify_moves(d).classes:
                if kind == "3":
                    assert set(members) == {2, d - 1, (d + 1) // 2}


class TestIdealEquivalenceOracle:
    def test_oracle_matches_partition(self):
        # Two values of a produce coordinate-permutation-equivalent invariant
        # ideals exactly when they share a class.
        for d in (7, 10, 13):
            part = classify_moves(d)
            cls_of = {}
            for idx, (members, _) in enumerate(part.classes):
                for a in members:
                    cls_of[a] = idx
            for a1 in range(2, d):
                for a2 in range(a1, d):
                    assert equivalent_ideal_oracle(d, a1, a2) == (cls_of[a1] == cls_of[a2]), (d, a1, a2)

    def test_canonical_key_invariance(self):
        assert canonical_ideal_key(7, 3) == canonical_ideal_key(7, 5)
        assert canonical_ideal_key(7, 2) != canonical_ideal_key(7, 3)


class TestArithmeticCounts:
    @pytest.mark.parametrize("d", list(range(5, 121)))
    def test_formula_equals_scan(self, d):
        counts = arithmetic_counts(d)
        assert counts.sqrt1_formula == counts.sqrt1_scan
        assert counts.phi6_formula == counts.phi6_scan
        assert counts.totient_formula == counts.totient_scan


class TestClassCountFormulas:
    @pytest.mark.parametrize("d", list(range(5, 151)))
    def test_oracle_weighted_identity(self, d):
        # Every a in [2, d-1] lies in exactly one class, so the class sizes
        # weighted by multiplicity must sum to d - 2.
        o = class_count_formulas(d).oracle
        n2 = o.N21 + o.N22 + o.N23
        assert 2 * n2 + 3 * o.N3 + 4 * o.N4 + 6 * o.N6 == d - 2

    @pytest.mark.parametrize(
        "d,n3,n2,n4,n6",
        [(825, 1, 86, 129, 22), (42, 0, 12, 4, 0), (210, 0, 64, 20, 0)],
    )
    def test_pinned_formula_values(self, d, n3, n2, n4, n6):
        f = class_count_formulas(d).formula
        assert (f.N3, f.N21 + f.N22 + f.N23, f.N4, f.N6) == (n3, n2, n4, n6)

    def test_pinned_values_match_oracle(self):
        for d in (42, 210):
            r = class_count_formulas(d)
            assert r.findings == []
            assert r.formula == r.oracle

    def test_known_mismatch_is_reported_not_raised(self):
        # The published two-element type-(ii) count evaluates to 4 at d=7
        # while the exhaustive oracle finds 1; this is surfaced as a finding.
        r = class_count_formulas(7)
        assert r.formula.N22 == 4 and r.oracle.N22 == 1
        assert any("N22" in f for f in r.findings)


class TestPrimeAndPrimePowerCounts:
    @pytest.mark.parametrize(
        "d,count",
        [(5, 1), (7, 2), (11, 2), (13, 3), (97, 17),
         (4, 1), (8, 3), (16, 5), (32, 9), (9, 2), (27, 6), (25, 5), (49, 10)],
    )
    def test_closed_form_values(self, d, count):
        assert prime_and_primepower_counts(d) == count

    def test_closed_form_matches_oracle_for_primes(self):
        for d in range(5, 98):
            if is_prime(d):
                assert prime_and_primepower_counts(d) == len(classify_moves(d).classes)

    def test_closed_form_matches_oracle_for_prime_powers(self):
        for d in (4, 8, 9, 16, 25, 27, 32, 49, 64, 81):
            assert prime_and_primepower_counts(d) == len(classify_moves(d).classes)

    def test_rejects_composite_with_two_prime_factors(self):
        with pytest.raises(ValueError):
            prime_and_primepower_counts(12)
