import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from revstack.patterns import contains_classical, parse_pattern
from revstack.perms import deg_revstack, is_identity
from revstack.zigzag import (
    Zigzag,
    find_uninterrupted_zigzag,
    find_zigzag,
    is_interrupted,
    is_zigzag,
    max_zigzag_degree,
    zigzag_degrees,
)


def all_perms(n):
    return itertools.permutations(range(1, n + 1))


def perms(max_n=8):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(tuple)
    )


class TestWorkedExamples:
    W = (1, 5, 3, 2, 7, 8, 4, 6)
    W_PRIME = (1, 5, 3, 2, 7, 4, 8, 6)
    W_LONG = (4, 6, 11, 8, 3, 2, 10, 12, 7, 1, 9, 5)

    def test_contains_the_illustrated_3_zigzag(self):
        assert is_zigzag(self.W, (7, 6, 5, 4, 2))
        assert not is_interrupted(self.W, (7, 6, 5, 4, 2))

    def test_lex_largest_3_zigzag(self):
        # (8,6,5,4,3) is also a 3-zigzag and beats (7,...) lexicographically
        z = find_zigzag(self.W, 3)
        assert z.values == (8, 6, 5, 4, 3)
        assert not z.interrupted
        assert find_uninterrupted_zigzag(self.W, 3).values == (8, 6, 5, 4, 3)

    def test_interrupted_variant(self):
        # the 8 moved between 4 and 6 interrupts the odd entries
        assert is_interrupted(self.W_PRIME, (7, 6, 5, 4, 2))

    def test_interrupted_long_example(self):
        # an 11 sits between the even entries 8 and 6
        assert is_zigzag(self.W_LONG, (10, 9, 8, 7, 6, 5))
        assert is_interrupted(self.W_LONG, (10, 9, 8, 7, 6, 5))

    def test_identity_has_nothing(self):
        for k in range(5):
            assert find_zigzag((1, 2, 3, 4, 5), k) is None

    def test_132_is_the_unique_1_zigzag(self):
        z = find_zigzag((1, 3, 2), 1)
        assert z.values == (3, 2, 1)
        assert not z.interrupted

    def test_42513_has_a_2_zigzag(self):
        # via the 2413 occurrence 2-5-1-3; three passes are needed to sort
        z = find_zigzag((4, 2, 5, 1, 3), 2)
        assert z is not None
        assert z.values == (5, 3, 2, 1)
        assert deg_revstack((4, 2, 5, 1, 3)) == 3

    def test_invalid_zigzag_rejected(self):
        with pytest.raises(ValueError):
            is_interrupted((1, 3, 2), (2, 3, 1))
        with pytest.raises(ValueError):
            is_interrupted((1, 3, 2), (3, 1, 2))

    def test_json(self):
        z = find_zigzag(self.W, 3)
        assert z.to_json() == {"k": 3, "values": [8, 6, 5, 4, 3], "interrupted": False}


class TestGroundings:
    def test_degree_0_iff_inversion(self):
        for n in range(1, 7):
            for w in all_perms(n):
                assert (find_zigzag(w, 0) is None) == is_identity(w)

    def test_degree_1_iff_132(self):
        for n in range(1, 7):
            for w in all_perms(n):
                here = find_zigzag(w, 1) is not None
                assert here == (contains_classical(w, parse_pattern("132")) is not None)

    def test_degree_2_iff_2413_or_2431(self):
        p2413 = parse_pattern("2413")
        p2431 = parse_pattern("2431")
        for n in range(1, 7):
            for w in all_perms(n):
                here = find_zigzag(w, 2) is not None
                classical = (
                    contains_classical(w, p2413) is not None
                    or contains_classical(w, p2431) is not None
                )
                assert here == classical

    def test_monotone_in_k(self):
        for n in range(1, 7):
            for w in all_perms(n):
                ks = [k for k in range(n) if find_zigzag(w, k) is not None]
                assert ks == list(range(len(ks)))

    def test_small_degree_always_uninterrupted(self):
        # interruption needs two same-parity entries beyond the pivot
        for n in range(1, 7):
            for w in all_perms(n):
                for k in (0, 1):
                    z = find_zigzag(w, k)
                    if z is not None:
                        assert not z.interrupted


class TestFastDegrees:
    def test_agree_with_subset_scan(self):
        for n in range(1, 8):
            for w in all_perms(n):
                maxz, maxu = zigzag_degrees(w)
                brute_z = max(
                    (k for k in range(n) if find_zigzag(w, k) is not None), default=-1
                )
                brute_u = max(
                    (k for k in range(n) if find_uninterrupted_zigzag(w, k) is not None),
                    default=-1,
                )
                assert maxz == brute_z
                assert maxu == brute_u
                assert max_zigzag_degree(w) == brute_z

    @given(perms(max_n=7))
    @settings(deadline=None)
    def test_bracketing(self, w):
        maxz, maxu = zigzag_degrees(w)
        assert maxu < deg_revstack(w) <= maxz + 1

    @given(perms(max_n=8))
    @settings(deadline=None)
    def test_found_zigzags_are_valid(self, w):
        maxz, _ = zigzag_degrees(w)
        for k in range(maxz + 1):
            z = find_zigzag(w, k)
            assert z is not None
            assert is_zigzag(w, z.values)
            assert isinstance(z, Zigzag)
            assert z.k == k
            assert is_interrupted(w, z.values) == z.interrupted
