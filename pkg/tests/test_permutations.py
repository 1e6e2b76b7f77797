"""Permutation and multiset-word statistics and enumerators."""

import itertools
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from descon.permutations import (
    EnumerationCapError,
    MultisetWord,
    Permutation,
    connected_count,
    connectivity_mask,
    descent_mask,
    enumerate_permutations,
    enumeration_cap,
    inversion_count,
    joint_statistics,
    multiset_words,
    reduce_to_multiset,
)
from descon.subsets import SubsetMask, eta


def connectivity_quadratic(word):
    # straight from the defining condition: every entry at or before i is
    # below every entry after i
    n = len(word)
    return sum(
        1 << (i - 1)
        for i in range(1, n)
        if all(word[j] < word[k] for j in range(i) for k in range(i, n))
    )


class TestStatistics:
    def test_descent_examples(self):
        assert Permutation((1, 3, 4, 2)).descent_set() == SubsetMask.from_elements(4, [3])
        for n in range(1, 7):
            identity = Permutation(tuple(range(1, n + 1)))
            reversal = Permutation(tuple(range(n, 0, -1)))
            assert identity.descent_set() == SubsetMask.empty(n)
            assert reversal.descent_set() == SubsetMask.full(n)

    def test_connectivity_examples(self):
        assert Permutation((1, 3, 4, 2)).connectivity_set() == SubsetMask.from_elements(4, [1])
        for n in range(1, 7):
            identity = Permutation(tuple(range(1, n + 1)))
            assert identity.connectivity_set() == SubsetMask.full(n)
        for n in range(2, 7):
            # leading maximum blocks every cut point
            word = (n,) + tuple(range(1, n))
            assert Permutation(word).connectivity_set() == SubsetMask.empty(n)

    def test_connectivity_matches_quadratic_definition(self):
        for n in range(1, 7):
            for word in itertools.permutations(range(1, n + 1)):
                assert connectivity_mask(word) == connectivity_quadratic(word), word

    @given(st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=8))
    def test_multiset_connectivity_matches_quadratic_definition(self, word):
        assert connectivity_mask(word) == connectivity_quadratic(word)

    def test_multiset_connectivity_examples(self):
        assert MultisetWord((1, 2, 2)).connectivity_set() == SubsetMask.from_elements(3, [1])
        assert MultisetWord((2, 1, 2)).connectivity_set() == SubsetMask.empty(3)
        assert MultisetWord((1, 1, 1)).connectivity_set() == SubsetMask.empty(3)

    def test_inversions(self):
        assert Permutation((1, 3, 4, 2)).inversions() == 2
        for n in range(1, 7):
            assert Permutation(tuple(range(1, n + 1))).inversions() == 0
            assert Permutation(tuple(range(n, 0, -1))).inversions() == n * (n - 1) // 2

    def test_inversions_zero_only_for_identity(self):
        for word in itertools.permutations(range(1, 6)):
            expected = word == (1, 2, 3, 4, 5)
            assert (inversion_count(word) == 0) == expected

    def test_descent_composition(self):
        assert Permutation((1, 3, 4, 2)).descent_composition().parts == (3, 1)
        assert Permutation((3, 2, 1)).descent_composition().parts == (1, 1, 1)
        for n in range(1, 7):
            assert Permutation(tuple(range(1, n + 1))).descent_composition().parts == (n,)

    def test_connectivity_and_descents_are_disjoint(self):
        for n in range(1, 8):
            for c, d, _inv in joint_statistics(n):
                assert c & d == 0

    def test_empty_descents_iff_identity_iff_full_connectivity(self):
        for n in range(1, 7):
            for word in itertools.permutations(range(1, n + 1)):
                is_identity = word == tuple(range(1, n + 1))
                assert (descent_mask(word) == 0) == is_identity
                full = (1 << (n - 1)) - 1
                assert (connectivity_mask(word) == full) == is_identity


class TestPermutationType:
    def test_validation_reports_position(self):
        with pytest.raises(ValueError, match="position 3"):
            Permutation((1, 2, 5, 3))
        with pytest.raises(ValueError, match="repeated at position 4"):
            Permutation((1, 3, 2, 3))
        with pytest.raises(ValueError):
            Permutation(())

    def test_parse_and_format(self):
        assert Permutation.from_text("1342").word == (1, 3, 4, 2)
        assert Permutation.from_text("1").word == (1,)
        long = "10,3,1,2,4,5,6,7,8,9"
        assert Permutation.from_text(long).to_text() == long
        assert str(Permutation((1, 3, 4, 2))) == "1342"

    def test_parse_errors_report_position(self):
        with pytest.raises(ValueError, match="position 3"):
            Permutation.from_text("13a2")
        with pytest.raises(ValueError, match="position 2"):
            Permutation.from_text("10")
        with pytest.raises(ValueError, match="position 2"):
            Permutation.from_text("10,x,3")
        with pytest.raises(ValueError):
            Permutation.from_text("")

    def test_inverse(self):
        assert Permutation((2, 3, 1)).inverse().word == (3, 1, 2)
        for word in itertools.permutations(range(1, 6)):
            p = Permutation(word)
            assert p.inverse().inverse() == p

    def test_is_connected(self):
        assert Permutation((4, 3, 2, 1)).is_connected()
        assert not Permutation((1, 3, 4, 2)).is_connected()
        assert Permutation((1,)).is_connected()


class TestEnumerators:
    def test_lexicographic_order(self):
        assert [str(p) for p in enumerate_permutations(3)] == [
            "123", "132", "213", "231", "312", "321",
        ]
        assert [p.word for p in enumerate_permutations(1)] == [(1,)]

    def test_count_n8(self):
        assert sum(1 for _ in enumerate_permutations(8)) == factorial(8)

    def test_cap_enforcement(self, monkeypatch):
        monkeypatch.delenv("DESCON_MAX_N", raising=False)
        assert enumeration_cap() == 10
        with pytest.raises(EnumerationCapError):
            enumerate_permutations(11)
        monkeypatch.setenv("DESCON_MAX_N", "3")
        assert enumeration_cap() == 3
        with pytest.raises(EnumerationCapError):
            enumerate_permutations(4)
        enumerate_permutations(4, cap=5)  # explicit cap wins
        monkeypatch.setenv("DESCON_MAX_N", "eleven")
        with pytest.raises(ValueError):
            enumeration_cap()

    def test_multiset_words_examples(self):
        t = SubsetMask.from_elements(3, [1])
        assert [str(w) for w in multiset_words(t)] == ["122", "212", "221"]
        assert [w.word for w in multiset_words(SubsetMask.empty(3))] == [(1, 1, 1)]
        full_words = [w.word for w in multiset_words(SubsetMask.full(4))]
        assert full_words == sorted(itertools.permutations(range(1, 5)))

    def test_multiset_words_count_and_order(self):
        for n in range(1, 7):
            for mask in range(1 << (n - 1)):
                t = SubsetMask(n, mask)
                words = [w.word for w in multiset_words(t)]
                assert len(words) == factorial(n) // eta(t)
                assert words == sorted(words)
                assert len(set(words)) == len(words)

    def test_reduce_to_multiset_examples(self):
        w = Permutation((1, 3, 2))
        assert reduce_to_multiset(w, SubsetMask.from_elements(3, [1])).word == (1, 2, 2)
        assert reduce_to_multiset(Permutation((2, 3, 1)), SubsetMask.from_elements(3, [1])).word == (2, 1, 2)
        for n in range(1, 6):
            identity = Permutation(tuple(range(1, n + 1)))
            assert reduce_to_multiset(identity, SubsetMask.full(n)).word == identity.word
        with pytest.raises(ValueError):
            reduce_to_multiset(Permutation((1, 2)), SubsetMask.empty(3))


class TestJointStatistics:
    def test_total_is_factorial(self):
        for n in range(1, 7):
            assert sum(joint_statistics(n).values()) == factorial(n)

    def test_worker_partition_matches_single_sweep(self):
        for threads in (2, 3, 7):
            assert dict(joint_statistics(5, threads=threads)) == dict(joint_statistics(5))

    def test_invalid_threads(self):
        with pytest.raises(ValueError):
            joint_statistics(4, threads=0)


def test_connected_count_small_values():
    assert [connected_count(n) for n in range(1, 7)] == [1, 1, 3, 13, 71, 461]


def test_reduction_bijection_through_n7():
    from descon.verify import run_checks

    (result,) = run_checks(7, names=("multiset-bijection",))
    assert result.passed, result.detail
