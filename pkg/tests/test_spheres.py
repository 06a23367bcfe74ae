import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from naisargik import (
    ResourceLimitError,
    check_deletion_correcting,
    deletion_sphere,
    single_deletions,
    sphere_members,
    spheres_intersect,
)
from conftest import sphere_by_index_subsets, words_strategy


def test_single_deletions_collapses_repeats():
    assert single_deletions((0, 0)) == {(0,)}


def test_single_deletions_examples():
    assert single_deletions((0, 1, 0, 0, 0, 0)) == {
        (1, 0, 0, 0, 0),
        (0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0),
    }
    assert len(single_deletions((0, 1, 2, 3))) == 4


def test_single_deletions_rejects_empty():
    with pytest.raises(ValueError):
        single_deletions(())


def test_sphere_of_000101_contains_every_subsequence():
    # Dropping both ones leaves 0000, so the sphere has five members, not four.
    sphere = deletion_sphere((0, 0, 0, 1, 0, 1), 2)
    assert sphere.members == {
        (0, 1, 0, 1),
        (0, 0, 0, 1),
        (0, 0, 1, 1),
        (0, 0, 1, 0),
        (0, 0, 0, 0),
    }


def test_sphere_of_010000():
    assert deletion_sphere((0, 1, 0, 0, 0, 0), 2).members == {
        (0, 0, 0, 0),
        (1, 0, 0, 0),
        (0, 1, 0, 0),
    }


def test_sphere_zero_deletions_is_the_center():
    word = (2, 0, 1, 3)
    assert deletion_sphere(word, 0).members == {word}


def test_sphere_full_deletion_is_the_empty_word():
    assert deletion_sphere((1, 0, 1), 3).members == {()}


@pytest.mark.parametrize("s", [-1, 4])
def test_sphere_rejects_out_of_range_s(s):
    with pytest.raises(ValueError):
        deletion_sphere((0, 1, 0), s)


def test_sphere_cap_guard():
    with pytest.raises(ResourceLimitError):
        sphere_members(tuple(range(2)) * 30, 30, cap=1000)


def test_oracle_equivalence_exhaustive_small():
    for q in (2, 3):
        for n in range(0, 7):
            for word in itertools.product(range(q), repeat=n):
                for s in range(0, min(n, 3) + 1):
                    assert sphere_members(word, s) == sphere_by_index_subsets(word, s)


@settings(max_examples=300, deadline=None)
@given(words_strategy(max_len=10), st.integers(min_value=0, max_value=3))
def test_oracle_equivalence_random(word_q, s):
    word, _ = word_q
    if s > len(word):
        s = len(word)
    assert sphere_members(word, s) == sphere_by_index_subsets(word, s)


@settings(max_examples=200, deadline=None)
@given(words_strategy(max_len=9), st.integers(min_value=0, max_value=3))
def test_size_bounds(word_q, s):
    word, _ = word_q
    if s > len(word):
        s = len(word)
    size = len(sphere_members(word, s))
    assert 1 <= size <= comb(len(word), s)


def test_constant_word_collapses_to_one_member():
    for s in range(6):
        assert len(sphere_members((1,) * 5, min(s, 5))) == 1


def test_intersection_basics():
    full, shared = spheres_intersect((0, 1, 2), (0, 1, 2), 1)
    assert full and shared == sphere_members((0, 1, 2), 1)

    hit, shared = spheres_intersect(
        (1, 0, 0, 1, 0, 1, 0, 1), (1, 0, 0, 1, 1, 0, 1, 0), 1
    )
    assert hit and (1, 0, 0, 1, 0, 1, 0) in shared


def test_the_000101_pair_intersects_at_two_deletions():
    # The shared member 0000 shows this pair is not 2-deletion correcting.
    hit, shared = spheres_intersect((0, 0, 0, 1, 0, 1), (0, 1, 0, 0, 0, 0), 2)
    assert hit and shared == {(0, 0, 0, 0)}


def test_intersection_rejects_unequal_lengths():
    with pytest.raises(ValueError):
        spheres_intersect((0, 1), (0, 1, 0), 1)


@settings(max_examples=150, deadline=None)
@given(words_strategy(max_len=7, min_len=2), st.data())
def test_intersection_is_symmetric(word_q, data):
    x, q = word_q
    y = tuple(
        data.draw(st.integers(min_value=0, max_value=q - 1)) for _ in range(len(x))
    )
    s = data.draw(st.integers(min_value=0, max_value=min(2, len(x))))
    assert spheres_intersect(x, y, s) == spheres_intersect(y, x, s)


class TestCorrectionCheck:
    def test_singleton_passes_any_s(self):
        for s in range(4):
            assert check_deletion_correcting({(1, 2, 3, 0)}, s).ok

    def test_two_deletion_codebook(self):
        # H(5, 4, 2, 0): corrects two deletions but not three.
        code = {(0, 0, 0, 0, 0), (1, 0, 0, 3, 3), (2, 3, 3, 2, 3)}
        assert check_deletion_correcting(code, 2).ok
        report = check_deletion_correcting(code, 3)
        assert not report.ok

    def test_three_deletion_codebook(self):
        assert check_deletion_correcting({(0, 0, 0, 0, 0), (1, 0, 3, 3, 3)}, 3).ok

    def test_witness_is_canonical_and_shared(self):
        report = check_deletion_correcting(
            {(0, 0, 0, 1, 0, 1), (0, 1, 0, 0, 0, 0)}, 2
        )
        assert not report.ok
        x, y, shared = report.witness
        assert (x, y) == ((0, 0, 0, 1, 0, 1), (0, 1, 0, 0, 0, 0))
        assert shared in sphere_members(x, 2)
        assert shared in sphere_members(y, 2)

    def test_subset_of_passing_code_still_passes(self):
        code = [(0, 0, 0, 0), (1, 1, 1, 1), (2, 2, 2, 2)]
        assert check_deletion_correcting(code, 2).ok
        for pair in itertools.combinations(code, 2):
            assert check_deletion_correcting(pair, 2).ok

    def test_mixed_lengths_rejected(self):
        with pytest.raises(ValueError):
            check_deletion_correcting({(0, 1), (0, 1, 0)}, 1)

    def test_empty_codebook_passes(self):
        assert check_deletion_correcting(set(), 1).ok

    def test_report_requires_witness_exactly_on_failure(self):
        from naisargik import CorrectionReport

        with pytest.raises(ValueError):
            CorrectionReport(deletions=1, ok=False, witness=None)
        with pytest.raises(ValueError):
            CorrectionReport(
                deletions=1, ok=True, witness=((0,), (1,), ())
            )
