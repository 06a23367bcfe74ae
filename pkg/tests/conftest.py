"""Shared oracles and hypothesis strategies for the test suite."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st


def sphere_by_index_subsets(word, s):
    """Independent sphere oracle: drop every s-subset of positions, dedup."""
    n = len(word)
    return frozenset(
        tuple(word[i] for i in range(n) if i not in dropped)
        for dropped in itertools.combinations(range(n), s)
    )


def all_words(n, q):
    return itertools.product(range(q), repeat=n)


@pytest.fixture
def sphere_oracle():
    return sphere_by_index_subsets


def words_strategy(max_len=10, max_q=4, min_len=0):
    """Random (word, q) pairs with symbols drawn from Z_q."""

    def build(q):
        return st.tuples(
            st.lists(
                st.integers(min_value=0, max_value=q - 1),
                min_size=min_len,
                max_size=max_len,
            ).map(tuple),
            st.just(q),
        )

    return st.integers(min_value=2, max_value=max_q).flatmap(build)
