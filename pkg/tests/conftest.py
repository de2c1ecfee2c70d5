"""Shared test helpers: independent brute-force oracles kept deliberately
separate from the library's own code paths."""

from __future__ import annotations

import itertools

import pytest


def rank_word(values):
    """The pattern realized by a value sequence (1-based ranks)."""
    ordered = sorted(values)
    return tuple(ordered.index(v) + 1 for v in values)


def naive_contains(p, sigma):
    """Plain subsequence scan over all index triples/tuples; the reference
    oracle for pattern containment."""
    k = len(sigma)
    sigma = tuple(sigma)
    for combo in itertools.combinations(p, k):
        if rank_word(combo) == sigma:
            return True
    return False


def cycle_lengths(p):
    """Cycle type computed with a local walk, independent of the library."""
    m = len(p)
    seen = [False] * (m + 1)
    lengths = []
    for start in range(1, m + 1):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            length += 1
            v = p[v - 1]
        lengths.append(length)
    return sorted(lengths)


def star_by_filter(n):
    """All 3-cycle-only permutations of [3n] by filtering the full symmetric
    group; only feasible for n <= 2 but fully independent of the generator."""
    return [
        p
        for p in itertools.permutations(range(1, 3 * n + 1))
        if cycle_lengths(p) == [3] * n
    ]


@pytest.fixture(scope="session")
def star_sets():
    """Members of the star sets for n = 1..4, computed once via the library
    generator (itself validated against star_by_filter for n <= 2)."""
    from threecycle import perm

    return {n: list(perm.iterate_star(n)) for n in range(1, 5)}
