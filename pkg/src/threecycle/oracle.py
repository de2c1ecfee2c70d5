"""Brute-force ground truth: exhaustive counting and enumeration of
pattern-avoiding 3-cycle-only permutations, plus the degenerate closed forms
(the 123 pattern and pattern pairs).

Everything here is generate-and-filter over the direct star generator; no
counting shortcut from the formula modules is consulted, so these results can
serve as the independent side of every formula-vs-oracle check.

Sizes are bounded: n <= SOFT_LIMIT without the override flag, and n <=
HARD_LIMIT unconditionally (the star set grows by a factor ~270 per step).
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from typing import Iterator, Sequence

from threecycle import _kernels, perm
from threecycle.errors import ResourceLimitError

SOFT_LIMIT = 5
HARD_LIMIT = 6

FORMS = (None, perm.FORM_312, perm.FORM_231)


@dataclass(frozen=True)
class AvoidanceQuery:
    """A counting/enumeration request: size parameter ``n``, a non-empty set
    of distinct length-3 patterns, and an optional restriction of every cycle
    to one form ("312" or "231"; None means unrestricted)."""

    n: int
    patterns: frozenset[perm.Perm]
    form: str | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        patterns = frozenset(tuple(p) for p in self.patterns)
        if not patterns:
            raise ValueError("pattern set must be non-empty")
        for sigma in patterns:
            perm.check_permutation(sigma)
            if len(sigma) != 3:
                raise ValueError(f"oracle patterns must have length 3: {sigma}")
        if self.form not in FORMS:
            raise ValueError(f"form must be one of {FORMS}, got {self.form!r}")
        object.__setattr__(self, "patterns", patterns)

    def sorted_patterns(self) -> tuple[perm.Perm, ...]:
        return tuple(sorted(self.patterns))


def query(n: int, patterns: str | Sequence[str], form: str | None = None) -> AvoidanceQuery:
    """Convenience constructor from pattern strings, e.g. ``query(3, "231")``
    or ``query(3, ["132", "213"])``."""
    if isinstance(patterns, str):
        patterns = [patterns]
    parsed = frozenset(tuple(int(ch) for ch in s) for s in patterns)
    return AvoidanceQuery(n, parsed, form)


def _check_limits(n: int, allow_large: bool) -> None:
    if n > HARD_LIMIT:
        raise ResourceLimitError(
            f"n={n} exceeds the hard bound n <= {HARD_LIMIT} "
            f"(the star set has {perm.star_cardinality(n)} members)"
        )
    if n > SOFT_LIMIT and not allow_large:
        raise ResourceLimitError(
            f"n={n} exceeds the soft bound n <= {SOFT_LIMIT}; "
            "pass allow_large=True (CLI: --allow-large) to override"
        )


def oracle_enumerate(q: AvoidanceQuery, allow_large: bool = False) -> Iterator[perm.Perm]:
    """Every member of the star set matching ``q``, in the deterministic order
    of the direct generator, each exactly once."""
    _check_limits(q.n, allow_large)
    patterns = q.sorted_patterns()
    want = q.form
    for p in perm.iterate_star(q.n):
        if want is not None:
            forms = perm.cycle_decomposition(p).forms
            assert forms is not None
            if any(f != want for f in forms):
                continue
        if perm.avoids(p, *patterns):
            yield p


def _count_task(args: tuple) -> int:
    n, patterns, form, choice = args
    return _kernels.count_avoiders(n, patterns, form, choice)


def _profile_task(args: tuple) -> list[list[int]]:
    n, choice = args
    return _kernels.avoidance_profile(n, choice)


def oracle_count(
    q: AvoidanceQuery, jobs: int = 1, allow_large: bool = False
) -> int:
    """Cardinality of :func:`oracle_enumerate`; with ``jobs > 1`` the count is
    partitioned over first-cycle choices and merged by addition, so the result
    is independent of worker count and schedule."""
    _check_limits(q.n, allow_large)
    patterns = q.sorted_patterns()
    if jobs <= 1:
        return _kernels.count_avoiders(q.n, patterns, q.form, None)
    tasks = [
        (q.n, patterns, q.form, choice) for choice in perm.star_first_choices(q.n)
    ]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_count_task, tasks, chunksize=8))


def avoidance_profile(
    n: int, jobs: int = 1, allow_large: bool = False
) -> list[list[int]]:
    """One exhaustive sweep counting, for every (form class, avoidance mask)
    cell, the star permutations in it; see :func:`profile_count` for reading
    the table.  Much cheaper than one :func:`oracle_count` per query when many
    queries share the same ``n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_limits(n, allow_large)
    if jobs <= 1:
        return _kernels.avoidance_profile(n, None)
    tasks = [(n, choice) for choice in perm.star_first_choices(n)]
    table = [[0] * 64 for _ in range(3)]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_profile_task, tasks, chunksize=8):
            for row in range(3):
                for col in range(64):
                    table[row][col] += part[row][col]
    return table


def profile_count(
    table: list[list[int]],
    patterns: Sequence[perm.Perm],
    form: str | None = None,
) -> int:
    """Extract one avoidance count from an :func:`avoidance_profile` table."""
    order = {p: i for i, p in enumerate(_kernels.PROFILE_PATTERNS)}
    required = 0
    for sigma in patterns:
        required |= 1 << order[tuple(sigma)]
    if form is None:
        rows: tuple[int, ...] = (0, 1, 2)
    elif form == perm.FORM_312:
        rows = (1,)
    elif form == perm.FORM_231:
        rows = (2,)
    else:
        raise ValueError(f"form must be one of {FORMS}, got {form!r}")
    return sum(
        table[row][mask]
        for row in rows
        for mask in range(64)
        if mask & required == required
    )


def closed_form_123(n: int) -> int:
    """Avoiders of 123 among star permutations: 2, 6, then 0 forever."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 2
    if n == 2:
        return 6
    return 0


def _pattern_orbit(pair: frozenset[perm.Perm]) -> set[frozenset[perm.Perm]]:
    maps = (
        lambda s: s,
        perm.inverse,
        perm.reverse_complement,
        lambda s: perm.inverse(perm.reverse_complement(s)),
    )
    return {frozenset(f(sigma) for sigma in pair) for f in maps}


_PAIR_CLASS_VALUES = {
    frozenset({(1, 3, 2), (2, 1, 3)}): 2,
    frozenset({(1, 3, 2), (3, 2, 1)}): 2,
    frozenset({(1, 3, 2), (2, 3, 1)}): 1,
    frozenset({(2, 3, 1), (3, 2, 1)}): 1,
}


def closed_form_pair(n: int, pair: Sequence[perm.Perm] | frozenset[perm.Perm]) -> int:
    """Avoiders of a pair of length-3 patterns among star permutations.

    For n >= 3 this reduces the pair by the inverse and reverse-complement
    symmetries to a representative class (values 2, 1 or 0).  The small cases
    n <= 2 are answered by the oracle rather than extrapolated.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    pair_set = frozenset(tuple(sigma) for sigma in pair)
    if len(pair_set) != 2:
        raise ValueError("pair must contain exactly two distinct patterns")
    q = AvoidanceQuery(n, pair_set)
    if n <= 2:
        return oracle_count(q)
    for member in _pattern_orbit(pair_set):
        value = _PAIR_CLASS_VALUES.get(member)
        if value is not None:
            return value
    return 0
