"""321-avoiding star permutations: staircase sets, the z/x/y word algorithm,
the all-312 construction and its lattice-path bijection, mixed-form members
generated per balanced segment, and the two independent counting routes
(sum of 2^h over staircase sets vs. the weighted sum over Dyck words).

A staircase set is an n-subset {t1 < ... < tn} of [3n] with ti <= 3i - 2.
It determines a word over z/x/y (z on the set, x and y placed by a greedy
balance rule) and through it a unique all-312 member; staircase sets are
counted by the Fuss-Catalan number binom(3n, n) / (2n + 1).  Cutting the
cycle indices at the word's balanced prefixes yields independent segments
whose cycles may flip between the 312 and 231 forms, giving 2^h members per
set and the full 321-avoiding class.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from threecycle import _kernels, perm, words
from threecycle.errors import InternalInvariantError

FORM_CHOICES = (perm.FORM_312, perm.FORM_231)


def fuss_catalan(n: int) -> int:
    """binom(3n, n) / (2n + 1), exact.

    >>> [fuss_catalan(n) for n in range(1, 6)]
    [1, 3, 12, 55, 273]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.comb(3 * n, n) // (2 * n + 1)


def check_tset(t: Sequence[int]) -> tuple[int, ...]:
    """Validate the staircase conditions and return the set as a tuple."""
    t = tuple(t)
    if not t:
        raise ValueError("staircase set must be non-empty")
    prev = 0
    for i, v in enumerate(t, start=1):
        if v <= prev:
            raise ValueError(f"staircase set must increase strictly: {t}")
        if v > 3 * i - 2:
            raise ValueError(f"element {i} violates the bound 3i-2: {t}")
        prev = v
    return t


def enumerate_tsets(n: int) -> Iterator[tuple[int, ...]]:
    """All staircase sets of size n, lexicographic; Fuss-Catalan many."""
    if n < 1:
        raise ValueError("n must be >= 1")
    t: list[int] = []

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i > n:
            yield tuple(t)
            return
        lo = t[-1] + 1 if t else 1
        for v in range(lo, 3 * i - 1):
            t.append(v)
            yield from rec(i + 1)
            t.pop()

    return rec(1)


def word_of_tset(t: Sequence[int]) -> str:
    """The z/x/y word of a staircase set: z on the set; scanning the other
    slots left to right, a slot becomes x while the x and y counts are tied,
    and otherwise becomes y exactly when the next-needed y's partner x was
    preceded by as many z's as there are x's so far.

    >>> word_of_tset((1, 2, 3, 6, 11, 14))
    'zzzxxzxyyxzyyzxxyy'
    """
    t = check_tset(t)
    n = len(t)
    m = 3 * n
    in_t = bytearray(m + 1)
    for v in t:
        in_t[v] = 1
    letters: list[str] = []
    z_at_x = [0] * n
    x = y = z = 0
    for pos in range(1, m + 1):
        if in_t[pos]:
            letters.append("z")
            z += 1
            continue
        if x == y or z_at_x[y] != x:
            letters.append("x")
            z_at_x[x] = z
            x += 1
        else:
            letters.append("y")
            y += 1
    word = "".join(letters)
    _assert_precedence(word, t)
    return word


def _assert_precedence(word: str, t: Sequence[int]) -> None:
    """The i-th z must precede the i-th x, which must precede the i-th y."""
    n = len(word) // 3
    pos = {ch: [i for i, c in enumerate(word) if c == ch] for ch in "xyz"}
    if not (len(pos["x"]) == len(pos["y"]) == len(pos["z"]) == n):
        raise InternalInvariantError(f"unbalanced word for {t}: {word}")
    for i in range(n):
        if not pos["z"][i] < pos["x"][i] < pos["y"][i]:
            raise InternalInvariantError(
                f"z/x/y precedence violated at index {i + 1} for {t}: {word}"
            )


def h_and_segments(word: str) -> tuple[int, tuple[int, ...]]:
    """Balanced-prefix statistic of a z/x/y word: the milestones are the
    indices i whose prefix ending at the i-th y holds exactly i x's; returns
    (h, milestones).  The last milestone is always n."""
    x = y = 0
    milestones = []
    for ch in word:
        if ch == "x":
            x += 1
        elif ch == "y":
            y += 1
            if x == y:
                milestones.append(y)
    return len(milestones), tuple(milestones)


def perm_from_choices(t: Sequence[int], forms: Sequence[str]) -> perm.Perm:
    """Build the member of the 321-avoiding class for a staircase set and one
    form choice per balanced segment.

    Cycle i uses values (x_i, y_i, z_i) = (i-th smallest of the set, of the x
    positions, of the y positions); a 312 segment wires x -> z -> y -> x and
    a 231 segment wires x -> y -> z -> x.
    """
    t = check_tset(t)
    n = len(t)
    word = word_of_tset(t)
    h, milestones = h_and_segments(word)
    forms = tuple(forms)
    if len(forms) != h:
        raise ValueError(
            f"need one form per balanced segment ({h}), got {len(forms)}"
        )
    if any(f not in FORM_CHOICES for f in forms):
        raise ValueError(f"forms must be drawn from {FORM_CHOICES}: {forms}")
    xpos = [i + 1 for i, ch in enumerate(word) if ch == "x"]
    ypos = [i + 1 for i, ch in enumerate(word) if ch == "y"]
    out = [0] * (3 * n)
    seg = 0
    for i in range(n):
        if i + 1 > milestones[seg]:
            seg += 1
        x, y, z = t[i], xpos[i], ypos[i]
        if forms[seg] == perm.FORM_312:
            out[x - 1], out[z - 1], out[y - 1] = z, y, x
        else:
            out[x - 1], out[y - 1], out[z - 1] = y, z, x
    return perm.check_permutation(out)


def perm_from_tset(t: Sequence[int]) -> perm.Perm:
    """The unique all-312 member of the 321-avoiding class for a staircase
    set.

    >>> perm_from_tset((1, 2))
    (5, 6, 1, 2, 3, 4)
    """
    t = check_tset(t)
    word = word_of_tset(t)
    h, _ = h_and_segments(word)
    return perm_from_choices(t, (perm.FORM_312,) * h)


def tset_min_partition(p: perm.Perm) -> tuple[int, ...]:
    """The cycle minima of a 3-cycle-only permutation, sorted; recovers the
    staircase set of the all-312 construction."""
    decomp = perm.cycle_decomposition(p)
    if not decomp.three_cycle_only:
        raise ValueError(f"not composed only of 3-cycles: {p}")
    return tuple(sorted(min(c) for c in decomp.cycles))


def enumerate_321(n: int) -> Iterator[perm.Perm]:
    """All 321-avoiding star permutations, one per (staircase set, segment
    form vector), sets lexicographic, form vectors with 312 before 231."""
    if n < 1:
        raise ValueError("n must be >= 1")
    for t in enumerate_tsets(n):
        h, _ = h_and_segments(word_of_tset(t))
        for forms in itertools.product(FORM_CHOICES, repeat=h):
            yield perm_from_choices(t, forms)


def count_321_via_tsets(n: int) -> int:
    """Sum of 2^h over all staircase sets (h computed by the kernel backend).

    >>> [count_321_via_tsets(n) for n in range(1, 5)]
    [2, 10, 60, 388]
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    h_of = _kernels.h_of_tset
    return sum(2 ** h_of(t) for t in enumerate_tsets(n))


def tset_to_path(t: Sequence[int]) -> str:
    """The east/north lattice path from (0,0) to (2n,n) staying weakly below
    the line y = x/2 that corresponds to a staircase set: mark the set's
    positions north in a 3n-step word and reverse it.

    >>> tset_to_path((1, 4))
    'EENEEN'
    """
    t = check_tset(t)
    chars = ["E"] * (3 * len(t))
    for v in t:
        chars[v - 1] = "N"
    return "".join(reversed(chars))


def path_to_tset(path: str) -> tuple[int, ...]:
    """Inverse of :func:`tset_to_path`; rejects malformed paths (bad letters,
    unbalanced step counts, or a prefix climbing above y = x/2)."""
    m = len(path)
    if m % 3 or m == 0:
        raise ValueError(f"path length must be a positive multiple of 3: {path!r}")
    east = north = 0
    for ch in path:
        if ch == "E":
            east += 1
        elif ch == "N":
            north += 1
            if 2 * north > east:
                raise ValueError(f"path climbs above y = x/2: {path!r}")
        else:
            raise ValueError(f"path letters must be E or N: {path!r}")
    if north * 3 != m:
        raise ValueError(f"path needs 2n east and n north steps: {path!r}")
    t = tuple(sorted(m - i for i, ch in enumerate(path) if ch == "N"))
    return check_tset(t)


@dataclass(frozen=True)
class DyckStats:
    """Statistics of a Dyck word over x/y: the balanced-prefix count h, and
    the gap vectors r (y's between consecutive x's) and s (x's between
    consecutive y's)."""

    word: str
    h: int
    r: tuple[int, ...]
    s: tuple[int, ...]

    def binomial_weight(self) -> int:
        return math.prod(math.comb(ri + si, ri) for ri, si in zip(self.r, self.s))


def dyck_stats(word: str) -> DyckStats:
    """Compute (h, r, s) for a Dyck word over x/y.

    >>> dyck_stats("xyxy")
    DyckStats(word='xyxy', h=2, r=(1,), s=(1,))
    """
    if not words.is_balanced(word, "x", "y"):
        raise ValueError(f"not a Dyck word over x/y: {word!r}")
    n = len(word) // 2
    xpos = [i for i, ch in enumerate(word) if ch == "x"]
    ypos = [i for i, ch in enumerate(word) if ch == "y"]
    h = 0
    depth = 0
    for ch in word:
        depth += 1 if ch == "x" else -1
        if depth == 0:
            h += 1
    r = tuple(
        sum(1 for j in ypos if xpos[i] < j < xpos[i + 1]) for i in range(n - 1)
    )
    s = tuple(
        sum(1 for j in xpos if ypos[i] < j < ypos[i + 1]) for i in range(n - 1)
    )
    return DyckStats(word, h, r, s)


def tsets_for_dyck(word: str) -> Iterator[tuple[int, ...]]:
    """The staircase sets whose z/x/y word restricts to the given Dyck word
    on its x/y letters: prod binom(ri+si, ri) many, produced by interleaving
    si z's with the ri y's of each gap (and the forced leading z's).

    Every candidate is re-validated through :func:`word_of_tset`; a mismatch
    is a bug and raises rather than being skipped.
    """
    stats = dyck_stats(word)
    n = len(word) // 2
    # leading z's: one more than the initial run of zero gaps in r
    k = 1
    for ri in stats.r:
        if ri:
            break
        k += 1
    if k + sum(stats.s) != n:
        raise InternalInvariantError(
            f"z budget broken for {word}: lead {k}, gaps {stats.s}"
        )
    gap_choices = []
    for ri, si in zip(stats.r, stats.s):
        gap_choices.append(
            [
                "".join(g)
                for g in _interleavings(ri, si)
            ]
        )
    trailing_y = n - sum(stats.r)
    for gaps in itertools.product(*gap_choices):
        pieces = ["z" * k, "x"]
        for gap in gaps:
            pieces.append(gap)
            pieces.append("x")
        pieces.append("y" * trailing_y)
        candidate = "".join(pieces)
        t = tuple(i + 1 for i, ch in enumerate(candidate) if ch == "z")
        if word_of_tset(t) != candidate:
            raise InternalInvariantError(
                f"interleaving {candidate} is not the word of {t}"
            )
        yield t


def _interleavings(ys: int, zs: int) -> Iterator[tuple[str, ...]]:
    """All words with ``ys`` y's and ``zs`` z's, by choice of y slots."""
    total = ys + zs
    for yslots in itertools.combinations(range(total), ys):
        chosen = set(yslots)
        yield tuple("y" if i in chosen else "z" for i in range(total))


def count_321_via_dyck(n: int) -> int:
    """The weighted sum over all Dyck words of semilength n of
    2^h * prod binom(ri+si, ri); equals the staircase-set route.

    >>> [count_321_via_dyck(n) for n in range(1, 6)]
    [2, 10, 60, 388, 2606]
    """
    return sum(
        (1 << stats.h) * stats.binomial_weight()
        for stats in map(dyck_stats, words.dyck_words(n, "x", "y"))
    )


@dataclass(frozen=True)
class HPolynomial:
    """The balanced-prefix generating polynomial for one n: coefficient h is
    the total binomial weight of the Dyck words with that statistic.
    Evaluating at 1 gives the Fuss-Catalan number; at 2, the size of the
    321-avoiding class."""

    coefficients: tuple[int, ...]

    def evaluate(self, t: int) -> int:
        return sum(c * t**k for k, c in enumerate(self.coefficients))


def h_polynomial(n: int) -> HPolynomial:
    """Exact coefficients of the statistic-weighted polynomial for size n.

    >>> h_polynomial(2).coefficients
    (0, 1, 2)
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs = [0] * (n + 1)
    for stats in map(dyck_stats, words.dyck_words(n, "x", "y")):
        coeffs[stats.h] += stats.binomial_weight()
    return HPolynomial(tuple(coeffs))


def dyck_identity_check(n: int) -> bool:
    """True iff the unweighted binomial sum over Dyck words equals the
    Fuss-Catalan number (the h-polynomial evaluated at 1)."""
    total = sum(
        stats.binomial_weight()
        for stats in map(dyck_stats, words.dyck_words(n, "x", "y"))
    )
    return total == fuss_catalan(n)


def count_all312(n: int) -> int:
    """Size of the all-312 (equally, all-231) subclass of the 321-avoiders:
    the Fuss-Catalan number."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return fuss_catalan(n)
