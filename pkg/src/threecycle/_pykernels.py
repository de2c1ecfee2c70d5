"""Pure-Python kernels: the import-time fallback for the compiled extension.

Signatures and semantics mirror ``threecycle._ckernels`` exactly; the selector
in ``threecycle._kernels`` prefers the compiled module when it imports.  This
module is deliberately self-contained (no intra-package imports) so either
backend can be loaded in isolation.

Conventions: permutations are 1-based one-line sequences; a 3-cycle placed as
a -> b -> c with a < b < c realizes the pattern 231, while a -> c -> b
realizes 312.  Orientation masks: bit 0 allows 231-form cycles, bit 1 allows
312-form cycles.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "python"

ORIENT_231 = 1
ORIENT_312 = 2

#: Fixed pattern order for avoidance-profile bit masks (bit i set = avoids
#: PROFILE_PATTERNS[i]).
PROFILE_PATTERNS = (
    (1, 2, 3),
    (1, 3, 2),
    (2, 1, 3),
    (2, 3, 1),
    (3, 1, 2),
    (3, 2, 1),
)


def contains_pattern3(values: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some length-3 subsequence of ``values`` is order-isomorphic to
    ``pattern``.  Early-exits on the first witness."""
    pa, pb, pc = pattern
    ab = pa < pb
    bc = pb < pc
    ac = pa < pc
    m = len(values)
    for i in range(m - 2):
        vi = values[i]
        for j in range(i + 1, m - 1):
            vj = values[j]
            if (vi < vj) != ab:
                continue
            for k in range(j + 1, m):
                vk = values[k]
                if (vj < vk) == bc and (vi < vk) == ac:
                    return True
    return False


def _orient_mask(form: str | None) -> int:
    if form is None:
        return ORIENT_231 | ORIENT_312
    if form == "231":
        return ORIENT_231
    if form == "312":
        return ORIENT_312
    raise ValueError(f"unknown form filter: {form!r}")


def count_avoiders(
    n: int,
    patterns: Sequence[Sequence[int]],
    form: str | None = None,
    first: tuple[int, int, int] | None = None,
) -> int:
    """Count permutations of [3n] built only from 3-cycles that avoid every
    pattern in ``patterns`` (each of length 3), with cycle forms restricted by
    ``form`` (None, "312" or "231").

    ``first`` optionally fixes the cycle of element 1 to partners ``(b, c)``
    with orientation odd bit of ``ORIENT_*``; counts for all choices sum to
    the unrestricted count, which is what the parallel partitioning relies on.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = 3 * n
    mask = _orient_mask(form)
    pats = [tuple(p) for p in patterns]
    perm = [0] * (m + 1)
    used = [False] * (m + 2)

    def leaf() -> int:
        vals = perm[1:]
        for p in pats:
            if contains_pattern3(vals, p):
                return 0
        return 1

    def rec(low: int, remaining: int) -> int:
        if remaining == 0:
            return leaf()
        a = low
        while used[a]:
            a += 1
        used[a] = True
        total = 0
        for b in range(a + 1, m + 1):
            if used[b]:
                continue
            used[b] = True
            for c in range(b + 1, m + 1):
                if used[c]:
                    continue
                used[c] = True
                if mask & ORIENT_231:
                    perm[a], perm[b], perm[c] = b, c, a
                    total += rec(a + 1, remaining - 1)
                if mask & ORIENT_312:
                    perm[a], perm[b], perm[c] = c, a, b
                    total += rec(a + 1, remaining - 1)
                used[c] = False
            used[b] = False
        used[a] = False
        return total

    if n == 0:
        return 0
    if first is None:
        return rec(1, n)

    b, c, orient = first
    if not (2 <= b < c <= m):
        raise ValueError(f"invalid first-cycle partners ({b}, {c}) for size {m}")
    if orient not in (ORIENT_231, ORIENT_312):
        raise ValueError(f"invalid orientation {orient}")
    if not mask & orient:
        return 0
    used[1] = used[b] = used[c] = True
    if orient == ORIENT_231:
        perm[1], perm[b], perm[c] = b, c, 1
    else:
        perm[1], perm[b], perm[c] = c, 1, b
    return rec(2, n - 1) if n > 1 else leaf()


def avoidance_profile(
    n: int, first: tuple[int, int, int] | None = None
) -> list[list[int]]:
    """One exhaustive sweep over the 3-cycle-only permutations of [3n],
    histogrammed by (form class, avoidance mask).

    Returns a 3 x 64 table: row 0 counts permutations with mixed cycle forms,
    row 1 all-312, row 2 all-231; column ``mask`` has bit i set when the
    permutation avoids ``PROFILE_PATTERNS[i]``.  Any single-pattern-set query
    over length-3 patterns is a sum of cells of this table.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = 3 * n
    table = [[0] * 64 for _ in range(3)]
    perm = [0] * (m + 1)
    used = [False] * (m + 2)

    def leaf(n231: int) -> None:
        vals = perm[1:]
        mask = 0
        for i, p in enumerate(PROFILE_PATTERNS):
            if not contains_pattern3(vals, p):
                mask |= 1 << i
        if n231 == 0:
            row = 1
        elif n231 == n:
            row = 2
        else:
            row = 0
        table[row][mask] += 1

    def rec(low: int, remaining: int, n231: int) -> None:
        if remaining == 0:
            leaf(n231)
            return
        a = low
        while used[a]:
            a += 1
        used[a] = True
        for b in range(a + 1, m + 1):
            if used[b]:
                continue
            used[b] = True
            for c in range(b + 1, m + 1):
                if used[c]:
                    continue
                used[c] = True
                perm[a], perm[b], perm[c] = b, c, a
                rec(a + 1, remaining - 1, n231 + 1)
                perm[a], perm[b], perm[c] = c, a, b
                rec(a + 1, remaining - 1, n231)
                used[c] = False
            used[b] = False
        used[a] = False

    if n == 0:
        return table
    if first is None:
        rec(1, n, 0)
        return table

    b, c, orient = first
    if not (2 <= b < c <= m):
        raise ValueError(f"invalid first-cycle partners ({b}, {c}) for size {m}")
    used[1] = used[b] = used[c] = True
    if orient == ORIENT_231:
        perm[1], perm[b], perm[c] = b, c, 1
        n231 = 1
    elif orient == ORIENT_312:
        perm[1], perm[b], perm[c] = c, 1, b
        n231 = 0
    else:
        raise ValueError(f"invalid orientation {orient}")
    if n > 1:
        rec(2, n - 1, n231)
    else:
        leaf(n231)
    return table


def h_of_tset(t: Sequence[int]) -> int:
    """Balanced-prefix statistic of the z/x/y word determined by a staircase
    set: the number of indices i whose prefix ending at the i-th y holds
    exactly i x's.  Input is assumed validated (strictly increasing,
    t[i] <= 3i - 2)."""
    n = len(t)
    m = 3 * n
    is_z = bytearray(m + 1)
    for v in t:
        is_z[v] = 1
    z_at_x = [0] * n
    x = y = z = h = 0
    for pos in range(1, m + 1):
        if is_z[pos]:
            z += 1
            continue
        if x == y or z_at_x[y] != x:
            z_at_x[x] = z
            x += 1
        else:
            y += 1
            if x == y:
                h += 1
    return h
