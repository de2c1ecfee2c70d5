"""Balanced-word and composition generators shared by the counting modules.

Dyck words are produced over a caller-chosen (open, close) letter pair so the
same machinery serves both the {1,2} words of the 132 analysis and the {x,y}
words of the 321 analysis.  Motzkin words use the fixed alphabet U/F/D.
All generators are deterministic: openers are tried before closers, U before
F before D, and composition parts grow left to right.
"""

from __future__ import annotations

from typing import Iterator


def is_balanced(word: str, up: str, down: str) -> bool:
    """True iff ``word`` uses only ``up``/``down``, prefixes never go negative,
    and the totals match."""
    depth = 0
    for ch in word:
        if ch == up:
            depth += 1
        elif ch == down:
            depth -= 1
            if depth < 0:
                return False
        else:
            return False
    return depth == 0


def dyck_words(n: int, up: str = "1", down: str = "2") -> Iterator[str]:
    """All Dyck words of semilength ``n``, openers-first.

    >>> list(dyck_words(2))
    ['1122', '1212']
    """
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    prefix: list[str] = []

    def rec(opens: int, closes: int) -> Iterator[str]:
        if opens == n and closes == n:
            yield "".join(prefix)
            return
        if opens < n:
            prefix.append(up)
            yield from rec(opens + 1, closes)
            prefix.pop()
        if closes < opens:
            prefix.append(down)
            yield from rec(opens, closes + 1)
            prefix.pop()

    return rec(0, 0)


def motzkin_words(k: int) -> Iterator[str]:
    """All Motzkin words of length ``k`` over U/F/D (U before F before D).

    >>> list(motzkin_words(2))
    ['UD', 'FF']
    """
    if k < 0:
        raise ValueError("length must be nonnegative")
    prefix: list[str] = []

    def rec(placed: int, depth: int) -> Iterator[str]:
        if placed == k:
            if depth == 0:
                yield "".join(prefix)
            return
        # prune branches that cannot land back on the axis
        if depth > k - placed:
            return
        if depth + 1 <= k - placed - 1:
            prefix.append("U")
            yield from rec(placed + 1, depth + 1)
            prefix.pop()
        prefix.append("F")
        yield from rec(placed + 1, depth)
        prefix.pop()
        if depth > 0:
            prefix.append("D")
            yield from rec(placed + 1, depth - 1)
            prefix.pop()

    return rec(0, 0)


def is_motzkin(word: str) -> bool:
    return is_balanced("".join(ch for ch in word if ch != "F"), "U", "D") and set(
        word
    ) <= {"U", "F", "D"}


def compositions(n: int, length: int | None = None) -> Iterator[tuple[int, ...]]:
    """Compositions of ``n`` (ordered tuples of positive parts), optionally of a
    fixed ``length``; parts are chosen smallest-first so the stream is
    lexicographic.

    >>> list(compositions(3))
    [(1, 1, 1), (1, 2), (2, 1), (3,)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    parts: list[int] = []

    def rec(remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            if length is None or len(parts) == length:
                yield tuple(parts)
            return
        if length is not None and len(parts) >= length:
            return
        for x in range(1, remaining + 1):
            parts.append(x)
            yield from rec(remaining - x)
            parts.pop()

    return rec(n)
