"""Truncated formal power series with exact integer coefficients.

Every series carries its truncation order explicitly (the highest retained
exponent); combining series of different orders truncates to the shorter one,
so precision can shrink but never silently pretend to exceed what was
computed.  All arithmetic is exact big-integer work; nothing here touches
floating point.
"""

from __future__ import annotations

from typing import Sequence


class IntegerSeries:
    """Coefficients c[0..N] of a power series truncated at order N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        if len(coeffs) == 0:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs: tuple[int, ...] = tuple(int(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "IntegerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return IntegerSeries(self.coeffs[: order + 1])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntegerSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntegerSeries({list(self.coeffs)})"

    def __add__(self, other: "IntegerSeries") -> "IntegerSeries":
        n = min(self.order, other.order)
        return IntegerSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)]
        )

    def __sub__(self, other: "IntegerSeries") -> "IntegerSeries":
        n = min(self.order, other.order)
        return IntegerSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)]
        )

    def __neg__(self) -> "IntegerSeries":
        return IntegerSeries([-c for c in self.coeffs])

    def scale(self, k: int) -> "IntegerSeries":
        return IntegerSeries([k * c for c in self.coeffs])

    def __mul__(self, other: "IntegerSeries") -> "IntegerSeries":
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return IntegerSeries(out)

    def compose(self, inner: "IntegerSeries") -> "IntegerSeries":
        """self(inner); requires ``inner`` to have zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("composition needs a zero constant term inside")
        n = min(self.order, inner.order)
        inner_t = inner.truncate(n)
        # Horner from the top coefficient down; each step re-truncates at n.
        result = constant(self.coeffs[n], n)
        for k in range(n - 1, -1, -1):
            result = result * inner_t + constant(self.coeffs[k], n)
        return result

    def __truediv__(self, other: "IntegerSeries") -> "IntegerSeries":
        """Exact division; the divisor's constant term must be a unit (+-1)."""
        g0 = other.coeffs[0]
        if g0 not in (1, -1):
            raise ValueError(
                f"division needs a divisor with constant term +-1, got {g0}"
            )
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for k in range(n + 1):
            acc = self.coeffs[k]
            for i in range(k):
                acc -= out[i] * other.coeffs[k - i]
            out[k] = acc * g0  # exact: dividing by +-1
        return IntegerSeries(out)


def constant(value: int, order: int) -> IntegerSeries:
    return IntegerSeries([value] + [0] * order)


def one(order: int) -> IntegerSeries:
    return constant(1, order)


def catalan_numbers(n: int) -> list[int]:
    """C[0..n] by the convolution recurrence C[k+1] = sum C[i] C[k-i].

    >>> catalan_numbers(5)
    [1, 1, 2, 5, 14, 42]
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    c = [1]
    for k in range(n):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    return c


def motzkin_numbers(n: int) -> list[int]:
    """M[0..n] by the recurrence M[k+1] = M[k] + sum M[i] M[k-1-i].

    >>> motzkin_numbers(5)
    [1, 1, 2, 4, 9, 21]
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    m = [1]
    for k in range(n):
        m.append(m[k] + sum(m[i] * m[k - 1 - i] for i in range(k)))
    return m


def catalan_series(order: int) -> IntegerSeries:
    return IntegerSeries(catalan_numbers(order))


def motzkin_series(order: int) -> IntegerSeries:
    return IntegerSeries(motzkin_numbers(order))


def series_all312_avoiders(order: int) -> IntegerSeries:
    """Generating function for the 132-avoiding star permutations whose cycles
    all realize 312: (c - 1) * m(c - 1) with c, m the Catalan and Motzkin
    series.  Coefficient n counts the size-3n members; the constant term is 0.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    c_minus_1 = catalan_series(order) - one(order)
    return c_minus_1 * motzkin_series(order).compose(c_minus_1)


def series_132_avoiders(order: int) -> IntegerSeries:
    """Generating function for all 132-avoiding star permutations:
    2A / (1 - A) where A = :func:`series_all312_avoiders`."""
    a = series_all312_avoiders(order)
    return a.scale(2) / (one(order) - a)


# short aliases matching the A/B naming used throughout the tests and CLI
series_A = series_all312_avoiders
series_B = series_132_avoiders
