"""Exact rational scalars, factorials, binomial coefficients, and Bernoulli numbers.

Every quantity in this package is an exact ``fractions.Fraction``; nothing is
ever rounded.  This module also owns the shared, thread-safe Bernoulli cache.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

__all__ = ["Rational", "BernoulliTable", "bernoulli", "binomial", "factorial"]

#: Scalar type used throughout the package: arbitrary-precision rationals,
#: normalised with positive denominator and coprime numerator/denominator.
Rational = Fraction


def factorial(n: int) -> int:
    """Exact n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial undefined for negative argument {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k); requires 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"binomial undefined for n={n}, k={k}")
    return math.comb(n, k)


class BernoulliTable:
    """Growable cache of Bernoulli numbers B_0, B_1, B_2, ...

    Uses the convention B_1 = -1/2, i.e. B_i is i! times the i-th Taylor
    coefficient of t/(e^t - 1).  Entries are produced by the classical
    recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1, seeded only with
    B_0 = 1; extension is guarded by a lock so a single table can be shared
    between threads.
    """

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def value(self, i: int) -> Fraction:
        if i < 0:
            raise ValueError(f"Bernoulli numbers need index >= 0, got {i}")
        if i >= len(self._values):
            self._extend(i)
        return self._values[i]

    def _extend(self, upto: int) -> None:
        with self._lock:
            values = self._values
            while len(values) <= upto:
                n = len(values)
                acc = Fraction(0)
                for j, b in enumerate(values):
                    if b:
                        acc += math.comb(n + 1, j) * b
                # values never shrinks, so concurrent readers stay valid
                values.append(-acc / (n + 1))


_SHARED_TABLE = BernoulliTable()


def bernoulli(i: int) -> Fraction:
    """Exact Bernoulli number B_i, with B_1 = -1/2."""
    return _SHARED_TABLE.value(i)
