"""Triangular polynomial tables for rewriting derivatives of the even
Bernoulli series in powers of t/(e^t - 1).

Write D = t*d/dt and h(t) = t/(e^t - 1).  The even series
f(t) = h(t) - 1 + t/2 = sum_{i>=1} B_{2i} t^{2i} / (2i)! satisfies

    D^m f(t) = sum_{i=0}^{m+1} f_{m,i}(t) * h(t)^i

for a triangle of polynomials f_{m,i} obeying a first-order recursion in m
(differentiating t*h' = (1 - t)*h - h^2 once per row).  Inverting the
lower-triangular system formed by the columns i >= 1 yields a second triangle
g_{m,i} that expresses h(t)^i back in terms of D^j g(t), where
g(t) = h(t) + t/2 is the even completion with D^j g = f_{j,0} + t/2 + ... for
j >= 1.  Downstream modules consume only these triangles and their extreme
coefficients; the transcendental functions themselves are never evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polynomials import UniPoly
from .rationals import factorial

__all__ = ["FTable", "GTable", "c_coeffs", "d_coeffs", "f_table", "g_table"]


@dataclass(frozen=True)
class FTable:
    """Rows 0..depth of the triangle f_{m,i}; row m holds entries i = 0..m+1."""

    depth: int
    rows: tuple[tuple[UniPoly, ...], ...]

    def row(self, m: int) -> tuple[UniPoly, ...]:
        if not 0 <= m <= self.depth:
            raise ValueError(f"row index must be in 0..{self.depth}, got {m}")
        return self.rows[m]

    def entry(self, m: int, i: int) -> UniPoly:
        row = self.row(m)
        if not 0 <= i <= m + 1:
            raise ValueError(f"column index must be in 0..{m + 1}, got {i}")
        return row[i]


@dataclass(frozen=True)
class GTable:
    """Rows 0..depth of the inverse triangle g_{m,i}; row m holds i = 1..m+1."""

    depth: int
    rows: tuple[tuple[UniPoly, ...], ...]

    def row(self, m: int) -> tuple[UniPoly, ...]:
        if not 0 <= m <= self.depth:
            raise ValueError(f"row index must be in 0..{self.depth}, got {m}")
        return self.rows[m]

    def entry(self, m: int, i: int) -> UniPoly:
        row = self.row(m)
        if not 1 <= i <= m + 1:
            raise ValueError(f"column index must be in 1..{m + 1}, got {i}")
        return row[i - 1]


@lru_cache(maxsize=None)
def f_table(depth: int) -> FTable:
    """Build rows 0..depth of the forward triangle.

    Row 0 is (t/2 - 1, 1); each later row follows from

        f_{m,0}   = t * f_{m-1,0}'
        f_{m,i}   = t * f_{m-1,i}' + i*(1 - t)*f_{m-1,i} - (i - 1)*f_{m-1,i-1}
        f_{m,m+1} = -m * f_{m-1,m}
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    t = UniPoly.x()
    one = UniPoly.one()
    rows: list[tuple[UniPoly, ...]] = [(UniPoly((Fraction(-1), Fraction(1, 2))), one)]
    for m in range(1, depth + 1):
        prev = rows[m - 1]
        row = [t * prev[0].derivative()]
        for i in range(1, m + 1):
            row.append(t * prev[i].derivative() + i * (one - t) * prev[i] - (i - 1) * prev[i - 1])
        row.append(UniPoly.constant(-m) * prev[m])
        rows.append(tuple(row))
    return FTable(depth=depth, rows=tuple(rows))


@lru_cache(maxsize=None)
def g_table(depth: int) -> GTable:
    """Build rows 0..depth of the inverse triangle.

    Row 0 is (1,); for m >= 1 the diagonal entry is (-1)^m / m! and

        g_{m,i} = (-1)^(m+1) / m! * sum_{j=i}^{m} f_{m,j} * g_{j-1,i}

    which makes sum_{j=i}^{m+1} f_{m,j} * g_{j-1,i} vanish for i <= m and
    equal 1 at i = m+1: the triangle inverts the f-system columnwise.
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    fs = f_table(depth)
    rows: list[tuple[UniPoly, ...]] = [(UniPoly.one(),)]
    for m in range(1, depth + 1):
        scale = Fraction((-1) ** (m + 1), factorial(m))
        row = []
        for i in range(1, m + 1):
            acc = UniPoly.zero()
            for j in range(i, m + 1):
                acc = acc + fs.entry(m, j) * rows[j - 1][i - 1]
            row.append(acc * scale)
        row.append(UniPoly.constant(Fraction((-1) ** m, factorial(m))))
        rows.append(tuple(row))
    return GTable(depth=depth, rows=tuple(rows))


def c_coeffs(depth: int) -> tuple[tuple[Fraction, ...], ...]:
    """Leading coefficients of the forward triangle, by their own recursion.

    Row m holds (c_{m,0}, ..., c_{m,m+1}) where c_{m,i} is the coefficient of
    t^(m+1-i) in f_{m,i}.  The recursion c_{m,i} = -i*c_{m-1,i} -
    (i-1)*c_{m-1,i-1} (with c_{m,0} = 1/2 and c_{m,m+1} = (-1)^m * m!) is an
    independent path that tests cross-check against direct extraction.
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    rows: list[tuple[Fraction, ...]] = [(Fraction(1, 2), Fraction(1))]
    for m in range(1, depth + 1):
        prev = rows[m - 1]
        row = [Fraction(1, 2)]
        for i in range(1, m + 1):
            row.append(-i * prev[i] - (i - 1) * prev[i - 1])
        row.append(Fraction((-1) ** m * factorial(m)))
        rows.append(tuple(row))
    return tuple(rows)


def d_coeffs(depth: int) -> tuple[tuple[Fraction, ...], ...]:
    """Top coefficients of the inverse triangle, by their own recursion.

    Row m holds (d_{m,1}, ..., d_{m,m+1}) where d_{m,i} is the coefficient of
    t^(m+1-i) in g_{m,i} (the degree bound is not always attained, so d may
    be zero).  Satisfies d_{m,i} = (-1)^(m+1)/m! * sum_{j=i}^{m} c_{m,j}
    d_{j-1,i} with diagonal (-1)^m / m!.
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    cs = c_coeffs(depth)
    rows: list[tuple[Fraction, ...]] = [(Fraction(1),)]
    for m in range(1, depth + 1):
        scale = Fraction((-1) ** (m + 1), factorial(m))
        row = []
        for i in range(1, m + 1):
            row.append(scale * sum(cs[m][j] * rows[j - 1][i - 1] for j in range(i, m + 1)))
        row.append(Fraction((-1) ** m, factorial(m)))
        rows.append(tuple(row))
    return tuple(rows)
