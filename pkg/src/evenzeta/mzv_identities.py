"""Weighted sum identities for multiple zeta and zeta-star values with even
arguments.

The symmetric sum of zeta(2k_{sigma(1)}, ..., 2k_{sigma(n)}) over all
orderings sigma equals a signed sum over set partitions of {1..n} of products
of single zeta values: each partition Pi = {P_1, ..., P_i} contributes
(-1)^(n-i) * prod_j (|P_j| - 1)! times prod_j zeta(2 * sum_{l in P_j} k_l),
and the zeta-star analogue drops the sign.  For a *symmetric* weight
polynomial F this turns every weighted composition sum of multiple zeta
values into a combination of the single-zeta identities, one per block shape:
the weight collapses block by block through exact power-sum polynomials.

Both directions are implemented: the symbolic pipeline (``mzv_identity``,
``mzsv_identity``) and an independent exact evaluator (``mzv_lhs_exact``)
used to cross-check it, plus a high-precision numeric evaluator for the
defining nested series.
"""

from __future__ import annotations

import decimal
import itertools
import math
from collections import Counter
from decimal import Decimal
from fractions import Fraction
from typing import Sequence

from .checks import CheckResult
from .enumeration import (
    SetPartition,
    block_shapes,
    compositions,
    partition_weight,
    set_partitions,
)
from .polynomials import MultiPoly, UniPoly
from .rationals import bernoulli, binomial, factorial
from .zeta_identities import (
    PiValue,
    WeightedSumIdentity,
    eval_identity_rhs,
    zeta_even,
    zeta_identity_poly,
)

__all__ = [
    "block_reduce",
    "composition_power_sum",
    "mzsv_identity",
    "mzv_identity",
    "mzv_lhs_exact",
    "mzv_numeric",
    "partitions",
    "power_sum_2",
    "shape_count",
    "verify_mzv",
]

#: Largest depth for which the full set-partition list may be materialised.
_MAX_PARTITION_DEPTH = 12

#: Digits carried when rendering exact partial sums as decimals.
_DECIMAL_DIGITS = 40


def partitions(n: int) -> list[SetPartition]:
    """All set partitions of {1, ..., n} in canonical order; 1 <= n <= 12."""
    if not 1 <= n <= _MAX_PARTITION_DEPTH:
        raise ValueError(f"depth must be in 1..{_MAX_PARTITION_DEPTH}, got {n}")
    return set_partitions(n)


def shape_count(shape: Sequence[int]) -> int:
    """Number of set partitions of {1..n} with the given block sizes.

    ``shape`` must be a nonincreasing tuple of positive integers; n is its
    sum.  The count is n! divided by the product of the block-size
    factorials and the factorials of the multiplicities of each size.
    """
    shape = tuple(int(l) for l in shape)
    if not shape or any(l < 1 for l in shape):
        raise ValueError(f"shape must consist of positive integers, got {shape}")
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError(f"shape must be nonincreasing, got {shape}")
    n = sum(shape)
    denominator = math.prod(factorial(l) for l in shape)
    for multiplicity in Counter(shape).values():
        denominator *= factorial(multiplicity)
    return factorial(n) // denominator


def power_sum_2(p1: int, p2: int) -> UniPoly:
    """The polynomial in k equal to sum_{i=1}^{k-1} i^{p1} (k-i)^{p2} for
    every integer k >= 1.

    Closed form over pairs (i, j) with p1 <= i+j <= p1+p2:

        (-1)^(j+p1) C(i+j, i) C(p2, i+j-p1) B_i/(j+1) (k-1)^(j+1) k^(p1+p2-i-j)

    where B_1 = -1/2 contributes.  Degree p1+p2+1, leading coefficient
    p1! p2! / (p1+p2+1)!, and the value vanishes at k = 1.
    """
    if p1 < 0 or p2 < 0:
        raise ValueError(f"powers must be >= 0, got ({p1}, {p2})")
    total = UniPoly.zero()
    for i in range(p1 + p2 + 1):
        b = bernoulli(i)
        if not b:
            continue
        for j in range(max(0, p1 - i), p1 + p2 - i + 1):
            sign = -1 if (j + p1) % 2 else 1
            coeff = sign * binomial(i + j, i) * binomial(p2, i + j - p1) * b / (j + 1)
            piece = UniPoly.monomial(j + 1).shift(1) * UniPoly.monomial(p1 + p2 - i - j)
            total = total + coeff * piece
    return total


def composition_power_sum(pvec: Sequence[int]) -> UniPoly:
    """The polynomial in k equal, for every integer k >= 1, to

        sum_{k_1+...+k_n = k, k_j >= 1} k_1^{p_1} ... k_n^{p_n}

    (zero when k < n).  Built by folding ``power_sum_2`` over the exponents.
    """
    pvec = tuple(int(p) for p in pvec)
    if not pvec:
        raise ValueError("need at least one exponent")
    if any(p < 0 for p in pvec):
        raise ValueError(f"exponents must be >= 0, got {pvec}")
    result = UniPoly.monomial(pvec[0])
    for p_next in pvec[1:]:
        acc = UniPoly.zero()
        for power, coeff in enumerate(result.coeffs):
            if coeff:
                acc = acc + coeff * power_sum_2(power, p_next)
        result = acc
    return result


def block_reduce(F: MultiPoly, shape: Sequence[int]) -> MultiPoly:
    """Collapse an arity-n polynomial to one variable per block.

    Blocks take consecutive positions: with shape (l_1, ..., l_i), variable j
    of the result stands for the block total t_j, and the coefficient of the
    result at (t_1, ..., t_i) is the sum of F over all ways of splitting each
    t_j into l_j positive parts.  For symmetric F the outcome is independent
    of which positions form each block, so consecutive blocks lose no
    generality.  Degree can only grow: deg G <= deg F + n - i.
    """
    shape = tuple(int(l) for l in shape)
    if not shape or any(l < 1 for l in shape):
        raise ValueError(f"shape must consist of positive integers, got {shape}")
    if sum(shape) != F.arity:
        raise ValueError(f"shape {shape} does not cover arity {F.arity}")
    blocks = len(shape)
    acc = MultiPoly.zero(blocks)
    for coeff, expts in F.monomials():
        factors = []
        start = 0
        for size in shape:
            factors.append(composition_power_sum(expts[start : start + size]))
            start += size
        terms = []
        for choice in itertools.product(*(list(enumerate(f.coeffs)) for f in factors)):
            c = coeff
            for _, factor_coeff in choice:
                c *= factor_coeff
            if c:
                terms.append((tuple(power for power, _ in choice), c))
        acc = acc + MultiPoly(blocks, terms)
    return acc


def _symmetric_sum_identity(F: MultiPoly, n: int, kind: str) -> WeightedSumIdentity:
    if not isinstance(F, MultiPoly):
        raise TypeError(f"expected a MultiPoly weight, got {type(F).__name__}")
    if F.arity != n:
        raise ValueError(f"weight polynomial has arity {F.arity}, expected {n}")
    if not F.is_symmetric():
        raise ValueError(f"weight polynomial must be symmetric, got {F.render()}")
    signed = kind == "mzv"
    n_factorial = factorial(n)
    collected: dict[int, UniPoly] = {}
    depth = 0
    for shape in block_shapes(n):
        blocks = len(shape)
        reduced = block_reduce(F, shape)
        weight = Fraction(
            shape_count(shape) * math.prod(factorial(l - 1) for l in shape), n_factorial
        )
        if signed and (n - blocks) % 2:
            weight = -weight
        sub = zeta_identity_poly(reduced, blocks)
        depth = max(depth, sub.T)
        for l in range(sub.T + 1):
            if sub.terms[l].is_zero():
                continue
            collected[l] = collected.get(l, UniPoly.zero()) + weight * sub.terms[l]
    terms = tuple(collected.get(l, UniPoly.zero()) for l in range(depth + 1))
    return WeightedSumIdentity(kind=kind, n=n, T=depth, terms=terms, poly=F)


def mzv_identity(F: MultiPoly, n: int) -> WeightedSumIdentity:
    """Collapsed identity for sum over compositions of F(k_1..k_n) *
    zeta(2k_1, ..., 2k_n); F must be symmetric.

    For k >= n the multiple-zeta composition sum equals terms[0](k) zeta(2k)
    + sum_{l=1}^{min(T,k)} terms[l](k) zeta(2l) zeta(2k-2l).
    """
    return _symmetric_sum_identity(F, n, "mzv")


def mzsv_identity(F: MultiPoly, n: int) -> WeightedSumIdentity:
    """Zeta-star analogue of ``mzv_identity`` (non-strict nesting)."""
    return _symmetric_sum_identity(F, n, "mzsv")


def mzv_lhs_exact(F: MultiPoly, n: int, k: int, star: bool = False) -> PiValue:
    """Exact composition sum of F(k_1..k_n) * zeta(2k_1, ..., 2k_n), or the
    zeta-star analogue when ``star``.

    Each multiple zeta value at even arguments is itself evaluated through
    the set-partition expansion of symmetric sums, which for a symmetric F
    telescopes to: 1/n! times the sum over compositions and partitions of the
    signed block products.  This never touches the identity pipeline, so it
    serves as an independent cross-check of it.
    """
    if F.arity != n:
        raise ValueError(f"weight polynomial has arity {F.arity}, expected {n}")
    if not F.is_symmetric():
        raise ValueError(f"weight polynomial must be symmetric, got {F.render()}")
    if k < n:
        raise ValueError(f"need k >= n = {n}, got {k}")
    parts = partitions(n)
    weights = [partition_weight(p) for p in parts]
    total = PiValue.zero(k)
    for comp in compositions(k, n):
        value = F.evaluate(comp)
        if not value:
            continue
        comp_total = PiValue.zero(k)
        for part, weight in zip(parts, weights):
            product = PiValue(0, Fraction(1))
            for block in part:
                product = product * zeta_even(sum(comp[index - 1] for index in block))
            comp_total = comp_total + (weight.c if star else weight.c_tilde) * product
        total = total + value * comp_total
    return total * Fraction(1, factorial(n))


def verify_mzv(
    F: MultiPoly,
    n: int,
    k: int,
    star: bool = False,
    identity: WeightedSumIdentity | None = None,
) -> CheckResult:
    """Cross-check the identity pipeline against the independent evaluator."""
    if identity is None:
        identity = mzsv_identity(F, n) if star else mzv_identity(F, n)
    left = mzv_lhs_exact(F, n, k, star=star)
    right = eval_identity_rhs(identity, k)
    name = "mzsv" if star else "mzv"
    return CheckResult(
        ok=left == right,
        label=f"{name} weighted sum F={F.render()} n={n} k={k}",
        lhs=str(left),
        rhs=str(right),
    )


def _to_decimal(value: Fraction) -> Decimal:
    with decimal.localcontext() as ctx:
        ctx.prec = _DECIMAL_DIGITS
        return Decimal(value.numerator) / Decimal(value.denominator)


def mzv_numeric(kvec: Sequence[int], bound: int) -> tuple[Decimal, Decimal]:
    """Exact partial sum of zeta(k_1, ..., k_n) = sum over m_1 > ... > m_n >= 1
    of 1/(m_1^{k_1} ... m_n^{k_n}), truncated at m_1 <= bound, as a Decimal,
    together with a tail estimate.

    The partial sum is computed exactly: over the common denominator
    L^(k_1+...+k_n) with L = lcm(1..bound), every prefix sum is an integer.
    The tail estimate is (1645/1000)^(n-1) * bound^(1-k_1), a genuine bound
    when every argument is >= 2 (1.645 > zeta(2) dominates each inner sum).
    The word must be admissible: k_1 >= 2.
    """
    kvec = tuple(int(k) for k in kvec)
    if not kvec or any(k < 1 for k in kvec):
        raise ValueError(f"arguments must be positive integers, got {kvec}")
    if kvec[0] < 2:
        raise ValueError(f"inadmissible word: first argument must be >= 2, got {kvec[0]}")
    if bound < 10:
        raise ValueError(f"truncation bound must be at least 10, got {bound}")
    lcm_all = math.lcm(*range(1, bound + 1))
    quotients = [0] + [lcm_all // m for m in range(1, bound + 1)]
    prefix: list[int] | None = None
    for exponent in reversed(kvec[1:]):
        level = [0] * (bound + 1)
        running = 0
        for m in range(1, bound + 1):
            piece = quotients[m] ** exponent
            if prefix is not None:
                piece *= prefix[m - 1]
            running += piece
            level[m] = running
        prefix = level
    outer = 0
    for m in range(1, bound + 1):
        piece = quotients[m] ** kvec[0]
        if prefix is not None:
            piece *= prefix[m - 1]
        outer += piece
    partial = Fraction(outer, lcm_all ** sum(kvec))
    tail = Fraction(1645, 1000) ** (len(kvec) - 1) * Fraction(1, bound ** (kvec[0] - 1))
    return _to_decimal(partial), _to_decimal(tail)
