"""Even-argument zeta values as exact multiples of powers of pi, and the
weighted sum identities for products zeta(2k_1) ... zeta(2k_n).

A product of zeta values at even arguments with argument total 2k is an exact
rational multiple of pi^(2k); ``PiValue`` carries the (weight, coefficient)
pair so every evaluation in this module stays exact.  The identities rewrite
power-weighted composition sums of such products as short combinations over
the basis zeta(2l) * zeta(2k-2l), with the l = 0 coefficient normalised to
multiply plain zeta(2k).  The formal value zeta(0) = -1/2 extends the
composition sums to index value 0 and is what that normalisation folds in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .bernoulli_sums import a_coeffs, bernoulli_identity, truncation_depth, _validated_mvec
from .checks import CheckResult
from .enumeration import compositions
from .polynomials import MultiPoly, UniPoly
from .rationals import bernoulli, factorial

__all__ = [
    "PiValue",
    "WeightedSumIdentity",
    "eval_identity_rhs",
    "eval_zeta_lhs",
    "verify_zeta",
    "zeta_even",
    "zeta_identity_monomial",
    "zeta_identity_poly",
]

Scalar = Union[int, Fraction]


@dataclass(frozen=True, eq=False)
class PiValue:
    """Exact rational multiple of an even power of pi: coeff * pi^(2*weight).

    Addition requires matching weights unless one side is zero; zero compares
    equal across weights.
    """

    weight: int
    coeff: Fraction

    def __post_init__(self) -> None:
        if self.weight < 0:
            raise ValueError(f"weight must be >= 0, got {self.weight}")
        if not isinstance(self.coeff, Fraction):
            if not isinstance(self.coeff, int):
                raise TypeError(f"coefficient must be rational, got {type(self.coeff).__name__}")
            object.__setattr__(self, "coeff", Fraction(self.coeff))

    @staticmethod
    def zero(weight: int) -> "PiValue":
        return PiValue(weight, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeff

    def __add__(self, other: "PiValue") -> "PiValue":
        if not isinstance(other, PiValue):
            return NotImplemented
        if not other.coeff:
            return self
        if not self.coeff:
            return other
        if self.weight != other.weight:
            raise ValueError(
                f"cannot add pi^{2 * self.weight} and pi^{2 * other.weight} multiples"
            )
        return PiValue(self.weight, self.coeff + other.coeff)

    def __sub__(self, other: "PiValue") -> "PiValue":
        if not isinstance(other, PiValue):
            return NotImplemented
        return self + PiValue(other.weight, -other.coeff)

    def __neg__(self) -> "PiValue":
        return PiValue(self.weight, -self.coeff)

    def __mul__(self, other: "PiValue | Scalar") -> "PiValue":
        if isinstance(other, PiValue):
            return PiValue(self.weight + other.weight, self.coeff * other.coeff)
        if isinstance(other, (int, Fraction)):
            return PiValue(self.weight, self.coeff * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PiValue):
            return NotImplemented
        if not self.coeff and not other.coeff:
            return True
        return self.weight == other.weight and self.coeff == other.coeff

    def __hash__(self) -> int:
        if not self.coeff:
            return hash(("PiValue", 0))
        return hash(("PiValue", self.weight, self.coeff))

    def __bool__(self) -> bool:
        return bool(self.coeff)

    def __str__(self) -> str:
        if not self.coeff or self.weight == 0:
            return str(self.coeff)
        return f"({self.coeff})*pi^{2 * self.weight}"

    def __repr__(self) -> str:
        return f"PiValue(weight={self.weight}, coeff={self.coeff})"


@lru_cache(maxsize=None)
def zeta_even(j: int) -> PiValue:
    """zeta(2j) as an exact multiple of pi^(2j); zeta(0) is the formal -1/2.

    For j >= 1: zeta(2j) = (-1)^(j+1) * B_{2j} * 2^(2j) / (2 * (2j)!) * pi^(2j).
    """
    if j < 0:
        raise ValueError(f"argument index must be >= 0, got {j}")
    if j == 0:
        return PiValue(0, Fraction(-1, 2))
    coeff = (-1) ** (j + 1) * bernoulli(2 * j) * Fraction(2 ** (2 * j), 2 * factorial(2 * j))
    return PiValue(j, coeff)


@dataclass(frozen=True)
class WeightedSumIdentity:
    """Collapsed side of a weighted sum identity over zeta(2l) * zeta(2k-2l).

    ``terms[l]`` is the polynomial coefficient of zeta(2l) * zeta(2k-2l); the
    l = 0 entry is normalised to multiply plain zeta(2k).  ``kind`` states
    which left side the identity collapses: products of single zeta values
    ("zeta"), multiple zeta values ("mzv"), or zeta-star values ("mzsv").
    Exactly one of ``mvec`` (monomial weight) and ``poly`` (weight
    polynomial) is set.
    """

    kind: str
    n: int
    T: int
    terms: tuple[UniPoly, ...]
    mvec: tuple[int, ...] | None = None
    poly: MultiPoly | None = None


@lru_cache(maxsize=None)
def _monomial_identity(mvec: tuple[int, ...]) -> WeightedSumIdentity:
    coeffs = a_coeffs(mvec)
    n, s = len(mvec), sum(mvec)
    depth = truncation_depth(mvec)
    sign = Fraction((-1) ** n)
    terms = []
    for l in range(depth + 1):
        base = UniPoly.zero()
        for j in range(1, s + n - 2 * l + 1):
            a = coeffs.get((j, l), Fraction(0))
            if a:
                base = base + (a * Fraction(2) ** (j + 1 - s - n)) * UniPoly.monomial(j - 1).shift(l)
        scale = sign * Fraction(factorial(2 * l)) / bernoulli(2 * l)
        if l == 0:
            scale = scale * Fraction(-1, 2)  # fold zeta(0) into the zeta(2k) term
        terms.append(base * scale)
    return WeightedSumIdentity(kind="zeta", n=n, T=depth, terms=tuple(terms), mvec=mvec)


def zeta_identity_monomial(mvec: Sequence[int]) -> WeightedSumIdentity:
    """Identity for the weight k_1^{m_1} ... k_n^{m_n} on products of even
    zeta values: for k >= n,

        sum_{k_1+...+k_n=k} k_1^{m_1}...k_n^{m_n} zeta(2k_1)...zeta(2k_n)
            = terms[0](k) zeta(2k)
            + sum_{l=1}^{min(T,k)} terms[l](k) zeta(2l) zeta(2k-2l).
    """
    return _monomial_identity(_validated_mvec(mvec))


def zeta_identity_poly(F: MultiPoly, n: int) -> WeightedSumIdentity:
    """Identity for an arbitrary weight polynomial F(x1..xn), assembled as the
    linear combination of the monomial identities.  No symmetry is required.
    """
    if not isinstance(F, MultiPoly):
        raise TypeError(f"expected a MultiPoly weight, got {type(F).__name__}")
    if F.arity != n:
        raise ValueError(f"weight polynomial has arity {F.arity}, expected {n}")
    parts = [(coeff, _monomial_identity(expts)) for coeff, expts in F.monomials()]
    depth = max((sub.T for _, sub in parts), default=(n - 1) // 2)
    terms = []
    for l in range(depth + 1):
        acc = UniPoly.zero()
        for coeff, sub in parts:
            if l <= sub.T:
                acc = acc + coeff * sub.terms[l]
        terms.append(acc)
    return WeightedSumIdentity(kind="zeta", n=n, T=depth, terms=tuple(terms), poly=F)


def eval_zeta_lhs(F: MultiPoly, n: int, k: int) -> PiValue:
    """Exact left side: sum over compositions of F(k_1..k_n) * zeta(2k_1) ...
    zeta(2k_n).  Always a rational multiple of pi^(2k)."""
    if F.arity != n:
        raise ValueError(f"weight polynomial has arity {F.arity}, expected {n}")
    if k < n:
        raise ValueError(f"need k >= n = {n}, got {k}")
    total = PiValue.zero(k)
    for comp in compositions(k, n):
        value = F.evaluate(comp)
        if not value:
            continue
        product = PiValue(0, value)
        for kj in comp:
            product = product * zeta_even(kj)
        total = total + product
    return total


def eval_identity_rhs(identity: WeightedSumIdentity, k: int) -> PiValue:
    """Exact value of the collapsed side at an integer k >= 1, truncating the
    sum at l = min(T, k)."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    total = PiValue.zero(k)
    for l in range(min(identity.T, k) + 1):
        value = identity.terms[l](k)
        if not value:
            continue
        if l == 0:
            total = total + value * zeta_even(k)
        else:
            total = total + value * (zeta_even(l) * zeta_even(k - l))
    return total


def verify_zeta(
    F: MultiPoly, n: int, k: int, identity: WeightedSumIdentity | None = None
) -> CheckResult:
    """Compare the brute-force zeta-product sum against the collapsed side."""
    if identity is None:
        identity = zeta_identity_poly(F, n)
    left = eval_zeta_lhs(F, n, k)
    right = eval_identity_rhs(identity, k)
    return CheckResult(
        ok=left == right,
        label=f"zeta weighted sum F={F.render()} n={n} k={k}",
        lhs=str(left),
        rhs=str(right),
    )
