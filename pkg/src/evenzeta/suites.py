"""Verification grids behind the ``verify`` command.

Each suite runs a family of exact checks and reports pass/fail/skip counts
plus the first failure in full.  Grids iterate in a fixed order and any
random sampling is seeded, so identical invocations produce identical
reports.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .bernoulli_sums import bernoulli_identity, truncation_depth, verify_bernoulli
from .checks import CheckResult
from .derivative_tables import c_coeffs, d_coeffs, f_table, g_table
from .mzv_identities import mzsv_identity, mzv_identity, verify_mzv
from .polynomials import MultiPoly, UniPoly, parse_poly
from .quasi_shuffle import is_admissible, sbar, star, verify_symmetric_sum
from .rationals import bernoulli, factorial
from .zeta_identities import WeightedSumIdentity, verify_zeta, zeta_identity_monomial

__all__ = [
    "SUITE_NAMES",
    "SuiteReport",
    "bernoulli_suite",
    "mzv_suite",
    "run_suites",
    "tables_suite",
    "words_suite",
    "zeta_suite",
]

SUITE_NAMES = ("tables", "bernoulli", "zeta", "mzv", "words")

#: Bounds accepted by the suites; larger grids grow combinatorially.
MAX_N = 5
MAX_K = 16


@dataclass
class SuiteReport:
    suite: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    first_failure: CheckResult | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def add(self, result: CheckResult) -> None:
        if result.ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = result

    def check(self, ok: bool, label: str, detail: str = "") -> None:
        self.add(CheckResult(ok=ok, label=label, lhs=detail, rhs=""))

    def skip(self, count: int = 1) -> None:
        self.skipped += count

    def as_dict(self) -> dict:
        failure = None
        if self.first_failure is not None:
            failure = {
                "label": self.first_failure.label,
                "lhs": self.first_failure.lhs,
                "rhs": self.first_failure.rhs,
            }
        return {
            "suite": self.suite,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "ok": self.ok,
            "first_failure": failure,
        }

    def summary_line(self) -> str:
        return (
            f"suite={self.suite} passed={self.passed} failed={self.failed} "
            f"skipped={self.skipped} ok={'yes' if self.ok else 'no'}"
        )


def _validate_bounds(max_n: int, max_k: int) -> None:
    if not 1 <= max_n <= MAX_N:
        raise ValueError(f"--max-n must be in 1..{MAX_N}, got {max_n}")
    if not 1 <= max_k <= MAX_K:
        raise ValueError(f"--max-k must be in 1..{MAX_K}, got {max_k}")


def _exponent_tuples(length: int, total_cap: int) -> Iterator[tuple[int, ...]]:
    """Every tuple of ``length`` exponents >= 0 with sum <= total_cap."""
    if length == 0:
        yield ()
        return
    for first in range(total_cap + 1):
        for rest in _exponent_tuples(length - 1, total_cap - first):
            yield (first, *rest)


def tables_suite(max_depth: int = 12) -> SuiteReport:
    """Structural invariants of the derivative tables up to ``max_depth``."""
    if not 0 <= max_depth <= 20:
        raise ValueError(f"table depth must be in 0..20, got {max_depth}")
    report = SuiteReport("tables")
    fs = f_table(max_depth)
    gs = g_table(max_depth)
    cs = c_coeffs(max_depth)
    ds = d_coeffs(max_depth)
    t = UniPoly.x()
    half_t = UniPoly((0, Fraction(1, 2)))
    for m in range(max_depth + 1):
        expected_head = half_t - 1 if m == 0 else half_t
        report.check(fs.entry(m, 0) == expected_head, f"f[{m},0] equals t/2 - delta")
        diag = UniPoly.constant((-1) ** m * factorial(m))
        report.check(fs.entry(m, m + 1) == diag, f"f[{m},{m + 1}] equals (-1)^m m!")
        alternating = UniPoly.zero()
        for i in range(1, m + 2):
            entry = fs.entry(m, i)
            report.check(
                all(c.denominator == 1 for c in entry.coeffs),
                f"f[{m},{i}] has integer coefficients",
            )
            report.check(entry.degree() == m + 1 - i, f"f[{m},{i}] has degree m+1-i")
            report.check(
                (-1) ** m * entry.leading() > 0,
                f"f[{m},{i}] leading sign is (-1)^m",
            )
            alternating = alternating + (-1) ** (i - 1) * entry * UniPoly.monomial(i - 1)
        report.check(alternating == UniPoly.one(), f"row {m} alternating sum is 1")
        report.check(
            gs.entry(m, m + 1) == UniPoly.constant(Fraction((-1) ** m, factorial(m))),
            f"g[{m},{m + 1}] equals (-1)^m/m!",
        )
        for i in range(1, m + 2):
            report.check(gs.entry(m, i).degree() <= m + 1 - i, f"g[{m},{i}] degree bound")
        # the two triangles invert each other columnwise
        for i in range(1, m + 2):
            acc = UniPoly.zero()
            for j in range(i, m + 2):
                acc = acc + fs.entry(m, j) * gs.entry(j - 1, i)
            expected = UniPoly.one() if i == m + 1 else UniPoly.zero()
            report.check(acc == expected, f"inverse relation at ({m},{i})")
        # extreme coefficients: recursion values match direct extraction
        report.check(cs[m][0] == Fraction(1, 2), f"c[{m},0] equals 1/2")
        for i in range(1, m + 2):
            report.check(
                cs[m][i] == fs.entry(m, i).leading(), f"c[{m},{i}] matches extraction"
            )
            report.check(
                ds[m][i - 1] == gs.entry(m, i).coefficient(m + 1 - i),
                f"d[{m},{i}] matches extraction",
            )
        report.check(cs[m][1] == (-1) ** m, f"c[{m},1] equals (-1)^m")
        report.check(ds[m][0] == (-1) ** m, f"d[{m},1] equals (-1)^m")
        alt_sum = sum(((-1) ** (i - 1)) * cs[m][i] for i in range(1, m + 2))
        report.check(alt_sum == (1 if m == 0 else 0), f"row {m} alternating c-sum")
    return report


def _identity_degree_ok(terms: Sequence[UniPoly], r: int, n: int) -> bool:
    return all(
        poly.degree() <= r + n - 2 * l - 1 for l, poly in enumerate(terms) if not poly.is_zero()
    )


def bernoulli_suite(max_n: int = 4, max_k: int = 12, max_weight: int = 3) -> SuiteReport:
    """Brute-force verification grid for the Bernoulli-product identities.

    Every exponent tuple with n <= max_n and sum <= max_weight, every
    k <= max_k; combinations with k < n are reported as skipped.
    """
    _validate_bounds(max_n, max_k)
    report = SuiteReport("bernoulli")
    for n in range(1, max_n + 1):
        for mvec in _exponent_tuples(n, max_weight):
            identity = bernoulli_identity(mvec)
            report.check(
                identity.T == truncation_depth(mvec), f"T formula for m={mvec}"
            )
            report.check(
                _identity_degree_ok(identity.rhs, sum(mvec), n),
                f"degree bounds for m={mvec}",
            )
            for k in range(1, max_k + 1):
                if k < n:
                    report.skip()
                    continue
                report.add(verify_bernoulli(mvec, k, identity=identity))
    return report


def _converted_from_bernoulli(mvec: tuple[int, ...]) -> tuple[UniPoly, ...]:
    """Second path to the zeta identity: rescale the Bernoulli identity.

    terms[l] = (-1)^n * 2^(2-n) * (2l)!/B_{2l} * rhs[l], with the l = 0 entry
    further multiplied by zeta(0) = -1/2.
    """
    base = bernoulli_identity(mvec)
    n = len(mvec)
    out = []
    for l, poly in enumerate(base.rhs):
        scale = Fraction((-1) ** n) * Fraction(2) ** (2 - n) * factorial(2 * l) / bernoulli(2 * l)
        if l == 0:
            scale = scale * Fraction(-1, 2)
        out.append(poly * scale)
    return tuple(out)


def zeta_suite(max_n: int = 4, max_k: int = 12, max_weight: int = 3) -> SuiteReport:
    """Verification grid for single-zeta identities over the same exponents.

    Checks the brute-force sums, the degree bounds, and agreement between the
    direct construction and the rescaled Bernoulli identity.
    """
    _validate_bounds(max_n, max_k)
    report = SuiteReport("zeta")
    for n in range(1, max_n + 1):
        for mvec in _exponent_tuples(n, max_weight):
            identity = zeta_identity_monomial(mvec)
            report.check(
                identity.terms == _converted_from_bernoulli(mvec),
                f"two construction paths agree for m={mvec}",
            )
            report.check(
                _identity_degree_ok(identity.terms, sum(mvec), n),
                f"degree bounds for m={mvec}",
            )
            weight = MultiPoly.monomial(mvec)
            for k in range(1, max_k + 1):
                if k < n:
                    report.skip()
                    continue
                report.add(verify_zeta(weight, n, k, identity=identity))
    return report


def _weight_family(n: int) -> list[tuple[str, MultiPoly]]:
    """The symmetric weights exercised by the mzv suite, per depth."""
    power_sums = [
        ("1", "1"),
        ("sum xi", " + ".join(f"x{i}" for i in range(1, n + 1))),
        ("sum xi^2", " + ".join(f"x{i}^2" for i in range(1, n + 1))),
        ("sum xi^3", " + ".join(f"x{i}^3" for i in range(1, n + 1))),
        (
            "sum xi*xj",
            " + ".join(
                f"x{i}*x{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)
            )
            or "0",
        ),
    ]
    return [(label, parse_poly(text, n)) for label, text in power_sums]


def mzv_suite(max_n: int = 4, max_k: int = 10) -> SuiteReport:
    """Cross-check the multiple-zeta pipeline against the independent
    evaluator for both kinds, over a fixed family of symmetric weights."""
    _validate_bounds(max_n, max_k)
    report = SuiteReport("mzv")
    for n in range(1, max_n + 1):
        for label, weight in _weight_family(n):
            for star_flag, build in ((False, mzv_identity), (True, mzsv_identity)):
                identity: WeightedSumIdentity = build(weight, n)
                kind = identity.kind
                report.check(
                    _identity_degree_ok(identity.terms, int(max(weight.degree(), 0)), n),
                    f"degree bounds for {kind} F={label} n={n}",
                )
                for k in range(1, max_k + 1):
                    if k < n:
                        report.skip()
                        continue
                    report.add(verify_mzv(weight, n, k, star=star_flag, identity=identity))
    return report


def words_suite(max_n: int = 4, max_letter: int = 3) -> SuiteReport:
    """Word-algebra checks: the symmetric-sum expansions for every letter
    multiset, plus seeded commutativity/associativity/admissibility spot
    checks of both products."""
    if not 1 <= max_n <= 6:
        raise ValueError(f"--max-n must be in 1..6 for words, got {max_n}")
    if not 1 <= max_letter <= 6:
        raise ValueError(f"letter bound must be in 1..6, got {max_letter}")
    report = SuiteReport("words")
    for depth in range(1, max_n + 1):
        for kvec in itertools.combinations_with_replacement(range(1, max_letter + 1), depth):
            report.add(verify_symmetric_sum(kvec))
    rng = random.Random(20250819)

    def random_word(min_first: int = 1) -> tuple[int, ...]:
        length = rng.randint(0, 3)
        letters = [rng.randint(1, 4) for _ in range(length)]
        if letters and letters[0] < min_first:
            letters[0] = min_first
        return tuple(letters)

    for _ in range(60):
        u, v = random_word(), random_word()
        report.check(star(u, v) == star(v, u), f"star commutes on {u}, {v}")
        report.check(sbar(u, v) == sbar(v, u), f"sbar commutes on {u}, {v}")
    for _ in range(30):
        u, v, w = random_word(), random_word(), random_word()
        report.check(
            star(star(u, v), w) == star(u, star(v, w)),
            f"star associates on {u}, {v}, {w}",
        )
        report.check(
            sbar(sbar(u, v), w) == sbar(u, sbar(v, w)),
            f"sbar associates on {u}, {v}, {w}",
        )
    for _ in range(30):
        u, v = random_word(min_first=2), random_word(min_first=2)
        report.check(
            is_admissible(star(u, v)) and is_admissible(sbar(u, v)),
            f"products of admissible words stay admissible on {u}, {v}",
        )
    return report


def run_suites(names: Sequence[str], max_n: int = 4, max_k: int = 10) -> list[SuiteReport]:
    """Run the named suites (in the canonical order) with shared bounds."""
    chosen = []
    for name in SUITE_NAMES:
        if name in names:
            chosen.append(name)
    unknown = set(names) - set(SUITE_NAMES)
    if unknown:
        raise ValueError(f"unknown suite names: {sorted(unknown)}")
    reports = []
    for name in chosen:
        if name == "tables":
            reports.append(tables_suite())
        elif name == "bernoulli":
            reports.append(bernoulli_suite(max_n=max_n, max_k=max_k))
        elif name == "zeta":
            reports.append(zeta_suite(max_n=max_n, max_k=max_k))
        elif name == "mzv":
            reports.append(mzv_suite(max_n=max_n, max_k=max_k))
        elif name == "words":
            reports.append(words_suite(max_n=min(max_n, 6)))
    return reports
