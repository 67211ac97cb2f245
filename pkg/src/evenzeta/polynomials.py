"""Exact polynomial arithmetic over rationals, univariate and multivariate,
plus a parser for polynomial text in variables x1..xn.

``UniPoly`` is dense (a coefficient tuple, low degree first) and is used for
the coefficient polynomials in one variable k.  ``MultiPoly`` is sparse
(exponent tuple -> coefficient) and is used for weight polynomials in the
summation indices.  Both are immutable and hashable, and both reject floats:
only ints and ``Fraction`` values enter.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .rationals import binomial

__all__ = ["NEG_INFINITY", "MultiPoly", "ParseError", "UniPoly", "parse_poly"]

#: Degree reported for the zero polynomial.
NEG_INFINITY = float("-inf")

Scalar = Union[int, Fraction]

#: Largest exponent the parser accepts; keeps pathological inputs from
#: expanding into astronomically many terms.
_MAX_EXPONENT = 64


def _as_rational(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction, got {type(value).__name__}")


class UniPoly:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of x**i; trailing zeros are trimmed, so
    the zero polynomial stores nothing and reports degree NEG_INFINITY.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        stored = [_as_rational(c) for c in coeffs]
        while stored and not stored[-1]:
            stored.pop()
        object.__setattr__(self, "coeffs", tuple(stored))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("UniPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly()

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly((1,))

    @staticmethod
    def constant(value: Scalar) -> "UniPoly":
        return UniPoly((value,))

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly((0, 1))

    @staticmethod
    def monomial(power: int, coeff: Scalar = 1) -> "UniPoly":
        if power < 0:
            raise ValueError(f"monomial power must be >= 0, got {power}")
        return UniPoly((0,) * power + (coeff,))

    # -- inspection --------------------------------------------------------

    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x**i (zero outside the stored range)."""
        if i < 0:
            raise ValueError(f"coefficient index must be >= 0, got {i}")
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "UniPoly | Scalar") -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __sub__(self, other: "UniPoly | Scalar") -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "UniPoly":
        return (-self) + other

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "UniPoly | Scalar") -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            scale = _as_rational(other)
            if not scale:
                return UniPoly()
            return UniPoly(tuple(c * scale for c in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "UniPoly":
        scale = _as_rational(other)
        if not scale:
            raise ZeroDivisionError("polynomial division by zero scalar")
        return self * (Fraction(1) / scale)

    def __pow__(self, exponent: int) -> "UniPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial exponent must be a nonnegative int, got {exponent!r}")
        result = UniPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, point: Scalar) -> Fraction:
        """Evaluate by Horner's rule."""
        x = _as_rational(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, offset: Scalar) -> "UniPoly":
        """Return q with q(x) = p(x - offset), expanded binomially."""
        off = _as_rational(offset)
        if not off or not self.coeffs:
            return self
        out = [Fraction(0)] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            for j in range(i + 1):
                out[j] += c * binomial(i, j) * (-off) ** (i - j)
        return UniPoly(out)

    # -- protocol ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({self._format()!r})"

    def _format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue
            if power == 0:
                body = str(abs(c))
            else:
                head = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{head}{var}" + (f"^{power}" if power > 1 else "")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


class MultiPoly:
    """Sparse multivariate polynomial in variables x1..x(arity).

    Terms are stored as a mapping from exponent tuples (length == arity,
    entries >= 0) to nonzero rational coefficients.
    """

    __slots__ = ("arity", "terms")

    arity: int
    terms: dict[tuple[int, ...], Fraction]

    def __init__(
        self,
        arity: int,
        terms: Mapping[tuple[int, ...], Scalar] | Iterable[tuple[tuple[int, ...], Scalar]] = (),
    ) -> None:
        if arity < 1:
            raise ValueError(f"arity must be >= 1, got {arity}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[tuple[int, ...], Fraction] = {}
        for expts, coeff in items:
            key = tuple(int(e) for e in expts)
            if len(key) != arity:
                raise ValueError(f"exponent tuple {key} does not match arity {arity}")
            if any(e < 0 for e in key):
                raise ValueError(f"exponents must be >= 0, got {key}")
            value = data.get(key, Fraction(0)) + _as_rational(coeff)
            if value:
                data[key] = value
            else:
                data.pop(key, None)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms", data)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(arity: int) -> "MultiPoly":
        return MultiPoly(arity)

    @staticmethod
    def constant(arity: int, value: Scalar) -> "MultiPoly":
        return MultiPoly(arity, {(0,) * arity: value})

    @staticmethod
    def variable(arity: int, index: int) -> "MultiPoly":
        """The variable x{index}, 1-based."""
        if not 1 <= index <= arity:
            raise ValueError(f"variable index must be in 1..{arity}, got {index}")
        expts = tuple(1 if i == index - 1 else 0 for i in range(arity))
        return MultiPoly(arity, {expts: 1})

    @staticmethod
    def monomial(expts: Sequence[int], coeff: Scalar = 1) -> "MultiPoly":
        expts = tuple(expts)
        return MultiPoly(len(expts), {expts: coeff})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | float:
        if not self.terms:
            return NEG_INFINITY
        return max(sum(e) for e in self.terms)

    def monomials(self) -> list[tuple[Fraction, tuple[int, ...]]]:
        """Terms as (coefficient, exponents), exponent tuples in ascending
        lexicographic order."""
        return [(self.terms[e], e) for e in sorted(self.terms)]

    def coefficient(self, expts: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(expts), Fraction(0))

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.arity:
            raise ValueError(f"expected {self.arity} coordinates, got {len(point)}")
        coords = [_as_rational(p) for p in point]
        acc = Fraction(0)
        for expts, coeff in self.terms.items():
            term = coeff
            for base, power in zip(coords, expts):
                if power:
                    term *= base**power
            acc += term
        return acc

    def is_symmetric(self) -> bool:
        """True when invariant under every permutation of the variables.

        It suffices to test the adjacent transpositions, which generate the
        whole symmetric group.
        """
        for pos in range(self.arity - 1):
            for expts, coeff in self.terms.items():
                swapped = list(expts)
                swapped[pos], swapped[pos + 1] = swapped[pos + 1], swapped[pos]
                if self.terms.get(tuple(swapped)) != coeff:
                    return False
        return True

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other: "MultiPoly | Scalar") -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other.arity != self.arity:
                raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.arity, other)
        return None

    def __add__(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        data = dict(self.terms)
        for expts, coeff in rhs.terms.items():
            value = data.get(expts, Fraction(0)) + coeff
            if value:
                data[expts] = value
            else:
                data.pop(expts, None)
        return MultiPoly(self.arity, data)

    __radd__ = __add__

    def __sub__(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Scalar) -> "MultiPoly":
        return (-self) + other

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            scale = _as_rational(other)
            if not scale:
                return MultiPoly(self.arity)
            return MultiPoly(self.arity, {e: c * scale for e, c in self.terms.items()})
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        data: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in rhs.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                value = data.get(key, Fraction(0)) + c1 * c2
                if value:
                    data[key] = value
                else:
                    data.pop(key, None)
        return MultiPoly(self.arity, data)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial exponent must be a nonnegative int, got {exponent!r}")
        result = MultiPoly.constant(self.arity, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        """Canonical text accepted back by ``parse_poly``.

        Monomials appear in descending lexicographic order of exponent
        tuples, the usual display convention (x1^2 before x2).
        """
        if not self.terms:
            return "0"
        pieces: list[tuple[str, str]] = []
        for coeff, expts in reversed(self.monomials()):
            factors = []
            for index, power in enumerate(expts, start=1):
                if power == 1:
                    factors.append(f"x{index}")
                elif power > 1:
                    factors.append(f"x{index}^{power}")
            magnitude = abs(coeff)
            if factors and magnitude == 1:
                body = "*".join(factors)
            elif factors:
                body = "*".join([str(magnitude), *factors])
            else:
                body = str(magnitude)
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        text = body if sign == "+" else f"-{body}"
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    # -- protocol ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(("MultiPoly", self.arity, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"MultiPoly({self.arity}, {self.render()!r})"


class ParseError(ValueError):
    """Polynomial text rejected; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


_Token = tuple[str, object, int]  # kind, value, position


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(("int", int(text[start:i]), start))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(("name", text[start:i], start))
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over the grammar

        expr    := ('+' | '-')? term (('+' | '-') term)*
        term    := factor ('*' factor)*
        factor  := primary ('^' INT)?
        primary := INT ('/' INT)? | VARIABLE | '(' expr ')'

    with VARIABLE one of x1..xn.  There is no implicit multiplication.
    """

    def __init__(self, text: str, arity: int) -> None:
        if arity < 1:
            raise ValueError(f"arity must be >= 1, got {arity}")
        self.tokens = _tokenize(text)
        self.pos = 0
        self.arity = arity

    def _peek(self) -> _Token:
        return self.tokens[self.pos]

    def _next(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def parse(self) -> MultiPoly:
        poly = self._expr()
        kind, value, position = self._peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", position)
        return poly

    def _expr(self) -> MultiPoly:
        negate = False
        if self._peek()[0] in "+-":
            negate = self._next()[0] == "-"
        poly = self._term()
        if negate:
            poly = -poly
        while self._peek()[0] in "+-":
            op = self._next()[0]
            rhs = self._term()
            poly = poly + rhs if op == "+" else poly - rhs
        return poly

    def _term(self) -> MultiPoly:
        poly = self._factor()
        while self._peek()[0] == "*":
            self._next()
            poly = poly * self._factor()
        return poly

    def _factor(self) -> MultiPoly:
        base = self._primary()
        if self._peek()[0] != "^":
            return base
        self._next()
        kind, value, position = self._next()
        if kind != "int":
            raise ParseError("expected a nonnegative integer exponent", position)
        assert isinstance(value, int)
        if value > _MAX_EXPONENT:
            raise ParseError(f"exponent {value} exceeds the limit {_MAX_EXPONENT}", position)
        return base**value

    def _primary(self) -> MultiPoly:
        kind, value, position = self._next()
        if kind == "int":
            assert isinstance(value, int)
            if self._peek()[0] == "/":
                self._next()
                dkind, dvalue, dposition = self._next()
                if dkind != "int":
                    raise ParseError("expected an integer denominator", dposition)
                assert isinstance(dvalue, int)
                if dvalue == 0:
                    raise ParseError("zero denominator", dposition)
                return MultiPoly.constant(self.arity, Fraction(value, dvalue))
            return MultiPoly.constant(self.arity, value)
        if kind == "name":
            assert isinstance(value, str)
            body = value[1:]
            if value.startswith("x") and body.isdigit() and 1 <= int(body) <= self.arity:
                return MultiPoly.variable(self.arity, int(body))
            raise ParseError(f"unknown variable {value!r} (expected x1..x{self.arity})", position)
        if kind == "(":
            poly = self._expr()
            ckind, _, cposition = self._next()
            if ckind != ")":
                raise ParseError("expected ')'", cposition)
            return poly
        raise ParseError("expected a number, a variable, or '('", position)


def parse_poly(text: str, arity: int) -> MultiPoly:
    """Parse polynomial text over the variables x1..x{arity}.

    Accepted syntax: integer and a/b rational literals, variables x1..xn,
    the operators + - * ^, and parentheses.  Multiplication is always
    explicit.  Malformed input raises ``ParseError`` with the offset of the
    offending token.
    """
    return _Parser(text, arity).parse()
