"""Polynomial arithmetic and the expression parser."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from evenzeta import MultiPoly, ParseError, UniPoly, parse_poly

X = UniPoly.x()


class TestUniPolyBasics:
    def test_construction_trims_trailing_zeros(self):
        p = UniPoly([1, 2, 0, 0])
        assert p.coeffs == (1, 2)
        assert p.degree() == 1

    def test_zero(self):
        assert UniPoly.zero().is_zero()
        assert UniPoly.zero().degree() == float("-inf")

    def test_leading(self):
        assert (3 * X**2 + X).leading() == 3
        with pytest.raises(ValueError):
            UniPoly.zero().leading()

    def test_coefficient_out_of_range(self):
        assert (X + 1).coefficient(5) == 0

    def test_arithmetic(self):
        p = X**2 - 1
        q = X + 1
        assert p - q * (X - 1) == UniPoly.zero()
        assert (p + q).coefficient(0) == 0
        assert (2 * q) / 2 == q

    def test_pow(self):
        cube = (X - 2) ** 3
        assert cube.coeffs == (-8, 12, -6, 1)
        assert (X**0) == UniPoly.one()

    def test_evaluate(self):
        p = 2 * X**3 - X + Fraction(1, 2)
        assert p(Fraction(1, 2)) == Fraction(1, 4)

    def test_derivative(self):
        p = X**4 + 3 * X
        assert p.derivative() == 4 * X**3 + 3
        assert UniPoly.constant(7).derivative().is_zero()

    def test_shift(self):
        # shift(a) sends p(x) to p(x - a).
        p = X**2
        assert p.shift(1) == X**2 - 2 * X + 1
        assert p.shift(0) == p
        q = 3 * X**3 - X + 5
        for point in range(-3, 4):
            assert q.shift(2)(point) == q(point - 2)

    def test_float_coefficients_rejected(self):
        with pytest.raises(TypeError):
            UniPoly([0.5])

    def test_immutable(self):
        p = X + 1
        with pytest.raises(AttributeError):
            p.coeffs = (9,)

    def test_hashable(self):
        assert len({X + 1, X + 1, X}) == 2


coeffs = st.fractions(
    min_value=Fraction(-9), max_value=Fraction(9), max_denominator=6
)
unipolys = st.lists(coeffs, max_size=5).map(UniPoly)


class TestUniPolyRingLaws:
    @given(unipolys, unipolys, unipolys)
    def test_mul_associative(self, p, q, r):
        assert (p * q) * r == p * (q * r)

    @given(unipolys, unipolys, unipolys)
    def test_distributive(self, p, q, r):
        assert p * (q + r) == p * q + p * r

    @given(unipolys, unipolys)
    def test_mul_commutative(self, p, q):
        assert p * q == q * p

    @given(unipolys, unipolys)
    def test_degree_of_product(self, p, q):
        if not p.is_zero() and not q.is_zero():
            assert (p * q).degree() == p.degree() + q.degree()

    @given(unipolys, unipolys, st.integers(-5, 5))
    def test_evaluation_is_homomorphism(self, p, q, point):
        assert (p * q)(point) == p(point) * q(point)
        assert (p + q)(point) == p(point) + q(point)


class TestMultiPoly:
    def test_variables(self):
        x1 = MultiPoly.variable(3, 1)
        x3 = MultiPoly.variable(3, 3)
        p = x1 * x3 + 2 * x1
        assert p.coefficient((1, 0, 1)) == 1
        assert p.coefficient((1, 0, 0)) == 2
        assert p.coefficient((0, 1, 0)) == 0

    def test_degree(self):
        p = MultiPoly.monomial((2, 3)) + MultiPoly.monomial((4, 0))
        assert p.degree() == 5
        assert MultiPoly.zero(2).degree() == float("-inf")

    def test_monomials_ordered(self):
        p = MultiPoly.monomial((0, 1)) + MultiPoly.monomial((1, 0))
        expts = [e for _, e in p.monomials()]
        assert expts == sorted(expts)

    def test_evaluate(self):
        p = parse_poly("x1^2*x2 + 3", 2)
        assert p.evaluate((2, 5)) == 23

    def test_is_symmetric(self):
        assert parse_poly("x1^2 + x2^2", 2).is_symmetric()
        assert parse_poly("x1*x2", 2).is_symmetric()
        assert not parse_poly("x1^2*x2", 2).is_symmetric()
        assert MultiPoly.constant(4, Fraction(1, 3)).is_symmetric()

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            MultiPoly.variable(2, 1) + MultiPoly.variable(3, 1)

    def test_pow(self):
        p = parse_poly("x1 + x2", 2) ** 2
        assert p == parse_poly("x1^2 + 2*x1*x2 + x2^2", 2)

    def test_render_is_canonical(self):
        p = parse_poly("3/2*x1 - x2", 2)
        assert p.render() == "3/2*x1 - x2"
        assert parse_poly("x2 + x1^2", 2).render() == "x1^2 + x2"
        assert MultiPoly.zero(2).render() == "0"


class TestParser:
    def test_rational_literals(self):
        assert parse_poly("3/4", 1) == MultiPoly.constant(1, Fraction(3, 4))

    def test_precedence(self):
        p = parse_poly("x1 + 2*x1^2", 1)
        assert p.coefficient((1,)) == 1
        assert p.coefficient((2,)) == 2

    def test_parentheses(self):
        assert parse_poly("(x1 + x2)^2", 2) == parse_poly(
            "x1^2 + 2*x1*x2 + x2^2", 2
        )

    def test_unary_minus(self):
        assert parse_poly("-x1 + 1", 1) == parse_poly("1 - x1", 1)

    def test_whitespace_insensitive(self):
        assert parse_poly(" x1 *x2+ 1 ", 2) == parse_poly("x1*x2+1", 2)

    def test_unknown_variable(self):
        with pytest.raises(ParseError) as info:
            parse_poly("x3", 2)
        assert info.value.position == 0

    def test_implicit_multiplication_rejected(self):
        with pytest.raises(ParseError):
            parse_poly("x1 x2", 2)

    def test_unclosed_paren(self):
        with pytest.raises(ParseError):
            parse_poly("(x1 + x2", 2)

    def test_negative_exponent(self):
        with pytest.raises(ParseError):
            parse_poly("x1^-2", 1)

    def test_exponent_cap(self):
        parse_poly("x1^64", 1)
        with pytest.raises(ParseError):
            parse_poly("x1^65", 1)

    def test_zero_denominator(self):
        with pytest.raises(ParseError):
            parse_poly("1/0", 1)

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_poly("", 1)


@st.composite
def multipolys(draw):
    arity = draw(st.integers(1, 3))
    n_terms = draw(st.integers(0, 4))
    terms = {}
    for _ in range(n_terms):
        expts = tuple(draw(st.integers(0, 3)) for _ in range(arity))
        terms[expts] = draw(coeffs)
    return MultiPoly(arity, terms)


class TestRenderRoundTrip:
    @given(multipolys())
    def test_parse_of_render(self, p):
        assert parse_poly(p.render(), p.arity) == p
