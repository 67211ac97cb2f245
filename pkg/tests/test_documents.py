"""Serialization of identity documents: JSON round-trip, text, LaTeX."""

import json
from fractions import Fraction

import pytest

from evenzeta import (
    MultiPoly,
    UniPoly,
    bernoulli_identity,
    document_from_identity,
    from_json,
    mzsv_identity,
    mzv_identity,
    parse_poly,
    poly_latex,
    poly_text,
    to_json,
    to_latex,
    to_text,
    zeta_identity_monomial,
)

K = UniPoly.x()


def sample_documents():
    F4 = MultiPoly.constant(4, 1)
    sq = parse_poly("x1^2 + x2^2 + x3^2 + x4^2", 4)
    return [
        document_from_identity(bernoulli_identity((0, 0, 0, 0))),
        document_from_identity(bernoulli_identity((2, 0))),
        document_from_identity(zeta_identity_monomial((3, 0, 0, 0))),
        document_from_identity(mzv_identity(F4, 4)),
        document_from_identity(mzsv_identity(sq, 4)),
    ]


class TestJsonRoundTrip:
    def test_all_kinds(self):
        for doc in sample_documents():
            assert from_json(to_json(doc)) == doc

    def test_payload_shape(self):
        doc = document_from_identity(mzv_identity(MultiPoly.constant(4, 1), 4))
        payload = json.loads(to_json(doc))
        assert payload["schema"] == 1
        assert payload["kind"] == "mzv"
        assert payload["n"] == 4
        assert payload["T"] == 1
        assert payload["poly"] == "1"
        assert payload["mvec"] is None
        assert payload["terms"][0] == {"l": 0, "coeffs": ["35/64"]}
        assert payload["terms"][1] == {"l": 1, "coeffs": ["-5/16"]}

    def test_coefficients_never_floats(self):
        for doc in sample_documents():
            payload = json.loads(to_json(doc))
            for term in payload["terms"]:
                for coeff in term["coeffs"]:
                    assert isinstance(coeff, str)
                    Fraction(coeff)  # parses exactly

    def test_deterministic(self):
        doc = document_from_identity(bernoulli_identity((1, 0)))
        assert to_json(doc) == to_json(doc)


class TestFromJsonValidation:
    def good_payload(self):
        doc = document_from_identity(bernoulli_identity((1, 0)))
        return json.loads(to_json(doc))

    def test_wrong_schema(self):
        payload = self.good_payload()
        payload["schema"] = 99
        with pytest.raises(ValueError):
            from_json(json.dumps(payload))

    def test_unknown_kind(self):
        payload = self.good_payload()
        payload["kind"] = "shuffle"
        with pytest.raises(ValueError):
            from_json(json.dumps(payload))

    def test_bad_coefficient_string(self):
        payload = self.good_payload()
        payload["terms"][0]["coeffs"] = ["0.5"]
        with pytest.raises(ValueError):
            from_json(json.dumps(payload))

    def test_term_order_enforced(self):
        payload = self.good_payload()
        payload["terms"] = list(reversed(payload["terms"]))
        if len(payload["terms"]) > 1:
            with pytest.raises(ValueError):
                from_json(json.dumps(payload))


class TestPolyText:
    def test_cleared_denominator_form(self):
        assert poly_text((4 * K**3 + 12 * K**2 + 11 * K + 3) / 24) == (
            "(4k^3 + 12k^2 + 11k + 3)/24"
        )
        assert poly_text(-2 * K / 3) == "-2k/3"
        assert poly_text(UniPoly.constant(Fraction(35, 64))) == "35/64"
        assert poly_text(UniPoly.zero()) == "0"
        assert poly_text(K) == "k"

    def test_latex_fraction_form(self):
        assert poly_latex(UniPoly.constant(Fraction(35, 64))) == "\\frac{35}{64}"
        assert poly_latex(2 * K) == "2k"


class TestTextRendering:
    def test_header_and_signs(self):
        doc = document_from_identity(mzv_identity(MultiPoly.constant(4, 1), 4))
        text = to_text(doc)
        assert "kind   : mzv" in text
        assert "rhs    = 35/64 * zeta(2k)" in text
        assert "- 5/16 * zeta(2)*zeta(2k-2)" in text

    def test_bernoulli_basis_labels(self):
        doc = document_from_identity(bernoulli_identity((0, 0, 0, 0)))
        text = to_text(doc)
        assert "B(2k)/(2k)!" in text
        assert "B(2k-2)/(2k-2)!" in text


class TestLatexRendering:
    def test_printed_display(self):
        doc = document_from_identity(mzv_identity(MultiPoly.constant(4, 1), 4))
        latex = to_latex(doc)
        assert "\\frac{35}{64}\\zeta(2k)" in latex
        assert "-\\frac{5}{16}\\zeta(2)\\zeta(2k-2)" in latex

    def test_unit_coefficient_suppressed(self):
        # zeta kind, n = 1, m = 0: single term with coefficient 1.
        doc = document_from_identity(zeta_identity_monomial((0,)))
        latex = to_latex(doc)
        assert "1\\zeta" not in latex

    def test_deterministic(self):
        for doc in sample_documents():
            assert to_latex(doc) == to_latex(doc)
            assert to_text(doc) == to_text(doc)
