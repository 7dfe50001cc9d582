from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from corecalc.poly import (
    QQ,
    GrevLex,
    Lex,
    ParseError,
    PolyRing,
    PrimeField,
    field_from_spec,
)

F = PrimeField()
S = PolyRing(F, ["x0", "x1", "x2"])
SQ = PolyRing(QQ, ["x0", "x1", "x2"])


def test_parse_monomial_product():
    f = S("x0*x1")
    assert f.as_dict() == {(1, 1, 0): 1}


def test_parse_expands_products_like_sympy(R3):
    f = R3("x1*(x1-x2)*(x1+x2)")
    x1, x2 = sympy.symbols("x1 x2")
    expected = sympy.Poly(sympy.expand(x1 * (x1 - x2) * (x1 + x2)), x1, x2)
    assert f == R3("x1^3 - x1*x2^2")
    assert len(f) == len(expected.terms())


def test_cancellation_gives_zero():
    f = S("x0 - x0")
    assert f.is_zero() and f.terms == ()


@pytest.mark.parametrize("text", ["x3", "x0^", "x0**2", "x0/x1", "(x0", "2x"])
def test_parse_errors(text):
    with pytest.raises(ParseError) as exc:
        S(text)
    assert exc.value.pos is not None or "x3" in text


def test_rational_literals_over_q():
    assert SQ("1/2*x0") == SQ("x0").scale(Fraction(1, 2))


def test_arithmetic_examples():
    assert (S("x0") + S("-x0")).is_zero()
    assert S("x0+x1") * S("x0-x1") == S("x0^2 - x1^2")
    assert S("x0+x1") ** 0 == S.one()


def test_mismatched_rings():
    T = PolyRing(F, ["y"])
    with pytest.raises(ValueError):
        S("x0") + T("y")


def test_evaluate_examples():
    assert S("x0").evaluate((1, 0, 1)) == 1
    assert S("x0*x1").evaluate((0, -1, 1)) == 0
    assert SQ("x1*(x1-x2)").evaluate((0, -1, 1)) == 2
    with pytest.raises(ValueError):
        S("x0").evaluate((1, 2))


def test_prime_field_inverse_and_errors():
    assert F.normalize(F.inv(F(7)) * 7) == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(F(0))
    with pytest.raises(ValueError):
        PrimeField(32004)


@pytest.mark.parametrize("spec", ["q", "fp default", "fp 101"])
def test_field_specs(spec):
    assert field_from_spec(spec).spec() in (spec, "fp 32003")


def test_grevlex_and_lex():
    g, lx = GrevLex(3), Lex(3)
    # x0*x2 vs x1^2: grevlex prefers x1^2, lex prefers x0*x2
    assert g.compare((1, 0, 1), (0, 2, 0)) < 0
    assert lx.compare((1, 0, 1), (0, 2, 0)) > 0
    assert g.compare((1, 1, 0), (1, 1, 0)) == 0
    with pytest.raises(ValueError):
        g.compare((1, 0), (1, 0, 0))


coeffs = st.integers(-20, 20)
monos = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(monos, coeffs, max_size=6).map(
    lambda d: S.from_dict({m: F(c) for m, c in d.items() if F(c)})
)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert (a - a).is_zero()


@given(polys)
def test_print_parse_roundtrip(a):
    assert S(str(a)) == a


@given(polys, st.tuples(*[st.integers(-5, 5)] * 3), st.tuples(*[st.integers(-5, 5)] * 3))
def test_evaluation_is_a_homomorphism(a, p, q):
    b = S.from_dict({m: c for m, c in a.terms[:2]})
    assert F.normalize((a * b).evaluate(p) - a.evaluate(p) * b.evaluate(p)) == 0
    assert F.normalize((a + b).evaluate(q) - a.evaluate(q) - b.evaluate(q)) == 0
