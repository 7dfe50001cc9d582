import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from corecalc.groebner import (
    Ideal,
    IdealError,
    bracket_power,
    colength,
    generic_linear_sop,
    ideal_combine,
    is_groebner_basis,
    maximal_ideal,
    normal_form,
    power_of_maximal,
    unit_ideal,
)
from corecalc.poly import QQ, PolyRing, PrimeField

F = PrimeField()
S = PolyRing(F, ["x0", "x1", "x2"])
SQ = PolyRing(QQ, ["x0", "x1", "x2"])
XY = PolyRing(F, ["x", "y"])
FOUR = ["x0*x1", "x0*(x0-x2)", "x1*(x1-x2)*(x1+x2)"]


def to_sympy(f, syms):
    return sum(sympy.Rational(str(c)) * sympy.prod([s**e for s, e in zip(syms, m)]) for m, c in f.terms)


def sympy_gb(I, modulus=None):
    syms = sympy.symbols(I.ring.variables)
    kw = {"modulus": modulus} if modulus else {}
    G = sympy.groebner([to_sympy(g, syms) for g in I.gens], *syms, order="grevlex", **kw)
    return syms, G


def test_normal_form_examples():
    assert normal_form(S("x0^2"), [S("x0 - x2")]) == S("x2^2")
    assert normal_form(S("x0"), [S("x0")]).is_zero()
    assert normal_form(S("x1"), [S("x0")]) == S("x1")


def test_gb_examples():
    assert sorted(map(str, Ideal(XY, ["x", "y"]).gb)) == ["x", "y"]
    assert Ideal(XY, []).gb == []
    I = Ideal(S, FOUR)
    assert is_groebner_basis(I.gb)


def test_four_point_gb_matches_sympy():
    I = Ideal(SQ, FOUR)
    syms, G = sympy_gb(I)
    mine = {sympy.expand(to_sympy(g.monic(), syms)) for g in I.gb}
    assert mine == {sympy.expand(g) for g in G.exprs}


forms = st.lists(
    st.dictionaries(st.sampled_from(S.monomials_of_degree(2)), st.integers(-3, 3), min_size=1, max_size=3),
    min_size=1,
    max_size=3,
)


@given(forms)
def test_random_gb_matches_sympy_mod_p(gens):
    polys = [S.from_dict({m: F(c) for m, c in g.items() if c}) for g in gens]
    I = Ideal(S, polys)
    assert is_groebner_basis(I.gb)
    syms, G = sympy_gb(I, modulus=32003)
    # compare leading monomials and membership both ways
    assert len(I.gb) == len(G.exprs)
    for g in G.exprs:
        p = sympy.Poly(g, *syms)
        f = S.from_dict({m: F(int(c)) for m, c in p.terms()})
        assert f in I
    for g in I.gb:
        assert G.contains(to_sympy(g, syms))


def test_membership_examples():
    assert S("x0^2") in Ideal(S, ["x0"])
    assert S("x1") not in Ideal(S, ["x0"])
    assert S("x0^2*x2 - x0^3") in Ideal(S, ["x0*x1", "x0*(x0-x2)"])


def test_combine_examples():
    m = maximal_ideal(XY)
    assert ideal_combine("power", m, 0).is_unit()
    assert ideal_combine("product", Ideal(XY, ["x"]), Ideal(XY, ["y"])) == Ideal(XY, ["x*y"])
    y = XY("y")
    assert Ideal(XY, bracket_power([y], 3)) == Ideal(XY, [y]) ** 3
    with pytest.raises(IdealError):
        ideal_combine("sum", m, Ideal(S, ["x0"]))


@pytest.mark.parametrize("method", ["auto", "elimination"])
def test_intersection_examples(method):
    x, y = Ideal(XY, ["x"]), Ideal(XY, ["y"])
    assert x.intersection(y, method) == Ideal(XY, ["x*y"])
    assert x.intersection(x, method) == x
    assert Ideal(XY, ["x^2", "x*y"]).intersection(y, method) == Ideal(XY, ["x*y"])


def test_quotient_examples():
    assert Ideal(XY, ["x^2"]).quotient(Ideal(XY, ["x"])) == Ideal(XY, ["x"])
    assert Ideal(XY, ["x*y"]).quotient(Ideal(XY, ["x"])) == Ideal(XY, ["y"])
    with pytest.raises(IdealError):
        Ideal(XY, ["x"]).quotient(Ideal(XY, []))


def test_elimination_examples():
    T = PolyRing(F, ["t", "x", "y"])
    assert Ideal(T, ["t*x", "(1-t)*y"]).eliminate(["t"]) == Ideal(T, ["x*y"])
    assert Ideal(T, ["x - y^2"]).eliminate(["x"]).is_zero()
    assert Ideal(T, ["x*y", "x - y"]).eliminate(["x"]) == Ideal(T, ["y^2"])


def test_graded_pieces_and_hilbert():
    m = maximal_ideal(S)
    assert len(m.graded_piece(1)[0]) == 3
    I = Ideal(S, FOUR)
    assert len(I.graded_piece(2)[1]) == 4
    zero = Ideal(S, [])
    basis, std = zero.graded_piece(2)
    assert basis == [] and len(std) == 6
    assert I.hilbert_function(1) == 3 and I.hilbert_function(-1) == 0
    hs = I.hilbert_series()
    assert hs.multiplicity == 4 and hs.dim == 1


def test_hilbert_series_examples():
    assert Ideal(XY, []).hilbert_series().a_invariant == -2
    hs = Ideal(XY, ["x^2", "y^3"]).hilbert_series()
    assert hs.numerator == (1, 2, 2, 1) and hs.dim == 0
    with pytest.raises(IdealError):
        unit_ideal(XY).hilbert_series()


def test_generic_linear_sop():
    I = Ideal(S, FOUR)
    ys = generic_linear_sop(I, random.Random(1))
    assert len(ys) == 1 and (I + Ideal(S, ys)).dim() == 0
    assert generic_linear_sop(Ideal(XY, ["x^2", "y^2"]), random.Random(1)) == []
    with pytest.raises(IdealError):
        generic_linear_sop(unit_ideal(S), random.Random(1))


def test_cm_length_test():
    # lambda(R / linear sop) = e on CM input, larger for two skew lines
    R4 = PolyRing(F, ["x0", "x1", "x2", "x3"])
    rng = random.Random(3)
    I = Ideal(S, FOUR)
    assert colength(I + Ideal(S, generic_linear_sop(I, rng))) == I.multiplicity()
    skew = Ideal(R4, ["x0*x2", "x0*x3", "x1*x2", "x1*x3"])
    assert colength(skew + Ideal(R4, generic_linear_sop(skew, rng))) > skew.multiplicity()


def random_mprimary(rng, ring, k):
    gens = [ring.random_form(rng.randint(1, 3), rng) for _ in range(rng.randint(0, 2))]
    return Ideal(ring, gens) + power_of_maximal(ring, k)


@given(st.integers(0, 10_000))
def test_linear_and_elimination_routes_agree(seed):
    rng = random.Random(seed)
    ring = XY if seed % 2 else S
    I = random_mprimary(rng, ring, 4)
    J = random_mprimary(rng, ring, 3)
    assert I.intersection(J, "linear") == I.intersection(J, "elimination")
    H = Ideal(ring, [ring.random_form(rng.randint(1, 2), rng) for _ in range(2)])
    assert I.quotient(H, "linear") == I.quotient(H, "elimination")


@given(st.integers(0, 10_000))
def test_intersection_and_colon_properties(seed):
    rng = random.Random(seed)
    I = random_mprimary(rng, XY, 3)
    J = Ideal(XY, [XY.random_form(1, rng)])
    K = I.intersection(J)
    assert I.contains(K) and J.contains(K)
    Q = I.quotient(J)
    assert Q.contains(I)
    assert I.contains(Ideal(XY, [f * g for f in Q.gens for g in J.gens]))
