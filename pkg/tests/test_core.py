import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corecalc import core as K
from corecalc.canonical import Algebra, NotCohenMacaulay
from corecalc.corpus import CORPUS
from corecalc.groebner import Ideal, IdealError, maximal_ideal, power_of_maximal
from corecalc.points import FOUR_POINTS, PointSet, random_points
from corecalc.poly import PolyRing, PrimeField

F = PrimeField()
S = PolyRing(F, ["x0", "x1", "x2"])
XY = PolyRing(F, ["x", "y"])
FOUR = ["x0*x1", "x0*(x0-x2)", "x1*(x1-x2)*(x1+x2)"]


@pytest.fixture(scope="module")
def four():
    return Algebra(Ideal(S, FOUR), 0)


@pytest.fixture(scope="module")
def plane():
    return Algebra(Ideal(XY, []), 0)


def test_formula_examples(four, plane):
    assert K.core_formula(plane, 1, second_seed=9).ideal == maximal_ideal(XY)
    X = PolyRing(F, ["x"])
    line = Algebra(Ideal(X, []), 0)
    assert K.core_formula(line, 2).ideal == Ideal(X, ["x^2"])
    res = K.core_formula(four, 1, second_seed=1)
    assert res.agreement
    assert res.ideal == four.maximal_power(3) + four.lift([S("x0^2")])


def test_formula_errors():
    R4 = PolyRing(F, ["x0", "x1", "x2", "x3"])
    with pytest.raises(NotCohenMacaulay):
        K.core_formula(Algebra(Ideal(R4, ["x0*x2", "x0*x3", "x1*x2", "x1*x3"]), 0))
    with pytest.raises(IdealError):
        K.core_formula(Algebra(Ideal(XY, ["x^2", "y^2"]), 0))


def test_oracle_examples(four, plane):
    res = K.core_oracle(plane, 1, seed=3)
    assert res.status == K.STABLE and res.ideal == maximal_ideal(XY)
    res = K.core_oracle(four, 1, seed=3)
    assert res.status == K.STABLE and res.ideal == K.core_formula(four).ideal


def test_oracle_cap_reports_inconclusive(four):
    res = K.core_oracle(four, 1, K.OraclePolicy(stable=30, max_rounds=4), seed=0)
    assert res.status == K.INCONCLUSIVE and res.rounds == 4


def test_gorenstein_points_core_is_a_power():
    X = PointSet(F, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    A = X.algebra
    assert K.core_oracle(A, 1, seed=1).ideal == A.maximal_power(A.a + 2)


def test_mprimary_oracle_examples(plane):
    m = maximal_ideal(XY)
    assert K.core_mprimary_oracle(plane, m) == m
    core2 = K.core_mprimary_oracle(plane, power_of_maximal(XY, 2), seed=2)
    assert core2.contains(K.core_formula(plane, 2).ideal)
    assert core2 == power_of_maximal(XY, 3)
    with pytest.raises(IdealError):
        K.core_mprimary_oracle(plane, Ideal(XY, ["x"]))


def test_local_containment_examples(four):
    Z = PointSet(F, FOUR_POINTS[3:])
    v = K.verify_local_containment(four, Ideal(S, ["x0"]), Z.ideal)
    assert v.passed and v.checks[0].params["e"] == 1
    # L = 0 is contained trivially
    assert K.verify_local_containment(four, Ideal(S, []), Ideal(S, [])).passed
    with pytest.raises(IdealError):
        Y = PointSet(F, FOUR_POINTS[:3])
        K.verify_local_containment(four, Ideal(S, ["x0"]), Y.ideal)


def test_local_containment_with_general_q(four):
    Z = PointSet(F, FOUR_POINTS[3:])
    Q = power_of_maximal(S, 2)
    v = K.verify_local_containment(four, Ideal(S, ["x0"]), Z.ideal, Q)
    assert v.passed and v.checks[0].params["e"] == 2


@pytest.mark.parametrize("ex", [e for e in CORPUS if e.kind in ("points", "hypersurface", "ci")], ids=lambda e: e.name)
def test_structure_on_corpus(ex):
    A = Algebra(ex.ideal(), 0)
    assert K.verify_core_structure(A, 1, ex.reduced).passed


def test_level_ring_core_is_power():
    A = Algebra(Ideal(S, ["x0^2 - x1*x2", "x1^2 - x0*x2"]), 0)
    for n in (1, 2):
        assert K.core_formula(A, n).ideal == A.maximal_power(n * A.d + A.a + 1)


@settings(max_examples=8)
@given(st.integers(0, 10**6))
def test_formula_in_sampled_parameter_ideals(seed):
    rng = random.Random(seed)
    A = Algebra(random_points(F, 2, rng.randint(3, 6), rng).ideal, seed)
    assert K.oracle_contains_formula_check(A, 1, 10, seed).passed
    assert K.core_formula(A, 1, second_seed=seed + 1).agreement
