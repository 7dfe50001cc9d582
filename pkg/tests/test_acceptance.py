"""Acceptance criteria 1-8, one test each.  All comparisons are exact."""

import json
import random
import time

import pytest

from corecalc import core as K
from corecalc.canonical import Algebra, lower_bound_check
from corecalc.checks import Verdict
from corecalc.corpus import CORPUS, structured_configurations
from corecalc.groebner import Ideal, ideal_strings, power_of_maximal
from corecalc.points import FOUR_POINTS, PointSet, cayley_bacharach, conductor, random_points
from corecalc.poly import QQ, PrimeField
from corecalc.suites import SUITES, Context, random_H, run_suite, split_instances

FP = PrimeField()
IDENTITY_SUITES = ["puv22", "colon1", "thm-omega", "ann-omega", "ann-omega-dim1", "omegacontainment", "colon-structure"]
GIVEN_SEPARATORS = ["x1*(x1-x2)", "(x0-x1-x2)*(x1-x2)", "x1*(x1+x2)", "x0"]


def four_point_results(field_):
    X = PointSet(field_, FOUR_POINTS)
    A = X.algebra
    core = K.core_formula(A, 1, second_seed=1).ideal
    C = conductor(X, random.Random(0))
    rep = cayley_bacharach(X, 0, oracle=True)
    return X, A, core, C, rep


def _failures(v):
    return [c.as_dict() for c in v.failures]


@pytest.fixture(scope="module")
def corpus_contexts():
    out = []
    for ex in CORPUS:
        pts = ex.points(FP) if ex.points else None
        out.append((ex, Context(ex.ideal(FP), seed=0, reduced=ex.reduced, points=pts)))
    return out


@pytest.mark.parametrize("field_", [FP, QQ], ids=["fp", "q"])
def test_criterion_1_four_point_golden(field_):
    start = time.perf_counter()
    X, A, core, C, rep = four_point_results(field_)
    elapsed = time.perf_counter() - start
    r = X.ring
    assert A.a == 1
    expected_core = Ideal(r, list(X.ideal.gens) + ["x0^2"]) + power_of_maximal(r, 3)
    assert ideal_strings(core) == ideal_strings(expected_core)
    assert C == Ideal(r, list(X.ideal.gens) + GIVEN_SEPARATORS)
    assert rep.is_CB is False and rep.by_definition is False and rep.by_separators is False and rep.by_core is False
    assert elapsed < 1.0, f"{elapsed:.2f}s"


def test_criterion_2_formula_vs_oracle():
    start = time.perf_counter()
    disagreements = []
    for k in range(25):
        rng = random.Random(f"criterion2:{k}")
        X = random_points(FP, 2, rng.randint(4, 8), rng)
        A = Algebra(X.ideal, k)
        for n in (1, 2):
            f = K.core_formula(A, n).ideal
            o = K.core_oracle(A, n, K.OraclePolicy(), seed=k)
            if o.status != K.STABLE or o.ideal != f:
                disagreements.append((k, n, o.status))
    elapsed = time.perf_counter() - start
    assert disagreements == []
    assert elapsed < 120.0, f"{elapsed:.1f}s"


def test_criterion_3_cb_triple_equivalence():
    configs = []
    for k in range(25):
        rng = random.Random(f"criterion3:{k}")
        configs.append((f"random{k}", random_points(FP, 2, rng.randint(3, 8), rng)))
    configs += structured_configurations(FP)
    assert len(configs) == 35
    bad = []
    verdicts = set()
    for name, X in configs:
        rep = cayley_bacharach(X, 0, oracle=True, strict=False)
        verdicts.add(rep.is_CB)
        if not rep.agree:
            bad.append(name)
    assert bad == []
    assert verdicts == {True, False}


def test_criterion_4_identity_suites(corpus_contexts):
    assert len(corpus_contexts) >= 10
    assert sum(1 for ex, _ in corpus_contexts if ex.kind == "cone") >= 1
    assert {ctx.A.d for _, ctx in corpus_contexts} >= {1, 2}
    bad = {}
    dim1_checked = 0
    for ex, ctx in corpus_contexts:
        assert ctx.A.is_cm
        for name in IDENTITY_SUITES:
            v = run_suite(name, ctx)
            if not v.passed:
                bad[(ex.name, name)] = _failures(v)[:3]
            if name == "ann-omega-dim1" and ctx.A.d == 1:
                assert v.count("pass") > 0
                dim1_checked += 1
    assert bad == {}
    assert dim1_checked == sum(1 for _, ctx in corpus_contexts if ctx.A.d == 1)


def test_criterion_5_colonmax2_on_level(corpus_contexts):
    level = [(ex, ctx) for ex, ctx in corpus_contexts if ctx.A.is_level]
    assert all(ctx.A.is_level for ex, ctx in corpus_contexts if ex.ci)
    assert len(level) >= 5
    bad = []
    for ex, ctx in level:
        A = ctx.A
        for i, j in A.sample_grid():
            if A.colon(i, j) != A.maximal_power(i - j + A.a + A.d):
                bad.append((ex.name, i, j))
    assert bad == []


def test_criterion_6_degree_bounds(corpus_contexts):
    # 20 random (R, H) pairs for the lower bound
    rng = random.Random("criterion6")
    pairs = 0
    failures = []
    for k in range(20):
        ex, ctx = corpus_contexts[k % len(corpus_contexts)]
        H = random_H(ctx.A.ring, rng, count=1)[0]
        v = Verdict()
        lower_bound_check(ctx.A, H[1], v, H[0])
        pairs += 1
        failures += _failures(v)
    assert pairs == 20
    # the full bounds suite: alpha bound on reduced examples, d = 1 point bound
    applicable = 0
    for ex, ctx in corpus_contexts:
        v = run_suite("bounds", ctx)
        failures += _failures(v)
        applicable += v.count("pass")
    assert failures == []
    assert applicable > 0


def test_criterion_7_core_structure_and_local(corpus_contexts):
    bad = []
    for ex, ctx in corpus_contexts:
        for name in ("core-ann", "indeg-a-d"):
            v = run_suite(name, ctx)
            if not v.passed:
                bad.append((ex.name, name, _failures(v)))
    assert bad == []
    # ten split instances, the first Y = collinear triple, Z = (1:0:1), f = x0
    four = PointSet(FP, FOUR_POINTS)
    instances = [(four, four.subset([0, 1, 2]), four.subset([3]), four.ring("x0"))]
    for X in (PointSet(FP, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]), structured_configurations(FP)[1][1]):
        for Y, Z, f in split_instances(X):
            instances.append((X, Y, Z, f))
    instances = instances[:10]
    assert len(instances) == 10
    for X, Y, Z, f in instances:
        A = Algebra(X.ideal, 0)
        v = K.verify_local_containment(A, Ideal(X.ring, [f]), Z.ideal)
        assert v.passed, _failures(v)


def test_criterion_8_determinism_and_fields():
    def run_all(seed):
        X = PointSet(FP, FOUR_POINTS)
        ctx = Context(X.ideal, seed=seed, reduced=True, points=X)
        return json.dumps({name: run_suite(name, ctx).as_list() for name in SUITES}, sort_keys=True)

    assert run_all(4) == run_all(4)
    cone = next(ex for ex in CORPUS if ex.name == "cone-four-points")
    runs = [
        json.dumps(run_suite("colon-structure", Context(cone.ideal(FP), seed=2)).as_list(), sort_keys=True)
        for _ in range(2)
    ]
    assert runs[0] == runs[1]
    _, Afp, core_fp, C_fp, rep_fp = four_point_results(FP)
    _, Aq, core_q, C_q, rep_q = four_point_results(QQ)
    assert (Afp.a, Afp.b, Afp.c, Afp.type) == (Aq.a, Aq.b, Aq.c, Aq.type)
    assert ideal_strings(core_fp) == ideal_strings(core_q)
    assert ideal_strings(C_fp) == ideal_strings(C_q)
    assert rep_fp.as_dict() == rep_q.as_dict()
