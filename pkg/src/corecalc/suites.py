"""Named verification suites, each a function of a :class:`Context`
returning a :class:`Verdict`."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property

from . import canonical as C
from . import core as K
from .canonical import Algebra
from .checks import Verdict
from .groebner import Ideal, IdealError, power_of_maximal
from .points import PointSet, cayley_bacharach, conductor, verify_yz


@dataclass
class Context:
    I: Ideal
    seed: int = 0
    n: int = 1
    cutoff: int | None = None
    reduced: bool = False
    points: PointSet | None = None
    grid: list | None = None
    _cache: dict = field(default_factory=dict)

    @cached_property
    def A(self) -> Algebra:
        return Algebra(self.I, self.seed)

    def sample_grid(self) -> list[tuple[int, int]]:
        return self.grid if self.grid is not None else self.A.sample_grid(self.n)

    def cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]


def _needs_positive_dim(ctx: Context, v: Verdict, name: str) -> bool:
    if ctx.A.d == 0:
        v.skip(name, "needs dim R >= 1")
        return False
    return True


def _needs_points(ctx: Context, v: Verdict, name: str) -> bool:
    if ctx.points is None:
        v.skip(name, "needs a point set")
        return False
    return True


def _grid_suite(fn, name):
    def run(ctx: Context) -> Verdict:
        v = Verdict()
        ctx.A.require_cm()
        if not _needs_positive_dim(ctx, v, name):
            return v
        for i, j in ctx.sample_grid():
            v.extend(fn(ctx, i, j))
        return v

    return run


def _omega(ctx, i, j):
    v = C.verify_omega_colons(ctx.A, i, j, ctx.cutoff)
    if i == j:
        v.extend(C.verify_equal_exponents(ctx.A, i))
    return v


def _containment(ctx, i, j):
    v = C.verify_omegacontainment(ctx.A, i, j, ctx.cutoff)
    A = ctx.A
    if A.d == 1 and ctx.reduced and i >= j >= A.a + 1:
        module = C.containment_sides(A, i, j, ctx.cutoff)[1]
        v.check("=indim1 module equality", module, i=i, j=j)
    return v


def suite_ann_omega(ctx: Context) -> Verdict:
    v = Verdict()
    A = ctx.A
    A.require_cm()
    if not _needs_positive_dim(ctx, v, "ann of omega"):
        return v
    j = A.a + A.d
    for t in range(-A.a - 1, -A.b + 1):
        v.extend(ctx.cached(("ann", t), lambda t=t: C.verify_ann_formula(A, t, j, ctx.cutoff)))
    v.extend(C.verify_faithful_equivalences(A))
    return v


def suite_ann_omega_dim1(ctx: Context) -> Verdict:
    v = Verdict()
    A = ctx.A
    A.require_cm()
    if A.d != 1:
        v.skip("ann of omega dim1", "needs dim R = 1")
        return v
    j = A.a + A.d
    for t in range(-A.a - 1, -A.b + 1):
        full = ctx.cached(("ann", t), lambda t=t: C.verify_ann_formula(A, t, j, ctx.cutoff))
        v.checks.extend(c for c in full.checks if "dim1" in c.name)
    return v


def suite_core_vs_oracle(ctx: Context) -> Verdict:
    v = Verdict()
    A = ctx.A
    if not _needs_positive_dim(ctx, v, "core vs oracle"):
        return v
    f = K.core_formula(A, ctx.n, second_seed=ctx.seed + 1)
    v.check("core independent of sop", bool(f.agreement), n=ctx.n)
    o = K.core_oracle(A, ctx.n, K.OraclePolicy(), seed=ctx.seed)
    if o.status == K.INCONCLUSIVE:
        v.skip("formula = oracle", "oracle inconclusive", n=ctx.n, rounds=o.rounds)
    else:
        v.check("formula = oracle", o.ideal == f.ideal, n=ctx.n, rounds=o.rounds)
    v.extend(K.oracle_contains_formula_check(A, ctx.n, 50, ctx.seed))
    return v


def _structure(ctx: Context) -> Verdict:
    return ctx.cached(("structure", ctx.n), lambda: K.verify_core_structure(ctx.A, ctx.n, ctx.reduced))


def suite_core_ann(ctx: Context) -> Verdict:
    v = Verdict()
    if not _needs_positive_dim(ctx, v, "core-ann"):
        return v
    v.checks.extend(c for c in _structure(ctx).checks if not c.name.startswith("indeg"))
    return v


def suite_indeg(ctx: Context) -> Verdict:
    v = Verdict()
    if not _needs_positive_dim(ctx, v, "indeg=a+d"):
        return v
    v.checks.extend(c for c in _structure(ctx).checks if c.name.startswith("indeg"))
    return v


def suite_coreands(ctx: Context) -> Verdict:
    v = Verdict()
    if not _needs_points(ctx, v, "coreandS"):
        return v
    X, A = ctx.points, ctx.A
    Cd = conductor(X, random.Random(f"{ctx.seed}:sep"))
    ring = X.ring
    for j in (A.a + 1, A.a + 2):
        for i in (j, j + 1, j + 2):
            mono = power_of_maximal(ring, i - j).gens if i > j else [ring.one()]
            rhs = A.lift([m * f for m in mono for f in Cd.gens])
            v.check("coreandS", A.colon(i, j) == rhs, i=i, j=j)
    return v


def suite_points_cb(ctx: Context) -> Verdict:
    v = Verdict()
    if not _needs_points(ctx, v, "points-cb"):
        return v
    X = ctx.points
    if len(X) < 2:
        v.skip("cb triple agreement", "needs at least two points")
        return v
    rep = cayley_bacharach(X, ctx.seed, oracle=True, strict=False)
    v.check(
        "cb triple agreement",
        rep.agree,
        f"definition {rep.by_definition}, separators {rep.by_separators}, core {rep.by_core}",
        is_CB=rep.is_CB,
    )
    degs = rep.separator_degrees
    v.check("max separator degree = a+1", max(degs) == X.a + 1, degrees=degs, a=X.a)
    A = X.algebra
    v.check("m^(a+1) in conductor", rep.conductor.contains(A.maximal_power(X.a + 1)))
    for i in range(len(X)):
        rest = X.without(i)
        if len(rest) > 1:
            ok = max(rest.separator_degrees) == rest.a + 1
            v.check("max separator degree after deletion = a+1", ok, deleted=i)
    return v


def split_instances(X: PointSet, limit: int | None = None) -> list[tuple[PointSet, PointSet, object]]:
    """(Y, Z, f): Z one point, f a minimal separator of that point, plus a
    half split with f of least degree in I_Y."""
    out = []
    seps = X.minimal_separators()
    for i in range(len(X)):
        out.append((X.without(i), X.subset([i]), seps[i]))
    if len(X) >= 4:
        half = len(X) // 2
        Y, Z = X.subset(range(half)), X.subset(range(half, len(X)))
        f = min(Y.ideal.gb, key=lambda g: (g.degree(), str(g)))
        out.append((Y, Z, f))
    return out if limit is None else out[:limit]


def _needs_split(ctx: Context, v: Verdict, name: str) -> bool:
    if not _needs_points(ctx, v, name):
        return False
    if len(ctx.points) < 2:
        v.skip(name, "needs at least two points")
        return False
    return True


def suite_yz(ctx: Context) -> Verdict:
    v = Verdict()
    if not _needs_split(ctx, v, "yz"):
        return v
    for Y, Z, f in split_instances(ctx.points):
        v.extend(verify_yz(Y, Z, f, ctx.seed))
    return v


def suite_local(ctx: Context) -> Verdict:
    v = Verdict()
    if not _needs_split(ctx, v, "local"):
        return v
    A, ring = ctx.A, ctx.points.ring
    for k, (Y, Z, f) in enumerate(split_instances(ctx.points)):
        L = Ideal(ring, [f])
        v.extend(K.verify_local_containment(A, L, Z.ideal, None, ctx.n, ctx.seed))
        if k == 0:
            Q = power_of_maximal(ring, 2)
            v.extend(K.verify_local_containment(A, L, Z.ideal, Q, 1, ctx.seed))
    return v


def random_H(ring, rng, count: int = 2) -> list[tuple[str, Ideal]]:
    """Homogeneous ideals generated by one to three random forms of degree
    one or two, plus m^k for small k."""
    out = []
    for k in range(count):
        gens = [ring.random_form(rng.randint(1, 2), rng) for _ in range(rng.randint(1, 3))]
        out.append((f"random{k}", Ideal(ring, gens)))
    for k in (1, 2):
        out.append((f"m^{k}", power_of_maximal(ring, k)))
    return out


def suite_bounds(ctx: Context) -> Verdict:
    A = ctx.A
    A.require_cm()
    rng = random.Random(f"{ctx.seed}:bounds")
    Hs = random_H(A.ring, rng)
    points_H = []
    if ctx.points is not None and len(ctx.points) >= 2:
        X = ctx.points
        for i in range(len(X)):
            points_H.append((f"I_Z(point {i})", X.subset([i]).ideal))
        if len(X) >= 3:
            points_H.append(("I_Z(first two)", X.subset([0, 1]).ideal))
        Hs += points_H
    return C.verify_degree_bounds(A, Hs, ctx.reduced, points_H)


SUITES = {
    "puv22": _grid_suite(lambda c, i, j: C.verify_puv22(c.A, i, j), "puv22"),
    "colon1": _grid_suite(lambda c, i, j: C.verify_colon1(c.A, i, j), "colon1"),
    "thm-omega": _grid_suite(_omega, "thm-omega"),
    "ann-omega": suite_ann_omega,
    "ann-omega-dim1": suite_ann_omega_dim1,
    "omegacontainment": _grid_suite(_containment, "omegacontainment"),
    "colon-structure": _grid_suite(lambda c, i, j: C.verify_colon_structure(c.A, i, j), "colon-structure"),
    "core-vs-oracle": suite_core_vs_oracle,
    "core-ann": suite_core_ann,
    "indeg-a-d": suite_indeg,
    "coreandS": suite_coreands,
    "points-cb": suite_points_cb,
    "yz": suite_yz,
    "local": suite_local,
    "bounds": suite_bounds,
}


def run_suite(name: str, ctx: Context) -> Verdict:
    try:
        fn = SUITES[name]
    except KeyError:
        raise IdealError(f"unknown suite {name!r}") from None
    return fn(ctx)
