"""Reduced point sets in projective space: vanishing ideals, separators,
the conductor, and the Cayley-Bacharach property."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .canonical import Algebra
from .checks import Verdict
from .groebner import Ideal, IdealError, ideal_strings, power_of_maximal
from .linalg import EchelonSpace, kernel, solve
from .poly import PolyRing, Polynomial

log = logging.getLogger(__name__)


class DuplicatePointError(ValueError):
    """Two coordinate vectors name the same projective point."""


def normalize_point(field_, coords: Sequence) -> tuple:
    """Scale so that the last nonzero coordinate is 1."""
    vals = [field_(c) for c in coords]
    nz = [k for k, c in enumerate(vals) if c]
    if not nz:
        raise ValueError("the zero vector is not a projective point")
    inv = field_.inv(vals[nz[-1]])
    return tuple(field_.normalize(c * inv) for c in vals)


class PointSet:
    """Distinct points of P^n over an exact field."""

    def __init__(self, field_, points: Sequence[Sequence], ring: PolyRing | None = None):
        pts = [normalize_point(field_, p) for p in points]
        if not pts:
            raise ValueError("empty point set")
        width = len(pts[0])
        if any(len(p) != width for p in pts):
            raise ValueError("points of different lengths")
        seen = set()
        for p in pts:
            if p in seen:
                raise DuplicatePointError(f"duplicate point {p}")
            seen.add(p)
        self.field = field_
        self.points: tuple = tuple(pts)
        self.n = width - 1
        self.ring = ring or PolyRing(field_, [f"x{i}" for i in range(width)])
        if self.ring.nvars != width:
            raise ValueError("ring and points disagree on the ambient dimension")

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"PointSet({[tuple(self.field.format(c) for c in p) for p in self.points]})"

    def subset(self, indices) -> PointSet:
        return PointSet(self.field, [self.points[k] for k in indices], self.ring)

    def without(self, i: int) -> PointSet:
        return self.subset([k for k in range(len(self)) if k != i])

    def union(self, other: PointSet) -> PointSet:
        return PointSet(self.field, list(self.points) + list(other.points), self.ring)

    # -- evaluation
    def evaluation_rows(self, degree: int) -> list[dict]:
        """For each monomial of the given degree, its values at the points."""
        rows = []
        for m in self.ring.monomials_of_degree(degree):
            row = {}
            for k, p in enumerate(self.points):
                val = self.field.one
                for c, e in zip(p, m):
                    if e:
                        val = self.field.normalize(val * c**e)
                if val:
                    row[k] = val
            rows.append(row)
        return rows

    def hilbert_function(self, degree: int) -> int:
        """Rank of the evaluation map [S]_degree -> k^s."""
        if degree < 0:
            return 0
        space = EchelonSpace(self.field)
        for row in self.evaluation_rows(degree):
            space.add(row)
            if space.dim == len(self):
                break
        return space.dim

    def regularity_index(self) -> int:
        """Least degree where the Hilbert function reaches s."""
        D = 0
        while self.hilbert_function(D) < len(self):
            D += 1
        return D

    def vanishes(self, f: Polynomial) -> bool:
        return all(not f.evaluate(p) for p in self.points)

    # -- ideals
    def point_ideal(self, i: int) -> Ideal:
        p = self.points[i]
        k = max(j for j, c in enumerate(p) if c)
        xk = self.ring.gen(k)
        return Ideal(self.ring, [self.ring.gen(j) - xk * p[j] for j in range(self.n + 1) if j != k])

    @cached_property
    def ideal(self) -> Ideal:
        return vanishing_ideal(self)

    @cached_property
    def algebra(self) -> Algebra:
        return Algebra(self.ideal, 0)

    @cached_property
    def a(self) -> int:
        return self.regularity_index() - 1

    # -- separators
    @cached_property
    def separator_degrees(self) -> list[int]:
        top = self.regularity_index()
        hf = [self.hilbert_function(D) for D in range(top + 1)]
        out = []
        for i in range(len(self)):
            rest = self.without(i) if len(self) > 1 else None
            for D in range(top + 1):
                other = rest.hilbert_function(D) if rest is not None else 0
                if hf[D] - other == 1:
                    out.append(D)
                    break
            else:
                raise AssertionError("no separator found below the regularity index")
        return out

    def separator(self, i: int, degree: int, rng=None) -> Polynomial:
        """A form f of the given degree with f(P_j) = delta_ij; with ``rng``
        a random element of [I_X]_degree is added."""
        monos = self.ring.monomials_of_degree(degree)
        rows = self.evaluation_rows(degree)
        rhs = {i: self.field.one}
        sol = solve(self.field, rows, rhs)
        if sol is None:
            raise AssertionError(f"no separator of degree {degree} for point {i}")
        f = self.ring.from_dict({monos[k]: c for k, c in sol.items()})
        if rng is not None:
            for kv in kernel(self.field, rows):
                c = self.field(self.field.random_element(rng))
                f = f + self.ring.from_dict({monos[k]: c * x for k, x in kv.items()})
        return f

    def minimal_separators(self, rng=None) -> list[Polynomial]:
        seps = [self.separator(i, D, rng) for i, D in enumerate(self.separator_degrees)]
        for i, f in enumerate(seps):
            for j, p in enumerate(self.points):
                want = self.field.one if i == j else 0
                if f.evaluate(p) != want:
                    raise AssertionError("separator fails evaluation check")
        return seps

    def conductor(self, rng=None) -> Ideal:
        """I_X + (f_1, ..., f_s) for minimal separators f_i."""
        return Ideal(self.ring, list(self.ideal.gens) + self.minimal_separators(rng))


def vanishing_ideal(X: PointSet) -> Ideal:
    """Intersection of the point ideals, folded in order."""
    result = X.point_ideal(0)
    for i in range(1, len(X)):
        result = result.intersection(X.point_ideal(i))
    I = result
    if not all(X.vanishes(g) for g in I.gb):
        raise AssertionError("vanishing ideal does not vanish on the points")
    top = X.regularity_index()
    for D in range(top + 2):
        if I.hilbert_function(D) != X.hilbert_function(D):
            raise AssertionError("Hilbert function of the vanishing ideal disagrees with evaluation")
    # spot check: random points off X must not lie on the zero set
    rng = random.Random("spot")
    for _ in range(5):
        q = normalize_point(X.field, [X.field.random_element(rng) for _ in range(X.n)] + [1])
        if q not in X.points and all(not g.evaluate(q) for g in I.gb):
            raise AssertionError(f"vanishing ideal also vanishes at {q}")
    return I


def separator_degrees(X: PointSet) -> list[int]:
    return X.separator_degrees


def minimal_separators(X: PointSet, rng=None) -> list[Polynomial]:
    return X.minimal_separators(rng)


def conductor(X: PointSet, rng=None) -> Ideal:
    """The conductor, checked for m^(a+1) containment and for independence of
    the separator choice."""
    rng = rng or random.Random(0)
    C = X.conductor()
    C2 = X.conductor(rng)
    if C != C2:
        raise AssertionError("conductor depends on the separator choice")
    if not C.contains(power_of_maximal(X.ring, X.a + 1)):
        raise AssertionError("m^(a+1) is not contained in the conductor")
    return C


# --------------------------------------------------------------------------
# core of points and Cayley-Bacharach


@dataclass
class PointsCore:
    core: Ideal
    conductor: Ideal
    by_conductor: Ideal
    by_y_conductor: Ideal
    by_formula: Ideal
    by_oracle: Ideal | None
    oracle_status: str
    agree: bool


def core_of_points(X: PointSet, seed: int = 0, oracle: bool = True) -> PointsCore:
    """core X computed as m*C, y*C, the colon formula and (optionally) the
    intersection oracle; disagreement raises."""
    from .core import OraclePolicy, core_oracle

    A = Algebra(X.ideal, seed)
    C = conductor(X, random.Random(f"{seed}:sep"))
    ring = X.ring
    I = X.ideal
    m_gens = ring.gens
    mC = Ideal(ring, list(I.gens) + [x * f for x in m_gens for f in C.gens])
    yC = Ideal(ring, list(I.gens) + [A.ys[0] * f for f in C.gens])
    formula = A.colon(A.a + 2, A.a + 1)
    orc, status = None, "skipped"
    if oracle:
        res = core_oracle(A, 1, OraclePolicy(), seed=seed)
        orc, status = res.ideal, res.status
    agree = mC == yC == formula and (orc is None or status != "stable" or orc == formula)
    if not agree:
        raise AssertionError("core of points: the computations disagree")
    return PointsCore(formula, C, mC, yC, formula, orc, status, agree)


@dataclass
class CBReport:
    is_CB: bool
    by_definition: bool
    by_separators: bool
    by_core: bool
    separator_degrees: list[int]
    a: int
    core: Ideal
    conductor: Ideal
    agree: bool = field(default=True)

    def as_dict(self) -> dict:
        return {
            "is_CB": self.is_CB,
            "by_definition": self.by_definition,
            "by_separators": self.by_separators,
            "by_core": self.by_core,
            "separator_degrees": self.separator_degrees,
            "a": self.a,
            "core": ideal_strings(self.core),
            "conductor": ideal_strings(self.conductor),
            "agree": self.agree,
        }


def cb_by_definition(X: PointSet) -> bool:
    """All s deleted-point subschemes share one Hilbert function."""
    if len(X) < 2:
        return True
    top = X.regularity_index() + 1
    hfs = {tuple(X.without(i).hilbert_function(D) for D in range(top)) for i in range(len(X))}
    return len(hfs) == 1


def cayley_bacharach(X: PointSet, seed: int = 0, oracle: bool = False, strict: bool = True) -> CBReport:
    """Three independent verdicts; with ``strict`` a disagreement raises,
    otherwise it is recorded in ``agree``."""
    if len(X) < 2:
        raise IdealError("Cayley-Bacharach needs at least two points")
    pc = core_of_points(X, seed, oracle=oracle)
    by_def = cb_by_definition(X)
    degs = X.separator_degrees
    by_sep = len(set(degs)) == 1
    by_core = pc.core == X.algebra.maximal_power(X.a + 2)
    agree = by_def == by_sep == by_core
    if strict and not agree:
        raise AssertionError(f"Cayley-Bacharach verdicts disagree: {by_def}, {by_sep}, {by_core}")
    return CBReport(by_def, by_def, by_sep, by_core, degs, X.a, pc.core, pc.conductor, agree)


def verify_yz(Y: PointSet, Z: PointSet, f: Polynomial, seed: int = 0) -> Verdict:
    """m^(a+2) + f m^e in m^(a+2) + f m^(a'+2) in core X in m^(b+2), X = Y u Z."""
    if not Y.vanishes(f):
        raise IdealError("f does not vanish on Y")
    if not f.is_homogeneous():
        raise IdealError("f must be a form")
    X = Y.union(Z)
    v = Verdict()
    A = Algebra(X.ideal, seed)
    e, a_Z = len(Z), Z.a
    ring = X.ring
    core = A.colon(A.a + 2, A.a + 1)
    low = A.maximal_power(A.a + 2)
    first = low + Ideal(ring, [f * g for g in power_of_maximal(ring, e).gens])
    second = low + Ideal(ring, [f * g for g in power_of_maximal(ring, a_Z + 2).gens])
    v.check("yz first", second.contains(first), e=e, a_Z=a_Z)
    v.check("yz second", core.contains(second), a=A.a)
    v.check("yz third", A.contained_mod_I(core, power_of_maximal(ring, A.b + 2)), b=A.b)
    return v


# --------------------------------------------------------------------------
# configurations


def random_points(field_, n: int, s: int, rng, bound: int | None = None) -> PointSet:
    """s distinct random points of P^n (affine chart x_n = 1)."""
    pts: list = []
    seen = set()
    while len(pts) < s:
        if bound is None:
            p = tuple(field_(field_.random_element(rng)) for _ in range(n)) + (field_.one,)
        else:
            p = tuple(field_(rng.randint(-bound, bound)) for _ in range(n)) + (field_.one,)
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return PointSet(field_, pts)


def grid_points(field_, xs: Sequence[int], ys: Sequence[int]) -> PointSet:
    """The product grid {(x : y : 1)}, a complete intersection of two
    products of lines."""
    return PointSet(field_, [(x, y, 1) for x in xs for y in ys])


def conic_points(field_, params: Sequence[int]) -> PointSet:
    """Points (t^2 : t : 1) on the conic x0*x2 = x1^2."""
    return PointSet(field_, [(t * t, t, 1) for t in params])


def collinear_plus(field_, k: int, extra: int, rng) -> PointSet:
    """k points on the line x0 = 0 plus ``extra`` random points off it."""
    pts = [(0, t, 1) for t in range(k)]
    seen = {normalize_point(field_, p) for p in pts}
    while len(pts) < k + extra:
        p = (rng.randint(1, 50), rng.randint(-50, 50), 1)
        q = normalize_point(field_, p)
        if q not in seen:
            seen.add(q)
            pts.append(p)
    return PointSet(field_, pts)


FOUR_POINTS = [(0, -1, 1), (0, 0, 1), (0, 1, 1), (1, 0, 1)]
