"""A fixed collection of Cohen-Macaulay examples used by the verify suites
and the tests."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .groebner import Ideal
from .points import FOUR_POINTS, PointSet, collinear_plus, conic_points, grid_points
from .poly import PolyRing, PrimeField


@dataclass(frozen=True)
class Example:
    name: str
    kind: str  # points | cone | hypersurface | ci | curve | polyring | artinian
    build: Callable  # field -> Ideal
    reduced: bool = True
    ci: bool = False
    points: Callable | None = None  # field -> PointSet

    def ideal(self, field_=None) -> Ideal:
        return self.build(field_ or PrimeField())


def _ring(field_, n):
    return PolyRing(field_, [f"x{i}" for i in range(n)])


def _from_points(pts):
    return lambda F: PointSet(F, pts).ideal


def _cone(pts):
    def build(F):
        X = PointSet(F, pts)
        R = _ring(F, X.ring.nvars + 1)
        return Ideal(R, [g.change_ring(R, lambda m: m + (0,)) for g in X.ideal.gens])

    return build


def _gens(n, gens):
    return lambda F: Ideal(_ring(F, n), gens)


GENERAL4 = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]
GRID23 = [(x, y, 1) for x in (0, 1, 2) for y in (0, 1)]
GRID22 = [(x, y, 1) for x in (0, 1) for y in (0, 1)]
CONIC5 = [(t * t, t, 1) for t in (1, 2, 3, 4, 5)]
LINE4_PLUS1 = [(0, t, 1) for t in range(4)] + [(1, 0, 1)]


def _pointset(pts):
    return lambda F: PointSet(F, pts)


CORPUS: list[Example] = [
    Example("four-points", "points", _from_points(FOUR_POINTS), points=_pointset(FOUR_POINTS)),
    Example("general-4", "points", _from_points(GENERAL4), ci=True, points=_pointset(GENERAL4)),
    Example("grid-2x3", "points", _from_points(GRID23), ci=True, points=_pointset(GRID23)),
    Example("conic-5", "points", _from_points(CONIC5), points=_pointset(CONIC5)),
    Example("line4-plus-1", "points", _from_points(LINE4_PLUS1), points=_pointset(LINE4_PLUS1)),
    Example("three-lines", "hypersurface", _gens(2, ["x1*(x0-x1)*(x0+x1)"]), ci=True),
    Example("cone-four-points", "cone", _cone(FOUR_POINTS)),
    Example("cone-grid-2x2", "cone", _cone(GRID22), ci=True),
    Example("fermat-cubic", "hypersurface", _gens(3, ["x0^3+x1^3+x2^3"]), ci=True),
    Example("two-quadrics", "ci", _gens(4, ["x0*x1-x2*x3", "x0^2+x1^2-x2^2-x3^2"]), ci=True),
    Example("twisted-cubic", "curve", _gens(4, ["x0*x2-x1^2", "x0*x3-x1*x2", "x1*x3-x2^2"])),
    Example("plane", "polyring", _gens(2, []), ci=True),
]

ARTINIAN: list[Example] = [
    Example("x2-y3", "artinian", _gens(2, ["x0^2", "x1^3"]), reduced=False, ci=True),
    Example("m-squared", "artinian", _gens(2, ["x0^2", "x0*x1", "x1^2"]), reduced=False),
]


def by_name(name: str) -> Example:
    for ex in CORPUS + ARTINIAN:
        if ex.name == name:
            return ex
    raise KeyError(name)


def structured_configurations(field_=None) -> list[tuple[str, PointSet]]:
    """Ten structured point sets: complete intersections (grids, points cut
    by a conic and lines) and collinear subsets with extra points."""
    F = field_ or PrimeField()
    out = [
        ("grid-2x2", grid_points(F, [0, 1], [0, 1])),
        ("grid-2x3", grid_points(F, [0, 1, 2], [0, 1])),
        ("grid-3x3", grid_points(F, [0, 1, 2], [0, 1, 3])),
        ("conic-6", conic_points(F, [1, 2, 3, 4, 5, 6])),
        ("general-4", PointSet(F, GENERAL4)),
        ("four-points", PointSet(F, FOUR_POINTS)),
    ]
    for k, (line, extra) in enumerate([(3, 2), (4, 1), (4, 2), (5, 1)]):
        out.append((f"line{line}-plus-{extra}", collinear_plus(F, line, extra, random.Random(f"structured:{k}"))))
    return out
