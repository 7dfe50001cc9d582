"""Hilbert series of standard graded quotients from their monomial ideals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _poly_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _trim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


@lru_cache(maxsize=20000)
def _numerator(gens: frozenset) -> tuple:
    """K-polynomial of S/M: HS(S/M) = N(t) / (1-t)^nvars."""
    gens = _minimalize(gens)
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return (0,)
    nvars = len(gens[0])
    counts = [0] * nvars
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    i = max(range(nvars), key=lambda k: counts[k])
    if counts[i] <= 1:
        # pairwise coprime generators
        out = [1]
        for g in gens:
            d = sum(g)
            f = [0] * (d + 1)
            f[0], f[d] = 1, -1
            out = _poly_mul(out, f)
        return tuple(_trim(out))
    unit = tuple(1 if k == i else 0 for k in range(nvars))
    plus = [g for g in gens if not g[i]] + [unit]
    colon = [tuple(e - 1 if k == i and e else e for k, e in enumerate(g)) for g in gens]
    left = _numerator(frozenset(plus))
    right = (0,) + _numerator(frozenset(colon))
    return tuple(_trim(_poly_add(left, right)))


@dataclass(frozen=True)
class HilbertSeries:
    """H(t) = numerator(t) / (1 - t)^dim with numerator(1) != 0."""

    numerator: tuple
    dim: int

    @property
    def multiplicity(self) -> int:
        return sum(self.numerator)

    @property
    def a_invariant(self) -> int:
        """deg h - dim; the a-invariant when the ring is Cohen-Macaulay."""
        return len(self.numerator) - 1 - self.dim

    def function(self, degree: int) -> int:
        if degree < 0:
            return 0
        d = self.dim
        if d == 0:
            return self.numerator[degree] if degree < len(self.numerator) else 0
        return sum(
            h * comb(degree - i + d - 1, d - 1)
            for i, h in enumerate(self.numerator)
            if i <= degree
        )

    def expansion(self, upto: int) -> list[int]:
        return [self.function(k) for k in range(upto + 1)]


def hilbert_series_of_monomials(gens, nvars: int) -> HilbertSeries:
    """Hilbert series of S/(gens) for monomial generators (exponent tuples)."""
    num = list(_numerator(frozenset(tuple(g) for g in gens))) if gens else [1]
    if not any(num):
        raise ValueError("Hilbert series of the zero ring (unit ideal)")
    k = 0
    # divide by (1 - t) while it vanishes at t = 1
    while sum(num) == 0:
        q = []
        acc = 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = _trim(q)
        k += 1
    return HilbertSeries(tuple(num), nvars - k)
