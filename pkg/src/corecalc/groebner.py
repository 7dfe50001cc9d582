"""Buchberger's algorithm and the ideal operations built on it.

The engine uses the normal selection strategy (smallest lcm in the grading,
ties by the monomial order) and the Gebauer-Moeller criteria.  Intersections
and quotients go through one tag variable; the tag gets grading weight 0 so
homogeneous inputs stay homogeneous in the original variables.
"""

from __future__ import annotations

import heapq
import logging
from functools import cached_property
from typing import Iterable, Sequence

from .hilbert import HilbertSeries, hilbert_series_of_monomials
from .linalg import EchelonSpace, kernel
from .poly import BlockOrder, PolyRing, Polynomial, mono_divides, mono_lcm

log = logging.getLogger(__name__)


class IdealError(ValueError):
    """Invalid ideal operation (colon by zero, non-homogeneous input, ...)."""


def _mask(m) -> int:
    b = 0
    for i, e in enumerate(m):
        if e:
            b |= 1 << i
    return b


def _nf_terms(terms, basis: Sequence[Polynomial], ring: PolyRing) -> list:
    """Full normal form of ``terms`` modulo a list of monic polynomials.

    Returns the remainder as a term list sorted descending.
    """
    key = ring.order.key
    p = ring.field.p
    lms = [g.terms[0][0] for g in basis]
    masks = [_mask(m) for m in lms]
    tails = [g.terms[1:] for g in basis]
    nb = len(basis)
    work: dict = {}
    heap = []
    for m, c in terms:
        if c:
            work[m] = c
            heap.append((-key(m), m))
    heapq.heapify(heap)
    rem = []
    push = heapq.heappush
    pop = heapq.heappop
    while heap:
        m = pop(heap)[1]
        c = work.pop(m, None)
        if not c:
            continue
        mm = _mask(m)
        for i in range(nb):
            if masks[i] & ~mm:
                continue
            lm = lms[i]
            if all(a <= b for a, b in zip(lm, m)):
                q = tuple(b - a for a, b in zip(lm, m))
                for gm, gc in tails[i]:
                    t = tuple(x + y for x, y in zip(gm, q))
                    v = work.get(t)
                    if v is None:
                        v = -c * gc
                        push(heap, (-key(t), t))
                    else:
                        v = v - c * gc
                    work[t] = v % p if p else v
                break
        else:
            rem.append((m, c))
    return rem


def normal_form(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Remainder of ``f`` on division by ``basis`` (any nonzero polynomials)."""
    ring = f.ring
    monic = []
    for g in basis:
        if g.ring != ring:
            raise IdealError("mismatched rings")
        if not g:
            raise IdealError("division by the zero polynomial")
        monic.append(g.monic())
    return Polynomial(ring, tuple(_nf_terms(f.terms, monic, ring)))


def _spoly_terms(f: Polynomial, g: Polynomial, p: int) -> dict:
    """S-polynomial of two monic polynomials, leading terms cancelled."""
    lcm = mono_lcm(f.lm, g.lm)
    qf = tuple(a - b for a, b in zip(lcm, f.lm))
    qg = tuple(a - b for a, b in zip(lcm, g.lm))
    d: dict = {}
    for m, c in f.terms[1:]:
        d[tuple(x + y for x, y in zip(m, qf))] = c
    for m, c in g.terms[1:]:
        t = tuple(x + y for x, y in zip(m, qg))
        v = d.get(t, 0) - c
        d[t] = v % p if p else v
    return d


def buchberger(polys: Iterable[Polynomial], ring: PolyRing) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``polys``."""
    order = ring.order
    key = order.key
    weights = order.weights
    p = ring.field.p

    def wdeg(m):
        return sum(w * e for w, e in zip(weights, m))

    basis: list[Polynomial] = []
    lms: list = []
    active: set[int] = set()
    pairs: list[tuple[int, int]] = []

    def update(ih: int):
        nonlocal pairs, active
        mh = lms[ih]
        cands = sorted(active)
        kept = []
        while cands:
            ig = cands.pop()
            mg = lms[ig]
            lhg = mono_lcm(mh, mg)
            coprime = not any(a and b for a, b in zip(mh, mg))
            if coprime:
                kept.append(ig)
                continue
            if any(mono_divides(mono_lcm(mh, lms[ip]), lhg) for ip in cands):
                continue
            if any(mono_divides(mono_lcm(mh, lms[ip]), lhg) for ip in kept):
                continue
            kept.append(ig)
        new_pairs = [
            (ig, ih) for ig in kept if any(a and b for a, b in zip(mh, lms[ig]))
        ]
        old = []
        for i, j in pairs:
            l12 = mono_lcm(lms[i], lms[j])
            if (
                not mono_divides(mh, l12)
                or mono_lcm(lms[i], mh) == l12
                or mono_lcm(lms[j], mh) == l12
            ):
                old.append((i, j))
        pairs = old + new_pairs
        active = {ig for ig in active if not mono_divides(mh, lms[ig])}
        active.add(ih)

    def add(h: Polynomial):
        basis.append(h)
        lms.append(h.lm)
        update(len(basis) - 1)

    start = sorted(
        (f.monic() for f in polys if f),
        key=lambda f: (wdeg(f.lm), key(f.lm)),
    )
    for f in start:
        r = _nf_terms(f.terms, [basis[i] for i in sorted(active)], ring)
        if r:
            add(Polynomial(ring, tuple(r)).monic())
            if not any(r[0][0]):
                pairs = []
                active = {len(basis) - 1}
                break

    while pairs:
        best = min(
            range(len(pairs)),
            key=lambda k: (
                wdeg(mono_lcm(lms[pairs[k][0]], lms[pairs[k][1]])),
                key(mono_lcm(lms[pairs[k][0]], lms[pairs[k][1]])),
                pairs[k],
            ),
        )
        i, j = pairs.pop(best)
        s = _spoly_terms(basis[i], basis[j], p)
        if not any(s.values()):
            continue
        s_items = sorted(((m, c) for m, c in s.items() if c), key=lambda t: key(t[0]), reverse=True)
        r = _nf_terms(s_items, [basis[k] for k in sorted(active)], ring)
        if r:
            h = Polynomial(ring, tuple(r)).monic()
            add(h)
            if not any(h.lm):
                # unit ideal
                pairs = []
                active = {len(basis) - 1}

    g = [basis[i] for i in sorted(active)]
    return _interreduce(g, ring)


def _interreduce(g: list[Polynomial], ring: PolyRing) -> list[Polynomial]:
    key = ring.order.key
    out = []
    for idx, f in enumerate(g):
        others = g[:idx] + g[idx + 1 :]
        tail = _nf_terms(f.terms[1:], others, ring)
        out.append(Polynomial(ring, (f.terms[0],) + tuple(tail)))
    out.sort(key=lambda f: key(f.lm), reverse=True)
    return out


def is_groebner_basis(basis: Sequence[Polynomial]) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    if not basis:
        return True
    ring = basis[0].ring
    monic = [b.monic() for b in basis]
    key = ring.order.key
    for i in range(len(monic)):
        for j in range(i + 1, len(monic)):
            s = _spoly_terms(monic[i], monic[j], ring.field.p)
            items = sorted(((m, c) for m, c in s.items() if c), key=lambda t: key(t[0]), reverse=True)
            if _nf_terms(items, monic, ring):
                return False
    return True


# --------------------------------------------------------------------------
# ideals


def _tag_ring(ring: PolyRing) -> PolyRing:
    name = "tag"
    while name in ring.variables:
        name += "_"
    order = BlockOrder(ring.nvars + 1, 1, block_weight=0)
    return PolyRing(ring.field, (name,) + ring.variables, order)


class Ideal:
    """A polynomial ideal with a lazily computed reduced Groebner basis."""

    def __init__(self, ring: PolyRing, gens: Iterable = ()):
        self.ring = ring
        gl = []
        for g in gens:
            g = ring(g)
            if g:
                gl.append(g)
        self.gens: tuple[Polynomial, ...] = tuple(gl)

    @classmethod
    def from_gb(cls, ring: PolyRing, gb: Sequence[Polynomial]) -> Ideal:
        I = cls(ring, gb)
        I.__dict__["gb"] = list(gb)
        return I

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.gens]})"

    @cached_property
    def gb(self) -> list[Polynomial]:
        return buchberger(self.gens, self.ring)

    @cached_property
    def homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def _check(self, other: Ideal):
        if other.ring != self.ring:
            raise IdealError("mismatched rings")

    # -- membership and comparison
    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of f modulo the reduced Groebner basis."""
        if self.homogeneous and self.gens:
            return self._reduce_by_table(f)
        return Polynomial(self.ring, tuple(_nf_terms(f.terms, self.gb, self.ring)))

    def __contains__(self, f) -> bool:
        f = self.ring(f)
        return not self.reduce(f)

    def monomial_normal_forms(self, degree: int) -> dict:
        """Normal forms of all monomials of one degree, as sparse dicts.

        Monomials are processed in increasing order, so rewriting a
        non-standard monomial m = lm(g)*q by -tail(g)*q only meets monomials
        whose normal forms are already known.
        """
        tables = self.__dict__.setdefault("_nf_tables", {})
        table = tables.get(degree)
        if table is not None:
            return table
        ring = self.ring
        norm = ring.field.normalize
        gb = self.gb
        lms = [(g.lm, _mask(g.lm), g) for g in gb]
        table = {}
        for m in reversed(ring.monomials_of_degree(degree)):
            mm = _mask(m)
            for lm, mask, g in lms:
                if mask & ~mm == 0 and all(a <= b for a, b in zip(lm, m)):
                    q = tuple(b - a for a, b in zip(lm, m))
                    acc: dict = {}
                    for t, c in g.terms[1:]:
                        for k, x in table[tuple(u + v for u, v in zip(t, q))].items():
                            acc[k] = norm(acc.get(k, 0) - c * x)
                    table[m] = {k: x for k, x in acc.items() if x}
                    break
            else:
                table[m] = {m: ring.field.one}
        tables[degree] = table
        return table

    def _reduce_by_table(self, f: Polynomial) -> Polynomial:
        if self.is_unit():
            return self.ring.zero()
        norm = self.ring.field.normalize
        acc: dict = {}
        for m, c in f.terms:
            for k, x in self.monomial_normal_forms(sum(m))[m].items():
                acc[k] = norm(acc.get(k, 0) + c * x)
        return self.ring.from_dict({k: x for k, x in acc.items() if x})

    def contains(self, other: Ideal) -> bool:
        self._check(other)
        return all(g in self for g in other.gens)

    def __le__(self, other: Ideal) -> bool:
        return other.contains(self)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self._gb_key() == other._gb_key()

    def __hash__(self):
        return hash(self._gb_key())

    def _gb_key(self):
        return tuple(g.terms for g in self.gb)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gb) == 1 and not any(self.gb[0].lm)

    # -- arithmetic
    def __add__(self, other: Ideal) -> Ideal:
        self._check(other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: Ideal) -> Ideal:
        self._check(other)
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def __pow__(self, n: int) -> Ideal:
        if n <= 0:
            return unit_ideal(self.ring)
        result = self
        for _ in range(n - 1):
            result = result * self
            result = Ideal(self.ring, _dedupe(result.gens))
        return result

    def is_m_primary(self) -> bool:
        """Homogeneous and of finite colength (dim S/I = 0); false for (1)."""
        return self.homogeneous and not self.is_unit() and self.dim() == 0

    def socle_degree_bound(self) -> int:
        """For m-primary I: the least D with [S/I]_D = 0, so m^D ⊆ I."""
        return len(self._series.numerator)

    def intersection(self, other: Ideal, method: str = "auto") -> Ideal:
        """I ∩ J.

        ``elimination`` eliminates the tag t from t*I + (1 - t)*J;
        ``linear`` intersects graded pieces and needs both ideals m-primary.
        ``auto`` takes the degreewise route whenever it applies.
        """
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring)
        if self.is_unit():
            return other
        if other.is_unit():
            return self
        if method == "auto":
            method = "linear" if self.is_m_primary() and other.is_m_primary() else "elimination"
        if method == "linear":
            result = self._intersection_linear(other)
        elif method == "elimination":
            result = self._intersection_elimination(other)
        else:
            raise ValueError(f"unknown intersection method {method!r}")
        if self.homogeneous and other.homogeneous and not result.homogeneous:
            raise AssertionError("intersection of homogeneous ideals is not homogeneous")
        return result

    def _intersection_elimination(self, other: Ideal) -> Ideal:
        ring = self.ring
        T = _tag_ring(ring)
        t = T.gen(0)
        lift = lambda m: (0,) + m  # noqa: E731
        gens = [t * g.change_ring(T, lift) for g in self.gb]
        gens += [(1 - t) * g.change_ring(T, lift) for g in other.gb]
        gb = buchberger(gens, T)
        out = [
            g.change_ring(ring, lambda m: m[1:]) for g in gb if all(m[0] == 0 for m, _ in g.terms)
        ]
        return Ideal(ring, out)

    def _intersection_linear(self, other: Ideal) -> Ideal:
        if not (self.is_m_primary() and other.is_m_primary()):
            raise IdealError("degreewise intersection needs m-primary ideals")
        ring = self.ring
        top = max(self.socle_degree_bound(), other.socle_degree_bound())
        pieces = {}
        for d in range(top):
            basis, _ = other.graded_piece(d)
            images = [self.reduce(b).as_dict() for b in basis]
            space = EchelonSpace(ring.field, pivot_key=ring.order.key)
            for kv in kernel(ring.field, images):
                vec: dict = {}
                for k, c in kv.items():
                    for m, x in basis[k].terms:
                        vec[m] = ring.field.normalize(vec.get(m, 0) + c * x)
                space.add(vec)
            pieces[d] = space
        return ideal_from_pieces(ring, pieces, top)

    def quotient_element(self, h: Polynomial) -> Ideal:
        """I : (h) = (I ∩ (h)) / h, through the tag-variable intersection."""
        h = self.ring(h)
        if not h:
            raise IdealError("colon by the zero ideal")
        if h in self:
            return unit_ideal(self.ring)
        inter = self.intersection(Ideal(self.ring, [h]), method="elimination")
        return Ideal(self.ring, [g.exact_div(h) for g in inter.gens])

    def quotient(self, other: Ideal, method: str = "auto") -> Ideal:
        """I : J.

        ``elimination`` intersects I : g over the generators g of J;
        ``linear`` solves for each degree the linear conditions f*g ∈ I and
        needs I m-primary and J homogeneous.
        """
        self._check(other)
        if other.is_zero():
            raise IdealError("colon by the zero ideal")
        if method == "auto":
            method = "linear" if other.homogeneous and self.is_m_primary() else "elimination"
        if method == "linear":
            result = self._quotient_linear(other)
        elif method == "elimination":
            result = self._quotient_elimination(other)
        else:
            raise ValueError(f"unknown quotient method {method!r}")
        if self.homogeneous and other.homogeneous and not result.homogeneous:
            raise AssertionError("colon of homogeneous ideals is not homogeneous")
        return result

    def _quotient_elimination(self, other: Ideal) -> Ideal:
        result = None
        for h in other.gens:
            q = self.quotient_element(h)
            result = q if result is None else result.intersection(q, method="elimination")
            if result == self:
                break
        return result

    def _quotient_linear(self, other: Ideal) -> Ideal:
        if not self.is_m_primary() or not other.homogeneous:
            raise IdealError("degreewise colon needs an m-primary ideal and a homogeneous divisor")
        ring = self.ring
        if other.is_unit():
            return self
        top = self.socle_degree_bound()
        divisors = [g for g in other.gens]
        low = min(g.degree() for g in divisors)
        bound = max(top - low, 0)
        def nf_mono(m):
            return self.monomial_normal_forms(sum(m))[m]

        pieces = {}
        norm = ring.field.normalize
        for d in range(bound):
            basis, std = self.graded_piece(d)
            space = EchelonSpace(ring.field, pivot_key=ring.order.key)
            for b in basis:
                space.add(b.as_dict())
            if std:
                images = []
                for b in std:
                    img: dict = {}
                    for gi, g in enumerate(divisors):
                        for gm, gc in g.terms:
                            prod = tuple(x + y for x, y in zip(gm, b))
                            for mm, c in nf_mono(prod).items():
                                k = (gi, mm)
                                img[k] = norm(img.get(k, 0) + gc * c)
                    images.append({k: c for k, c in img.items() if c})
                for kv in kernel(ring.field, images):
                    space.add({std[k]: c for k, c in kv.items()})
            pieces[d] = space
        return ideal_from_pieces(ring, pieces, bound)

    def eliminate(self, drop: Iterable[int | str]) -> Ideal:
        """Generators of I ∩ k[remaining variables], as an ideal of the same ring."""
        ring = self.ring
        drop_idx = sorted({ring.index(v) if isinstance(v, str) else v for v in drop})
        keep_idx = [i for i in range(ring.nvars) if i not in drop_idx]
        perm = drop_idx + keep_idx
        E = PolyRing(ring.field, [ring.variables[i] for i in perm], BlockOrder(ring.nvars, len(drop_idx)))
        to_e = lambda m: tuple(m[i] for i in perm)  # noqa: E731
        back = [0] * ring.nvars
        for pos, i in enumerate(perm):
            back[i] = pos
        from_e = lambda m: tuple(m[back[i]] for i in range(ring.nvars))  # noqa: E731
        gb = buchberger([g.change_ring(E, to_e) for g in self.gens], E)
        nd = len(drop_idx)
        out = [g.change_ring(ring, from_e) for g in gb if all(not any(m[:nd]) for m, _ in g.terms)]
        return Ideal(ring, out)

    # -- graded structure
    def require_homogeneous(self):
        if not self.homogeneous:
            raise IdealError("operation needs a homogeneous ideal")

    def leading_monomials(self) -> list:
        return [g.lm for g in self.gb]

    def hilbert_series(self) -> HilbertSeries:
        self.require_homogeneous()
        if self.is_unit():
            raise IdealError("Hilbert series of the unit ideal")
        return hilbert_series_of_monomials(self.leading_monomials(), self.ring.nvars)

    @cached_property
    def _series(self) -> HilbertSeries:
        return self.hilbert_series()

    def dim(self) -> int:
        """Krull dimension of S/I; -1 for the unit ideal."""
        if self.is_unit():
            return -1
        return self._series.dim

    def multiplicity(self) -> int:
        return self._series.multiplicity

    def codim(self) -> int:
        return self.ring.nvars - self.dim()

    def hilbert_function(self, degree: int) -> int:
        self.require_homogeneous()
        if degree < 0 or self.is_unit():
            return 0
        return len(self.standard_monomials(degree))

    def standard_monomials(self, degree: int) -> list:
        lms = self.leading_monomials()
        return [
            m
            for m in self.ring.monomials_of_degree(degree)
            if not any(mono_divides(l, m) for l in lms)
        ]

    def graded_piece(self, degree: int) -> tuple[list[Polynomial], list]:
        """Echelon basis of [I]_degree and the standard monomials of [S/I]_degree.

        The basis element for a non-standard monomial m is m - NF(m), so the
        basis is in reduced row echelon form with pivots on leading monomials.
        """
        self.require_homogeneous()
        lms = self.leading_monomials()
        basis, std = [], []
        for m in self.ring.monomials_of_degree(degree):
            if any(mono_divides(l, m) for l in lms):
                mono = self.ring.monomial(m)
                basis.append(mono - self.reduce(mono))
            else:
                std.append(m)
        return basis, std

    def piece_space(self, degree: int) -> EchelonSpace:
        """[I]_degree as an :class:`EchelonSpace` of coefficient dicts."""
        basis, _ = self.graded_piece(degree)
        space = EchelonSpace(self.ring.field)
        for b in basis:
            space.add(b.as_dict())
        return space

    def initial_degree(self) -> float | int:
        """Least degree of a nonzero element; ``inf`` for the zero ideal."""
        if not self.gens:
            return float("inf")
        return min(g.degree() for g in self.gb)

    def max_gb_degree(self) -> int:
        return max((g.degree() for g in self.gb), default=0)

    def minimal_generators(self, modulo: Ideal | None = None) -> list[Polynomial]:
        """Minimal homogeneous generators of (I + modulo)/modulo, chosen
        greedily from the Groebner basis degree by degree."""
        self.require_homogeneous()
        ring = self.ring
        chosen: list[Polynomial] = []
        by_degree: dict[int, list[Polynomial]] = {}
        for g in self.gb:
            by_degree.setdefault(g.degree(), []).append(g)
        for d in sorted(by_degree):
            space = EchelonSpace(ring.field)
            if modulo is not None and not modulo.is_zero():
                for b in modulo.graded_piece(d)[0]:
                    space.add(b.as_dict())
            for h in chosen:
                for m in ring.monomials_of_degree(d - h.degree()):
                    space.add(h.mul_monomial(m).as_dict())
            for g in by_degree[d]:
                if space.add(g.as_dict()):
                    chosen.append(g)
        return chosen

    def generator_degrees(self, modulo: Ideal | None = None) -> list[int]:
        return sorted(g.degree() for g in self.minimal_generators(modulo))


def ideal_from_pieces(ring: PolyRing, pieces: dict, top: int) -> Ideal:
    """Ideal C with [C]_d given by ``pieces[d]`` (echelon spaces pivoted on
    leading monomials) for d < top, and containing m^top.

    The rows of all pieces plus the degree-``top`` monomials form a Groebner
    basis, so the reduced one comes from minimalizing and interreducing.
    """
    key = ring.order.key
    cands = []
    for d in sorted(pieces):
        for row in pieces[d].rows.values():
            cands.append(ring.from_dict(row))
    cands += [ring.monomial(m) for m in ring.monomials_of_degree(top)]
    cands.sort(key=lambda f: (f.degree(), key(f.lm)))
    minimal: list[Polynomial] = []
    for f in cands:
        if not any(mono_divides(g.lm, f.lm) for g in minimal):
            minimal.append(f.monic())
    if any(not any(g.lm) for g in minimal):
        return unit_ideal(ring)
    return Ideal.from_gb(ring, _interreduce(minimal, ring))


def _dedupe(polys):
    seen = set()
    out = []
    for f in polys:
        m = f.monic()
        if m not in seen:
            seen.add(m)
            out.append(f)
    return out


def unit_ideal(ring: PolyRing) -> Ideal:
    return Ideal.from_gb(ring, [ring.one()])


def zero_ideal(ring: PolyRing) -> Ideal:
    return Ideal(ring)


def maximal_ideal(ring: PolyRing) -> Ideal:
    return Ideal.from_gb(ring, sorted(ring.gens, key=lambda g: ring.order.key(g.lm), reverse=True))


def power_of_maximal(ring: PolyRing, n: int) -> Ideal:
    """m^n as the monomial ideal of all degree-n monomials."""
    if n <= 0:
        return unit_ideal(ring)
    return Ideal.from_gb(ring, [ring.monomial(m) for m in ring.monomials_of_degree(n)])


def bracket_power(gens: Sequence[Polynomial], i: int) -> list[Polynomial]:
    """The generator list y_1^i, ..., y_d^i (unit for i <= 0)."""
    if i <= 0:
        return [gens[0].ring.one()] if gens else []
    return [g**i for g in gens]


def ideal_combine(op: str, I: Ideal, other) -> Ideal:
    """``sum``/``product`` with another ideal, ``power`` with an integer,
    ``bracket_power`` on the generator list."""
    if op == "sum":
        return I + other
    if op == "product":
        return I * other
    if op == "power":
        return I**other
    if op == "bracket_power":
        return Ideal(I.ring, bracket_power(list(I.gens), other))
    raise ValueError(f"unknown ideal operation {op!r}")


def colength(I: Ideal) -> int:
    """Vector-space dimension of S/I for an m-primary homogeneous I."""
    if not I.is_m_primary():
        raise IdealError("colength needs an m-primary ideal")
    return sum(I._series.numerator)


def generic_linear_sop(I: Ideal, rng, attempts: int = 20) -> list[Polynomial]:
    """d = dim S/I random linear forms whose images are a system of parameters."""
    I.require_homogeneous()
    if I.is_unit():
        raise IdealError("no system of parameters for the zero ring")
    d = I.dim()
    if d == 0:
        return []
    ring = I.ring
    for _ in range(attempts):
        ys = [ring.random_linear_form(rng) for _ in range(d)]
        if any(not y for y in ys):
            continue
        if (I + Ideal(ring, ys)).dim() == 0:
            return ys
    raise IdealError("could not find linear sop")


def ideal_strings(I: Ideal) -> list[str]:
    """The reduced Groebner basis as sorted canonical strings."""
    return sorted(str(g) for g in I.gb)
