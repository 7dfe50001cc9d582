"""Sparse exact linear algebra over the coefficient fields.

Vectors are dicts ``{coordinate: value}`` with hashable coordinates (in
practice monomials).  :class:`EchelonSpace` keeps a subspace in reduced row
echelon form, which is all the degreewise verifications need: rank,
membership, subspace equality and kernels of small linear maps.
"""

from __future__ import annotations

from typing import Hashable, Iterable


class EchelonSpace:
    """A subspace of a coordinate space, kept fully reduced.

    Each stored row has a pivot coordinate with coefficient 1 that appears in
    no other row.  ``pivot_key`` chooses the pivot among a row's coordinates
    (largest key wins); rows that contain only coordinates rejected by
    ``allowed`` are not added.
    """

    def __init__(self, field, pivot_key=None, allowed=None):
        self.field = field
        self.rows: dict[Hashable, dict] = {}
        self._pivot_key = pivot_key
        self._allowed = allowed

    def __len__(self):
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Remainder of ``vec`` modulo the space (a new dict)."""
        norm = self.field.normalize
        v = {k: c for k, c in vec.items() if c}
        for piv in [k for k in v if k in self.rows]:
            c = v.get(piv)
            if not c:
                continue
            for k, r in self.rows[piv].items():
                x = norm(v.get(k, 0) - c * r)
                if x:
                    v[k] = x
                else:
                    v.pop(k, None)
        return v

    def _choose_pivot(self, v: dict):
        cands = v if self._allowed is None else [k for k in v if self._allowed(k)]
        if not cands:
            return None
        if self._pivot_key is None:
            return next(iter(cands))
        return max(cands, key=self._pivot_key)

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; returns True if the dimension grew."""
        v = self.reduce(vec)
        if not v:
            return False
        piv = self._choose_pivot(v)
        if piv is None:
            return False
        f = self.field
        inv = f.inv(v[piv])
        v = {k: f.normalize(c * inv) for k, c in v.items()}
        norm = f.normalize
        for row in self.rows.values():
            c = row.get(piv)
            if c:
                for k, x in v.items():
                    y = norm(row.get(k, 0) - c * x)
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        self.rows[piv] = v
        return True

    def extend(self, vecs: Iterable[dict]) -> EchelonSpace:
        for v in vecs:
            self.add(v)
        return self

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def contains_space(self, other: EchelonSpace) -> bool:
        return all(self.contains(r) for r in other.rows.values())

    def basis(self) -> list[dict]:
        return [dict(r) for r in self.rows.values()]

    def copy(self) -> EchelonSpace:
        e = EchelonSpace(self.field, self._pivot_key, self._allowed)
        e.rows = {k: dict(r) for k, r in self.rows.items()}
        return e


def span(field, vecs: Iterable[dict], pivot_key=None) -> EchelonSpace:
    return EchelonSpace(field, pivot_key).extend(vecs)


def rank(field, vecs: Iterable[dict]) -> int:
    return span(field, vecs).dim


def same_space(a: EchelonSpace, b: EchelonSpace) -> bool:
    return a.dim == b.dim and a.contains_space(b)


def kernel(field, images: list[dict]) -> list[dict]:
    """Basis of ``{c : sum_k c[k] * images[k] = 0}`` as dicts ``{k: c_k}``."""
    tagged = EchelonSpace(field, allowed=lambda k: not (isinstance(k, tuple) and k[:1] == ("#",)))
    out = []
    for idx, img in enumerate(images):
        v = {("v", k): c for k, c in img.items()}
        v[("#", idx)] = field.one
        r = tagged.reduce(v)
        if any(k[0] == "v" for k in r):
            tagged.add(v)
        else:
            out.append({k[1]: c for k, c in r.items()})
    return out


def solve(field, columns: list[dict], rhs: dict) -> dict | None:
    """One solution ``c`` of ``sum_k c[k] * columns[k] = rhs`` or None."""
    space = EchelonSpace(field, allowed=lambda k: k[0] == "v")
    for idx, col in enumerate(columns):
        v = {("v", k): c for k, c in col.items()}
        v[("#", idx)] = field.one
        space.add(v)
    target = {("v", k): c for k, c in rhs.items()}
    r = space.reduce(target)
    if any(k[0] == "v" for k in r):
        return None
    # target - combination = r  with r only in tag coordinates, so the
    # combination coefficients are -r
    norm = field.normalize
    return {k[1]: norm(-c) for k, c in r.items()}
