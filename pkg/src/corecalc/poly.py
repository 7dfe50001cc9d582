"""Exact coefficient fields, monomial orders and multivariate polynomials.

Field elements are plain Python values: ``fractions.Fraction`` over the
rationals and ``int`` in ``[0, p)`` over a prime field.  Monomials are
exponent tuples.  A :class:`Polynomial` keeps its terms as a tuple of
``(monomial, coefficient)`` pairs sorted strictly descending in the ring's
monomial order, so equal polynomials have equal term tuples.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

DEFAULT_PRIME = 32003

Monomial = tuple


class ParseError(ValueError):
    """Malformed polynomial or field literal; ``pos`` is the offending offset."""

    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class RationalField:
    """The field of rational numbers, elements are ``Fraction``."""

    p = 0
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, str):
            return self.parse(value)
        return Fraction(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def inv(self, a: Fraction) -> Fraction:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def normalize(self, a):
        return a

    def parse(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {text!r}") from exc

    def format(self, a: Fraction) -> str:
        return str(a)

    def random_element(self, rng, bound: int = 9) -> Fraction:
        # small integers keep coefficient growth in Groebner bases manageable
        return Fraction(rng.randint(-bound, bound))

    def spec(self) -> str:
        return "q"


class PrimeField:
    """The prime field GF(p), elements are ints in ``[0, p)``."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if not (_is_prime(p) and p < 2**31):
            raise ValueError(f"{p} is not a prime below 2^31")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def __call__(self, value) -> int:
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return value.numerator * self.inv(value.denominator % self.p) % self.p
        return int(value) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def inv(self, a: int) -> int:
        a %= self.p
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def normalize(self, a):
        return a % self.p

    def parse(self, text: str) -> int:
        try:
            return self(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad field literal {text!r}") from exc

    def format(self, a: int) -> str:
        # symmetric representative so -1 prints as -1
        return str(a - self.p if a > self.p // 2 else a)

    def random_element(self, rng) -> int:
        return rng.randrange(self.p)

    def spec(self) -> str:
        return f"fp {self.p}"


QQ = RationalField()


def field_from_spec(text: str):
    """Parse ``q``, ``fp default`` or ``fp <prime>``."""
    words = text.split()
    if words == ["q"]:
        return QQ
    if len(words) == 2 and words[0] == "fp":
        if words[1] == "default":
            return PrimeField(DEFAULT_PRIME)
        try:
            return PrimeField(int(words[1]))
        except ValueError as exc:
            raise ParseError(f"bad field specification {text!r}: {exc}") from exc
    raise ParseError(f"bad field specification {text!r}")


# --------------------------------------------------------------------------
# monomials and orders

_EXP_BITS = 16
_EXP_LIMIT = 1 << _EXP_BITS


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    """All exponent vectors of the given total degree, lex-descending."""
    if degree < 0:
        return []
    if nvars == 0:
        return [()] if degree == 0 else []
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


class MonomialOrder:
    """A monomial order given by a sort key: bigger key = bigger monomial.

    ``weights`` is the grading used for pair selection in Buchberger's
    algorithm; the standard grading gives every variable weight 1.
    """

    name = "abstract"

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.weights = (1,) * nvars
        self._cache: dict = {}

    def key(self, m: Monomial):
        k = self._cache.get(m)
        if k is None:
            k = self._key(m)
            self._cache[m] = k
        return k

    def _key(self, m):
        raise NotImplementedError

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        if len(m1) != len(m2) or len(m1) != self.nvars:
            raise ValueError("monomial length mismatch")
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def __eq__(self, other):
        return type(self) is type(other) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def _ident(self):
        return (self.name, self.nvars)

    def __repr__(self):
        return f"{self.name}({self.nvars})"


def _check_exponents(m):
    for e in m:
        if e >= _EXP_LIMIT:
            raise OverflowError(f"exponent {e} exceeds {_EXP_LIMIT - 1}")


class GrevLex(MonomialOrder):
    """Degree reverse lexicographic order with x0 > x1 > ... ."""

    name = "grevlex"

    def _key(self, m):
        _check_exponents(m)
        k = sum(m)
        for e in reversed(m):
            k = (k << _EXP_BITS) | (_EXP_LIMIT - 1 - e)
        return k


class Lex(MonomialOrder):
    """Pure lexicographic order with x0 > x1 > ... ."""

    name = "lex"

    def _key(self, m):
        _check_exponents(m)
        k = 0
        for e in m:
            k = (k << _EXP_BITS) | e
        return k


class BlockOrder(MonomialOrder):
    """Elimination order: grevlex on the first ``nblock`` variables, ties
    broken by grevlex on the rest.  ``block_weight`` sets the grading weight
    of the block variables (0 makes a tag variable degree-neutral)."""

    name = "block"

    def __init__(self, nvars: int, nblock: int, block_weight: int = 1):
        super().__init__(nvars)
        self.nblock = nblock
        self.block_weight = block_weight
        self.weights = (block_weight,) * nblock + (1,) * (nvars - nblock)
        self._left = GrevLex(nblock)
        self._right = GrevLex(nvars - nblock)

    def _key(self, m):
        right = m[self.nblock :]
        if sum(right) >= _EXP_LIMIT:
            raise OverflowError("degree too large for block order key")
        shift = _EXP_BITS * (len(right) + 1)
        return (self._left._key(m[: self.nblock]) << shift) | self._right._key(right)

    def _ident(self):
        return (self.name, self.nvars, self.nblock, self.block_weight)


def make_order(name: str, nvars: int) -> MonomialOrder:
    if name == "grevlex":
        return GrevLex(nvars)
    if name == "lex":
        return Lex(nvars)
    raise ValueError(f"unknown monomial order {name!r}")


# --------------------------------------------------------------------------
# rings and polynomials

_IDENT = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


class PolyRing:
    """A polynomial ring k[x0, ..., x(n-1)] with a fixed monomial order."""

    def __init__(self, field, variables: Sequence[str], order: str | MonomialOrder = "grevlex"):
        variables = tuple(variables)
        for v in variables:
            if not _IDENT.match(v):
                raise ValueError(f"bad variable name {v!r}")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        self.field = field
        self.variables = variables
        self.nvars = len(variables)
        if isinstance(order, str):
            order = make_order(order, self.nvars)
        if order.nvars != self.nvars:
            raise ValueError("order/variable count mismatch")
        self.order = order
        self._index = {v: i for i, v in enumerate(variables)}
        self._degree_monomials: dict[int, list] = {}

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.variables == other.variables
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.variables, self.order))

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.variables)}] ({self.order.name})"

    def __call__(self, text) -> Polynomial:
        if isinstance(text, Polynomial):
            if text.ring != self:
                raise ValueError("polynomial from a different ring")
            return text
        if isinstance(text, str):
            return parse_polynomial(text, self)
        return self.constant(text)

    # constructors
    def zero(self) -> Polynomial:
        return Polynomial(self, ())

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        c = self.field(c)
        return Polynomial(self, (((0,) * self.nvars, c),) if c else ())

    def monomial(self, m: Monomial, c=1) -> Polynomial:
        c = self.field(c)
        return Polynomial(self, ((tuple(m), c),) if c else ())

    def gen(self, i: int | str) -> Polynomial:
        if isinstance(i, str):
            i = self.index(i)
        m = [0] * self.nvars
        m[i] = 1
        return self.monomial(tuple(m))

    @property
    def gens(self) -> list[Polynomial]:
        return [self.gen(i) for i in range(self.nvars)]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def from_dict(self, terms: dict) -> Polynomial:
        """Build from ``{monomial: coefficient}``; coefficients must already be
        normalized field elements.  Zero coefficients are dropped."""
        key = self.order.key
        items = sorted(((m, c) for m, c in terms.items() if c), key=lambda t: key(t[0]), reverse=True)
        return Polynomial(self, tuple(items))

    def monomials_of_degree(self, degree: int) -> list[Monomial]:
        ms = self._degree_monomials.get(degree)
        if ms is None:
            key = self.order.key
            ms = sorted(monomials_of_degree(self.nvars, degree), key=key, reverse=True)
            self._degree_monomials[degree] = ms
        return ms

    def with_order(self, order) -> PolyRing:
        return PolyRing(self.field, self.variables, order)

    def random_form(self, degree: int, rng) -> Polynomial:
        """A homogeneous form with independent random coefficients."""
        rand = self.field.random_element
        return self.from_dict({m: self.field(rand(rng)) for m in self.monomials_of_degree(degree)})

    def random_linear_form(self, rng) -> Polynomial:
        return self.random_form(1, rng)


class Polynomial:
    """Immutable multivariate polynomial in a :class:`PolyRing`."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic queries
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def lm(self) -> Monomial:
        return self.terms[0][0]

    @property
    def lc(self):
        return self.terms[0][1]

    def degree(self) -> float | int:
        """Total degree; ``-inf`` for the zero polynomial."""
        if not self.terms:
            return float("-inf")
        return max(sum(m) for m, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        d = sum(self.terms[0][0])
        return all(sum(m) == d for m, _ in self.terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m, _ in self.terms)

    def variables_used(self) -> set[int]:
        return {i for m, _ in self.terms for i, e in enumerate(m) if e}

    # -- arithmetic
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        d = dict(self.terms)
        norm = self.ring.field.normalize
        for m, c in other.terms:
            d[m] = norm(d.get(m, 0) + c)
        return self.ring.from_dict(d)

    __radd__ = __add__

    def __neg__(self):
        norm = self.ring.field.normalize
        return Polynomial(self.ring, tuple((m, norm(-c)) for m, c in self.terms))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return self.ring.zero()
        norm = self.ring.field.normalize
        d: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                d[m] = d.get(m, 0) + c1 * c2
        return self.ring.from_dict({m: norm(c) for m, c in d.items()})

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> Polynomial:
        f = self.ring.field
        c = f(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((m, f.normalize(a * c)) for m, a in self.terms))

    def mul_monomial(self, mono: Monomial, c=None) -> Polynomial:
        """Multiply by ``c * x^mono``; order is preserved so no resort."""
        if c is None:
            return Polynomial(self.ring, tuple((mono_mul(m, mono), a) for m, a in self.terms))
        norm = self.ring.field.normalize
        return Polynomial(self.ring, tuple((mono_mul(m, mono), norm(a * c)) for m, a in self.terms))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    def exact_div(self, h: Polynomial) -> Polynomial:
        """Quotient of an exact division by ``h``; raises if not exact."""
        h = self._coerce(h)
        if not h:
            raise ZeroDivisionError("division by the zero polynomial")
        field = self.ring.field
        key = self.ring.order.key
        inv = field.inv(h.lc)
        hm = h.lm
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            m = max(rem, key=key)
            c = rem[m]
            if not mono_divides(hm, m):
                raise ArithmeticError("division is not exact")
            q = mono_div(m, hm)
            qc = field.normalize(c * inv)
            quot[q] = qc
            for mh, ch in h.terms:
                mm = mono_mul(mh, q)
                v = field.normalize(rem.get(mm, 0) - qc * ch)
                if v:
                    rem[mm] = v
                else:
                    rem.pop(mm, None)
        return self.ring.from_dict(quot)

    def homogeneous_component(self, degree: int) -> Polynomial:
        return Polynomial(self.ring, tuple(t for t in self.terms if sum(t[0]) == degree))

    def evaluate(self, point: Sequence) -> object:
        """Exact value at ``point`` (a sequence of field elements)."""
        if len(point) != self.ring.nvars:
            raise ValueError(f"point has {len(point)} coordinates, ring has {self.ring.nvars} variables")
        field = self.ring.field
        pt = [field(v) for v in point]
        total = field.zero
        for m, c in self.terms:
            v = c
            for x, e in zip(pt, m):
                if e:
                    v = v * x**e
            total = total + v
        return field.normalize(total)

    __call__ = evaluate

    def change_ring(self, ring: PolyRing, embed=None) -> Polynomial:
        """Move to another ring; ``embed`` maps exponent tuples, the default
        is the identity (same number of variables)."""
        if embed is None:
            if ring.nvars != self.ring.nvars:
                raise ValueError("an embedding is needed between rings of different size")
            embed = lambda m: m  # noqa: E731
        return ring.from_dict({embed(m): ring.field(c) for m, c in self.terms})

    # -- comparison and printing
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def format_polynomial(f: Polynomial) -> str:
    """Canonical text form, readable back by :func:`parse_polynomial`."""
    if not f.terms:
        return "0"
    names = f.ring.variables
    fmt = f.ring.field.format
    parts = []
    for m, c in f.terms:
        cs = fmt(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        mono = "*".join(
            names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e
        )
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        else:
            body = f"{cs}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


# --------------------------------------------------------------------------
# parser

_TOKEN = re.compile(
    r"\s*(?:(?P<rat>\d+/\d+)|(?P<int>\d+)|(?P<ident>[a-zA-Z][a-zA-Z0-9_]*)|(?P<op>[-+*^()/]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = mt.lastgroup
        start = mt.start(kind)
        value = mt.group(kind)
        if kind == "op" and value == "/":
            raise ParseError("division is not supported", start)
        tokens.append((kind, value, start))
        pos = mt.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", pos)

    def parse(self) -> Polynomial:
        f = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {v!r}", pos)
        return f

    def expr(self) -> Polynomial:
        sign = 1
        kind, v, _ = self.peek()
        if v in ("+", "-"):
            self.take()
            sign = -1 if v == "-" else 1
        f = self.term()
        if sign < 0:
            f = -f
        while True:
            kind, v, _ = self.peek()
            if v == "+":
                self.take()
                f = f + self.term()
            elif v == "-":
                self.take()
                f = f - self.term()
            else:
                return f

    def term(self) -> Polynomial:
        f = self.factor()
        while self.peek()[1] == "*":
            self.take()
            f = f * self.factor()
        return f

    def factor(self) -> Polynomial:
        kind, v, pos = self.take()
        if kind == "ident":
            if v not in self.ring._index:
                raise ParseError(f"unknown variable {v!r}", pos)
            f = self.ring.gen(v)
        elif kind in ("int", "rat"):
            f = self.ring.constant(self.ring.field(Fraction(v)))
        elif v == "(":
            f = self.expr()
            self.expect(")")
        else:
            raise ParseError(f"unexpected token {v or 'end of input'!r}", pos)
        while self.peek()[1] == "^":
            self.take()
            kind, e, epos = self.take()
            if kind != "int":
                raise ParseError("malformed exponent", epos)
            f = f ** int(e)
        return f


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``text`` over ``ring``; raises :class:`ParseError` with position."""
    return _Parser(text, ring).parse()

