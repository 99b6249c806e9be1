"""Immutable sparse polynomials over a :class:`RingDescriptor`.

A polynomial keeps its terms as a tuple of ``(monomial, coefficient)`` pairs
sorted strictly descending in the ring's monomial order, with no zero
coefficients.  The same class serves both monomial kinds; the free kind
multiplies by word concatenation, so ``X*Y != Y*X``.
"""

from __future__ import annotations

from .rings import RingDescriptor


class RingMismatch(ValueError):
    pass


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingDescriptor, terms=None):
        self.ring = ring
        conv = ring.field
        acc = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for m, c in items:
                c = conv(c)
                if m in acc:
                    acc[m] = acc[m] + c
                else:
                    acc[m] = c
        self.terms = _sorted_terms(ring, acc)
        self._hash = None

    @classmethod
    def _from_dict(cls, ring, acc: dict) -> "Polynomial":
        # acc already holds canonical, possibly zero, coefficients
        p = object.__new__(cls)
        p.ring = ring
        p.terms = _sorted_terms(ring, acc)
        p._hash = None
        return p

    @classmethod
    def _from_terms(cls, ring, terms: tuple) -> "Polynomial":
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, ring) -> "Polynomial":
        return cls._from_terms(ring, ())

    @classmethod
    def constant(cls, ring, c) -> "Polynomial":
        return cls(ring, {ring.one: c})

    @classmethod
    def monomial(cls, ring, m, c=1) -> "Polynomial":
        return cls(ring, {m: c})

    # -- inspection --------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> dict:
        return dict(self.terms)

    def monomials(self) -> list:
        return [m for m, _ in self.terms]

    def _require_nonzero(self, what):
        if not self.terms:
            raise ValueError(f"{what} of the zero polynomial")

    @property
    def lm(self):
        self._require_nonzero("leading monomial")
        return self.terms[0][0]

    @property
    def lc(self):
        self._require_nonzero("leading coefficient")
        return self.terms[0][1]

    @property
    def lt(self):
        self._require_nonzero("leading term")
        return self.terms[0]

    def degree(self) -> int:
        """Maximal weighted degree of a term (graded rings: ``deg LH(f)``)."""
        self._require_nonzero("degree")
        return max(self.ring.mono_degree(m) for m, _ in self.terms)

    def is_homogeneous(self) -> bool:
        deg = self.ring.mono_degree
        return len({deg(m) for m, _ in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(m == self.ring.one for m, _ in self.terms)

    def coefficient(self, m):
        for mm, c in self.terms:
            if mm == m:
                return c
        return self.ring.field.zero

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.ring is not other.ring and self.ring != other.ring:
            raise RingMismatch(f"{self.ring.describe()} vs {other.ring.describe()}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.ring, other)

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            if m in acc:
                s = acc[m] + c
                if s:
                    acc[m] = s
                else:
                    del acc[m]
            else:
                acc[m] = c
        return Polynomial._from_dict(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_terms(self.ring, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.field(other)
            if not c:
                return Polynomial.zero(self.ring)
            return Polynomial._from_terms(self.ring, tuple((m, a * c) for m, a in self.terms))
        self._check(other)
        mul = self.ring.mono_mul
        acc = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mul(m1, m2)
                if m in acc:
                    acc[m] = acc[m] + c1 * c2
                else:
                    acc[m] = c1 * c2
        return Polynomial._from_dict(self.ring, acc)

    def __rmul__(self, other):
        # scalars commute with everything, including in the free algebra
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.ring, 1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> "Polynomial":
        return self * c

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        inv = self.ring.field.one / self.terms[0][1]
        if inv == 1:
            return self
        return self * inv

    def mul_monomial(self, left=None, right=None, coeff=None) -> "Polynomial":
        """``coeff * left * self * right`` for monomials ``left``/``right``.

        Monomial multiplication is strictly monotone in every supported
        order, so the result stays sorted without re-sorting.
        """
        ring = self.ring
        mul = ring.mono_mul
        terms = self.terms
        if left is not None and left != ring.one:
            terms = tuple((mul(left, m), c) for m, c in terms)
        if right is not None and right != ring.one:
            terms = tuple((mul(m, right), c) for m, c in terms)
        if coeff is not None:
            coeff = ring.field(coeff)
            if not coeff:
                return Polynomial.zero(ring)
            terms = tuple((m, c * coeff) for m, c in terms)
        return Polynomial._from_terms(ring, terms)

    def map_monomials(self, ring: RingDescriptor, fn) -> "Polynomial":
        """Image under a monomial map into ``ring``; colliding terms merge."""
        acc = {}
        for m, c in self.terms:
            mm = fn(m)
            if mm in acc:
                acc[mm] = acc[mm] + c
            else:
                acc[mm] = c
        return Polynomial._from_dict(ring, acc)

    # -- comparison and display --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            c = self.ring.field(other)
        except (TypeError, ValueError, ZeroDivisionError):
            return NotImplemented
        return self.terms == Polynomial.constant(self.ring, c).terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def __str__(self):
        from .syntax import format_polynomial

        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, {self.ring.describe()})"


def _sorted_terms(ring, acc: dict) -> tuple:
    key = ring.key
    items = [(m, c) for m, c in acc.items() if c]
    items.sort(key=lambda mc: key(mc[0]), reverse=True)
    return tuple(items)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def homogeneous_components(f: Polynomial) -> list:
    """``[(degree, component), ...]`` with degrees strictly descending."""
    ring = f.ring
    buckets = {}
    for m, c in f.terms:
        buckets.setdefault(ring.mono_degree(m), {})[m] = c
    return [
        (d, Polynomial._from_dict(ring, buckets[d]))
        for d in sorted(buckets, reverse=True)
    ]


def lh(f: Polynomial) -> Polynomial:
    """Leading homogeneous part: the sum of the terms of maximal degree."""
    if not f:
        raise ValueError("leading homogeneous part of the zero polynomial")
    return homogeneous_components(f)[0][1]
