"""Graded lexicographic orderings and their homogenizing extensions.

Monomials are represented in two ways:

* commutative: a tuple of exponents, one per ring variable in precedence
  order (highest first), with the homogenizing variable ``t`` (if any) last;
* free: a ``str`` whose characters encode letters.  Letter codes are chosen
  so that plain string comparison is the lexicographic comparison of words
  by variable precedence, with the homogenizing letter ``T`` below every
  ordinary letter.

Three orderings are provided:

``gr``
    weighted degree first, then lex by precedence (commutative: exponent of
    the highest variable first; free: leftmost letter first).
``t-gr``
    on ``K[x, t]``: ``t^a*w < t^b*v`` iff ``w < v`` under ``gr``, or
    ``w == v`` and ``a < b``.  Not graded.
``T-gr``
    on ``K<X, T>``: ``gr`` on words over the extended alphabet, ``T`` of
    weight 1 and lowest precedence.  Graded.

The ``compare_*`` functions spell each rule out directly; :func:`sort_key`
is the fast key the polynomial arithmetic uses.  Tests check that the two
agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

LETTER_BASE = 0x100
HOMOG_LETTER = chr(LETTER_BASE)


def letter(index: int, nvars: int) -> str:
    """Code of ordinary variable ``index`` (0 = highest precedence) among ``nvars``."""
    return chr(LETTER_BASE + nvars - index)


def letter_index(code: str, nvars: int) -> int:
    """Inverse of :func:`letter`; the homogenizing letter maps to ``nvars``."""
    rank = ord(code) - LETTER_BASE
    if rank == 0:
        return nvars
    return nvars - rank


class Cmp(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _sign(a, b) -> Cmp:
    if a < b:
        return Cmp.LT
    if a > b:
        return Cmp.GT
    return Cmp.EQ


@dataclass(frozen=True)
class OrderingSpec:
    """Graded lex ordering data for one ring.

    ``precedence`` lists the ordinary variables from highest to lowest.
    ``homog_var`` selects the homogenizing extension (``t-gr`` for the
    commutative kind, ``T-gr`` for the free kind).
    """

    kind: str
    precedence: tuple
    weights: tuple
    homog_var: str | None = None
    basis: str = "grlex"

    @property
    def nvars(self) -> int:
        return len(self.precedence)

    @property
    def extension(self) -> str:
        if self.homog_var is None:
            return "none"
        return "t-gr" if self.kind == "comm" else "T-gr"


def _weighted_degree(exps, weights) -> int:
    return sum(e * w for e, w in zip(exps, weights))


def _word_degree(word: str, spec: OrderingSpec) -> int:
    n = spec.nvars
    total = 0
    for c in word:
        i = letter_index(c, n)
        total += 1 if i == n else spec.weights[i]
    return total


def _word_precedence(c: str, spec: OrderingSpec) -> int:
    # larger is higher; the homogenizing letter sits below every variable
    i = letter_index(c, spec.nvars)
    return -1 if i == spec.nvars else spec.nvars - i


def _compare_words(u: str, v: str, spec: OrderingSpec) -> Cmp:
    du, dv = _word_degree(u, spec), _word_degree(v, spec)
    if du != dv:
        return _sign(du, dv)
    for a, b in zip(u, v):
        if a != b:
            return _sign(_word_precedence(a, spec), _word_precedence(b, spec))
    return _sign(len(u), len(v))


def compare_gr(u, v, spec: OrderingSpec) -> Cmp:
    """Graded lex comparison on monomials free of the homogenizing variable."""
    if spec.kind == "free":
        code = HOMOG_LETTER
        if code in u or code in v:
            raise ValueError("compare_gr on words containing the homogenizing letter")
        return _compare_words(u, v, spec)
    n = spec.nvars
    if len(u) != len(v) or len(u) not in (n, n + 1):
        raise ValueError("monomials from different rings")
    if len(u) == n + 1 and (u[n] or v[n]):
        raise ValueError("compare_gr on monomials involving the homogenizing variable")
    du, dv = _weighted_degree(u[:n], spec.weights), _weighted_degree(v[:n], spec.weights)
    if du != dv:
        return _sign(du, dv)
    for a, b in zip(u[:n], v[:n]):
        if a != b:
            return _sign(a, b)
    return Cmp.EQ


def compare_t_gr(u, v, spec: OrderingSpec) -> Cmp:
    """Compare ``t^r1*w1`` with ``t^r2*w2``: by ``w`` under ``gr``, then by ``r``."""
    if spec.homog_var is None or spec.kind != "comm":
        raise ValueError("ordering has no central homogenizing variable")
    n = spec.nvars
    if len(u) != n + 1 or len(v) != n + 1:
        raise ValueError("monomials from different rings")
    w1, r1 = tuple(u[:n]) + (0,), u[n]
    w2, r2 = tuple(v[:n]) + (0,), v[n]
    c = compare_gr(w1, w2, spec)
    if c != Cmp.EQ:
        return c
    return _sign(r1, r2)


def compare_T_gr(u: str, v: str, spec: OrderingSpec) -> Cmp:
    """Graded lex on words over ``X_1..X_n, T`` with ``T`` weight 1 and lowest."""
    if spec.homog_var is None or spec.kind != "free":
        raise ValueError("ordering has no non-central homogenizing letter")
    return _compare_words(u, v, spec)


def compare(u, v, spec: OrderingSpec) -> Cmp:
    if spec.homog_var is None:
        return compare_gr(u, v, spec)
    if spec.kind == "comm":
        return compare_t_gr(u, v, spec)
    return compare_T_gr(u, v, spec)


def sort_key(spec: OrderingSpec):
    """Key function whose natural tuple order is the ring's monomial order."""
    n = spec.nvars
    weights = spec.weights
    unit = all(w == 1 for w in weights)
    if spec.kind == "comm":
        # exponent tuples compare lexicographically; for t-gr the t exponent
        # sits last, so (deg of x-part, exps) realises "w first, then r"
        if spec.homog_var is None:
            if unit:
                return lambda e: (sum(e), e)
            return lambda e: (sum(a * b for a, b in zip(e, weights)), e)
        if unit:
            return lambda e: (sum(e) - e[n], e)
        return lambda e: (sum(a * b for a, b in zip(e, weights)), e)
    if unit:
        return lambda w: (len(w), w)
    table = {letter(i, n): weights[i] for i in range(n)}
    table[HOMOG_LETTER] = 1
    return lambda w: (sum(table[c] for c in w), w)
