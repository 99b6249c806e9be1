"""Division, S-polynomials and Buchberger completion in ``K[x]`` and ``K[x, t]``.

All routines take their monomial order from the ring descriptor: graded lex
on a plain polynomial ring, the ``t-gr`` extension once a homogenizing
variable is present.
"""

from __future__ import annotations

from .basis import CheckResult, GroebnerBasis, canonical_order
from .polynomial import Polynomial


class IncompleteBasis(ValueError):
    pass


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _quo(b, a):
    return tuple(y - x for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _check_divisors(f, G):
    if f.ring.is_free:
        raise ValueError("commutative division on a free algebra")
    for g in G:
        if not g:
            raise ValueError("division by the zero polynomial")
        if g.ring != f.ring:
            raise ValueError("divisor from a different ring")


def divide(f: Polynomial, G) -> tuple:
    """Multivariate division: ``f = sum(q_i*g_i) + r``.

    Always the current leading term is reduced, by the first ``g_i`` (in the
    given order) whose leading monomial divides it; otherwise that term moves
    to the remainder.  Returns ``(quotients, remainder)``.
    """
    G = list(G)
    _check_divisors(f, G)
    ring = f.ring
    key = ring.key
    heads = [(g.lm, g.lc) for g in G]
    quotients = [dict() for _ in G]
    p = dict(f.terms)
    rem = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for i, (lm, lc) in enumerate(heads):
            if _divides(lm, m):
                q = _quo(m, lm)
                coeff = c / lc
                quotients[i][q] = quotients[i].get(q, 0) + coeff
                for gm, gc in G[i].terms:
                    mm = tuple(x + y for x, y in zip(gm, q))
                    v = p.get(mm)
                    v = -coeff * gc if v is None else v - coeff * gc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                break
        else:
            rem[m] = c
            del p[m]
    return (
        [Polynomial._from_dict(ring, q) for q in quotients],
        Polynomial._from_dict(ring, rem),
    )


def _reduce(f: Polynomial, G: list) -> Polynomial:
    """Full remainder of ``f`` modulo ``G`` without quotient bookkeeping."""
    if not G or not f:
        return f
    ring = f.ring
    key = ring.key
    heads = [(g.lm, g.lc, g.terms) for g in G]
    p = dict(f.terms)
    rem = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, lc, terms in heads:
            if all(x <= y for x, y in zip(lm, m)):
                coeff = c / lc
                q = tuple(y - x for x, y in zip(lm, m))
                for gm, gc in terms:
                    mm = tuple(x + y for x, y in zip(gm, q))
                    v = p.get(mm)
                    v = -coeff * gc if v is None else v - coeff * gc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                break
        else:
            rem[m] = c
            del p[m]
    return Polynomial._from_dict(ring, rem)


def normal_form(f: Polynomial, G) -> Polynomial:
    G = list(G)
    _check_divisors(f, G)
    return _reduce(f, G)


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """``(L/LT(f))*f - (L/LT(g))*g`` with ``L = lcm(LM(f), LM(g))``."""
    if not f or not g:
        raise ValueError("S-polynomial of the zero polynomial")
    if f.ring != g.ring:
        raise ValueError("S-polynomial of polynomials from different rings")
    L = _lcm(f.lm, g.lm)
    a = f.mul_monomial(left=_quo(L, f.lm), coeff=f.ring.field.one / f.lc)
    b = g.mul_monomial(left=_quo(L, g.lm), coeff=g.ring.field.one / g.lc)
    return a - b


def _pair_degree(ring, L) -> int:
    return ring.mono_degree(L)


def buchberger(S, ring=None, reduced: bool = True, minimize: bool = True) -> GroebnerBasis:
    """Buchberger completion with the Gebauer-Möller pair update.

    Pairs are chosen by the normal strategy (smallest lcm degree, then
    creation order).  ``minimize=False`` keeps every inserted element,
    including the inputs, instead of discarding those whose leading
    monomial became redundant; ``reduced=True`` returns the reduced basis.
    """
    S = list(S)
    if ring is None:
        if not S:
            raise ValueError("ring required for an empty input")
        ring = S[0].ring
    if ring.is_free:
        raise ValueError("buchberger needs a commutative ring; use nc_complete")
    for f in S:
        if not f:
            raise ValueError("input contains the zero polynomial")
        if f.ring != ring:
            raise ValueError("input from a different ring")

    polys = []          # every element ever inserted, by index
    active = []         # indices forming the current basis
    pairs = {}          # (i, j) -> (degree, seq)
    seq = [0]

    def lm(i):
        return polys[i].lm

    def update(h_idx):
        h = lm(h_idx)
        C = [g for g in active]
        D = []
        while C:
            g1 = C.pop(0)
            L1 = _lcm(h, lm(g1))
            if _coprime(h, lm(g1)) or not any(
                _divides(_lcm(h, lm(g2)), L1) for g2 in C + D
            ):
                D.append(g1)
        E = [g for g in D if not _coprime(h, lm(g))]
        for (i, j) in list(pairs):
            L = _lcm(lm(i), lm(j))
            if (
                _divides(h, L)
                and _lcm(lm(i), h) != L
                and _lcm(lm(j), h) != L
            ):
                del pairs[(i, j)]
        for g in E:
            L = _lcm(h, lm(g))
            pairs[(g, h_idx)] = (_pair_degree(ring, L), seq[0])
            seq[0] += 1
        if minimize:
            active[:] = [g for g in active if not _divides(h, lm(g))]
        active.append(h_idx)

    def insert(h):
        polys.append(h)
        update(len(polys) - 1)

    key = ring.key
    start = sorted(set(f.monic() for f in S), key=lambda f: (key(f.lm), str(f)))
    for f in start:
        if minimize:
            h = _reduce(f, [polys[i] for i in active]).monic()
            if h:
                insert(h)
        else:
            insert(f)

    while pairs:
        (i, j) = min(pairs, key=lambda p: pairs[p])
        del pairs[(i, j)]
        s = spoly(polys[i], polys[j])
        h = _reduce(s, [polys[k] for k in active]).monic()
        if h:
            insert(h)

    G = GroebnerBasis(ring, canonical_order([polys[i] for i in active], ring), complete=True)
    if reduced:
        return reduce_basis(G)
    return G


def reduce_basis(G: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced Gröbner basis of a complete basis."""
    if not G.complete or not is_groebner(G):
        raise IncompleteBasis("reduce_basis needs a complete basis")
    ring = G.ring
    key = ring.key
    elems = sorted((g.monic() for g in G.elements), key=lambda g: (key(g.lm), str(g)))
    minimal = []
    for g in elems:
        if any(_divides(h.lm, g.lm) for h in minimal):
            continue
        minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lead = Polynomial._from_terms(ring, (g.terms[0],))
        tail = Polynomial._from_terms(ring, g.terms[1:])
        out.append(lead + _reduce(tail, others))
    return GroebnerBasis(ring, canonical_order(out, ring), reduced=True, complete=True)


def is_groebner(G, ring=None) -> CheckResult:
    """Check every S-pair of ``G`` reduces to zero.

    No pair criteria are applied, so the check stays independent of the
    completion it is used to verify.
    """
    G = list(G.elements if isinstance(G, GroebnerBasis) else G)
    for g in G:
        if not g:
            raise ValueError("basis contains the zero polynomial")
    checked = 0
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            r = _reduce(spoly(G[i], G[j]), G)
            checked += 1
            if r:
                return CheckResult(False, pair=(i, j), remainder=r, checked=checked)
    return CheckResult(True, checked=checked)


def ideal_contains(G, f: Polynomial) -> bool:
    """Membership via a complete basis ``G``."""
    G = list(G.elements if isinstance(G, GroebnerBasis) else G)
    return not _reduce(f, G)
