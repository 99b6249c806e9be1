"""Independent reference implementations used to cross-check the library.

Everything here works on variable *names* rather than the library's internal
monomial encoding, and spells each rule out in the most direct way.
"""

from fractions import Fraction
from itertools import product


def to_named(f):
    """``{monomial-by-names: Fraction}``; commutative monomials are sorted
    ``(name, exponent)`` tuples, free ones tuples of letter names."""
    ring = f.ring
    out = {}
    for m, c in f.terms:
        if ring.is_free:
            key = tuple(ring.names_of(m))
        else:
            key = tuple(sorted((n, e) for n, e in zip(ring.all_names, m) if e))
        out[key] = Fraction(c)
    return out


def named_add(a, b):
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0) + c
        if out[k] == 0:
            del out[k]
    return out


def _comm_mono_mul(u, v):
    acc = dict(u)
    for n, e in v:
        acc[n] = acc.get(n, 0) + e
    return tuple(sorted(acc.items()))


def named_mul(a, b, free):
    out = {}
    for (u, cu), (v, cv) in product(a.items(), b.items()):
        k = u + v if free else _comm_mono_mul(u, v)
        out[k] = out.get(k, 0) + cu * cv
        if out[k] == 0:
            del out[k]
    return out


def degree(m, weights, free):
    if free:
        return sum(weights.get(n, 1) for n in m)
    return sum(weights.get(n, 1) * e for n, e in m)


def compare_named(u, v, precedence, weights, free, homog=None):
    """-1/0/1 for ``u`` vs ``v``.  ``precedence`` lists names highest first;
    ``homog`` (if given) is the lowest letter, weight 1, and for the
    commutative case ``t`` is compared last (the t-gr rule)."""
    if not free and homog is not None:
        tu = dict(u).get(homog, 0)
        tv = dict(v).get(homog, 0)
        wu = tuple((n, e) for n, e in u if n != homog)
        wv = tuple((n, e) for n, e in v if n != homog)
        c = compare_named(wu, wv, precedence, weights, free)
        if c:
            return c
        return (tu > tv) - (tu < tv)
    du, dv = degree(u, weights, free), degree(v, weights, free)
    if du != dv:
        return -1 if du < dv else 1
    if free:
        rank = {n: i for i, n in enumerate(precedence)}
        if homog is not None:
            rank[homog] = len(precedence)
        for a, b in zip(u, v):
            if a != b:
                # earlier in the precedence list is larger
                return 1 if rank[a] < rank[b] else -1
        return (len(u) > len(v)) - (len(u) < len(v))
    eu, ev = dict(u), dict(v)
    for n in precedence:
        a, b = eu.get(n, 0), ev.get(n, 0)
        if a != b:
            return 1 if a > b else -1
    return 0


def leading_named(p, precedence, weights, free, homog=None):
    best = None
    for m in p:
        if best is None or compare_named(m, best, precedence, weights, free, homog) > 0:
            best = m
    return best


def max_degree_part(p, weights, free):
    """Leading homogeneous part by filtering to the maximal degree."""
    if not p:
        return {}
    top = max(degree(m, weights, free) for m in p)
    return {m: c for m, c in p.items() if degree(m, weights, free) == top}


def substitute_one(p, name, free):
    """Dehomogenization oracle: ``name := 1`` / delete the letter."""
    out = {}
    for m, c in p.items():
        if free:
            k = tuple(n for n in m if n != name)
        else:
            k = tuple((n, e) for n, e in m if n != name)
        out[k] = out.get(k, 0) + c
        if out[k] == 0:
            del out[k]
    return out


def homogenize_named(p, name, weights, free):
    """Homogenization oracle: pad each term up to the top degree."""
    top = max(degree(m, weights, free) for m in p)
    out = {}
    for m, c in p.items():
        r = top - degree(m, weights, free)
        if free:
            k = (name,) * r + m
        else:
            k = tuple(sorted(m + ((name, r),) if r else m))
        out[k] = c
    return out
