"""Reproducible random polynomials and ideals for property suites.

Polynomials are sparse: 1 to ``max_terms`` distinct monomials drawn
uniformly from all monomials of degree at most ``max_degree``, each with a
coefficient drawn uniformly from ``{-c..c} \\ {0}``.  The seed defaults to
:data:`DEFAULT_SEED` and can be overridden with ``HOMOGGB_SEED``.
"""

from __future__ import annotations

import os
import random

from .polynomial import Polynomial, homogeneous_components
from .rings import RingDescriptor

DEFAULT_SEED = 20100702
SEED_ENV = "HOMOGGB_SEED"


def seed_from_env(default: int = DEFAULT_SEED) -> int:
    value = os.environ.get(SEED_ENV)
    return int(value) if value else default


def make_rng(seed: int = None) -> random.Random:
    return random.Random(seed_from_env() if seed is None else seed)


def _monomials_up_to(ring: RingDescriptor, max_degree: int, min_degree: int = 0) -> list:
    out = []
    for d in range(min_degree, max_degree + 1):
        out.extend(ring.monomials_of_degree(d))
    return out


def random_polynomial(rng: random.Random, ring: RingDescriptor, max_terms: int = 4,
                      max_degree: int = 3, coeff_bound: int = 3, homogeneous_degree: int = None,
                      min_degree: int = 0) -> Polynomial:
    """A nonzero random polynomial; homogeneous of the given degree if requested."""
    if homogeneous_degree is not None:
        pool = ring.monomials_of_degree(homogeneous_degree)
    else:
        pool = _monomials_up_to(ring, max_degree, min_degree)
    k = rng.randint(1, min(max_terms, len(pool)))
    coeffs = [c for c in range(-coeff_bound, coeff_bound + 1) if c]
    terms = {m: rng.choice(coeffs) for m in rng.sample(pool, k)}
    return Polynomial(ring, terms)


def random_ideal(rng: random.Random, ring: RingDescriptor, max_gens: int = 3, **kw) -> list:
    """1 to ``max_gens`` random nonconstant generators."""
    n = rng.randint(1, max_gens)
    kw.setdefault("min_degree", 1)
    return [random_polynomial(rng, ring, **kw) for _ in range(n)]


def random_element_of(rng: random.Random, generators: list, max_terms: int = 3,
                      max_degree: int = 2, coeff_bound: int = 3) -> Polynomial:
    """A random combination ``sum(a_i * g_i * b_i)`` of the generators."""
    ring = generators[0].ring
    acc = Polynomial.zero(ring)
    for g in generators:
        a = random_polynomial(rng, ring, max_terms, max_degree, coeff_bound)
        if ring.is_free:
            b = random_polynomial(rng, ring, max_terms, max_degree, coeff_bound)
            acc = acc + a * g * b
        else:
            acc = acc + a * g
    return acc


def random_homogeneous_element(rng: random.Random, generators: list, **kw) -> Polynomial:
    """A homogeneous component of a random ideal element.

    Only meaningful for homogeneous generators, where every component of an
    ideal element lies in the ideal again.
    """
    while True:
        f = random_element_of(rng, generators, **kw)
        if f:
            comps = homogeneous_components(f)
            return rng.choice(comps)[1]
