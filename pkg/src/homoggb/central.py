"""Central (de)homogenization between ``K[x]`` and ``K[x, t]``.

``f*`` multiplies each homogeneous component of ``f`` by the power of ``t``
that lifts it to the degree of ``f``; ``F_*`` substitutes ``t = 1``.  ``t``
is central, so no auxiliary relations are needed.
"""

from __future__ import annotations

from .polynomial import Polynomial, homogeneous_components
from .rings import RingDescriptor


class CentralHomogenizer:
    """The pair of maps ``f -> f*`` and ``F -> F_*`` for one base ring."""

    def __init__(self, base_ring: RingDescriptor, homog_var: str = "t"):
        if base_ring.is_free:
            raise ValueError("central homogenization needs a commutative ring")
        if base_ring.homog_var is not None:
            raise ValueError("base ring already carries a homogenizing variable")
        self.base_ring = base_ring
        self.extended_ring = base_ring.extend(homog_var)

    @classmethod
    def for_ring(cls, ring: RingDescriptor) -> "CentralHomogenizer":
        """Homogenizer for either the base or the extended ring."""
        if ring.homog_var is not None:
            return cls(ring.base(), ring.homog_var)
        return cls(ring)

    def lift(self, m):
        """A ``t``-free base monomial viewed in the extended ring."""
        return m + (0,)

    def homogenize(self, f: Polynomial) -> Polynomial:
        if f.ring != self.base_ring:
            raise ValueError("polynomial is not over the base ring")
        if not f:
            raise ValueError("cannot homogenize the zero polynomial")
        comps = homogeneous_components(f)
        top = comps[0][0]
        acc = {}
        for d, comp in comps:
            r = top - d
            for m, c in comp.terms:
                acc[m + (r,)] = c
        return Polynomial._from_dict(self.extended_ring, acc)

    def dehomogenize(self, F: Polynomial) -> Polynomial:
        if F.ring != self.extended_ring:
            raise ValueError("polynomial is not over the extended ring")
        return F.map_monomials(self.base_ring, lambda m: m[:-1])

    def homogenize_set(self, S) -> list:
        out = []
        seen = set()
        for f in S:
            if not f:
                raise ValueError("cannot homogenize a set containing 0")
            h = self.homogenize(f)
            if h not in seen:
                seen.add(h)
                out.append(h)
        return out

    def dehomogenize_monomial(self, m):
        return m[:-1]

    def t_power(self, m) -> int:
        return m[-1]


def central_homogenize(f: Polynomial, homog_var: str = "t") -> Polynomial:
    return CentralHomogenizer(f.ring, homog_var).homogenize(f)


def central_dehomogenize(F: Polynomial) -> Polynomial:
    return CentralHomogenizer.for_ring(F.ring).dehomogenize(F)


def homogenize_set(S, ring: RingDescriptor = None, homog_var: str = "t") -> list:
    S = list(S)
    if ring is None:
        if not S:
            raise ValueError("ring required for an empty set")
        ring = S[0].ring
    return CentralHomogenizer(ring, homog_var).homogenize_set(S)
