"""Non-central (de)homogenization between ``K<X>`` and ``K<X, T>``.

``T`` does not commute with the ``X_i``, so homogenizing a set always
adjoins the commutators ``X_i*T - T*X_i``.  Powers of ``T`` are placed on
the left of each homogeneous component.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ncgroebner import nc_divide, replay_trace
from .orderings import HOMOG_LETTER
from .polynomial import Polynomial, homogeneous_components
from .rings import RingDescriptor


@dataclass(frozen=True)
class CommutatorDecomposition:
    """``F == L + H`` with ``L`` in the commutator ideal and ``H = T^r * (F_~)^~``.

    ``trace`` expresses ``L`` explicitly as a sum of ``c*u*C[i]*v`` over
    the commutators ``C`` (see :meth:`NoncentralHomogenizer.commutators`).
    """

    L: Polynomial
    H: Polynomial
    r: int
    trace: tuple


class NoncentralHomogenizer:
    def __init__(self, base_ring: RingDescriptor, homog_var: str = "T"):
        if not base_ring.is_free:
            raise ValueError("non-central homogenization needs a free algebra")
        if base_ring.homog_var is not None:
            raise ValueError("base ring already carries a homogenizing letter")
        self.base_ring = base_ring
        self.extended_ring = base_ring.extend(homog_var)

    @classmethod
    def for_ring(cls, ring: RingDescriptor) -> "NoncentralHomogenizer":
        if ring.homog_var is not None:
            return cls(ring.base(), ring.homog_var)
        return cls(ring)

    def homogenize(self, f: Polynomial) -> Polynomial:
        if f.ring != self.base_ring:
            raise ValueError("polynomial is not over the base ring")
        if not f:
            raise ValueError("cannot homogenize the zero polynomial")
        comps = homogeneous_components(f)
        top = comps[0][0]
        acc = {}
        for d, comp in comps:
            prefix = HOMOG_LETTER * (top - d)
            for m, c in comp.terms:
                acc[prefix + m] = c
        return Polynomial._from_dict(self.extended_ring, acc)

    def dehomogenize(self, F: Polynomial) -> Polynomial:
        if F.ring != self.extended_ring:
            raise ValueError("polynomial is not over the extended ring")
        return F.map_monomials(self.base_ring, lambda m: m.replace(HOMOG_LETTER, ""))

    def commutators(self) -> list:
        """``[X_i*T - T*X_i]`` in variable order."""
        ring = self.extended_ring
        one = ring.field.one
        T = HOMOG_LETTER
        out = []
        for v in ring.variables:
            x = ring.var_monomial(v)
            out.append(Polynomial(ring, {x + T: one, T + x: -one}))
        return out

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
        for c in self.commutators():
            if c not in seen:
                seen.add(c)
                out.append(c)
        return out

    def decompose_mod_commutators(self, F: Polynomial) -> CommutatorDecomposition:
        """Split a homogeneous ``F`` as ``L + H`` by dividing by the commutators.

        Each division step rewrites some ``X_i*T`` into ``T*X_i``, so the
        remainder ``H`` has all its ``T`` letters at the front of every word.
        """
        if F.ring != self.extended_ring:
            raise ValueError("polynomial is not over the extended ring")
        if not F.is_homogeneous():
            raise ValueError("decompose_mod_commutators needs a homogeneous element")
        C = self.commutators()
        H, trace = nc_divide(F, C)
        L = replay_trace(trace, C, self.extended_ring)
        if not H:
            return CommutatorDecomposition(L, H, 0, tuple(trace))
        p = H.degree()
        q = self.dehomogenize(H).degree()
        return CommutatorDecomposition(L, H, p - q, tuple(trace))

    def t_prefix(self, m: str) -> int:
        """Number of leading ``T`` letters of a word."""
        return len(m) - len(m.lstrip(HOMOG_LETTER))


def nc_homogenize(f: Polynomial, homog_var: str = "T") -> Polynomial:
    return NoncentralHomogenizer(f.ring, homog_var).homogenize(f)


def nc_dehomogenize(F: Polynomial) -> Polynomial:
    return NoncentralHomogenizer.for_ring(F.ring).dehomogenize(F)


def nc_homogenize_set(S, ring: RingDescriptor = None, homog_var: str = "T") -> list:
    S = list(S)
    if ring is None:
        if not S:
            raise ValueError("ring required for an empty set")
        ring = S[0].ring
    return NoncentralHomogenizer(ring, homog_var).homogenize_set(S)


def commutators(ring: RingDescriptor, homog_var: str = "T") -> list:
    return NoncentralHomogenizer.for_ring(ring if ring.homog_var else ring.extend(homog_var)).commutators()
