"""Gröbner basis containers shared by the commutative and free-algebra engines."""

from __future__ import annotations

from dataclasses import dataclass, field

from .polynomial import Polynomial
from .rings import RingDescriptor


@dataclass(frozen=True)
class GroebnerBasis:
    """A finite basis together with what is known about it.

    ``complete`` means every S-pair (obstruction) was resolved; for a basis
    truncated at ``truncation_degree`` it means no obstruction above the
    bound was left pending.
    """

    ring: RingDescriptor
    elements: tuple
    reduced: bool = False
    complete: bool = True
    truncation_degree: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        for g in self.elements:
            if not g:
                raise ValueError("a Gröbner basis cannot contain 0")
            if g.ring != self.ring:
                raise ValueError("basis element from a different ring")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def leading_monomials(self) -> list:
        return [g.lm for g in self.elements]

    @property
    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() for g in self.elements)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.elements)

    def strings(self) -> list:
        return [str(g) for g in self.elements]

    def __str__(self):
        return "{" + ", ".join(self.strings()) + "}"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a Gröbner basis check.

    Truthy iff the check passed.  On failure ``pair`` names the offending
    basis indices, ``remainder`` is the nonzero normal form and
    ``obstruction`` (free kind) the overlap that produced it.
    """

    ok: bool
    pair: tuple | None = None
    remainder: Polynomial | None = None
    obstruction: object = None
    checked: int = 0
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def canonical_order(polys, ring: RingDescriptor) -> list:
    """Sort by leading monomial descending, then by printed form."""
    key = ring.key
    return sorted(polys, key=lambda g: (_neg_key(key(g.lm)), str(g)))


class _neg_key:
    # reverses the natural order of a key so sorted() yields descending LMs
    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return self.k > other.k

    def __eq__(self, other):
        return self.k == other.k
