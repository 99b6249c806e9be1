"""Moving whole Gröbner bases across (de)homogenization.

The central transfers work in ``K[x] <-> K[x, t]`` and are exact.  The
free-algebra transfers work in ``K<X> <-> K<X, T>`` up to a degree bound,
since free-algebra bases need not be finite.

Both computing procedures run the same three steps:

1. complete the homogenized generators (plus commutators in the free case);
2. dehomogenize that basis, which gives a basis of the original ideal;
3. homogenize the result, which gives a basis of the homogenization ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .basis import GroebnerBasis, canonical_order
from .central import CentralHomogenizer
from .groebner import IncompleteBasis, _divides, _reduce, buchberger, is_groebner, reduce_basis
from .ncgroebner import _reduce as _nc_reduce
from .ncgroebner import is_nc_groebner, nc_complete, reduce_nc_basis
from .noncentral import NoncentralHomogenizer
from .orderings import HOMOG_LETTER
from .rings import RingDescriptor


class HypothesisViolation(ValueError):
    """A transfer was asked to run outside the hypotheses that make it valid."""


def _dedupe(polys) -> list:
    seen = set()
    out = []
    for p in polys:
        if p and p not in seen:
            seen.add(p)
            out.append(p)
    return out


# -- central ---------------------------------------------------------------


def homogenize_gb_central(G: GroebnerBasis, homog_var: str = "t") -> GroebnerBasis:
    """``{g* : g in G}``, a basis of ``<I*>`` whenever ``G`` is one of ``I``."""
    if G.ring.is_free or G.ring.homog_var is not None:
        raise ValueError("expected a basis over a commutative ring without t")
    if not is_groebner(G):
        raise IncompleteBasis("input is not a Gröbner basis")
    h = CentralHomogenizer(G.ring, homog_var)
    out = GroebnerBasis(
        h.extended_ring,
        canonical_order(_dedupe(h.homogenize(g) for g in G), h.extended_ring),
        reduced=G.reduced,
        complete=True,
    )
    return out


def dehomogenize_gb_central(G: GroebnerBasis) -> GroebnerBasis:
    """``{g_* : g in G}`` for a homogeneous basis ``G`` of a graded ideal."""
    if G.ring.is_free or G.ring.homog_var is None:
        raise ValueError("expected a basis over K[x, t]")
    if not G.is_homogeneous():
        raise HypothesisViolation("basis has a non-homogeneous element")
    if not G.complete or not is_groebner(G):
        raise IncompleteBasis("input is not a Gröbner basis")
    h = CentralHomogenizer.for_ring(G.ring)
    images = _dedupe(h.dehomogenize(g) for g in G)
    return GroebnerBasis(h.base_ring, canonical_order(images, h.base_ring), complete=True)


@dataclass(frozen=True)
class CentralPipeline:
    """Every intermediate of the central procedure.

    ``step1`` is the homogeneous basis of ``<S*>``, ``step2`` its
    dehomogenization (a basis of ``I``), ``gb_of_I`` the reduced form of
    ``step2`` and ``gb_of_I_star`` its homogenization (a basis of ``<I*>``).
    """

    generators: tuple
    homogenized: tuple
    step1: GroebnerBasis
    step2: GroebnerBasis
    gb_of_I: GroebnerBasis
    gb_of_I_star: GroebnerBasis
    unit_ideal: bool = False


def gb_via_central_homogenization(S, ring: RingDescriptor = None, homog_var: str = "t",
                                  reduced: bool = True) -> CentralPipeline:
    S = list(S)
    if ring is None:
        if not S:
            raise ValueError("ring required for an empty input")
        ring = S[0].ring
    for f in S:
        if not f:
            raise ValueError("input contains the zero polynomial")
    h = CentralHomogenizer(ring, homog_var)
    S_star = h.homogenize_set(S)
    step1 = buchberger(S_star, ring=h.extended_ring, reduced=reduced, minimize=reduced)
    step2 = dehomogenize_gb_central(step1)
    gb_I = reduce_basis(step2)
    unit = gb_I.is_unit_ideal
    step3 = homogenize_gb_central(gb_I, homog_var)
    return CentralPipeline(tuple(S), tuple(S_star), step1, step2, gb_I, step3, unit)


# -- non-central -----------------------------------------------------------


def homogenize_gb_noncentral(G: GroebnerBasis, max_degree: int = None,
                             homog_var: str = "T") -> GroebnerBasis:
    """``{g~ : g in G}`` plus all commutators, checked up to ``max_degree``."""
    ring = G.ring
    if not ring.is_free or ring.homog_var is not None:
        raise ValueError("expected a basis over a free algebra without T")
    if max_degree is None:
        max_degree = G.truncation_degree
    if max_degree is None:
        raise ValueError("max_degree required")
    if not is_nc_groebner(G, max_degree):
        raise IncompleteBasis(f"input is not a Gröbner basis up to degree {max_degree}")
    h = NoncentralHomogenizer(ring, homog_var)
    elems = _dedupe([h.homogenize(g) for g in G] + h.commutators())
    return GroebnerBasis(
        h.extended_ring,
        canonical_order(elems, h.extended_ring),
        complete=G.complete,
        truncation_degree=max_degree,
    )


def dehomogenize_gb_noncentral(G: GroebnerBasis, max_degree: int = None) -> GroebnerBasis:
    """``{g_~ : g in G}`` with zeros dropped.

    The graded ideal must contain every commutator; this is checked by
    reducing each commutator modulo ``G``.
    """
    ring = G.ring
    if not ring.is_free or ring.homog_var is None:
        raise ValueError("expected a basis over K<X, T>")
    if max_degree is None:
        max_degree = G.truncation_degree
    if max_degree is None:
        raise ValueError("max_degree required")
    if not G.is_homogeneous():
        raise HypothesisViolation("basis has a non-homogeneous element")
    h = NoncentralHomogenizer.for_ring(ring)
    elems = list(G)
    for c in h.commutators():
        if _nc_reduce(c, elems):
            raise HypothesisViolation(f"commutator {c} is not in the ideal")
    if not is_nc_groebner(elems, max_degree):
        raise IncompleteBasis(f"input is not a Gröbner basis up to degree {max_degree}")
    images = _dedupe(h.dehomogenize(g) for g in elems)
    trusted = max_degree
    if not G.complete:
        # an element f of I may sit in the graded ideal only as T^r f~ with
        # deg f + r above the bound, so the images can be trusted to a lower degree
        trusted = _trusted_degree(images, max_degree)
    elif not is_nc_groebner(images, max_degree):
        raise IncompleteBasis(f"dehomogenized basis fails the check at degree {max_degree}")
    return GroebnerBasis(
        h.base_ring,
        canonical_order(images, h.base_ring),
        complete=G.complete,
        truncation_degree=trusted,
    )


def _trusted_degree(elems, max_degree: int) -> int:
    """Largest ``d <= max_degree`` at which ``elems`` pass the obstruction check.

    Passing at ``d`` implies passing at every smaller bound, so a binary
    search suffices.
    """
    if is_nc_groebner(elems, max_degree):
        return max_degree
    lo, hi = 0, max_degree  # pass at lo (vacuous), fail at hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if is_nc_groebner(elems, mid):
            lo = mid
        else:
            hi = mid
    if lo < 1:
        raise IncompleteBasis(
            f"truncation at degree {max_degree} is too low to certify any degree; raise the bound")
    return lo


@dataclass(frozen=True)
class NoncentralPipeline:
    generators: tuple
    homogenized: tuple
    step1: GroebnerBasis
    step2: GroebnerBasis
    gb_of_I: GroebnerBasis
    gb_of_I_tilde: GroebnerBasis
    max_degree: int
    unit_ideal: bool = False

    @property
    def complete(self) -> bool:
        return self.step1.complete


def gb_via_nc_homogenization(S, max_degree: int, ring: RingDescriptor = None,
                             homog_var: str = "T", interreduce: bool = True) -> NoncentralPipeline:
    S = list(S)
    if ring is None:
        if not S:
            raise ValueError("ring required for an empty input")
        ring = S[0].ring
    for f in S:
        if not f:
            raise ValueError("input contains the zero polynomial")
    h = NoncentralHomogenizer(ring, homog_var)
    S_tilde = h.homogenize_set(S)
    step1 = nc_complete(S_tilde, max_degree, ring=h.extended_ring, interreduce=interreduce)
    step2 = dehomogenize_gb_noncentral(step1, max_degree)
    gb_I = reduce_nc_basis(step2)
    unit = gb_I.is_unit_ideal
    step3 = homogenize_gb_noncentral(gb_I, gb_I.truncation_degree, homog_var)
    return NoncentralPipeline(tuple(S), tuple(S_tilde), step1, step2, gb_I, step3, max_degree, unit)


# -- comparing ideals --------------------------------------------------------


def _reducer(ring):
    return _nc_reduce if ring.is_free else _reduce


def strict_inclusion_witness(smaller: GroebnerBasis, larger: GroebnerBasis, max_degree: int = None):
    """An element of ``larger`` outside the ideal of ``smaller``, lowest degree first.

    ``smaller`` must be a Gröbner basis (up to ``max_degree`` in the free
    case) for the answer to be meaningful.  Returns ``None`` if every element
    of ``larger`` (of degree at most ``max_degree``) reduces to zero.
    """
    if smaller.ring != larger.ring:
        raise ValueError("bases over different rings")
    red = _reducer(smaller.ring)
    elems = sorted(larger, key=lambda g: (g.degree(), str(g)))
    for g in elems:
        if max_degree is not None and g.degree() > max_degree:
            continue
        if red(g, list(smaller)):
            return g
    return None


def lm_ideal_profile(G: GroebnerBasis, max_degree: int) -> list:
    """Number of monomials in ``<LM(G)>`` in each degree ``0..max_degree``."""
    ns = normal_monomials(G, max_degree)
    total = [len(G.ring.monomials_of_degree(d)) for d in range(max_degree + 1)]
    return [total[d] - len(ns.by_degree[d]) for d in range(max_degree + 1)]


def same_lm_ideal(G1: GroebnerBasis, G2: GroebnerBasis, max_degree: int):
    """First degree where the leading-monomial ideals differ, or ``None``."""
    if G1.ring != G2.ring:
        raise ValueError("bases over different rings")
    n1 = normal_monomials(G1, max_degree)
    n2 = normal_monomials(G2, max_degree)
    for d in range(max_degree + 1):
        if n1.by_degree[d] != n2.by_degree[d]:
            return d
    return None


# -- normal monomials --------------------------------------------------------


@dataclass(frozen=True)
class NormalSet:
    """Monomials outside ``<LM(G)>``, listed per degree in ascending order."""

    basis: GroebnerBasis
    max_degree: int
    by_degree: dict = field(default_factory=dict)

    @property
    def ring(self):
        return self.basis.ring

    def counts(self) -> list:
        return [len(self.by_degree[d]) for d in range(self.max_degree + 1)]

    def strings(self) -> dict:
        fmt = self.ring.format_monomial
        return {d: [fmt(m) for m in ms] for d, ms in self.by_degree.items()}


def normal_monomials(G: GroebnerBasis, max_degree: int) -> NormalSet:
    if max_degree < 0:
        raise ValueError("degree bound must be nonnegative")
    if (not G.complete and G.truncation_degree is not None
            and max_degree > G.truncation_degree):
        raise ValueError(
            f"degree bound {max_degree} exceeds the trusted truncation {G.truncation_degree}"
        )
    ring = G.ring
    lms = [g.lm for g in G]
    by_degree = {}
    if ring.is_free:
        letters = [(ring.var_monomial(v), w) for v, w in zip(ring.variables, ring.weights)]
        if ring.homog_var is not None:
            letters.append((HOMOG_LETTER, 1))
        for d in range(max_degree + 1):
            if d == 0:
                words = [] if any(lm == "" for lm in lms) else [""]
            else:
                words = []
                for c, w in letters:
                    if w > d:
                        continue
                    for rest in by_degree[d - w]:
                        word = c + rest
                        # occurrences inside `rest` are already excluded
                        if not any(word.startswith(lm) for lm in lms):
                            words.append(word)
            words.sort(key=ring.key)
            by_degree[d] = words
    else:
        for d in range(max_degree + 1):
            by_degree[d] = [
                m for m in ring.monomials_of_degree(d)
                if not any(_divides(lm, m) for lm in lms)
            ]
    return NormalSet(G, max_degree, by_degree)


@dataclass(frozen=True)
class CorrespondenceReport:
    ok: bool
    base_counts: list
    ext_counts: list
    mismatch: tuple | None = None

    def __bool__(self):
        return self.ok


def check_normal_correspondence(n_base: NormalSet, n_ext: NormalSet) -> CorrespondenceReport:
    """Compare ``N(<I~>)_d`` (or ``N(<I*>)_d``) with ``{T^(d-e) w : w in N(I)_e}``.

    Returns a report whose ``mismatch`` is ``(degree, missing, extra)`` at the
    first degree where the two sides differ.
    """
    base, ext = n_base.ring, n_ext.ring
    if base.homog_var is not None or ext.homog_var is None or ext.base() != base:
        raise ValueError("mismatched bases: expected N over a ring and over its extension")
    D = min(n_base.max_degree, n_ext.max_degree)
    if ext.is_free:
        def embed(w, r):
            return HOMOG_LETTER * r + w
    else:
        def embed(w, r):
            return w + (r,)
    mismatch = None
    for d in range(D + 1):
        expected = {embed(w, d - e) for e in range(d + 1) for w in n_base.by_degree[e]}
        actual = set(n_ext.by_degree[d])
        if expected != actual:
            fmt = ext.format_monomial
            mismatch = (
                d,
                sorted(fmt(m) for m in expected - actual),
                sorted(fmt(m) for m in actual - expected),
            )
            break
    return CorrespondenceReport(
        mismatch is None,
        [len(n_base.by_degree[d]) for d in range(D + 1)],
        [len(n_ext.by_degree[d]) for d in range(D + 1)],
        mismatch,
    )
