"""Seeded randomized checks of the homogenization invariants and basis transfer results.

Each suite returns a :class:`SuiteReport` whose ``log`` lists one line per
sample outcome class; rerunning with the same seed reproduces the log
byte for byte.  Random streams are derived from ``(seed, suite name)`` so
suites do not perturb one another.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .central import CentralHomogenizer
from .groebner import _reduce as _comm_reduce
from .groebner import buchberger, is_groebner, reduce_basis
from .ncgroebner import _reduce as _nc_reduce
from .ncgroebner import is_nc_groebner, nc_complete
from .noncentral import NoncentralHomogenizer
from .orderings import HOMOG_LETTER
from .pipeline import (
    check_normal_correspondence,
    dehomogenize_gb_central,
    gb_via_central_homogenization,
    gb_via_nc_homogenization,
    homogenize_gb_central,
    normal_monomials,
)
from .basis import GroebnerBasis
from .polynomial import Polynomial, homogeneous_components, lh
from .rings import free_algebra, polynomial_ring
from .sampling import (
    DEFAULT_SEED,
    random_element_of,
    random_homogeneous_element,
    random_ideal,
    random_polynomial,
)

COMM_RINGS = (polynomial_ring(("x", "y")), polynomial_ring(("x", "y", "z")))
FREE_RINGS = (free_algebra(("X", "Y")), free_algebra(("X", "Y", "Z")))


@dataclass
class SuiteReport:
    name: str
    samples: int = 0
    failures: int = 0
    log: list = field(default_factory=list)
    first_failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.samples > 0

    def record(self, ok: bool, detail: str = ""):
        self.samples += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = detail
        self.log.append(f"{self.name} #{self.samples}: {'pass' if ok else 'FAIL ' + detail}")

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.samples} samples, {self.failures} failures"


def suite_rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def _comm_ring(rng):
    return rng.choice(COMM_RINGS)


def _t_power(ring, r: int) -> Polynomial:
    return Polynomial(ring, {ring.homog_power(r): ring.field.one})


# -- central invariants ------------------------------------------------------


def dehom_ring_map(seed=DEFAULT_SEED, samples=1000) -> SuiteReport:
    rep = SuiteReport("dehom-ring-map")
    rng = suite_rng(seed, rep.name)
    for _ in range(samples):
        h = CentralHomogenizer(_comm_ring(rng))
        E = h.extended_ring
        F = random_polynomial(rng, E, max_terms=4, max_degree=3)
        G = random_polynomial(rng, E, max_terms=4, max_degree=3)
        d = h.dehomogenize
        ok = d(F + G) == d(F) + d(G) and d(F * G) == d(F) * d(G)
        rep.record(ok, f"F={F} G={G}")
    return rep


def dehom_inverts_hom(seed=DEFAULT_SEED, samples=1000) -> SuiteReport:
    rep = SuiteReport("dehom-inverts-hom")
    rng = suite_rng(seed, rep.name)
    for _ in range(samples):
        R = _comm_ring(rng)
        h = CentralHomogenizer(R)
        f = random_polynomial(rng, R, max_terms=5, max_degree=4)
        rep.record(h.dehomogenize(h.homogenize(f)) == f, f"f={f}")
    return rep


def rehom_t_power(seed=DEFAULT_SEED, samples=1000) -> SuiteReport:
    rep = SuiteReport("rehom-t-power")
    rng = suite_rng(seed, rep.name)
    for _ in range(samples):
        h = CentralHomogenizer(_comm_ring(rng))
        E = h.extended_ring
        p = rng.randint(0, 4)
        F = random_polynomial(rng, E, max_terms=4, homogeneous_degree=p)
        back = h.homogenize(h.dehomogenize(F))
        q = back.degree()
        ok = p >= q and _t_power(E, p - q) * back == F
        rep.record(ok, f"F={F}")
    return rep


def hom_product(seed=DEFAULT_SEED, samples=1000) -> SuiteReport:
    rep = SuiteReport("hom-product")
    rng = suite_rng(seed, rep.name)
    for _ in range(samples):
        R = _comm_ring(rng)
        h = CentralHomogenizer(R)
        f = random_polynomial(rng, R, max_terms=4, max_degree=3)
        g = random_polynomial(rng, R, max_terms=4, max_degree=3)
        prod_star = h.homogenize(f) * h.homogenize(g)
        m = lh(f * g).degree()
        q = lh(prod_star).degree()
        ok = prod_star == _t_power(h.extended_ring, q - m) * h.homogenize(f * g)
        rep.record(ok, f"f={f} g={g}")
    return rep


def hom_sum(seed=DEFAULT_SEED, samples=1000) -> SuiteReport:
    """Sum rule; when equal-degree leading parts cancel the sum drops degree
    and the identity holds with the extra ``t`` power that accounts for it."""
    rep = SuiteReport("hom-sum")
    rng = suite_rng(seed, rep.name)
    for _ in range(samples):
        R = _comm_ring(rng)
        h = CentralHomogenizer(R)
        E = h.extended_ring
        f = random_polynomial(rng, R, max_terms=4, max_degree=3)
        g = random_polynomial(rng, R, max_terms=4, max_degree=3)
        if rng.random() < 0.3:
            # force equal top degree, sometimes with cancellation
            g = g + (-lh(f) if rng.random() < 0.5 else lh(f))
            if not g:
                g = lh(f)
        p, q = f.degree(), g.degree()
        if p < q:
            f, g, p, q = g, f, q, p
        s = f + g
        if not s:
            ok = h.homogenize(f) + _t_power(E, p - q) * h.homogenize(g) == Polynomial.zero(E)
        elif p > q:
            ok = h.homogenize(s) == h.homogenize(f) + _t_power(E, p - q) * h.homogenize(g)
        else:
            lhs = h.homogenize(f) + h.homogenize(g)
            ok = lhs == _t_power(E, p - s.degree()) * h.homogenize(s)
        rep.record(ok, f"f={f} g={g}")
    return rep


def leading_part_lm(seed=DEFAULT_SEED, samples=1000) -> SuiteReport:
    rep = SuiteReport("leading-part-lm")
    rng = suite_rng(seed, rep.name)
    for _ in range(samples):
        f = random_polynomial(rng, _comm_ring(rng), max_terms=5, max_degree=4)
        rep.record(f.lm == lh(f).lm, f"f={f}")
    return rep


def hom_keeps_lm(seed=DEFAULT_SEED, samples=1000) -> SuiteReport:
    rep = SuiteReport("hom-keeps-lm")
    rng = suite_rng(seed, rep.name)
    for _ in range(samples):
        R = _comm_ring(rng)
        h = CentralHomogenizer(R)
        f = random_polynomial(rng, R, max_terms=5, max_degree=4)
        F = h.homogenize(f)
        # identify t-free monomials across the two rings
        rep.record(h.dehomogenize_monomial(F.lm) == f.lm and h.t_power(F.lm) == 0, f"f={f}")
    return rep


def dehom_keeps_lm(seed=DEFAULT_SEED, samples=1000) -> SuiteReport:
    rep = SuiteReport("dehom-keeps-lm")
    rng = suite_rng(seed, rep.name)
    for _ in range(samples):
        h = CentralHomogenizer(_comm_ring(rng))
        F = random_polynomial(rng, h.extended_ring, max_terms=4,
                              homogeneous_degree=rng.randint(0, 4))
        Fs = h.dehomogenize(F)
        ok = bool(Fs) and Fs.lm == h.dehomogenize_monomial(F.lm)
        rep.record(ok, f"F={F}")
    return rep


def homogeneous_ideal_elements(seed=DEFAULT_SEED, samples=200) -> SuiteReport:
    """Homogeneous elements of ``<I*>`` have the form ``t^r f*`` with ``f`` in ``I``."""
    rep = SuiteReport("homogeneous-ideal-elements")
    rng = suite_rng(seed, rep.name)
    for _ in range(samples):
        R = _comm_ring(rng)
        h = CentralHomogenizer(R)
        S = random_ideal(rng, R, max_gens=2, max_degree=2)
        G = buchberger(S)
        G_star = list(homogenize_gb_central(G))
        F = random_homogeneous_element(rng, G_star, max_terms=2, max_degree=2)
        f = h.dehomogenize(F)
        if not F:
            rep.record(True)
            continue
        r = F.degree() - h.homogenize(f).degree()
        ok = (r >= 0 and F == _t_power(h.extended_ring, r) * h.homogenize(f)
              and not _comm_reduce(f, list(G)))
        rep.record(ok, f"S={[str(s) for s in S]} F={F}")
    return rep


def graded_lift(seed=DEFAULT_SEED, samples=200) -> SuiteReport:
    """Every ``h`` in ``J_*`` of a graded ``J`` lifts to a homogeneous ``F`` in ``J``."""
    rep = SuiteReport("graded-lift")
    rng = suite_rng(seed, rep.name)
    for _ in range(samples):
        R = _comm_ring(rng)
        hom = CentralHomogenizer(R)
        E = hom.extended_ring
        J_gens = [random_polynomial(rng, E, max_terms=3, homogeneous_degree=rng.randint(1, 3))
                  for _ in range(rng.randint(1, 2))]
        J = buchberger(J_gens)
        F = random_element_of(rng, J_gens, max_terms=2, max_degree=2)
        if not F:
            rep.record(True)
            continue
        h = hom.dehomogenize(F)
        comps = homogeneous_components(F)
        p = comps[0][0]
        H = Polynomial.zero(E)
        for d, comp in comps:
            H = H + _t_power(E, p - d) * comp
        ok = H.is_homogeneous() and hom.dehomogenize(H) == h and not _comm_reduce(H, list(J))
        rep.record(ok, f"F={F}")
    return rep


# -- non-central invariants --------------------------------------------------


def _free_pair(rng):
    R = rng.choice(FREE_RINGS)
    return R, NoncentralHomogenizer(R)


def nc_dehom_ring_map(seed=DEFAULT_SEED, samples=1000) -> SuiteReport:
    rep = SuiteReport("nc-dehom-ring-map")
    rng = suite_rng(seed, rep.name)
    for _ in range(samples):
        _, h = _free_pair(rng)
        E = h.extended_ring
        F = random_polynomial(rng, E, max_terms=4, max_degree=3)
        G = random_polynomial(rng, E, max_terms=4, max_degree=3)
        d = h.dehomogenize
        ok = d(F + G) == d(F) + d(G) and d(F * G) == d(F) * d(G)
        rep.record(ok, f"F={F} G={G}")
    return rep


def nc_dehom_inverts_hom(seed=DEFAULT_SEED, samples=1000) -> SuiteReport:
    rep = SuiteReport("nc-dehom-inverts-hom")
    rng = suite_rng(seed, rep.name)
    for _ in range(samples):
        R, h = _free_pair(rng)
        f = random_polynomial(rng, R, max_terms=5, max_degree=4)
        rep.record(h.dehomogenize(h.homogenize(f)) == f, f"f={f}")
    return rep


def _t_prefixed(H: Polynomial) -> bool:
    return all(HOMOG_LETTER not in m.lstrip(HOMOG_LETTER) for m in H.monomials())


def commutator_decomposition(seed=DEFAULT_SEED, samples=1000) -> SuiteReport:
    """``F = L + T^r (F_~)^~`` with ``L`` in the commutator ideal, ``H`` unique."""
    rep = SuiteReport("commutator-decomposition")
    rng = suite_rng(seed, rep.name)
    for _ in range(samples):
        R, h = _free_pair(rng)
        E = h.extended_ring
        F = random_polynomial(rng, E, max_terms=4, homogeneous_degree=rng.randint(1, 4))
        dec = h.decompose_mod_commutators(F)
        C = h.commutators()
        Fs = h.dehomogenize(F)
        if Fs:
            expected_H = Polynomial(E, {HOMOG_LETTER * dec.r: 1}) * h.homogenize(Fs)
        else:
            expected_H = Polynomial.zero(E)
        permuted = list(C)
        rng.shuffle(permuted)
        H2 = _nc_reduce(F, permuted)
        ok = (F == dec.L + dec.H
              and not _nc_reduce(dec.L, C)
              and dec.H == expected_H
              and _t_prefixed(dec.H)
              and H2 == dec.H)
        rep.record(ok, f"F={F}")
    return rep


def nc_leading_part_lm(seed=DEFAULT_SEED, samples=1000) -> SuiteReport:
    rep = SuiteReport("nc-leading-part-lm")
    rng = suite_rng(seed, rep.name)
    for _ in range(samples):
        R, h = _free_pair(rng)
        ring = R if rng.random() < 0.5 else h.extended_ring
        f = random_polynomial(rng, ring, max_terms=5, max_degree=4)
        rep.record(f.lm == lh(f).lm, f"f={f}")
    return rep


def nc_hom_keeps_lm(seed=DEFAULT_SEED, samples=1000) -> SuiteReport:
    rep = SuiteReport("nc-hom-keeps-lm")
    rng = suite_rng(seed, rep.name)
    for _ in range(samples):
        R, h = _free_pair(rng)
        f = random_polynomial(rng, R, max_terms=5, max_degree=4)
        # words without T are encoded identically in both algebras
        rep.record(h.homogenize(f).lm == f.lm, f"f={f}")
    return rep


def nc_dehom_keeps_lm(seed=DEFAULT_SEED, samples=1000) -> SuiteReport:
    """Sampled as commutator normal forms ``H`` and as raw ``F`` whose leading
    word has no ``X_i T`` subword."""
    rep = SuiteReport("nc-dehom-keeps-lm")
    rng = suite_rng(seed, rep.name)
    done = 0
    while done < samples:
        R, h = _free_pair(rng)
        E = h.extended_ring
        F = random_polynomial(rng, E, max_terms=4, homogeneous_degree=rng.randint(1, 4))
        if done % 2 == 0:
            F = h.decompose_mod_commutators(F).H
            if not F:
                continue
        lm = F.lm
        if HOMOG_LETTER in lm.lstrip(HOMOG_LETTER):
            continue
        done += 1
        r = h.t_prefix(lm)
        w = lm[r:]
        Fs = h.dehomogenize(F)
        ok = bool(Fs) and Fs.lm == w == lm.replace(HOMOG_LETTER, "")
        rep.record(ok, f"F={F}")
    return rep


INVARIANT_SUITES = (
    dehom_ring_map, dehom_inverts_hom, rehom_t_power, hom_product, hom_sum,
    leading_part_lm, hom_keeps_lm, dehom_keeps_lm,
    nc_dehom_ring_map, nc_dehom_inverts_hom, commutator_decomposition,
    nc_leading_part_lm, nc_hom_keeps_lm, nc_dehom_keeps_lm,
)


# -- basis transfer -------------------------------------------------------


def random_comm_ideals(seed=DEFAULT_SEED, count=100, name="comm-ideals") -> list:
    """``count`` generating sets: 2-3 variables, 1-3 generators, degree <= 3."""
    rng = suite_rng(seed, name)
    return [random_ideal(rng, _comm_ring(rng), max_gens=3, max_degree=3, coeff_bound=3)
            for _ in range(count)]


def gb_transfer_central(seed=DEFAULT_SEED, count=100, non_gb=20) -> SuiteReport:
    """``G`` is a basis of ``I`` iff ``G*`` is one of ``<I*>``."""
    rep = SuiteReport("gb-transfer-central")
    for S in random_comm_ideals(seed, count):
        G = buchberger(S)
        for variant in (G, buchberger(S, reduced=False, minimize=False)):
            h = CentralHomogenizer(variant.ring)
            star = [h.homogenize(g) for g in variant]
            rep.record(is_groebner(variant).ok and is_groebner(star).ok,
                       f"S={[str(s) for s in S]}")
    rng = suite_rng(seed, "gb-transfer-central-non-gb")
    found = 0
    while found < non_gb:
        R = _comm_ring(rng)
        S = random_ideal(rng, R, max_gens=3, max_degree=3, coeff_bound=3)
        if is_groebner(S).ok:
            continue
        found += 1
        h = CentralHomogenizer(R)
        rep.record(not is_groebner([h.homogenize(f) for f in S]).ok,
                   f"non-GB S={[str(s) for s in S]}")
    return rep


def dehomogenized_basis(seed=DEFAULT_SEED, count=100) -> SuiteReport:
    """Dehomogenizing a homogeneous basis of ``<S*>`` gives a basis of ``I``."""
    rep = SuiteReport("dehomogenized-basis")
    for S in random_comm_ideals(seed, count):
        h = CentralHomogenizer(S[0].ring)
        step1 = buchberger(h.homogenize_set(S))
        via = reduce_basis(dehomogenize_gb_central(step1))
        direct = buchberger(S)
        rep.record(via.strings() == direct.strings(), f"S={[str(s) for s in S]}")
    return rep


def homogeneous_union_basis(seed=DEFAULT_SEED, count=50) -> SuiteReport:
    """``F* in G`` forces ``F`` into ``G_*``, for a homogeneous basis ``G`` of ``<I*>``."""
    rep = SuiteReport("homogeneous-union-basis")
    for S in random_comm_ideals(seed, count, name="homogeneous-union-basis"):
        h = CentralHomogenizer(S[0].ring)
        star = h.homogenize_set(S)
        G_I_star = homogenize_gb_central(buchberger(S))
        elems = list(G_I_star) + [f for f in star if f not in G_I_star.elements]
        G = GroebnerBasis(h.extended_ring, tuple(elems))
        images = dehomogenize_gb_central(G)
        ok = is_groebner(images).ok and all(f in images.elements for f in S)
        rep.record(ok, f"S={[str(s) for s in S]}")
    return rep


def random_free_ideals(seed=DEFAULT_SEED, count=50, name="free-ideals") -> list:
    rng = suite_rng(seed, name)
    return [random_ideal(rng, rng.choice(FREE_RINGS[:1]), max_gens=3, max_degree=3, coeff_bound=3)
            for _ in range(count)]


def gb_transfer_free(seed=DEFAULT_SEED, count=50, max_degree=6) -> SuiteReport:
    """``G`` is a basis of ``I`` (up to degree D) iff ``G~`` plus commutators is one
    of ``<I~>``.  Half the trials use completed bases, half raw generators."""
    rep = SuiteReport("gb-transfer-free")
    for k, S in enumerate(random_free_ideals(seed, count)):
        G = list(nc_complete(S, max_degree, reduced=True)) if k % 2 == 0 else S
        if not G:
            rep.record(True)
            continue
        h = NoncentralHomogenizer(G[0].ring)
        a = is_nc_groebner(G, max_degree).ok
        b = is_nc_groebner(h.homogenize_set(G), max_degree).ok
        rep.record(a == b and (k % 2 or a), f"G={[str(g) for g in G]} base={a} homog={b}")
    return rep


# -- normal monomials ---------------------------------------------------------

COMM_EXAMPLE = ("y^3 - x - y", "y^2 + 1")
FREE_EXAMPLE = ("Y*Y*Y - X*Y - X - Y", "Y^2 - X + 3")


def correspondence_central(S, D: int = 6):
    P = gb_via_central_homogenization(S)
    return check_normal_correspondence(normal_monomials(P.gb_of_I, D),
                                       normal_monomials(P.gb_of_I_star, D))


def correspondence_free(S, D: int = 6, max_degree: int = None, headroom: int = 6):
    """Raises the completion bound until the dehomogenized basis is trusted to ``D``."""
    bound = max_degree or max(D, 8)
    while True:
        P = gb_via_nc_homogenization(S, bound)
        if P.gb_of_I.truncation_degree >= D or bound >= max(D, 8) + headroom:
            break
        bound += 1
    return check_normal_correspondence(normal_monomials(P.gb_of_I, D),
                                       normal_monomials(P.gb_of_I_tilde, D))


def _cumulative_ok(report) -> bool:
    acc = 0
    for b, e in zip(report.base_counts, report.ext_counts):
        acc += b
        if e != acc:
            return False
    return True


def normal_correspondence(seed=DEFAULT_SEED, count=20, D=6) -> SuiteReport:
    rep = SuiteReport("normal-correspondence")
    R, F = COMM_RINGS[0], FREE_RINGS[0]
    golden = [
        ("comm-example", correspondence_central([R(s) for s in COMM_EXAMPLE], D)),
        ("free-example", correspondence_free([F(s) for s in FREE_EXAMPLE], D)),
    ]
    for label, res in golden:
        rep.record(res.ok and _cumulative_ok(res), f"{label} {res.mismatch}")
    for S in random_comm_ideals(seed, count, name="normal-correspondence"):
        res = correspondence_central(S, D)
        rep.record(res.ok and _cumulative_ok(res), f"S={[str(s) for s in S]} {res.mismatch}")
    for S in random_free_ideals(seed, count // 2, name="normal-correspondence-free"):
        res = correspondence_free(S, D)
        rep.record(res.ok and _cumulative_ok(res), f"S={[str(s) for s in S]} {res.mismatch}")
    return rep
