import pytest

from homoggb import (
    GroebnerBasis,
    buchberger,
    check_normal_correspondence,
    dehomogenize_gb_central,
    dehomogenize_gb_noncentral,
    free_algebra,
    gb_via_central_homogenization,
    gb_via_nc_homogenization,
    homogenize_gb_central,
    homogenize_gb_noncentral,
    is_groebner,
    is_nc_groebner,
    nc_complete,
    normal_monomials,
)
from homoggb.groebner import IncompleteBasis
from homoggb.pipeline import HypothesisViolation, same_lm_ideal, strict_inclusion_witness
from homoggb import properties

COMM_EXAMPLE = ["y^3 - x - y", "y^2 + 1"]
FREE_EXAMPLE = ["Y*Y*Y - X*Y - X - Y", "Y^2 - X + 3"]


# -- central -------------------------------------------------------------------------


def test_homogenize_gb_central(Rxy):
    G = buchberger([Rxy("y^2 + 1"), Rxy("x + 2*y")])
    H = homogenize_gb_central(G)
    assert H.strings() == ["y^2 + t^2", "x + 2*y"]
    assert is_groebner(H)
    assert homogenize_gb_central(buchberger([Rxy("x")])).strings() == ["x"]


def test_homogenize_gb_central_rejects_non_basis(Rxy):
    G = GroebnerBasis(Rxy, (Rxy("y^2 + 1"), Rxy("y^3 - x - y")))
    with pytest.raises(IncompleteBasis):
        homogenize_gb_central(G)


def test_dehomogenize_gb_central(Rxyt):
    G = buchberger([Rxyt("y^2 + t^2"), Rxyt("t^2*x + 2*t^2*y")])
    D = dehomogenize_gb_central(G)
    assert D.strings() == ["y^2 + 1", "x + 2*y"]
    assert is_groebner(D)
    assert dehomogenize_gb_central(buchberger([Rxyt("x + 2*y")])).strings() == ["x + 2*y"]
    U = dehomogenize_gb_central(buchberger([Rxyt("t")]))
    assert U.strings() == ["1"] and U.is_unit_ideal


def test_dehomogenize_gb_central_needs_homogeneous(Rxyt):
    G = GroebnerBasis(Rxyt, (Rxyt("x + t^2"),))
    with pytest.raises(HypothesisViolation):
        dehomogenize_gb_central(G)


def test_central_pipeline_worked_example(Rxy):
    P = gb_via_central_homogenization([Rxy(s) for s in COMM_EXAMPLE])
    assert [str(f) for f in P.homogenized] == ["y^3 - t^2*x - t^2*y", "y^2 + t^2"]
    assert P.step1.strings() == ["y^2 + t^2", "t^2*x + 2*t^2*y"]
    assert P.gb_of_I.strings() == ["y^2 + 1", "x + 2*y"]
    assert P.gb_of_I_star.strings() == ["y^2 + t^2", "x + 2*y"]
    assert not P.unit_ideal
    # <S*> is strictly smaller than <I*>
    assert min(g.degree() for g in P.step1) == 2
    assert str(strict_inclusion_witness(P.step1, P.gb_of_I_star)) == "x + 2*y"


def test_central_pipeline_trivial_and_homogeneous(Rxy):
    P = gb_via_central_homogenization([Rxy("x")])
    assert P.gb_of_I.strings() == ["x"] and P.gb_of_I_star.strings() == ["x"]
    S = [Rxy("x^2 - y^2"), Rxy("x*y")]
    P = gb_via_central_homogenization(S)
    assert all("t" not in s for s in P.gb_of_I_star.strings())
    assert P.gb_of_I_star.strings() == P.step1.strings()


def test_central_pipeline_unit_ideal(Rxy):
    P = gb_via_central_homogenization([Rxy("x*y - 1"), Rxy("x")])
    assert P.unit_ideal and P.gb_of_I.strings() == ["1"]


def test_central_pipeline_without_interreduction(Rxy):
    P = gb_via_central_homogenization([Rxy(s) for s in COMM_EXAMPLE], reduced=False)
    assert P.gb_of_I.strings() == ["y^2 + 1", "x + 2*y"]
    # the raw step-1 set keeps the homogenized generators, so step 2
    # contains the original generators
    assert set(COMM_EXAMPLE) <= set(P.step2.strings())


def test_homogeneous_union_suite():
    rep = properties.homogeneous_union_basis(seed=3, count=30)
    assert rep.ok, rep.first_failure


def test_central_transfer_suites_small():
    assert properties.gb_transfer_central(seed=3, count=30, non_gb=10).ok
    assert properties.dehomogenized_basis(seed=3, count=30).ok


# -- non-central ---------------------------------------------------------------------


def test_homogenize_gb_noncentral(Fxy):
    Fx = free_algebra(("X",))
    G = nc_complete([Fx("X")], 4)
    assert homogenize_gb_noncentral(G).strings() == ["X*T - T*X", "X"]
    E = GroebnerBasis(Fxy, (), truncation_degree=5)
    assert sorted(homogenize_gb_noncentral(E).strings()) == ["X*T - T*X", "Y*T - T*Y"]
    G = nc_complete([Fxy(s) for s in FREE_EXAMPLE], 8, reduced=True)
    H = homogenize_gb_noncentral(G, 8)
    assert is_nc_groebner(H, 8)


def test_homogenize_gb_noncentral_rejects_non_basis(Fxy):
    G = GroebnerBasis(Fxy, (Fxy("Y^2 - X"),), truncation_degree=4)
    with pytest.raises(IncompleteBasis):
        homogenize_gb_noncentral(G)


def test_dehomogenize_gb_noncentral(FxyT):
    C = GroebnerBasis(FxyT, (FxyT("X*T - T*X"), FxyT("Y*T - T*Y")), truncation_degree=6)
    assert dehomogenize_gb_noncentral(C).strings() == []
    G = nc_complete([FxyT("Y^2 - T*X + 3*T^2"), FxyT("X*T - T*X"), FxyT("Y*T - T*Y")], 6)
    D = dehomogenize_gb_noncentral(G)
    assert is_nc_groebner(D, 6)
    assert "Y^2 - X + 3" in D.strings()


def test_dehomogenize_gb_noncentral_needs_commutators(FxyT):
    G = GroebnerBasis(FxyT, (FxyT("Y^2 - T*X"),), truncation_degree=4)
    with pytest.raises(HypothesisViolation):
        dehomogenize_gb_noncentral(G)


def test_nc_pipeline_worked_example(Fxy):
    P = gb_via_nc_homogenization([Fxy(s) for s in FREE_EXAMPLE], 8)
    assert [str(f) for f in P.homogenized] == [
        "Y^3 - T*X*Y - T^2*X - T^2*Y",
        "Y^2 - T*X + 3*T^2",
        "X*T - T*X",
        "Y*T - T*Y",
    ]
    assert P.gb_of_I.strings() == ["Y^2 + 4*Y + 3", "X + 4*Y"]
    assert P.gb_of_I_tilde.strings() == ["X*T - T*X", "Y^2 + 4*T*Y + 3*T^2", "Y*T - T*Y", "X + 4*Y"]
    assert is_nc_groebner(P.step1, 8)
    assert is_nc_groebner(P.step2, 8)
    assert is_nc_groebner(P.gb_of_I_tilde, 8)
    direct = nc_complete([Fxy(s) for s in FREE_EXAMPLE], 8, reduced=True)
    assert same_lm_ideal(P.gb_of_I, direct, 8) is None
    w = strict_inclusion_witness(P.step1, P.gb_of_I_tilde, 8)
    assert str(w) == "X + 4*Y"


def test_nc_pipeline_small_cases(Fxy):
    Fx = free_algebra(("X",))
    P = gb_via_nc_homogenization([Fx("X")], 3)
    assert P.gb_of_I.strings() == ["X"]
    assert P.gb_of_I_tilde.strings() == ["X*T - T*X", "X"]
    P = gb_via_nc_homogenization([Fxy("Y^2")], 4)
    assert P.gb_of_I.strings() == ["Y^2"]
    assert sorted(P.gb_of_I_tilde.strings()) == ["X*T - T*X", "Y*T - T*Y", "Y^2"]


def test_nc_pipeline_lowers_trust_when_step1_truncated(Fxy):
    # at bound 8 some elements of I only appear as T^r f~ above the bound
    S = [Fxy("2*X*Y^2 - X^2 - 2*X*Y - 2*X"), Fxy("3*X*Y^2 - 3*Y*X^2 - 3*Y*X")]
    P = gb_via_nc_homogenization(S, 8)
    assert not P.step1.complete
    d = P.gb_of_I.truncation_degree
    assert d == 3 and not P.gb_of_I.complete
    assert is_nc_groebner(P.gb_of_I, d) and not is_nc_groebner(P.gb_of_I, d + 1)
    assert is_nc_groebner(P.gb_of_I_tilde, d)
    with pytest.raises(ValueError):
        normal_monomials(P.gb_of_I, d + 1)
    assert gb_via_nc_homogenization(S, 9).gb_of_I.truncation_degree == 9
    assert properties.correspondence_free(S, 6).ok


def test_free_transfer_suite_small():
    rep = properties.gb_transfer_free(seed=3, count=20)
    assert rep.ok, rep.first_failure


# -- normal monomials ---------------------------------------------------------------


def test_normal_monomials_central(Rxy, Rxyt):
    G = buchberger([Rxy("y^2 + 1"), Rxy("x + 2*y")])
    N = normal_monomials(G, 4)
    assert N.strings() == {0: ["1"], 1: ["y"], 2: [], 3: [], 4: []}
    H = homogenize_gb_central(G)
    NH = normal_monomials(H, 3)
    assert NH.strings() == {0: ["1"], 1: ["t", "y"], 2: ["t^2", "t*y"], 3: ["t^3", "t^2*y"]}
    E = GroebnerBasis(Rxy, ())
    assert normal_monomials(E, 2).counts() == [1, 2, 3]


def test_normal_correspondence_report(Rxy):
    G = buchberger([Rxy("y^2 + 1"), Rxy("x + 2*y")])
    H = homogenize_gb_central(G)
    rep = check_normal_correspondence(normal_monomials(G, 3), normal_monomials(H, 3))
    assert rep.ok
    assert rep.base_counts == [1, 1, 0, 0] and rep.ext_counts == [1, 2, 2, 2]


def test_normal_correspondence_detects_corruption(Rxy):
    from dataclasses import replace

    G = buchberger([Rxy("y^2 + 1"), Rxy("x + 2*y")])
    H = homogenize_gb_central(G)
    NH = normal_monomials(H, 3)
    bad = dict(NH.by_degree)
    bad[2] = bad[2][:1]
    rep = check_normal_correspondence(normal_monomials(G, 3), replace(NH, by_degree=bad))
    assert not rep.ok and rep.mismatch[0] == 2


def test_normal_correspondence_free_family(Fxy):
    rep = properties.correspondence_free([Fxy("Y^2 - X + 3")], 6)
    assert rep.ok


def test_normal_monomials_refuses_untrusted_degree(Fxy):
    G = nc_complete([Fxy("Y*X - X*Y")], 3)
    G = GroebnerBasis(Fxy, G.elements, complete=False, truncation_degree=3)
    with pytest.raises(ValueError):
        normal_monomials(G, 4)
