import random

import pytest

from homoggb import (
    GroebnerBasis,
    buchberger,
    divide,
    free_algebra,
    is_groebner,
    polynomial_ring,
    reduce_basis,
    spoly,
)
from homoggb.groebner import IncompleteBasis, ideal_contains, normal_form
from homoggb.sampling import make_rng, random_element_of, random_ideal


def test_divide_example(Rxy):
    f = Rxy("y^3 - x - y")
    q, r = divide(f, [Rxy("y^2 + 1")])
    assert [str(p) for p in q] == ["y"]
    assert str(r) == "-x - 2*y"


def test_divide_trivial_cases(Rxy):
    f = Rxy("y^3 - x - y")
    q, r = divide(f, [f])
    assert [str(p) for p in q] == ["1"] and not r
    q, r = divide(Rxy("x"), [Rxy("y^2 + 1")])
    assert [str(p) for p in q] == ["0"] and str(r) == "x"


def test_divide_identity_and_irreducible_remainder():
    rng = make_rng(11)
    R = polynomial_ring(("x", "y", "z"))
    for _ in range(100):
        G = random_ideal(rng, R, max_gens=3)
        f = random_element_of(rng, G) + random_ideal(rng, R, max_gens=1)[0]
        q, r = divide(f, G)
        assert f == sum((qi * g for qi, g in zip(q, G)), r)
        lms = [g.lm for g in G]
        for m in r.monomials():
            assert not any(all(a <= b for a, b in zip(lm, m)) for lm in lms)
        assert normal_form(f, G) == r


def test_divide_by_zero_rejected(Rxy):
    with pytest.raises(ValueError):
        divide(Rxy("x"), [Rxy("0")])


def test_spoly_examples(Rxy, Rxyt):
    assert spoly(Rxy("x^2 - y"), Rxy("x*y - 1")) == Rxy("x - y^2")
    f = Rxy("x^2 - y")
    assert not spoly(f, f)
    assert str(spoly(Rxyt("y^3 - t^2*x - t^2*y"), Rxyt("y^2 + t^2"))) == "-t^2*x - 2*t^2*y"


def test_buchberger_examples(Rxy, Rxyt):
    G = buchberger([Rxy("y^2 + 1"), Rxy("y^3 - x - y")])
    assert G.strings() == ["y^2 + 1", "x + 2*y"]
    assert G.reduced
    assert buchberger([Rxy("x")]).strings() == ["x"]
    H = buchberger([Rxyt("y^2 + t^2"), Rxyt("y^3 - t^2*x - t^2*y")])
    assert H.strings() == ["y^2 + t^2", "t^2*x + 2*t^2*y"]


def test_buchberger_generators_in_both_directions(Rxy):
    S = [Rxy("y^2 + 1"), Rxy("y^3 - x - y")]
    G = buchberger(S)
    assert all(ideal_contains(G, f) for f in S)
    # and each basis element lies in <S>, via the ideal of a different basis
    G2 = buchberger(S, reduced=False, minimize=False)
    assert all(ideal_contains(G2, g) for g in G)


def test_buchberger_unit_ideal(Rxy):
    G = buchberger([Rxy("x"), Rxy("x + 1")])
    assert G.strings() == ["1"]
    assert G.is_unit_ideal


def test_reduce_basis_examples(Rxy):
    G = GroebnerBasis(Rxy, (Rxy("y^2 + 1"), Rxy("x + 2*y"), Rxy("2*x + 4*y")))
    assert reduce_basis(G).strings() == ["y^2 + 1", "x + 2*y"]
    R = reduce_basis(G)
    assert reduce_basis(R).strings() == R.strings()


def test_reduce_basis_rejects_non_basis(Rxy):
    G = GroebnerBasis(Rxy, (Rxy("y^2 + 1"), Rxy("y^3 - x - y")))
    with pytest.raises(IncompleteBasis):
        reduce_basis(G)


def test_is_groebner_examples(Rxy):
    assert is_groebner([Rxy("y^2 + 1"), Rxy("x + 2*y")])
    res = is_groebner([Rxy("y^2 + 1"), Rxy("y^3 - x - y")])
    assert not res
    assert res.pair == (0, 1)
    assert str(res.remainder.monic()) == "x + 2*y"
    assert is_groebner([Rxy("x")])


def test_reduced_basis_is_unique_under_permutation():
    rng = make_rng(5)
    R = polynomial_ring(("x", "y", "z"))
    for _ in range(30):
        S = random_ideal(rng, R, max_gens=3)
        ref = buchberger(S).strings()
        for _ in range(3):
            T = list(S)
            random.Random(len(T)).shuffle(T)
            T = [f * rng.choice((1, -2, 3)) for f in T]
            assert buchberger(T).strings() == ref


def test_finite_field_basis():
    from homoggb import GF

    R = polynomial_ring(("x", "y"), field=GF(7))
    G = buchberger([R("y^3 - x - y"), R("y^2 + 1")])
    assert G.strings() == ["y^2 + 1", "x + 2*y"]


def test_weighted_basis_is_groebner():
    R = polynomial_ring(("x", "y"), weights=(2, 1))
    G = buchberger([R("x^2 - y^3"), R("x*y - 1")])
    assert is_groebner(G)


def test_mismatched_ring_rejected(Rxy):
    other = polynomial_ring(("x", "z"))
    with pytest.raises(ValueError):
        buchberger([Rxy("x"), other("z")])


# -- free algebra -------------------------------------------------------------------

from homoggb import find_obstructions, is_nc_groebner, nc_complete, nc_divide, reduce_nc_basis
from homoggb.ncgroebner import nc_ideal_contains, replay_trace


def test_nc_divide_examples(Fxy, FxyT):
    C = [FxyT("X*T - T*X")]
    r, trace = nc_divide(FxyT("X*T*Y"), C)
    assert str(r) == "T*X*Y" and len(trace) == 1
    r, trace = nc_divide(Fxy("Y*X"), [Fxy("X*Y - 1")])
    assert str(r) == "Y*X" and not trace
    r, _ = nc_divide(FxyT("X*T - T*X"), C)
    assert not r


def test_nc_divide_trace_identity():
    rng = make_rng(13)
    F = free_algebra(("X", "Y"))
    for _ in range(100):
        G = random_ideal(rng, F, max_gens=3, max_degree=3)
        f = random_element_of(rng, G, max_degree=2) + random_ideal(rng, F, max_gens=1)[0]
        r, trace = nc_divide(f, G)
        assert f == replay_trace(trace, G, F) + r
        for m in r.monomials():
            assert not any(g.lm in m for g in G)


def test_find_obstructions_examples(Fxy, FxyT):
    assert find_obstructions(FxyT("X*T - T*X"), FxyT("Y*T - T*Y")) == []
    obs = find_obstructions(Fxy("Y^2 - X"), Fxy("Y^2 - X"))
    assert len(obs) == 1
    ob = obs[0]
    assert ob.kind == "overlap"
    assert Fxy.names_of(ob.word) == ["Y", "Y", "Y"]
    assert find_obstructions(Fxy("X"), Fxy("X")) == []


def test_inclusion_obstruction(Fxy):
    obs = find_obstructions(Fxy("X*Y*X - 1"), Fxy("Y"))
    kinds = sorted(o.kind for o in obs)
    assert kinds == ["inclusion"]


def test_nc_complete_examples(Fxy, FxyT):
    C = [FxyT("X*T - T*X"), FxyT("Y*T - T*Y")]
    G = nc_complete(C, 6)
    assert sorted(G.strings()) == sorted(str(c) for c in C)
    assert G.complete
    G = nc_complete([Fxy("Y^2")], 5)
    assert G.strings() == ["Y^2"] and G.complete


def test_nc_complete_rejects_low_bound(Fxy):
    with pytest.raises(ValueError):
        nc_complete([Fxy("Y^3 - X")], 2)


def test_is_nc_groebner_examples(Fxy, FxyT):
    assert is_nc_groebner([FxyT("X*T - T*X"), FxyT("Y*T - T*Y")], 8)
    res = is_nc_groebner([Fxy("Y^2 - X")], 6)
    assert not res
    assert res.remainder.monic() in (Fxy("X*Y - Y*X"), Fxy("Y*X - X*Y"))
    assert is_nc_groebner([Fxy("X")], 6)


def test_nc_complete_direct_worked_example(Fxy):
    G = nc_complete([Fxy("Y^3 - X*Y - X - Y"), Fxy("Y^2 - X + 3")], 8, reduced=True)
    assert G.strings() == ["Y^2 + 4*Y + 3", "X + 4*Y"]
    assert is_nc_groebner(G, 8)


def test_nc_complete_is_groebner_and_contains_inputs():
    rng = make_rng(17)
    F = free_algebra(("X", "Y"))
    for _ in range(40):
        S = random_ideal(rng, F, max_gens=3, max_degree=3)
        G = nc_complete(S, 6)
        assert is_nc_groebner(G, 6)
        assert all(nc_ideal_contains(G, f) for f in S)


def test_nc_truncated_monotone_in_degree():
    """A basis computed to bound D agrees below D with one computed to D + 2."""
    from homoggb.pipeline import same_lm_ideal
    from homoggb import nc_homogenize_set

    rng = make_rng(19)
    F = free_algebra(("X", "Y"))
    for _ in range(15):
        S = nc_homogenize_set(random_ideal(rng, F, max_gens=2, max_degree=2))
        low = nc_complete(S, 5, reduced=True)
        high = nc_complete(S, 7, reduced=True)
        assert same_lm_ideal(low, high, 5) is None
        assert [g for g in high.strings() if g in low.strings()] == [
            g for g in low.strings() if g in high.strings()
        ]


def test_nc_homogeneous_input_infinite_basis_is_flagged(FxyT):
    from homoggb import nc_homogenize_set

    F = free_algebra(("X", "Y"))
    S = nc_homogenize_set([F("Y^3 - X*Y - X - Y"), F("Y^2 - X + 3")])
    G = nc_complete(S, 8)
    assert not G.complete and G.truncation_degree == 8
    assert is_nc_groebner(G, 8)


def test_reduce_nc_basis_idempotent(Fxy):
    G = nc_complete([Fxy("Y^3 - X*Y - X - Y"), Fxy("Y^2 - X + 3")], 8)
    R = reduce_nc_basis(G)
    assert reduce_nc_basis(R).strings() == R.strings()


def test_nc_completion_without_interreduction(Fxy):
    S = [Fxy("Y^3 - X*Y - X - Y"), Fxy("Y^2 - X + 3")]
    G = nc_complete(S, 8, interreduce=False)
    assert is_nc_groebner(G, 8)
    assert reduce_nc_basis(G).strings() == ["Y^2 + 4*Y + 3", "X + 4*Y"]
