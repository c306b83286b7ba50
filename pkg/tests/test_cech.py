import random
from fractions import Fraction

import pytest

from superthick import bott, cech
from superthick.laurent import ChartMap, LaurentPoly


def test_standard_cover_nerve():
    c1 = cech.standard_cover(1)
    assert len(c1.charts) == 2 and len(c1.pairs) == 1 and len(c1.triples) == 0
    c2 = cech.standard_cover(2)
    assert len(c2.charts) == 3 and len(c2.pairs) == 3 and len(c2.triples) == 1
    with pytest.raises(ValueError):
        cech.standard_cover(3)


def test_transitions_are_monomial_cocycles():
    c1 = cech.standard_cover(1)
    f01 = c1.transition(0, 1)
    assert f01.components[0] == LaurentPoly.monomial(1, (-1,))
    assert c1.transition(1, 0).after(f01) == ChartMap.identity(1)
    c2 = cech.standard_cover(2)
    for i, j, k in [(0, 1, 2), (2, 1, 0), (1, 0, 2)]:
        lhs = c2.transition(j, k).after(c2.transition(i, j))
        assert lhs == c2.transition(i, k)
    for i, j in c2.pairs:
        assert c2.transition(j, i).after(c2.transition(i, j)) == ChartMap.identity(2)


def test_untwisted_coboundary_of_constants():
    cov = cech.standard_cover(2)
    spec = cech.line_sum(cov, [0])
    vals = {(c,): ((LaurentPoly.const(2, c + 1),),) for c in cov.charts}
    nu = cech.Cochain(spec, 0, vals)
    d = cech.coboundary(nu)
    for (i, j) in cov.pairs:
        assert d.value((i, j))[0][0] == LaurentPoly.const(2, j - i)


def test_alternating_lookup():
    cov = cech.standard_cover(2)
    spec = cech.line_sum(cov, [1])
    rng = random.Random(0)
    c = cech.random_cochain(spec, 1, rng, terms=2)
    v = c.value((1, 0))
    assert v == cech.section_neg(cech.represent(spec, c.value((0, 1)), 0, 0))
    assert cech.section_is_zero(c.value((1, 1)))


@pytest.mark.parametrize("kind,twists", [
    ("line_sum", (0, -3, 2)),
    ("tangent_twisted", (3, -3, -6)),
    ("oneform_twisted", (1, -2)),
])
def test_delta_squared_zero(kind, twists):
    cov = cech.standard_cover(2)
    spec = cech.SheafSpec(cov, kind, twists)
    rng = random.Random(1)
    for _ in range(20):
        nu = cech.random_cochain(spec, 0, rng, terms=2)
        assert cech.coboundary(cech.coboundary(nu)).is_zero()
        phi = cech.random_cochain(spec, 1, rng, terms=2)
        assert cech.coboundary(cech.coboundary(phi)).is_zero()


def test_coboundary_preserves_characters():
    cov = cech.standard_cover(2)
    spec = cech.tangent_twisted(cov, [-3, 2])
    rng = random.Random(2)
    nu = cech.random_cochain(spec, 0, rng, terms=3)
    before = set(cech.cochain_chars(nu))
    after = set(cech.cochain_chars(cech.coboundary(nu)))
    assert after <= before


def test_oracle_examples():
    assert cech.line_bundle_cohomology(1, -2, 1).dims[1] == 1
    assert cech.line_bundle_cohomology(2, -4, 2).dims[2] == 3
    assert cech.line_bundle_cohomology(2, 0, 0).dims[0] == 1


def test_oracle_representatives_are_cocycles():
    rep = cech.line_bundle_cohomology(2, -4, 2)
    assert len(rep.representatives[2]) == 3
    for c in rep.representatives[2]:
        assert cech.coboundary(c).is_zero()
        sol, cert = cech.solve_coboundary(c)
        assert sol is None and cert


def test_oracle_matches_bott_on_grid():
    for n in (1, 2):
        for k in range(-6, 7):
            for q in range(n + 1):
                assert (
                    cech.line_bundle_cohomology(n, k, q).dims[q]
                    == bott.line_dim(n, q, k)
                )


def test_middle_characters_are_acyclic():
    # proper nonempty pole sets contribute nothing in any degree
    for g in [(-1, 2, 0), (0, -2, 1), (-1, -1, 3), (5, -3, -2)]:
        dims = cech._char_complex_dims(2, g)
        assert all(v == 0 for v in dims.values()), (g, dims)


def test_solve_coboundary_roundtrip():
    cov = cech.standard_cover(2)
    spec = cech.line_sum(cov, [-2, 1])
    rng = random.Random(3)
    for _ in range(10):
        nu = cech.random_cochain(spec, 1, rng, terms=2)
        target = cech.coboundary(nu)
        sol, cert = cech.solve_coboundary(target)
        assert cert is None
        assert cech.coboundary(sol) == target


def test_solve_coboundary_certificate():
    cov = cech.standard_cover(2)
    spec = cech.line_sum(cov, [-3])
    mono = LaurentPoly.monomial(2, (-1, -1))
    c = cech.Cochain(spec, 2, {(0, 1, 2): ((mono,),)})
    sol, cert = cech.solve_coboundary(c)
    assert sol is None
    assert cert == [(0, (-1, -1, -1))]
    assert cech.line_bundle_cohomology(2, -3, 2).dims[2] == 1


def test_solve_coboundary_zero_and_noncocycle():
    cov = cech.standard_cover(2)
    spec = cech.line_sum(cov, [1])
    z = cech.zero_cochain(spec, 2)
    sol, cert = cech.solve_coboundary(z)
    assert sol.is_zero() and cert is None
    rng = random.Random(4)
    bad = cech.random_cochain(spec, 1, rng, terms=2)
    if not cech.coboundary(bad).is_zero():
        with pytest.raises(cech.NotACocycleError):
            cech.solve_coboundary(bad)


def test_p1_degree_minus_two_class():
    # the 1-cochain x^-1 on the single overlap has vacuously zero coboundary
    # and is not a coboundary: it spans the one-dimensional top cohomology
    cov = cech.standard_cover(1)
    spec = cech.line_sum(cov, [-2])
    c = cech.Cochain(spec, 1, {(0, 1): ((LaurentPoly.monomial(1, (-1,)),),)})
    assert cech.coboundary(c).is_zero()
    sol, cert = cech.solve_coboundary(c)
    assert sol is None and cert == [(0, (-1, -1))]
    assert cech.line_bundle_cohomology(1, -2, 1).dims[1] == 1


def test_h1_representatives_tangent():
    cov = cech.standard_cover(2)
    rep = cech.h1_representatives(cech.tangent_twisted(cov, [-3]), window=6)
    assert rep.dims[1] == 1 and rep.complete
    gen = rep.representatives[1][0]
    assert cech.coboundary(gen).is_zero()
    sol, cert = cech.solve_coboundary(gen)
    assert sol is None and cert


def test_h1_representatives_line_cases():
    cov1 = cech.standard_cover(1)
    assert cech.h1_representatives(cech.line_sum(cov1, [0]), window=5).dims[1] == 0
    cov2 = cech.standard_cover(2)
    assert cech.h1_representatives(cech.line_sum(cov2, [-3]), window=5).dims[1] == 0


def test_h1_window_incomplete_diagnostic():
    cov = cech.standard_cover(2)
    rep = cech.h1_representatives(cech.tangent_twisted(cov, [-3]), window=0)
    assert not rep.complete
    assert any("window incomplete" in n for n in rep.notes)


def test_windowed_dims_match_tangent_identification():
    cov = cech.standard_cover(2)
    for l in (-3, 0):
        got = cech.windowed_dims(cech.tangent_twisted(cov, [l]), window=6)
        assert got == {q: bott.tangent_dim(2, q, l) for q in range(3)}
    got = cech.windowed_dims(cech.oneform_twisted(cov, [0]), window=6)
    assert got == {q: bott.bott_dim(2, 1, q, 0) for q in range(3)}


def test_cochain_json_roundtrip():
    cov = cech.standard_cover(2)
    spec = cech.tangent_twisted(cov, [-3, 2])
    rng = random.Random(5)
    c = cech.random_cochain(spec, 1, rng, terms=2)
    data = c.to_json()
    back = cech.Cochain.from_json(cov, data)
    assert back.degree == c.degree and back.values == c.values
