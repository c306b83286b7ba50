from fractions import Fraction

import pytest

from superthick import cech, supermap
from superthick.bott import SplitBundleDegrees
from superthick.pipeline import class_coordinates, normalize_generator, pipeline_obstructed_cp2


def test_pipeline_headline_triple_is_definitive_zero():
    rep = pipeline_obstructed_cp2((3, 0, -6))
    assert rep["status"] == "unobstructed"
    assert rep["exact"] is True
    assert rep["h1_dim"] == 1
    assert rep["h2_dim"] == 11
    (cls,) = rep["classes"]
    assert cls["class_coordinates"] == ["0"] * 11
    assert rep["agrees_with_prediction"] is False


def test_pipeline_exhibits_obstructed_thickening():
    rep = pipeline_obstructed_cp2((4, -1, -7))
    assert rep["status"] == "obstructed-exhibited"
    (cls,) = rep["classes"]
    nonzero = [c for c in cls["class_coordinates"] if c != "0"]
    assert nonzero == ["-1"]
    assert rep["agrees_with_prediction"] is True


def test_pipeline_refuses_failing_preconditions():
    rep = pipeline_obstructed_cp2((0, 0, 0))
    assert rep["status"] == "refused-preconditions"
    assert "classes" not in rep


def test_pipeline_vacuous_on_p1():
    rep = pipeline_obstructed_cp2((3, 0, -6), space="P1")
    assert rep["status"] == "vacuously-unobstructed"


def test_pipeline_inconclusive_window_flagged():
    rep = pipeline_obstructed_cp2((3, 0, -6), window=0)
    assert rep["status"] == "inconclusive-window"
    assert rep["exact"] is False


def test_normalize_generator_leading_coefficient():
    cov = cech.standard_cover(2)
    spec = supermap.slot_sheaf(cov, SplitBundleDegrees((3, 0, -6)), 2)
    gen = cech.h1_representatives(spec, window=6).representatives[1][0]
    normed = normalize_generator(gen.scale(Fraction(-7, 3)))
    first = None
    for simplex in sorted(normed.values):
        for summand in normed.values[simplex]:
            for comp in summand:
                for exps in sorted(comp.terms):
                    first = comp.terms[exps]
                    break
                if first is not None:
                    break
            if first is not None:
                break
        break
    assert first == 1


def test_class_coordinates_certify_remainder():
    cov = cech.standard_cover(2)
    spec = cech.line_sum(cov, [-3])
    import random

    rng = random.Random(0)
    nu = cech.random_cochain(spec, 1, rng, terms=2)
    exact = cech.coboundary(nu)
    basis, coords = class_coordinates(exact)
    assert basis == [(0, (-1, -1, -1))]
    assert coords == [Fraction(0)]
