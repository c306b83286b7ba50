"""End-to-end certificate for second-order thickenings of the projective
plane with a split rank-3 bundle: build the first-order extension classes,
push them through the obstruction map, and decide obstructedness by exact
harmonic projection in the line-bundle-sum target.
"""

from __future__ import annotations

from fractions import Fraction

from . import cech, supermap
from .bott import SplitBundleDegrees
from .cech import Cochain
from .laurent import fraction_to_str
from .obstruct import check_split_conditions


def normalize_generator(c: Cochain) -> Cochain:
    """Scale so the first nonzero coefficient in canonical order is 1."""
    for simplex in sorted(c.values):
        sec = c.values[simplex]
        for summand in sec:
            for comp in summand:
                for exps in sorted(comp.terms):
                    lead = comp.terms[exps]
                    return c.scale(Fraction(1) / lead)
    return c


def class_coordinates(gamma: Cochain) -> tuple[list, list]:
    """Coordinates of a degree-2 line-sum cochain in the canonical H^2 basis.

    Returns (basis, coords) where basis lists (summand, character) labels and
    coords are exact rationals.  The complement of the harmonic part is
    certified exact by solving for a preimage; failure to certify raises.
    """
    spec = gamma.sheaf
    basis = cech.line_h2_basis(spec)
    harmonic = {(s, g): c for s, g, c in cech.harmonic_h2_part(gamma)}
    coords = [harmonic.get(b, Fraction(0)) for b in basis]
    remainder = gamma
    for (s, g), coef in harmonic.items():
        slots = cech.char_basis(spec, 2, s, g)
        assert len(slots) == 1
        remainder = remainder - cech.cochain_from_slot(spec, 2, slots[0], coef)
    sol, cert = cech.solve_coboundary(remainder)
    if sol is None:
        raise AssertionError(f"non-harmonic remainder not exact: {cert}")
    return basis, coords


def pipeline_obstructed_cp2(degrees, window: int = 10, space: str = "P2") -> dict:
    """Decide whether the first-order extensions of the split model admit an
    obstructed second-order thickening, with exact class coordinates.

    The report carries a status in {"obstructed-exhibited", "unobstructed",
    "vacuously-unobstructed", "refused-preconditions", "inconclusive-window"}
    and, when a verdict is reached, the exact coordinates of the obstruction
    class in the canonical second-cohomology basis.
    """
    degrees = SplitBundleDegrees(tuple(degrees))
    report: dict = {
        "degrees": list(degrees.degrees),
        "space": space,
        "prediction": "nonzero",
        "exact": True,
    }
    if space == "P1":
        report["status"] = "vacuously-unobstructed"
        report["detail"] = "two-chart covers have no triple overlaps"
        return report
    if space != "P2":
        raise ValueError(f"unknown space {space!r}")

    conditions = check_split_conditions(degrees)
    report["conditions"] = conditions.to_json()
    if not conditions.direct_all:
        report["status"] = "refused-preconditions"
        return report

    cover = cech.standard_cover(2)
    spec2 = supermap.slot_sheaf(cover, degrees, 2)
    h1 = cech.h1_representatives(spec2, window=window)
    report["h1_dim"] = h1.dims[1]
    if not h1.complete:
        report["status"] = "inconclusive-window"
        report["exact"] = False
        report["detail"] = h1.notes
        return report

    gamma_spec = supermap.slot_sheaf(cover, degrees, 3)
    basis = cech.line_h2_basis(gamma_spec)
    report["h2_dim"] = len(basis)
    report["h2_basis"] = [
        {"summand": s, "char": list(g), "twist": gamma_spec.twists[s]}
        for s, g in basis
    ]

    classes = []
    any_nonzero = False
    for raw in h1.representatives[1]:
        omega = normalize_generator(raw)
        t = supermap.build_trivialization(cover, degrees, 2, {2: omega})
        gamma = supermap.obstruction_cocycle(t)
        pushed = supermap.pushforward_partial(omega, t)
        if not (pushed - gamma).is_zero():
            raise AssertionError("pushforward disagrees with the composition defect")
        check = supermap.verify_gamma_cocycle(gamma, t)
        if not check["pass"]:
            raise AssertionError("obstruction cochain failed verification")
        _, coords = class_coordinates(gamma)
        nonzero = any(c != 0 for c in coords)
        any_nonzero = any_nonzero or nonzero
        classes.append(
            {
                "omega": omega.to_json(),
                "class_coordinates": [fraction_to_str(c) for c in coords],
                "nonzero": nonzero,
            }
        )
    report["classes"] = classes
    report["status"] = "obstructed-exhibited" if any_nonzero else "unobstructed"
    report["agrees_with_prediction"] = any_nonzero
    return report
