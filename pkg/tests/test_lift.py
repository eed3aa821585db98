"""Tests for curve automorphisms and lifting cone-point symmetries."""
from dataclasses import replace

import numpy as np
import pytest

from src.curve.fermat import CurvePoint, cone_points, quotient_map, random_fiber_point
from src.errors import CapExceeded, NoLift
from src.lift.automorphism import (
    CurveAutomorphism,
    apply_auto,
    auto_order,
    auto_power,
    compose_autos,
    descend_to_involution,
    identity_auto,
    inverse_perm,
    is_identity_auto,
    is_involution,
)
from src.lift.lifting import (
    enumerate_lifts,
    is_curve_automorphism,
    is_h_coset,
    maps_rowspace,
    solve_lift_constants,
)
from src.moduli.theorems import LAMBDA_1, LAMBDA_2, find_symmetry
from src.orbifold.configuration import ConfigSymmetry, symmetries
from src.sphere.mobius import ExtendedMobius, apply, chordal_distance, order


def test_constants_are_normalized():
    a = CurveAutomorphism((0, 1), (2.0, 4.0))
    assert a.c == (1.0, 2.0)


def test_bad_automorphisms_are_rejected():
    with pytest.raises(ValueError):
        CurveAutomorphism((0, 0), (1, 1))
    with pytest.raises(ValueError):
        CurveAutomorphism((1, 0), (1, 0))
    with pytest.raises(ValueError):
        CurveAutomorphism((1, 0), (1, 2, 3))


def test_action_permutes_then_scales():
    a = CurveAutomorphism((1, 0, 2), (1, 2, 3))
    assert np.allclose(a.act(np.array([1, 10, 100])), [10, 2, 300])
    assert inverse_perm((1, 2, 0)) == (2, 0, 1)


def test_composition_matches_action():
    rng = np.random.default_rng(3)
    c1 = rng.normal(size=4) + 1j * rng.normal(size=4)
    c2 = rng.normal(size=4) + 1j * rng.normal(size=4)
    a1 = CurveAutomorphism((2, 0, 3, 1), tuple(c1), anticonformal=True)
    a2 = CurveAutomorphism((1, 0, 3, 2), tuple(c2))
    x = CurvePoint(rng.normal(size=4) + 1j * rng.normal(size=4))
    lhs = apply_auto(compose_autos(a1, a2), x)
    rhs = apply_auto(a1, apply_auto(a2, x))
    assert lhs.equals(rhs, 1e-9)
    assert compose_autos(a1, identity_auto(4)).equals(a1)


def test_orders_and_involutions():
    j = CurveAutomorphism((0, 1, 2), (1, 1, 1), anticonformal=True)
    assert auto_order(j) == 2
    assert is_involution(j)
    assert not is_involution(identity_auto(3))
    assert is_identity_auto(auto_power(j, 2))

    rot = CurveAutomorphism((1, 2, 0), (1, 1, 1), anticonformal=True)
    assert auto_order(rot) == 6
    inv = descend_to_involution(rot)
    assert inv is not None and is_involution(inv) and inv.anticonformal

    four = CurveAutomorphism((1, 0), (1, 1j), anticonformal=True)
    assert auto_order(four) == 4
    assert descend_to_involution(four) is None


def test_conjugation_lifts_with_unit_constants(real_curve):
    s = next(s for s in symmetries(cone_points(real_curve), "anticonformal")
             if s.perm == tuple(range(5)))
    assert np.allclose(solve_lift_constants(real_curve, s), 1.0)


def test_lift_family_of_real_curve(real_curve):
    s = next(s for s in symmetries(cone_points(real_curve), "anticonformal")
             if s.perm == tuple(range(5)))
    family = enumerate_lifts(real_curve, s)
    assert len(family) == real_curve.lift_count == 16
    assert family.exponents[0] == (0, 0, 0, 0, 0)
    assert all(a.anticonformal for a in family.lifts)
    assert all(is_involution(a) for a in family.lifts)
    assert all(maps_rowspace(real_curve, a) for a in family.lifts)


def test_hidalgo_reflection_constants(hidalgo):
    f = find_symmetry(cone_points(hidalgo),
                      ExtendedMobius.from_coefficients(0, LAMBDA_1, 1, 0, anticonformal=True))
    assert f is not None
    assert f.cycles() == "(1 2)(3 4)(5 6)"
    tk = np.array(solve_lift_constants(hidalgo, f))
    assert np.allclose(tk, [1, LAMBDA_1, 1, LAMBDA_1, LAMBDA_2, -LAMBDA_2])

    family = enumerate_lifts(hidalgo, f)
    assert len(family) == 32
    for a in family.lifts:
        assert np.allclose(a.constants ** 2, tk)
        assert auto_order(a) == 4
    assert is_curve_automorphism(hidalgo, family.lifts[0], samples=5)


def test_non_symmetry_has_no_lift(real_curve):
    fake = ConfigSymmetry(ExtendedMobius.identity(), (0, 1, 2, 4, 3))
    with pytest.raises(NoLift):
        solve_lift_constants(real_curve, fake)
    with pytest.raises(NoLift):
        solve_lift_constants(real_curve, ConfigSymmetry(ExtendedMobius.identity(), (0, 1, 2)))


def test_lift_cap(real_curve):
    s = symmetries(cone_points(real_curve), "conformal")[0]
    with pytest.raises(CapExceeded):
        enumerate_lifts(real_curve, s, cap=15)


def test_wrong_constants_are_not_automorphisms(real_curve):
    bogus = CurveAutomorphism(tuple(range(5)), (1, 1, 1, 2, 1))
    assert not maps_rowspace(real_curve, bogus)
    assert not is_curve_automorphism(real_curve, bogus, samples=2)


def all_families(curve):
    return [enumerate_lifts(curve, s) for s in symmetries(cone_points(curve), "both")]


@pytest.mark.parametrize("fixture", ["hidalgo", "real_curve"])
def test_lifts_cover_the_symmetry(fixture, request):
    curve = request.getfixturevalue(fixture)
    families = all_families(curve)
    rng = np.random.default_rng(5)
    for trial in range(120):
        family = families[trial % len(families)]
        f = family.lifts[int(rng.integers(len(family)))]
        p = random_fiber_point(curve, rng)
        below = quotient_map(curve, apply_auto(f, p))
        assert chordal_distance(below, apply(family.symmetry.map, quotient_map(curve, p))) < 1e-8


@pytest.mark.parametrize("fixture", ["hidalgo", "real_curve"])
def test_lifts_form_one_h_coset(fixture, request):
    curve = request.getfixturevalue(fixture)
    for family in all_families(curve):
        assert len(family) == curve.lift_count
        assert is_h_coset(curve, family)


def test_partial_family_is_not_a_coset(real_curve):
    family = all_families(real_curve)[0]
    short = replace(family, lifts=family.lifts[:-1], exponents=family.exponents[:-1])
    assert not is_h_coset(real_curve, short)


def test_lift_order_sits_between_map_order_and_k_times_it(hidalgo, real_curve):
    checked = 0
    for curve in (hidalgo, real_curve):
        for family in all_families(curve):
            q = order(family.symmetry.map)
            for f in family.lifts:
                m = auto_order(f)
                assert m % q == 0
                assert (q * curve.k) % m == 0
                checked += 1
    assert checked >= 100
