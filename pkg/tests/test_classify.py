"""Tests for the field-of-moduli / reality classification."""
import numpy as np
import pytest

from src.curve.fermat import build, cone_points
from src.errors import CapExceeded, NonHyperbolic
from src.lift.automorphism import is_involution
from src.moduli.classify import (
    Assumption,
    Verdict,
    anticonformal_families,
    assumption_for,
    classify,
    find_anticonformal_involution,
    is_prime,
)
from src.orbifold.configuration import ConeConfiguration, normalize
from src.sphere.mobius import ExtendedMobius, apply


def test_is_prime():
    assert [k for k in range(12) if is_prime(k)] == [2, 3, 5, 7, 11]


def test_assumption():
    assert assumption_for(2, 4) is Assumption.UNCONDITIONAL
    assert assumption_for(3, 5) is Assumption.UNCONDITIONAL
    assert assumption_for(4, 4) is Assumption.CONDITIONAL
    assert assumption_for(2, 5) is Assumption.UNCONDITIONAL


def test_real_curve_is_real(real_curve):
    result = classify(real_curve)
    assert result.verdict is Verdict.MODULI_R_AND_REAL
    assert result.witness is not None and result.witness.anticonformal
    assert is_involution(result.witness)
    assert result.witness_order == 2
    assert result.exhaustion.involutions_found >= 1


def test_generic_curve_has_field_of_moduli_not_R(generic_curve):
    result = classify(generic_curve)
    assert result.verdict is Verdict.FIELD_OF_MODULI_NOT_R
    assert result.witness is None and result.witness_order is None
    assert result.exhaustion.antisymmetries == 0
    assert result.exhaustion.lifts_scanned == 0


def test_hidalgo_curve_is_not_real(hidalgo):
    result = classify(hidalgo)
    assert result.verdict is Verdict.MODULI_R_NOT_REAL
    assert result.witness_order == 4
    assert result.witness.anticonformal
    ex = result.exhaustion
    assert ex.involutions_found == 0
    assert ex.lifts_scanned == ex.antisymmetries * hidalgo.lift_count
    assert result.assumption is Assumption.UNCONDITIONAL


def test_scan_is_exhaustive_and_counts_exclusions(real_curve):
    search = find_anticonformal_involution(real_curve)
    fams = anticonformal_families(real_curve)
    assert search.exhaustion.antisymmetries == len(fams)
    assert search.exhaustion.lifts_scanned == len(fams) * 16
    excluded = sum(16 for scan in search.scans if scan.excluded)
    assert search.exhaustion.lifts_excluded_by_permutation == excluded
    orders = [q for _, q in fams]
    assert orders == sorted(orders)


def test_threads_do_not_change_the_result(hidalgo):
    one = classify(hidalgo, workers=1)
    many = classify(hidalgo, workers=3)
    assert one.verdict is many.verdict
    assert one.exhaustion == many.exhaustion
    assert one.witness.equals(many.witness)


def test_non_hyperbolic_is_refused():
    with pytest.raises(NonHyperbolic):
        classify(build(2, [3.0]))


def test_lift_cap_is_enforced(real_curve):
    with pytest.raises(CapExceeded):
        classify(real_curve, lift_cap=8)


@pytest.mark.parametrize("fixture", ["hidalgo", "real_curve"])
def test_verdict_survives_renormalization(fixture, request):
    curve = request.getfixturevalue(fixture)
    expected = classify(curve).verdict
    rng = np.random.default_rng(11)
    points = cone_points(curve).points
    for _ in range(20):
        a, b, c, d = rng.normal(size=4) + 1j * rng.normal(size=4)
        if abs(a * d - b * c) < 0.5:
            continue
        g = ExtendedMobius.from_coefficients(a, b, c, d)
        moved = [apply(g, points[i]) for i in rng.permutation(len(points))]
        lambdas = normalize(ConeConfiguration(tuple(moved))).lambdas
        assert classify(build(curve.k, lambdas)).verdict is expected
