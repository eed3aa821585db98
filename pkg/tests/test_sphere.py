"""Tests for sphere points and extended Möbius algebra."""
import cmath

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.errors import DegenerateTriple, NotAnticonformal, NotFiniteOrder
from src.orbifold.orbit_types import normal_form_map
from src.sphere.mobius import (
    ExtendedMobius,
    SpherePoint,
    anticonformal_normal_form,
    apply,
    chordal_distance,
    compose,
    inverse,
    is_identity,
    mobius_to_standard,
    order,
    power,
)

INF = SpherePoint.infinity()


def pt(z):
    return SpherePoint.from_complex(z)


def same_point(p, q, tol=1e-9):
    return chordal_distance(p, q) <= tol


def test_sphere_point_rejects_zero_pair():
    with pytest.raises(ValueError):
        SpherePoint(0, 0)


def test_infinity_is_canonical_and_has_no_coordinate():
    p = SpherePoint(2.0 + 1j, 0.0)
    assert p.is_infinity
    assert p.canonical() == INF
    with pytest.raises(ValueError):
        p.to_complex()


def test_chordal_distance_bounds():
    assert chordal_distance(pt(0), INF) == pytest.approx(2.0)
    assert chordal_distance(pt(1j), pt(-1j)) == pytest.approx(2.0)
    assert chordal_distance(pt(3 - 2j), pt(3 - 2j)) == pytest.approx(0.0, abs=1e-15)


def test_mobius_to_standard_sends_triple_to_inf_zero_one():
    p, q, r = pt(2 + 1j), pt(-1), INF
    t = mobius_to_standard(p, q, r)
    assert apply(t, p).is_infinity
    assert same_point(apply(t, q), pt(0))
    assert same_point(apply(t, r), pt(1))


def test_mobius_to_standard_rejects_repeated_point():
    with pytest.raises(DegenerateTriple):
        mobius_to_standard(pt(1), pt(2), pt(1))


def test_anticonformal_application_conjugates_first():
    t = ExtendedMobius.from_coefficients(0, 1, 1, 0, anticonformal=True)   # 1/conj(z)
    assert same_point(apply(t, pt(2j)), pt(0.5j))
    assert apply(t, pt(0)).is_infinity


def test_compose_flags_and_action():
    a = ExtendedMobius.from_coefficients(1, 2, 0, 1)                      # z + 2
    j = ExtendedMobius.conjugation()
    aj = compose(a, j)
    assert aj.anticonformal
    assert same_point(apply(aj, pt(1 + 1j)), pt(3 - 1j))
    ja = compose(j, a)
    assert same_point(apply(ja, pt(1 + 1j)), pt(3 - 1j))
    assert not compose(j, j).anticonformal


@given(
    st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False),
    st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False),
    st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False),
    st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False),
    st.booleans(),
)
def test_inverse_composes_to_identity(a, b, c, d, anti):
    assume(abs(a * d - b * c) > 0.1)
    t = ExtendedMobius.from_coefficients(a, b, c, d, anticonformal=anti)
    assert is_identity(compose(t, inverse(t)), 1e-7)
    assert is_identity(compose(inverse(t), t), 1e-7)


COEFF = st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False)
MAPS = st.tuples(COEFF, COEFF, COEFF, COEFF, st.booleans()).filter(
    lambda t: abs(t[0] * t[3] - t[1] * t[2]) > 0.1)
POINTS = st.one_of(st.just(None), st.complex_numbers(max_magnitude=50, allow_nan=False, allow_infinity=False))


@settings(max_examples=1000, deadline=None)
@given(MAPS, MAPS, POINTS)
def test_compose_acts_as_successive_application(m1, m2, z):
    t1 = ExtendedMobius.from_coefficients(*m1[:4], anticonformal=m1[4])
    t2 = ExtendedMobius.from_coefficients(*m2[:4], anticonformal=m2[4])
    p = INF if z is None else pt(z)
    t12 = compose(t1, t2)
    assert t12.anticonformal == (t1.anticonformal != t2.anticonformal)
    assert same_point(apply(t12, p), apply(t1, apply(t2, p)), 1e-7)


def test_equality_is_projective():
    t = ExtendedMobius.from_coefficients(1, 2, 3, 4)
    assert t == ExtendedMobius(3j * t.m)
    assert t != ExtendedMobius(t.m, anticonformal=True)


def test_orders():
    assert order(ExtendedMobius.identity()) == 1
    assert order(ExtendedMobius.from_coefficients(1j, 0, 0, 1)) == 4
    assert order(ExtendedMobius.conjugation()) == 2
    assert order(normal_form_map(3)) == 6
    assert order(normal_form_map(4)) == 4


def test_order_of_infinite_map_raises():
    with pytest.raises(NotFiniteOrder):
        order(ExtendedMobius.from_coefficients(1, 1, 0, 1), cap=50)


def test_power_matches_repeated_composition():
    t = ExtendedMobius.from_coefficients(cmath.exp(0.3j), 0, 0, 1)
    assert power(t, 3) == ExtendedMobius.from_coefficients(cmath.exp(0.9j), 0, 0, 1)
    assert is_identity(compose(power(t, -2), power(t, 2)))


@pytest.mark.parametrize("N, two_m", [(1, 2), (2, 2), (3, 6), (4, 4), (5, 10), (6, 6)])
def test_normal_form_of_normal_form_map(N, two_m):
    nf = anticonformal_normal_form(normal_form_map(N))
    assert nf.N == N
    assert nf.order == two_m
    assert abs(nf.parameter ** N - 1) < 1e-9


@pytest.mark.parametrize("N", [1, 3, 4, 5])
def test_normal_form_survives_conjugation(N):
    g = ExtendedMobius.from_coefficients(1, 2, 0.5j, 1)
    t = compose(compose(g, normal_form_map(N)), inverse(g))
    nf = anticonformal_normal_form(t)
    assert nf.N == N
    # conjugator really carries t to z -> parameter / conj(z)
    target = ExtendedMobius.from_coefficients(0, nf.parameter, 1, 0, anticonformal=True)
    assert compose(compose(nf.conjugator, t), inverse(nf.conjugator)).equals(target, 1e-7)
    assert nf.parameter.imag >= -1e-9
    assert abs(abs(nf.parameter) - 1) < 1e-9


def test_normal_form_of_reflection_in_real_line():
    nf = anticonformal_normal_form(ExtendedMobius.conjugation())
    assert (nf.N, nf.order) == (1, 2)


def test_antipodal_map_has_N_two():
    nf = anticonformal_normal_form(ExtendedMobius.from_coefficients(0, -1, 1, 0, anticonformal=True))
    assert (nf.N, nf.order) == (2, 2)


def test_normal_form_needs_anticonformal():
    with pytest.raises(NotAnticonformal):
        anticonformal_normal_form(ExtendedMobius.from_coefficients(1j, 0, 0, 1))


def test_matrix_is_read_only():
    t = ExtendedMobius.identity()
    with pytest.raises(ValueError):
        t.m[0, 0] = 5
    assert np.allclose(t.m, np.eye(2))
