from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gldual.bernstein import Component, CycleType, Stratum, enumerate_orbits
from gldual.cohomology import orbit_poincare, tempered_orbit_poincare
from gldual.parameters import (
    TRIVIAL,
    InertialClass,
    LParameter,
    OrbitDescriptor,
    WeilLabel,
    is_tempered,
    orbit_of,
)
from gldual.qproj import StratumPoint, SymPoint, project
from gldual.retract import (
    compact_orbit,
    homotopy,
    homotopy_point,
    temper_parameter,
    temper_point,
)
from gldual.scalars import ONE, QScalar, q_power

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=6)
twists = st.builds(QScalar, rationals, rationals)
classes = st.builds(
    InertialClass,
    st.sampled_from([TRIVIAL, WeilLabel("a", 2, True)]),
    st.sampled_from([F(0), F(1, 2), F(1)]),
)
params = st.builds(
    LParameter, st.lists(st.tuples(classes, twists), min_size=1, max_size=4).map(tuple)
)
times = st.fractions(min_value=0, max_value=1, max_denominator=8)


def test_temper_parameter_examples():
    cls = InertialClass(TRIVIAL, F(0))
    phi = LParameter(((cls, QScalar(F(3, 2), F(1, 4))),))
    assert temper_parameter(phi).summands[0][1] == QScalar(F(0), F(1, 4))

    already = LParameter(((cls, QScalar(F(0), F(1, 3))),))
    assert temper_parameter(already) == already

    # unramified GL(3): twists q and q^(-1/2) both land on 1
    gl3 = LParameter(
        ((cls, q_power(1)), (InertialClass(TRIVIAL, F(1, 2)), q_power(F(-1, 2))))
    )
    assert all(tw == ONE for _, tw in temper_parameter(gl3).summands)


@given(params)
def test_temper_is_idempotent(phi):
    once = temper_parameter(phi)
    assert temper_parameter(once) == once


@given(params)
def test_homotopy_endpoints(phi):
    assert homotopy(phi, 0) == phi
    assert homotopy(phi, 1) == temper_parameter(phi)


@given(params, times)
def test_homotopy_preserves_orbit(phi, t):
    assert orbit_of(homotopy(phi, t)) == orbit_of(phi)


def test_homotopy_scales_linearly():
    cls = InertialClass(TRIVIAL, F(0))
    phi = LParameter(((cls, QScalar(F(1), F(1, 8))),))
    assert homotopy(phi, F(1, 2)).summands[0][1] == QScalar(F(1, 2), F(1, 8))


def test_homotopy_rejects_out_of_range():
    phi = LParameter(((InertialClass(TRIVIAL, F(0)), ONE),))
    for bad in (F(-1, 2), F(3, 2), 2):
        with pytest.raises(ValueError):
            homotopy(phi, bad)
        with pytest.raises(ValueError):
            homotopy_point(
                StratumPoint(
                    Stratum(Component.from_exponents((1,)), CycleType(((1,),))), (ONE,)
                ),
                bad,
            )


@given(params)
def test_temper_fixes_exactly_unit_twists(phi):
    fixed = temper_parameter(phi) == phi
    assert fixed == all(tw.is_unit() for _, tw in phi.summands)


@given(params)
def test_tempered_output_is_tempered_when_dets_unitary(phi):
    result = temper_parameter(phi)
    if all(cls.rho.unitary_det for cls, _ in phi.summands):
        assert is_tempered(result)
    else:
        assert not is_tempered(result)


def test_temper_point_examples():
    c3 = Component.from_exponents((3,))
    cycle3 = Stratum(c3, CycleType(((3,),)))
    before = StratumPoint(cycle3, (q_power(2),))
    after = temper_point(before)
    assert after.coords == (ONE,)
    assert after.stratum == before.stratum
    # images before and after: {q^3, q^2, q} collapses onto {q, 1, q^-1}
    assert project(before) == SymPoint(((q_power(3), q_power(2), q_power(1)),))
    assert project(after) == SymPoint(((q_power(1), ONE, q_power(-1)),))

    mixed = StratumPoint(
        Stratum(Component.from_exponents((2,)), CycleType(((1, 1),))),
        (q_power(1), QScalar(F(-1, 2), F(1, 3))),
    )
    assert temper_point(mixed).coords == (ONE, QScalar(F(0), F(1, 3)))
    unit_point = StratumPoint(cycle3, (QScalar(F(0), F(2, 5)),))
    assert temper_point(unit_point) == unit_point


def test_point_homotopy_endpoints():
    c3 = Component.from_exponents((3,))
    s = Stratum(c3, CycleType(((2, 1),)))
    point = StratumPoint(s, (q_power(2), QScalar(F(1), F(1, 3))))
    assert homotopy_point(point, 0) == point
    assert homotopy_point(point, 1) == temper_point(point)
    assert homotopy_point(point, F(1, 2)).coords == (
        q_power(1),
        QScalar(F(1, 2), F(1, 3)),
    )


def test_compact_orbit():
    orbit = OrbitDescriptor(((InertialClass(TRIVIAL, F(0)), 1),))
    assert compact_orbit(orbit) == (1,)
    doubled = OrbitDescriptor(((InertialClass(TRIVIAL, F(0)), 2),))
    assert compact_orbit(doubled) == (2,)
    two = OrbitDescriptor(
        ((InertialClass(WeilLabel("a"), F(0)), 1), (InertialClass(WeilLabel("b"), F(0)), 1))
    )
    assert compact_orbit(two) == (1, 1)


def test_compact_orbit_rejects_non_unitary_det():
    orbit = OrbitDescriptor(((InertialClass(WeilLabel("x", 1, False), F(0)), 1),))
    with pytest.raises(ValueError):
        compact_orbit(orbit)


def test_orbit_cohomology_matches_compact_orbit_cohomology():
    for exponents in [(3,), (2, 2), (4, 1)]:
        for orbit in enumerate_orbits(Component.from_exponents(exponents)):
            assert orbit_poincare(orbit) == tempered_orbit_poincare(orbit)
