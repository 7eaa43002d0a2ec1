import random
from collections import Counter
from fractions import Fraction as F

import pytest

from gldual.bernstein import Block, Component, CycleType, Stratum, enumerate_strata
from gldual.errors import LimitExceeded
from gldual.qproj import StratumPoint, SymPoint, fiber, project, q_string, verify_section
from gldual.scalars import ONE, QScalar, q_power, unit
from gldual.verify import fiber_reference


def stratum(component, *parts_per_block):
    return Stratum(component, CycleType(tuple(tuple(p) for p in parts_per_block)))


C2 = Component.from_exponents((2,))
C3 = Component.from_exponents((3,))


def test_q_string_examples():
    assert q_string(2, ONE) == (q_power(F(-1, 2)), q_power(F(1, 2)))
    assert q_string(3, ONE) == (q_power(-1), ONE, q_power(1))
    z = QScalar(F(1, 3), F(1, 7))
    assert q_string(1, z) == (z,)


def test_q_string_general_center():
    z = unit(F(1, 5))
    assert Counter(q_string(3, z)) == Counter([z.q_shift(1), z, z.q_shift(-1)])


def test_project_identity_stratum():
    z1, z2 = QScalar(F(1), F(0)), QScalar(F(0), F(1, 3))
    point = StratumPoint(stratum(C2, (1, 1)), (z1, z2))
    assert project(point) == SymPoint(((z1, z2),))


def test_project_gl3_mixed_stratum():
    # (z, w, w) with w = 1 goes to {z, q^(1/2), q^(-1/2)}
    z = unit(F(1, 3))
    point = StratumPoint(stratum(C3, (2, 1)), (ONE, z))
    assert project(point) == SymPoint(((q_power(F(1, 2)), q_power(F(-1, 2)), z),))


def test_project_gl3_regular_stratum():
    point = StratumPoint(stratum(C3, (3,)), (ONE,))
    assert project(point) == SymPoint(((q_power(1), ONE, q_power(-1)),))


def test_gl2_fiber():
    y = SymPoint(((q_power(F(1, 2)), q_power(F(-1, 2))),))
    points = fiber(y, C2)
    assert len(points) == 2
    identity_point, cycle_point = points
    assert identity_point.stratum.cycle_type.parts_per_block == ((1, 1),)
    assert identity_point.coords == (q_power(F(-1, 2)), q_power(F(1, 2)))
    assert cycle_point.stratum.cycle_type.parts_per_block == ((2,),)
    assert cycle_point.coords == (ONE,)


def test_gl3_collision_fiber():
    y = SymPoint(((q_power(-1), ONE, q_power(1)),))
    points = fiber(y, C3)
    assert len(points) == 4
    by_stratum = Counter(p.stratum.cycle_type.parts_per_block for p in points)
    assert by_stratum == {((1, 1, 1),): 1, ((2, 1),): 2, ((3,),): 1}
    # two distinct points on the same stratum, with the expected coordinates
    middle = [p for p in points if p.stratum.cycle_type.parts_per_block == ((2, 1),)]
    assert {p.coords for p in middle} == {
        (q_power(F(-1, 2)), q_power(1)),
        (q_power(F(1, 2)), q_power(-1)),
    }
    assert all(project(p) == y for p in points)


def test_fiber_of_generic_point_is_identity_stratum_only():
    y = SymPoint(((ONE, unit(F(1, 3)), QScalar(F(1, 3), F(0))),))
    points = fiber(y, C3)
    assert len(points) == 1
    assert points[0].stratum.cycle_type.parts_per_block == ((1, 1, 1),)


def test_fiber_empty_outside_image():
    # only two of three entries lie in one block-sized multiset: sizes must match
    y = SymPoint(((ONE, ONE),))
    with pytest.raises(ValueError):
        fiber(y, C3)
    # a correct-size point is always in the image (identity stratum)
    assert len(fiber(SymPoint(((ONE, ONE, ONE),)), C3)) == 1


def test_fiber_respects_multiplicities():
    y = SymPoint(((q_power(F(1, 2)), q_power(F(1, 2)), q_power(F(-1, 2))),))
    points = fiber(y, C3)
    by_stratum = Counter(p.stratum.cycle_type.parts_per_block for p in points)
    assert by_stratum == {((1, 1, 1),): 1, ((2, 1),): 1}


def test_fiber_multiblock_is_blockwise():
    c = Component((Block("a", 2), Block("b", 1)))
    y = SymPoint(((q_power(F(1, 2)), q_power(F(-1, 2))), (ONE,)))
    points = fiber(y, c)
    assert len(points) == 2
    assert {p.stratum.cycle_type.parts_per_block for p in points} == {
        ((1, 1), (1,)),
        ((2,), (1,)),
    }


def test_fiber_q_scale_escape_hatch():
    # with q_scale = 2 the 2-cycle string has ratio q^2
    c = Component((Block("a", 2, F(2)),))
    y = SymPoint(((q_power(1), q_power(-1)),))
    points = fiber(y, c)
    assert {p.stratum.cycle_type.parts_per_block for p in points} == {((1, 1),), ((2,),)}
    cycle_point = [p for p in points if p.stratum.cycle_type.parts_per_block == ((2,),)][0]
    assert cycle_point.coords == (ONE,)
    assert project(cycle_point) == y


def test_identity_stratum_projection_is_identity():
    values = (QScalar(F(1), F(1, 3)), QScalar(F(-1, 2), F(0)), ONE)
    point = StratumPoint(stratum(C3, (1, 1, 1)), values)
    assert project(point) == SymPoint((values,))


def test_verify_section_examples():
    assert verify_section(StratumPoint(stratum(C3, (1, 1, 1)), (ONE, ONE, unit(F(1, 2)))))
    assert verify_section(StratumPoint(stratum(C3, (3,)), (ONE,)))
    assert verify_section(StratumPoint(stratum(C2, (2,)), (QScalar(F(1, 2), F(1, 3)),)))


def test_fiber_matches_bruteforce_oracle_on_random_points():
    rng = random.Random(7)
    qexps = [F(k, 2) for k in range(-3, 4)]
    turns = [F(0), F(0), F(1, 2)]
    compositions = [(1,), (2,), (3,), (4,), (5,), (2, 1), (2, 2), (3, 2), (1, 1, 1)]
    for _ in range(120):
        component = Component.from_exponents(rng.choice(compositions))
        y = SymPoint(
            tuple(
                tuple(
                    QScalar(rng.choice(qexps), rng.choice(turns))
                    for _ in range(b.exponent)
                )
                for b in component.blocks
            )
        )
        got = fiber(y, component)
        expected = fiber_reference(y, component)
        assert sorted(got, key=lambda p: (p.stratum.cycle_type.parts_per_block, p.coords)) \
            == expected
        assert all(project(p) == y for p in got)
        assert len(set(got)) == len(got)


def test_fiber_soundness_on_projected_points():
    rng = random.Random(11)
    qexps = [F(k, 2) for k in range(-2, 3)]
    for _ in range(60):
        component = Component.from_exponents(rng.choice([(3,), (4,), (2, 2)]))
        strata = enumerate_strata(component)
        s = rng.choice(strata)
        coords = tuple(QScalar(rng.choice(qexps), F(0)) for _ in range(s.torus_rank))
        point = StratumPoint(s, coords)
        assert verify_section(point)


def bell_number(n):
    import math

    bells = [1]
    for m in range(n):
        bells.append(sum(math.comb(m, k) * bells[k] for k in range(m + 1)))
    return bells[n]


def test_fiber_size_bounded_by_set_partition_counts():
    # each fiber point on a stratum is one way of cutting the query multisets
    # into cells, so across all strata the set-partition counts bound the fiber
    from gldual.partitions import multipartitions

    rng = random.Random(23)
    qexps = [F(k, 2) for k in range(-3, 4)]
    for _ in range(40):
        exponents = rng.choice([(3,), (4,), (5,), (2, 2), (3, 2)])
        component = Component.from_exponents(exponents)
        y = SymPoint(
            tuple(
                tuple(QScalar(rng.choice(qexps), F(0)) for _ in range(b.exponent))
                for b in component.blocks
            )
        )
        bound = 0
        for _mp in multipartitions(exponents):
            cells = 1
            for e in exponents:
                cells *= bell_number(e)
            bound += cells
        assert len(fiber(y, component)) <= bound


def test_fiber_degree_limit():
    c = Component.from_exponents((13,))
    y = SymPoint((tuple(q_power(i) for i in range(13)),))
    with pytest.raises(LimitExceeded):
        fiber(y, c)


def test_stratum_point_canonicalization():
    s = stratum(C3, (1, 1, 1))
    a = StratumPoint(s, (q_power(2), ONE, q_power(1)))
    b = StratumPoint(s, (ONE, q_power(1), q_power(2)))
    assert a == b
    assert a.coords == (ONE, q_power(1), q_power(2))
    # equal-length runs sort independently of the other runs
    s21 = stratum(C3, (2, 1))
    p = StratumPoint(s21, (q_power(5), ONE))
    assert p.coords == (q_power(5), ONE)


def test_stratum_point_length_validation():
    with pytest.raises(ValueError):
        StratumPoint(stratum(C3, (2, 1)), (ONE,))


def test_sym_point_sorts_blocks():
    y = SymPoint(((q_power(2), ONE, q_power(1)),))
    assert y.blocks == ((ONE, q_power(1), q_power(2)),)


def test_json_round_trips():
    y = SymPoint(((q_power(F(1, 2)), unit(F(1, 3))),))
    assert SymPoint.from_json(y.to_json()) == y
    point = StratumPoint(stratum(C3, (2, 1)), (ONE, q_power(1)))
    assert StratumPoint.from_json(point.to_json()) == point
