"""The tempering retraction onto the tempered dual, with its linear homotopy.

On every carrier the map is coordinatewise z -> z/|z|.  Since |q^a * u| = q^a
exactly, stripping the modulus is exact rational arithmetic and the retraction
is genuinely idempotent, not idempotent up to rounding.  The homotopy scales
each modulus exponent by (1 - t), so t = 0 is the identity and t = 1 the
retraction, and neither the inertial classes of a parameter nor the stratum of
a point ever change along the way.
"""

from __future__ import annotations

from fractions import Fraction

from .parameters import LParameter, OrbitDescriptor
from .qproj import StratumPoint
from .scalars import QScalar

__all__ = [
    "temper_parameter",
    "homotopy",
    "temper_point",
    "homotopy_point",
    "compact_orbit",
]


def temper_parameter(phi: LParameter) -> LParameter:
    """Replace every twist by its unit part."""
    return LParameter(tuple((cls, twist.unit_part()) for cls, twist in phi.summands))


def _check_t(t) -> Fraction:
    t = t if isinstance(t, Fraction) else Fraction(t)
    if not 0 <= t <= 1:
        raise ValueError("homotopy parameter must lie in [0, 1], got %s" % t)
    return t


def homotopy(phi: LParameter, t) -> LParameter:
    """Contract the twist moduli by (1 - t); t = 0 is the identity, t = 1 tempers."""
    t = _check_t(t)
    return LParameter(
        tuple((cls, QScalar((1 - t) * twist.q_exp, twist.turn)) for cls, twist in phi.summands)
    )


def temper_point(point: StratumPoint) -> StratumPoint:
    """Coordinatewise unit part on a stratum point; the stratum is unchanged."""
    return StratumPoint(point.stratum, tuple(z.unit_part() for z in point.coords))


def homotopy_point(point: StratumPoint, t) -> StratumPoint:
    t = _check_t(t)
    return StratumPoint(
        point.stratum, tuple(QScalar((1 - t) * z.q_exp, z.turn) for z in point.coords)
    )


def compact_orbit(orbit: OrbitDescriptor) -> tuple[int, ...]:
    """Multiplicities (l_1, ..., l_k) of the compact orbit prod(Sym^{l_i} T).

    Defined only when every class has a unitary determinant.
    """
    for cls, _ in orbit.classes:
        if not cls.rho.unitary_det:
            raise ValueError(
                "class %r has non-unitary determinant; the compact orbit is undefined"
                % (cls.rho.id,)
            )
    return orbit.multiplicities
