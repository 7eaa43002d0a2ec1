"""Exact arithmetic in the subgroup q^Q * (rational-angle units) of the punctured plane.

Every coordinate that appears in the orbit, quotient and q-projection formulas
is a point q^a * e^(2*pi*i*u) with a, u rational and q a fixed indeterminate
q > 1.  Keeping (a, u) as exact fractions makes equality, sorting and fiber
membership decidable; a numeric q enters only in :meth:`QScalar.to_complex`.
"""

from __future__ import annotations

import cmath
import functools
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["QScalar", "ONE", "q_power", "unit"]


def _fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("exact rational required, got float %r" % x)
    return Fraction(x)


@functools.total_ordering
@dataclass(frozen=True)
class QScalar:
    """The exact point q^q_exp * e^(2*pi*i*turn), with turn reduced into [0, 1)."""

    q_exp: Fraction
    turn: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q_exp", _fraction(self.q_exp))
        object.__setattr__(self, "turn", _fraction(self.turn) % 1)

    def __mul__(self, other: QScalar) -> QScalar:
        return QScalar(self.q_exp + other.q_exp, self.turn + other.turn)

    def inverse(self) -> QScalar:
        return QScalar(-self.q_exp, -self.turn)

    def __pow__(self, n: int) -> QScalar:
        return QScalar(self.q_exp * n, self.turn * n)

    def unit_part(self) -> QScalar:
        """Strip the modulus: |z|^(-1) * z.  Idempotent; |q^a| = q^a exactly."""
        return QScalar(Fraction(0), self.turn)

    def q_shift(self, h) -> QScalar:
        """Multiply by q^h."""
        return QScalar(self.q_exp + _fraction(h), self.turn)

    def is_unit(self) -> bool:
        return self.q_exp == 0

    def to_complex(self, q: float) -> complex:
        """Evaluate at a numeric q > 1 (floating point)."""
        if not q > 1:
            raise ValueError("q must be a real number > 1, got %r" % q)
        return float(q) ** float(self.q_exp) * cmath.exp(2j * cmath.pi * float(self.turn))

    def __lt__(self, other: QScalar) -> bool:
        return (self.q_exp, self.turn) < (other.q_exp, other.turn)

    def __str__(self) -> str:
        parts = []
        if self.q_exp != 0:
            parts.append("q" if self.q_exp == 1 else "q^%s" % self.q_exp)
        if self.turn != 0:
            parts.append("e(%s)" % self.turn)
        return "*".join(parts) or "1"

    def to_json(self) -> dict:
        return {"q_exp": str(self.q_exp), "turn": str(self.turn)}

    @classmethod
    def from_json(cls, data: dict) -> QScalar:
        return cls(Fraction(data["q_exp"]), Fraction(data["turn"]))


ONE = QScalar(Fraction(0), Fraction(0))


def q_power(a) -> QScalar:
    """The positive real point q^a."""
    return QScalar(_fraction(a), Fraction(0))


def unit(turn) -> QScalar:
    """The unit-circle point e^(2*pi*i*turn)."""
    return QScalar(Fraction(0), _fraction(turn))
