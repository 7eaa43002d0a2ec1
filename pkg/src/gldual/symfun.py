"""Elementary-symmetric coordinates on symmetric products of the punctured plane.

A multiset of n nonzero complex points maps to its elementary symmetric
functions (sigma_1, ..., sigma_n); sigma_n != 0 records that the points avoid
the origin.  The inverse direction recovers the multiset as the roots of
x^n - sigma_1 x^(n-1) + ... + (-1)^n sigma_n by simultaneous iteration with a
bounded step budget.  Together the two maps certify, at sample points, that
the n-th symmetric power of the punctured plane is the product of an affine
(n-1)-space with a punctured affine line.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import RootFindingError

__all__ = ["SymCoords", "to_sym_coords", "from_sym_coords", "match_multisets"]


@dataclass(frozen=True)
class SymCoords:
    sigma: tuple[complex, ...]

    def __post_init__(self):
        if not self.sigma:
            raise ValueError("sigma must be nonempty")
        if self.sigma[-1] == 0:
            raise ValueError("sigma_n must be nonzero (points must avoid the origin)")


def to_sym_coords(points) -> SymCoords:
    """Elementary symmetric functions of the points.

    The points are sorted internally before accumulation, so the output is
    bitwise identical for every input ordering.
    """
    pts = [complex(p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    if any(p == 0 for p in pts):
        raise ValueError("points must be nonzero")
    pts.sort(key=lambda z: (z.real, z.imag))
    # coefficients of prod(1 + p*t); coeff of t^k is sigma_k
    coeffs = [1 + 0j]
    for p in pts:
        coeffs = [coeffs[k] + (coeffs[k - 1] * p if k else 0) for k in range(len(coeffs))] + [
            coeffs[-1] * p
        ]
    return SymCoords(tuple(coeffs[1:]))


def from_sym_coords(coords: SymCoords, max_steps: int = 100) -> tuple[complex, ...]:
    """The multiset inverse: all roots (with multiplicity) of the monic
    polynomial with the given symmetric functions, sorted deterministically.

    Raises RootFindingError if the simultaneous iteration has not converged
    after max_steps steps.
    """
    n = len(coords.sigma)
    monic = [mpmath.mpc(1)] + [
        (-1) ** (k + 1) * mpmath.mpc(coords.sigma[k]) for k in range(n)
    ]
    try:
        roots = mpmath.polyroots(monic, maxsteps=max_steps, extraprec=60)
    except mpmath.libmp.NoConvergence as exc:
        raise RootFindingError(str(exc)) from exc
    out = sorted((complex(r) for r in roots), key=lambda z: (z.real, z.imag))
    if any(r == 0 for r in out):
        raise RootFindingError("root collapsed to zero despite sigma_n != 0")
    return tuple(out)


def match_multisets(a, b) -> list[tuple[int, int]]:
    """Optimal pairing of two equal-size multisets under absolute-difference cost.

    Returns index pairs (i, j) matching a[i] with b[j]; well-defined even for
    clustered values, unlike greedy nearest-neighbor matching.
    """
    a = [complex(x) for x in a]
    b = [complex(x) for x in b]
    if len(a) != len(b):
        raise ValueError("multisets must have equal size")
    cost = np.array([[abs(x - y) for y in b] for x in a])
    rows, cols = linear_sum_assignment(cost)
    return list(zip(rows.tolist(), cols.tolist()))
