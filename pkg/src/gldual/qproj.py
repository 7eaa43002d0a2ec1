"""The q-projection from extended-quotient strata to the ordinary quotient,
with exact fiber enumeration.

A coordinate z sitting on a cycle of length alpha projects to the q-string
{q^((alpha-1)/2) z, ..., q^((1-alpha)/2) z}; a stratum point projects to the
blockwise union of the strings of its coordinates.  Fibers are computed by
exhaustively decomposing each block's multiset into q-strings of the shapes
prescribed by each stratum's cycle type.  Candidate string centers are read
off the query multiset itself (every string must cover some element), which
makes the search exhaustive; all comparisons are exact QScalar equality, so
query points must be exact (floats are rejected, never snapped).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .bernstein import Component, Stratum, enumerate_strata
from .errors import LimitExceeded
from .scalars import QScalar

__all__ = [
    "SymPoint",
    "StratumPoint",
    "FIBER_LIMIT",
    "q_string",
    "project",
    "fiber",
    "verify_section",
]

FIBER_LIMIT = 12


@dataclass(frozen=True)
class SymPoint:
    """A point of the ordinary quotient: one multiset of scalars per block, stored sorted."""

    blocks: tuple[tuple[QScalar, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks))

    def to_json(self) -> dict:
        return {"blocks": [[z.to_json() for z in b] for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> SymPoint:
        return cls(tuple(tuple(QScalar.from_json(z) for z in b) for b in data["blocks"]))


@dataclass(frozen=True)
class StratumPoint:
    """A point of one extended-quotient stratum: one coordinate per cycle.

    Coordinates follow the cycle type (blocks in order, parts weakly
    decreasing) and are sorted within runs of equal-length cycles, which makes
    equality respect the residual centralizer action.
    """

    stratum: Stratum
    coords: tuple[QScalar, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        if len(coords) != self.stratum.torus_rank:
            raise ValueError(
                "expected %d coordinates, got %d" % (self.stratum.torus_rank, len(coords))
            )
        canonical = []
        i = 0
        for parts in self.stratum.cycle_type.parts_per_block:
            for _, group in itertools.groupby(parts):
                run = sum(1 for _ in group)
                canonical.extend(sorted(coords[i : i + run]))
                i += run
        object.__setattr__(self, "coords", tuple(canonical))

    def to_json(self) -> dict:
        return {
            "component": self.stratum.component.to_json(),
            "cycle_type": [list(p) for p in self.stratum.cycle_type.parts_per_block],
            "coords": [z.to_json() for z in self.coords],
        }

    @classmethod
    def from_json(cls, data: dict) -> StratumPoint:
        component = Component.from_json(data["component"])
        stratum = Stratum.from_json(data, component)
        return cls(stratum, tuple(QScalar.from_json(z) for z in data["coords"]))


def q_string(alpha: int, z: QScalar, scale: Fraction = Fraction(1)) -> tuple[QScalar, ...]:
    """The length-alpha geometric progression of ratio q^scale centered at z, sorted."""
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    return tuple(
        sorted(z.q_shift(scale * (Fraction(alpha - 1, 2) - i)) for i in range(alpha))
    )


def project(point: StratumPoint) -> SymPoint:
    """Apply the q-projection: blockwise union of the strings of the coordinates."""
    blocks_out = []
    i = 0
    for block, parts in zip(
        point.stratum.component.blocks, point.stratum.cycle_type.parts_per_block
    ):
        elems: list[QScalar] = []
        for alpha in parts:
            elems.extend(q_string(alpha, point.coords[i], block.q_scale))
            i += 1
        blocks_out.append(tuple(elems))
    return SymPoint(tuple(blocks_out))


def _string_candidates(remaining: Counter, alpha: int, scale: Fraction) -> list[QScalar]:
    # Every string covers some element of the remainder, so shifting each
    # element back through all alpha positions enumerates every viable center.
    cands = set()
    for w in remaining:
        for i in range(alpha):
            cands.add(w.q_shift(-scale * (Fraction(alpha - 1, 2) - i)))
    return sorted(cands)


def _covers(remaining: Counter, string: tuple[QScalar, ...]) -> bool:
    need = Counter(string)
    return all(remaining[z] >= c for z, c in need.items())


def _block_decompositions(
    multiset: tuple[QScalar, ...], parts: tuple[int, ...], scale: Fraction
) -> list[tuple[QScalar, ...]]:
    """All decompositions of the multiset into q-strings of the given sizes.

    Returns one center per part, in part order.  Centers of equal-length parts
    are forced weakly increasing, so each decomposition appears exactly once
    and the output is already canonical.
    """
    results: list[tuple[QScalar, ...]] = []

    def descend(idx: int, remaining: Counter, chosen: list[QScalar]):
        if idx == len(parts):
            # cardinalities match by construction, so remaining is empty here
            results.append(tuple(chosen))
            return
        alpha = parts[idx]
        floor = chosen[-1] if idx > 0 and parts[idx - 1] == alpha else None
        for z in _string_candidates(remaining, alpha, scale):
            if floor is not None and z < floor:
                continue
            string = q_string(alpha, z, scale)
            if _covers(remaining, string):
                descend(idx + 1, remaining - Counter(string), chosen + [z])

    descend(0, Counter(multiset), [])
    return results


def fiber(
    point: SymPoint, component: Component, max_degree: int = FIBER_LIMIT
) -> list[StratumPoint]:
    """The complete q-projection preimage of `point`, over all strata.

    Empty when the point is outside the image; points are returned in
    canonical order (strata in enumeration order, coordinates sorted within
    each stratum) and are pairwise distinct.
    """
    if len(point.blocks) != len(component.blocks):
        raise ValueError("point has %d blocks, component has %d"
                         % (len(point.blocks), len(component.blocks)))
    for block, mset in zip(component.blocks, point.blocks):
        if len(mset) != block.exponent:
            raise ValueError(
                "block %r expects a multiset of size %d, got %d"
                % (block.label, block.exponent, len(mset))
            )
    if component.degree > max_degree:
        raise LimitExceeded(
            "component degree %d exceeds the fiber limit %d" % (component.degree, max_degree)
        )

    out: list[StratumPoint] = []
    for stratum in enumerate_strata(component, max_degree):
        per_block = []
        for block, parts, mset in zip(
            component.blocks, stratum.cycle_type.parts_per_block, point.blocks
        ):
            decomps = _block_decompositions(mset, parts, block.q_scale)
            if not decomps:
                per_block = None
                break
            per_block.append(decomps)
        if per_block is None:
            continue
        found = [
            StratumPoint(stratum, tuple(itertools.chain.from_iterable(combo)))
            for combo in itertools.product(*per_block)
        ]
        found.sort(key=lambda p: tuple((z.q_exp, z.turn) for z in p.coords))
        out.extend(dict.fromkeys(found))
    return out


def verify_section(point: StratumPoint, max_degree: int = FIBER_LIMIT) -> bool:
    """Round-trip soundness: the point occurs in the fiber over its own image."""
    return point in fiber(project(point), point.stratum.component, max_degree)
