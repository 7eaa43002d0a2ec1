"""Bernstein components, their extended-quotient strata, and the matching orbits.

A component is known to this package only through its exponents e_1,...,e_r
(one per distinct supercuspidal block) since every computed invariant depends
on the exponents alone.  Its Weyl group is S_{e_1} x ... x S_{e_r}, so the
strata of the extended quotient are indexed by multipartitions: one partition
of e_i per block.  The same multipartitions index the parameter orbits lying
over the component, via the dictionary part alpha <-> spin((alpha-1)/2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import LimitExceeded
from .parameters import InertialClass, OrbitDescriptor, WeilLabel
from .partitions import multipartitions, part_multiplicities

__all__ = [
    "Block",
    "Component",
    "CycleType",
    "Stratum",
    "STRATA_LIMIT",
    "enumerate_strata",
    "enumerate_orbits",
    "orbit_stratum_bijection",
    "stratum_quotient_shape",
]

# Strata/orbit/HP enumerations refuse components above this total exponent.
STRATA_LIMIT = 20


@dataclass(frozen=True)
class Block:
    """One supercuspidal block: opaque label, exponent, and an optional
    rational rescaling of the q-string step (q_i = q^q_scale escape hatch)."""

    label: str
    exponent: int
    q_scale: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        if not self.label:
            raise ValueError("block label must be nonempty")
        if self.exponent < 1:
            raise ValueError("block exponent must be >= 1")
        if not isinstance(self.q_scale, Fraction):
            object.__setattr__(self, "q_scale", Fraction(self.q_scale))
        if self.q_scale <= 0:
            raise ValueError("q_scale must be positive")

    def weil_label(self) -> WeilLabel:
        # Blocks are abstract supercuspidals; a unit-dimensional unitary
        # placeholder suffices because only class identity enters invariants.
        return WeilLabel(self.label, 1, True)


@dataclass(frozen=True)
class Component:
    """A Bernstein component, given by its blocks (pairwise distinct labels)."""

    blocks: tuple[Block, ...]

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("a component needs at least one block")
        labels = [b.label for b in self.blocks]
        if len(set(labels)) != len(labels):
            raise ValueError("block labels must be pairwise distinct")

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(b.exponent for b in self.blocks)

    @property
    def degree(self) -> int:
        """Complex dimension of the component: the sum of the exponents."""
        return sum(self.exponents)

    def to_json(self) -> dict:
        out = []
        for b in self.blocks:
            entry = {"label": b.label, "exponent": b.exponent}
            if b.q_scale != 1:
                entry["q_scale"] = str(b.q_scale)
            out.append(entry)
        return {"blocks": out}

    @classmethod
    def from_json(cls, data: dict) -> Component:
        return cls(
            tuple(
                Block(b["label"], int(b["exponent"]), Fraction(b.get("q_scale", 1)))
                for b in data["blocks"]
            )
        )

    @classmethod
    def from_exponents(cls, exponents: tuple[int, ...], prefix: str = "sc") -> Component:
        return cls(tuple(Block("%s%d" % (prefix, i), e) for i, e in enumerate(exponents)))


@dataclass(frozen=True)
class CycleType:
    """One partition per block: a conjugacy class of the component's Weyl group."""

    parts_per_block: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for parts in self.parts_per_block:
            if any(p < 1 for p in parts):
                raise ValueError("parts must be positive")
            if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
                raise ValueError("parts must be weakly decreasing")


@dataclass(frozen=True)
class Stratum:
    """One piece of the extended quotient: the fixed torus of a conjugacy class
    modulo the residual centralizer action.

    The fixed set of a permutation with the given cycle type is a torus with
    one coordinate per cycle.  Rotating within a cycle fixes it pointwise, so
    the centralizer acts through its symmetric factors, which permute the
    coordinates of equal-length cycles blockwise.
    """

    component: Component
    cycle_type: CycleType

    def __post_init__(self):
        parts = self.cycle_type.parts_per_block
        if len(parts) != len(self.component.blocks):
            raise ValueError("cycle type must have one partition per block")
        for block, p in zip(self.component.blocks, parts):
            if sum(p) != block.exponent:
                raise ValueError(
                    "partition %s does not sum to exponent %d of block %r"
                    % (p, block.exponent, block.label)
                )

    @property
    def torus_rank(self) -> int:
        """Complex dimension of the fixed torus: total number of cycles."""
        return sum(len(p) for p in self.cycle_type.parts_per_block)

    def residual_blocks(self) -> tuple[int, ...]:
        """Multiplicity of each (block, part-size) pair, in canonical order.

        These are the orbit blocks of the residual centralizer action: a
        symmetric group S_m permutes the coordinates of the m cycles of equal
        length within one block.
        """
        out = []
        for parts in self.cycle_type.parts_per_block:
            for _, mult in part_multiplicities(parts):
                out.append(mult)
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "cycle_type": [list(p) for p in self.cycle_type.parts_per_block],
            "torus_rank": self.torus_rank,
            "sym_factors": list(self.residual_blocks()),
        }

    @classmethod
    def from_json(cls, data: dict, component: Component) -> Stratum:
        return cls(component, CycleType(tuple(tuple(p) for p in data["cycle_type"])))


def _check_degree(component: Component, max_degree: int):
    if component.degree > max_degree:
        raise LimitExceeded(
            "component degree %d exceeds the limit %d" % (component.degree, max_degree)
        )


def enumerate_strata(component: Component, max_degree: int = STRATA_LIMIT) -> list[Stratum]:
    """All strata of the extended quotient, one per multipartition, in canonical order."""
    _check_degree(component, max_degree)
    return [
        Stratum(component, CycleType(mp)) for mp in multipartitions(component.exponents)
    ]


def _orbit_for(component: Component, mp: tuple[tuple[int, ...], ...]) -> OrbitDescriptor:
    classes = []
    for block, parts in zip(component.blocks, mp):
        rho = block.weil_label()
        for part, mult in part_multiplicities(parts):
            classes.append((InertialClass(rho, Fraction(part - 1, 2)), mult))
    return OrbitDescriptor(tuple(classes))


def enumerate_orbits(
    component: Component, max_degree: int = STRATA_LIMIT
) -> list[OrbitDescriptor]:
    """All parameter orbits over the component.

    A part alpha of the partition of block i contributes the inertial class
    (label_i, spin((alpha-1)/2)) with the part's multiplicity; the orbits are
    enumerated in the same multipartition order as the strata.
    """
    _check_degree(component, max_degree)
    return [_orbit_for(component, mp) for mp in multipartitions(component.exponents)]


def orbit_stratum_bijection(
    component: Component, max_degree: int = STRATA_LIMIT
) -> list[tuple[OrbitDescriptor, Stratum]]:
    """Pair each orbit with the stratum arising from the same multipartition."""
    _check_degree(component, max_degree)
    return [
        (_orbit_for(component, mp), Stratum(component, CycleType(mp)))
        for mp in multipartitions(component.exponents)
    ]


def stratum_quotient_shape(stratum: Stratum) -> tuple[int, ...]:
    """The stratum as a product of symmetric powers: one Sym^m factor per entry."""
    return stratum.residual_blocks()
