"""Brauer characters of the layers M^(j+1)/M^(j) and their decompositions.

Each layer is S_{chi^-j} tensor H^0(Y, Omega_Y(D_j)) as a k[H/I]-module. The
tame cover Y -> Z makes its Brauer character computable from the inertia
orders, their fundamental characters and deg D_j alone.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from holodiff.errors import IntegralityError, VerificationError
from holodiff.hypogroup import (
    BrauerChar,
    Decomp,
    HypoGroup,
    IndecLabel,
    decompose_projective,
    induced_char,
    regular_char,
    simple_char,
)
from holodiff.ramfilter import LayerDivisors, RamInput, genus_Y

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TameOrbit:
    """A family of ``count`` branch points of Y -> Z with inertia of order e."""

    tame_order: int
    theta_exp: int
    count: int


@dataclass(frozen=True)
class TameCoverData:
    """The tame cover Y -> Z: quotient group, g(Y), orbits and l-values per layer."""

    group: HypoGroup
    quotient: HypoGroup
    genus_Y: int
    orbits: tuple[TameOrbit, ...]
    l_values: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]

    @classmethod
    def from_input(cls, ram: RamInput, layers: LayerDivisors) -> TameCoverData:
        """Derive the tame data of ``ram`` given its divisor layers."""
        p = ram.group.p
        orbits = tuple(
            TameOrbit(
                tame_order=point.tame_order,
                theta_exp=(point.fund_char_exp * p**point.wild_exp) % point.tame_order,
                count=point.count,
            )
            for point in ram.points
        )
        l_values = tuple(
            tuple((-d) % orbit.tame_order for d, orbit in zip(row, orbits)) for row in layers.multiplicities
        )
        return cls(
            group=ram.group,
            quotient=ram.group.quotient(ram.n_I),
            genus_Y=genus_Y(ram),
            orbits=orbits,
            l_values=l_values,
            degrees=layers.degrees,
        )

    @property
    def top(self) -> int:
        """Largest layer index."""
        return len(self.degrees) - 1


def layer_count_n(j: int, cover: TameCoverData, deg: int) -> int:
    """Return n_j, the multiplicity of k[H/I] in the layer j formula."""
    hbar = cover.quotient.order
    n_j = Fraction(deg + cover.genus_Y - 1, hbar)
    for orbit, l_value in zip(cover.orbits, cover.l_values[j]):
        e = orbit.tame_order
        n_j += orbit.count * (l_value - Fraction(e - 1, 2)) / e
    if n_j.denominator != 1:
        raise IntegralityError(f"n_{j} = {n_j} is not an integer")
    return int(n_j)


def layer_character(j: int, cover: TameCoverData, deg: int) -> BrauerChar:
    """Return the Brauer character of M^(j+1)/M^(j) over H/I."""
    group = cover.quotient
    table = group.class_table
    n_j = layer_count_n(j, cover, deg)
    terms: list[tuple[Fraction | int, BrauerChar]] = []
    if j == cover.top:
        terms.append((1, simple_char(group, 0)))
    for orbit, l_value in zip(cover.orbits, cover.l_values[j]):
        e, f = orbit.tame_order, orbit.theta_exp
        for t in range(1, e):
            terms.append((orbit.count * Fraction(t, e), induced_char(group, e, f * t)))
        for t in range(1, l_value + 1):
            terms.append((-orbit.count, induced_char(group, e, -f * t)))
    terms.append((n_j, regular_char(group)))
    gamma = BrauerChar.combine(table, terms)
    expected = deg + cover.genus_Y - 1 if j < cover.top else cover.genus_Y
    if gamma.degree() != expected:
        raise VerificationError(f"layer {j} has degree {gamma.degree()}, expected {expected}")
    logger.debug("layer %d: n_j=%d degree=%s", j, n_j, expected)
    return simple_char(group, group.chi_shift(0, j)) * gamma.dual()


def layer_decompose(j: int, cover: TameCoverData, char: BrauerChar) -> tuple[Decomp, bool]:
    """Split a layer into projectives plus, at the top, the simple S_chi."""
    group = cover.quotient
    if j == cover.top and group.n > 0:
        rest = char - simple_char(group, group.chi_index)
        decomp = decompose_projective(rest, group) + Decomp({IndecLabel(group.chi_index, 1): 1})
        return decomp, True
    return decompose_projective(char, group), False


@dataclass(frozen=True)
class LayerDecomp:
    """Decompositions of every layer; ``extra_simple`` marks S_chi in the top one."""

    group: HypoGroup
    layers: tuple[Decomp, ...]
    extra_simple: bool = False


def layer_characters(cover: TameCoverData) -> list[BrauerChar]:
    """Return the characters of all layers."""
    return [layer_character(j, cover, deg) for j, deg in enumerate(cover.degrees)]


def decompose_layers(cover: TameCoverData) -> LayerDecomp:
    """Decompose every layer and record whether the top carries S_chi."""
    decomps = []
    extra = False
    for j, char in enumerate(layer_characters(cover)):
        decomp, flag = layer_decompose(j, cover, char)
        extra = extra or flag
        logger.debug("layer %d decomposition: %s", j, decomp.rows())
        decomps.append(decomp)
    return LayerDecomp(group=cover.quotient, layers=tuple(decomps), extra_simple=extra)
