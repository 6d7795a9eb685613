"""Ramification data and the divisor layers D_j of the wild part of a cover.

A cover X -> Z = X/H factors as X -> Y = X/I -> Z where I is the subgroup of
P of order p^n_I generated by the wild inertia. The kernels of (tau - 1)^j on
H^0(X, Omega_X) have quotients governed by H-invariant divisors D_j on Y, whose
multiplicities at a branch point depend only on its lower ramification jumps.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from holodiff.errors import ConsistencyError, IntegralityError, RamInputError
from holodiff.hypogroup import HypoGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RamPoint:
    """Ramification data shared by ``count`` branch points of Z.

    ``wild_exp`` is n_x with #I_x = p^{n_x}; ``jumps`` are the lower jumps
    b_0 < ... < b_{n_x-1}; ``tame_order`` e and ``fund_char_exp`` f describe the
    fundamental character on the tame inertia quotient, generator -> zeta_e^f.
    """

    wild_exp: int
    jumps: tuple[int, ...] = ()
    tame_order: int = 1
    fund_char_exp: int = 0
    count: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "jumps", tuple(int(b) for b in self.jumps))
        if self.tame_order >= 1:
            object.__setattr__(self, "fund_char_exp", self.fund_char_exp % self.tame_order)


@dataclass(frozen=True)
class RamInput:
    """A hypo-elementary group with the ramification data of its action on X."""

    group: HypoGroup
    n_I: int
    genus_Z: int
    points: tuple[RamPoint, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        ok, message = validate_input(self)
        if not ok:
            raise RamInputError(message)


def _check_jumps(p: int, jumps: Sequence[int]) -> str:
    for b in jumps:
        if b < 1:
            return f"jump {b} is not positive"
        if b % p == 0:
            return f"jump {b} is divisible by p = {p}"
    for prev, b in zip(jumps, jumps[1:]):
        if b <= prev:
            return f"jumps {list(jumps)} are not strictly increasing"
        if (b - prev) % p:
            return f"jumps {prev} and {b} are not congruent modulo p = {p}"
    return ""


def validate_input(ram: RamInput) -> tuple[bool, str]:
    """Check a ``RamInput`` and return (ok, first problem found)."""
    group = ram.group
    p = group.p
    if not 0 <= ram.n_I <= group.n:
        return False, f"n_I = {ram.n_I} outside [0, {group.n}]"
    if ram.genus_Z < 0:
        return False, f"genus_Z = {ram.genus_Z} is negative"
    for k, point in enumerate(ram.points):
        where = f"points[{k}]"
        if point.count < 1:
            return False, f"{where}: count {point.count} must be positive"
        if not 0 <= point.wild_exp <= ram.n_I:
            return False, f"{where}: wild_exp {point.wild_exp} outside [0, n_I = {ram.n_I}]"
        if len(point.jumps) != point.wild_exp:
            return False, f"{where}: {len(point.jumps)} jumps given for wild_exp {point.wild_exp}"
        problem = _check_jumps(p, point.jumps)
        if problem:
            return False, f"{where}: jump not coprime to p or not in one congruence class: {problem}"
        e = point.tame_order
        if e < 1 or group.c % e:
            return False, f"{where}: tame_order {e} does not divide c = {group.c}"
        if gcd(point.fund_char_exp, e) != 1 and e > 1:
            return False, f"{where}: fund_char_exp {point.fund_char_exp} is not a unit modulo {e}"
        if point.wild_exp and e > 1:
            # chi(rho^{c/e}) = zeta_e^{a_chi} must equal theta^{b_0}
            if (group.chi_index - point.fund_char_exp * point.jumps[0]) % e:
                return False, (
                    f"{where}: jump b_0 = {point.jumps[0]} is not in the congruence class fixed by chi "
                    f"on the tame inertia of order {e} (a_chi = {group.chi_index}, f = {point.fund_char_exp})"
                )
    top = max((point.wild_exp for point in ram.points), default=0)
    if top != ram.n_I:
        return False, f"n_I = {ram.n_I} differs from the largest wild_exp {top}"
    return True, ""


def _digits(p: int, n_x: int, t: int) -> list[int]:
    if not 0 <= t < p**n_x:
        raise RamInputError(f"t = {t} outside [0, {p**n_x - 1}]")
    out = []
    for _ in range(n_x):
        t, a = divmod(t, p)
        out.append(a)
    return out


def _different_sum(p: int, n_x: int, jumps: Sequence[int]) -> int:
    return sum((p - 1) * p ** (n_x - l) * (jumps[l - 1] + 1) for l in range(1, n_x + 1))


def divisor_multiplicity(p: int, n_x: int, jumps: Sequence[int], t: int) -> int:
    """Return d for block t: floor((S - sum a_l p^{n-l} b_{l-1}) / p^n)."""
    if n_x == 0:
        _digits(p, 0, t)
        return 0
    a = _digits(p, n_x, t)
    s = _different_sum(p, n_x, jumps)
    shift = sum(a[l - 1] * p ** (n_x - l) * jumps[l - 1] for l in range(1, n_x + 1))
    return (s - shift) // p**n_x


def divisor_multiplicity_alt(p: int, n_x: int, jumps: Sequence[int], t: int) -> int:
    """Same as ``divisor_multiplicity`` in the digit-complement form."""
    a = _digits(p, n_x, t)
    total = sum(p ** (n_x - l) * (p - 1 + (p - 1 - a[l - 1]) * jumps[l - 1]) for l in range(1, n_x + 1))
    return total // p**n_x


def inertia_order_sequence(p: int, n_x: int, jumps: Sequence[int], length: int | None = None) -> list[int]:
    """Return #I_{x,i} for i = 0 .. length-1 from the lower jumps.

    The group has order p^n_x up to b_0, order p^{n_x-l} on (b_{l-1}, b_l],
    and is trivial beyond the last jump.
    """
    if length is None:
        length = (jumps[-1] if jumps else 0) + 2
    orders = []
    for i in range(length):
        passed = sum(1 for b in jumps if i > b)
        orders.append(p ** (n_x - passed))
    return orders


def different_exponent(p: int, n_x: int, jumps: Sequence[int], e: int = 1) -> int:
    """Return sum_i (#H_{x,i} - 1) for inertia of order e * p^n_x."""
    wild = sum(order - 1 for order in inertia_order_sequence(p, n_x, jumps))
    return wild + p**n_x * (e - 1)


def enumeration_oracle(p: int, n_x: int, jumps: Sequence[int], t: int) -> int:
    """Recompute ``divisor_multiplicity`` from the filtration by direct scan.

    S is summed over the explicit lower filtration; the result is -v for the
    least v with p^n v - sum_l a_l p^{n-l} b_{l-1} >= -S.
    """
    a = _digits(p, n_x, t)
    if n_x == 0:
        return 0
    s = sum(order - 1 for order in inertia_order_sequence(p, n_x, jumps))
    shift = sum(a[l - 1] * p ** (n_x - l) * jumps[l - 1] for l in range(1, n_x + 1))
    v = -s
    while p**n_x * v - shift < -s:
        v += 1
    return -v


@dataclass(frozen=True)
class LayerDivisors:
    """Per-layer multiplicities d_{y,j} for each point type, plus deg D_j."""

    multiplicities: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]

    @property
    def top(self) -> int:
        """Largest layer index."""
        return len(self.degrees) - 1


def _quotient_order(ram: RamInput) -> int:
    return ram.group.order // ram.group.p**ram.n_I


def build_layers(ram: RamInput) -> LayerDivisors:
    """Compute D_j for j = 0 .. p^n_I - 1."""
    p = ram.group.p
    layer_count = p**ram.n_I
    hbar = _quotient_order(ram)
    rows = []
    for j in range(layer_count):
        row = []
        for point in ram.points:
            t = j // p ** (ram.n_I - point.wild_exp)
            row.append(divisor_multiplicity(p, point.wild_exp, point.jumps, t))
        rows.append(tuple(row))
    degrees = tuple(
        sum(point.count * (hbar // point.tame_order) * d for point, d in zip(ram.points, row)) for row in rows
    )
    layers = LayerDivisors(multiplicities=tuple(rows), degrees=degrees)
    if ram.n_I > 0:
        if degrees[-1] != 0:
            raise ConsistencyError(f"top divisor D_{layers.top} has degree {degrees[-1]}, expected 0")
        for j, deg in enumerate(degrees[:-1]):
            if deg <= 0:
                raise ConsistencyError(f"divisor D_{j} has degree {deg}, expected positive")
    logger.debug("layer degrees: %s", degrees)
    return layers


def genus_Y(ram: RamInput) -> int:
    """Return g(X/I) by Riemann-Hurwitz for the tame cover Y -> Z."""
    hbar = _quotient_order(ram)
    twice = hbar * (2 * ram.genus_Z - 2) + sum(
        point.count * (hbar // point.tame_order) * (point.tame_order - 1) for point in ram.points
    )
    if twice % 2:
        raise IntegralityError(f"2g(Y) - 2 = {twice} is odd")
    genus = twice // 2 + 1
    if genus < 0:
        raise IntegralityError(f"g(Y) = {genus} is negative")
    return genus


def genus_X(ram: RamInput, layers: LayerDivisors) -> int:
    """Return g(X) = 1 + #I (g(Y) - 1) + sum_j deg D_j."""
    genus = 1 + ram.group.p**ram.n_I * (genus_Y(ram) - 1) + sum(layers.degrees)
    if genus < 0:
        raise IntegralityError(f"g(X) = {genus} is negative")
    return genus


def riemann_hurwitz_genus(ram: RamInput) -> int:
    """Return g(X) from Riemann-Hurwitz for X -> Z with the different exponents."""
    order = ram.group.order
    twice = Fraction(order * (2 * ram.genus_Z - 2))
    for point in ram.points:
        inertia = point.tame_order * ram.group.p**point.wild_exp
        diff = different_exponent(ram.group.p, point.wild_exp, point.jumps, point.tame_order)
        twice += Fraction(point.count * order, inertia) * diff
    if twice.denominator != 1 or twice.numerator % 2:
        raise IntegralityError(f"2g(X) - 2 = {twice} is not an even integer")
    return int(twice) // 2 + 1
