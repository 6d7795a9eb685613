"""Ramification of X(l) -> X(l)/Gamma for the subgroups Gamma used mod 3.

Counts are numbers of closed points of X with a given inertia type. Every
point with inertia containing the subgroup I of order 3 has lower jumps
H_{x,1} = I and H_{x,2} = 1, so its single jump is 1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from holodiff.errors import GroupError, IntegralityError, VerificationError
from holodiff.hypogroup import HypoGroup
from holodiff.psl2mod3.cases import Psl2Case, classify, genus
from holodiff.ramfilter import RamInput, RamPoint, different_exponent, riemann_hurwitz_genus

logger = logging.getLogger(__name__)

# inertia type -> (order, wild_exp, tame_order)
INERTIA_TYPES: dict[str, tuple[int, int, int]] = {
    "Z/3": (3, 1, 1),
    "S3": (6, 1, 2),
    "Z/2": (2, 0, 2),
}


@dataclass(frozen=True)
class SubgroupData:
    """Order and element counts of a subgroup of G relevant to fixed points."""

    name: str
    order: int
    involutions: int
    order_three: int
    order_ell: int = 0


def subgroups(ell: int) -> list[str]:
    """Return the 3-hypo-elementary subgroups of N_1 that are restricted to."""
    return ["V", "Delta1", "Delta2"] if classify(ell).plus else ["V", "Delta"]


def subgroup_data(case: Psl2Case, name: str) -> SubgroupData:
    """Return the order and involution/order-3/order-l counts of a subgroup."""
    three_n = case.sylow_order
    if name == "V":
        return SubgroupData(name, case.v_order, 1 if case.plus else 0, 2)
    if name in ("Delta", "Delta1", "Delta2"):
        return SubgroupData(name, 2 * three_n, three_n, 2)
    if name == "W":
        return SubgroupData(name, case.w_order, 0 if case.plus else 1, 0)
    if name == "R":
        return SubgroupData(name, case.ell, 0, 0, case.ell - 1)
    raise GroupError(f"unknown subgroup {name!r}")


def ram_counts(ell: int) -> dict[str, dict[str, int]]:
    """Return, for each subgroup, the number of points of X with each inertia type."""
    case = classify(ell)
    eps, n, m = case.eps, case.n, case.m
    low = 3 ** (n - 1)
    three_n = case.sylow_order
    if not case.plus:
        table = {
            "V": {"Z/3": low * m},
            "Delta": {"Z/3": low * (m - 1), "S3": low, "Z/2": three_n * ((ell + eps) // 2 - 1)},
            "W": {"Z/2": (ell + eps) // 2},
        }
    else:
        table = {
            "V": {"Z/3": low * m, "Z/2": three_n * m},
            "Delta1": {"Z/3": low * (m - 2), "S3": 2 * low, "Z/2": three_n * ((ell - eps) // 2 - 2)},
            "Delta2": {"Z/3": low * m, "Z/2": three_n * (ell - eps) // 2},
            "W": {},
        }
    table["R"] = {"Z/l": (ell - 1) // 2}
    return {name: {kind: count for kind, count in row.items() if count} for name, row in table.items()}


def _fixed_points(case: Psl2Case, order: int) -> int:
    if order == 2:
        eta = 1 if case.ell % 4 == 1 else -1
        return (case.ell - eta) // 2
    if order == 3:
        return (case.ell - case.eps) // 6
    if order == case.ell:
        return (case.ell - 1) // 2
    return 0


def mass_check(ell: int) -> bool:
    """Check sum_x (#Gamma_x - 1) = sum_{g != 1} #Fix(g) for every subgroup."""
    case = classify(ell)
    for name, row in ram_counts(ell).items():
        data = subgroup_data(case, name)
        lhs = 0
        for kind, count in row.items():
            order = ell if kind == "Z/l" else INERTIA_TYPES[kind][0]
            lhs += count * (order - 1)
        rhs = (
            data.involutions * _fixed_points(case, 2)
            + data.order_three * _fixed_points(case, 3)
            + data.order_ell * _fixed_points(case, ell)
        )
        if lhs != rhs:
            logger.info("mass check failed for l=%d, %s: %d != %d", ell, name, lhs, rhs)
            return False
    return True


def restriction_group(case: Psl2Case, name: str) -> HypoGroup:
    """Return Gamma as a HypoGroup: V = Z/3^n x Z/m, Delta_i = Z/3^n x| Z/2."""
    if name == "V":
        return HypoGroup(3, case.n, case.m, 0, 1)
    if name in ("Delta", "Delta1", "Delta2"):
        return HypoGroup.standard(3, case.n, 2, chi_index=1)
    raise GroupError(f"{name!r} is not a 3-hypo-elementary subgroup of N_1")


def ram_input(ell: int, name: str) -> RamInput:
    """Return the RamInput of X(l) -> X(l)/Gamma."""
    case = classify(ell)
    if name not in subgroups(ell):
        raise GroupError(f"{name!r} is not used for l = {ell}; expected one of {subgroups(ell)}")
    group = restriction_group(case, name)
    order = group.order
    points = []
    diff_total = 0
    for kind, x_count in ram_counts(ell)[name].items():
        inertia, wild_exp, tame_order = INERTIA_TYPES[kind]
        jumps = (1,) if wild_exp else ()
        count = Fraction(x_count * inertia, order)
        if count.denominator != 1:
            raise IntegralityError(f"{name}: {x_count} points of type {kind} do not form whole orbits")
        points.append(
            RamPoint(wild_exp=wild_exp, jumps=jumps, tame_order=tame_order, fund_char_exp=1, count=int(count))
        )
        diff_total += x_count * different_exponent(3, wild_exp, jumps, tame_order)
    twice = Fraction(2 * genus(ell) - 2 - diff_total, order)
    if twice.denominator != 1 or twice.numerator % 2:
        raise IntegralityError(f"{name}: 2g(Z) - 2 = {twice} is not an even integer")
    genus_z = int(twice) // 2 + 1
    ram = RamInput(group=group, n_I=1, genus_Z=genus_z, points=tuple(points))
    logger.debug("l=%d %s: g(Z)=%d points=%s", ell, name, genus_z, points)
    return ram


def check_branch_points(ell: int, name: str) -> None:
    """Check that Riemann-Hurwitz for the built input returns g(X(l))."""
    ram = ram_input(ell, name)
    if riemann_hurwitz_genus(ram) != genus(ell):
        raise VerificationError(f"l={ell}, {name}: Riemann-Hurwitz gives {riemann_hurwitz_genus(ram)}")
