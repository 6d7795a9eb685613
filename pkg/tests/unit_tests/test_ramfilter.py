import random

import pytest

from holodiff.cli import random_divisor_instance
from holodiff.errors import RamInputError
from holodiff.hypogroup import HypoGroup
from holodiff.ramfilter import (
    RamInput,
    RamPoint,
    build_layers,
    different_exponent,
    divisor_multiplicity,
    divisor_multiplicity_alt,
    enumeration_oracle,
    genus_X,
    genus_Y,
    inertia_order_sequence,
    riemann_hurwitz_genus,
    validate_input,
)

Z3 = HypoGroup(3, 1, 1)


def z3_cover() -> RamInput:
    # X(7) -> X(7)/V with V of order 3
    return RamInput(group=Z3, n_I=1, genus_Z=1, points=(RamPoint(wild_exp=1, jumps=(1,)),))


def test_divisor_multiplicity_single_jump() -> None:
    assert [divisor_multiplicity(3, 1, [1], t) for t in range(3)] == [1, 1, 0]
    assert divisor_multiplicity(5, 0, [], 0) == 0


@pytest.mark.parametrize("p", [2, 3, 5])
def test_divisor_forms_agree_exhaustively(p: int) -> None:
    for n_x in (1, 2):
        for b0 in (b for b in range(1, 12) if b % p):
            for step in (1, 2):
                jumps = [b0, b0 + step * p][:n_x]
                for t in range(p**n_x):
                    value = divisor_multiplicity(p, n_x, jumps, t)
                    assert value == divisor_multiplicity_alt(p, n_x, jumps, t)
                    assert value == enumeration_oracle(p, n_x, jumps, t)


def test_divisor_forms_agree_on_full_grid_for_p3() -> None:
    units = [b for b in range(1, 51) if b % 3]
    grid = [[b] for b in units] + [[b, c] for b in units for c in range(b + 3, 51, 3)]
    for jumps in grid:
        for t in range(3 ** len(jumps)):
            value = divisor_multiplicity(3, len(jumps), jumps, t)
            assert value == divisor_multiplicity_alt(3, len(jumps), jumps, t)
            assert value == enumeration_oracle(3, len(jumps), jumps, t)


def test_divisor_forms_agree_on_random_instances() -> None:
    rng = random.Random(7)
    for _ in range(500):
        p, n_x, jumps, t = random_divisor_instance(rng)
        assert max(jumps) <= 50
        value = divisor_multiplicity(p, n_x, jumps, t)
        assert value == divisor_multiplicity_alt(p, n_x, jumps, t) == enumeration_oracle(p, n_x, jumps, t)


def test_block_index_out_of_range() -> None:
    with pytest.raises(RamInputError):
        divisor_multiplicity(3, 1, [1], 3)


def test_inertia_orders() -> None:
    assert inertia_order_sequence(3, 2, [1, 4]) == [9, 9, 3, 3, 3, 1]
    assert inertia_order_sequence(3, 1, [1], length=2) == [3, 3]
    assert different_exponent(3, 1, [1]) == 4
    assert different_exponent(3, 1, [1], e=2) == 7


def test_layers_and_genus_of_z3_cover() -> None:
    ram = z3_cover()
    assert validate_input(ram) == (True, "")
    layers = build_layers(ram)
    assert layers.degrees == (1, 1, 0)
    assert layers.top == 2
    assert genus_Y(ram) == 1
    assert genus_X(ram, layers) == 3
    assert riemann_hurwitz_genus(ram) == 3


@pytest.mark.parametrize(
    ("point", "fragment"),
    [
        (RamPoint(wild_exp=1, jumps=(3,)), "jump not coprime to p"),
        (RamPoint(wild_exp=1, jumps=()), "jumps given"),
        (RamPoint(wild_exp=2, jumps=(1, 4)), "outside [0, n_I"),
        (RamPoint(wild_exp=1, jumps=(1,), tame_order=2), "does not divide"),
        (RamPoint(wild_exp=1, jumps=(1,), count=0), "count 0"),
    ],
)
def test_invalid_points(point: RamPoint, fragment: str) -> None:
    with pytest.raises(RamInputError) as info:
        RamInput(group=Z3, n_I=1, genus_Z=0, points=(point,))
    assert fragment in str(info.value)


def test_jumps_must_share_a_class() -> None:
    group = HypoGroup(3, 2, 1)
    with pytest.raises(RamInputError, match="jump not coprime to p or not in one congruence class"):
        RamInput(group=group, n_I=2, genus_Z=0, points=(RamPoint(wild_exp=2, jumps=(1, 5)),))
    with pytest.raises(RamInputError, match="not strictly increasing"):
        RamInput(group=group, n_I=2, genus_Z=0, points=(RamPoint(wild_exp=2, jumps=(4, 1)),))


def test_n_i_must_match_largest_wild_exp() -> None:
    with pytest.raises(RamInputError, match="largest wild_exp"):
        RamInput(group=Z3, n_I=1, genus_Z=2, points=())


def test_tame_cover_without_wild_part() -> None:
    group = HypoGroup(3, 1, 2, chi_index=1, action_unit=2)
    ram = RamInput(group=group, n_I=0, genus_Z=0, points=(RamPoint(wild_exp=0, tame_order=2, fund_char_exp=1, count=4),))
    layers = build_layers(ram)
    assert layers.degrees == (0,)
    assert genus_Y(ram) == 1
    assert genus_X(ram, layers) == riemann_hurwitz_genus(ram) == 1
