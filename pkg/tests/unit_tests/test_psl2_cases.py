import pytest
from sympy import primerange

from holodiff.errors import GroupError, ValidationError
from holodiff.psl2mod3.cases import classify, genus
from holodiff.psl2mod3.characters import class_number, class_number_forms, g_class_table, h0_brauer
from holodiff.psl2mod3.counts import check_branch_points, mass_check, ram_counts, ram_input, subgroups


@pytest.mark.parametrize(
    ("ell", "eps", "n", "m", "case_id", "g"),
    [
        (7, 1, 1, 1, 2, 3),
        (11, -1, 1, 2, 4, 26),
        (13, 1, 1, 2, 3, 50),
        (17, -1, 2, 1, 1, 133),
        (19, 1, 2, 1, 2, 196),
        (23, -1, 1, 4, 4, 375),
        (31, 1, 1, 5, 2, 1001),
        (37, 1, 2, 2, 3, 1768),
    ],
)
def test_classify(ell: int, eps: int, n: int, m: int, case_id: int, g: int) -> None:
    case = classify(ell)
    assert (case.eps, case.n, case.m, case.case_id) == (eps, n, m, case_id)
    assert case.plus == (case_id in (3, 4))
    assert genus(ell) == g


def test_case_invariants() -> None:
    case = classify(17)
    assert case.me == 4
    assert case.sylow_order == 9
    assert case.group_order == 2448
    assert (classify(11).v_order, classify(11).w_order) == (6, 5)


@pytest.mark.parametrize("ell", [2, 5, 9, 15])
def test_classify_rejects(ell: int) -> None:
    with pytest.raises(GroupError):
        classify(ell)


@pytest.mark.parametrize("ell", list(primerange(7, 200)))
def test_fixed_point_mass(ell: int) -> None:
    assert mass_check(ell)


def test_ram_counts_for_seven() -> None:
    assert ram_counts(7) == {
        "V": {"Z/3": 1},
        "Delta": {"S3": 1, "Z/2": 9},
        "W": {"Z/2": 4},
        "R": {"Z/l": 3},
    }


def test_subgroups() -> None:
    assert subgroups(7) == ["V", "Delta"]
    assert subgroups(11) == ["V", "Delta1", "Delta2"]


def test_built_inputs() -> None:
    assert ram_input(7, "V").genus_Z == 1
    assert ram_input(7, "Delta").genus_Z == 0
    assert ram_input(11, "Delta1").genus_Z == 3
    with pytest.raises(GroupError):
        ram_input(7, "Delta1")


@pytest.mark.parametrize("ell", list(primerange(7, 60)))
def test_branch_points_reproduce_genus(ell: int) -> None:
    for name in subgroups(ell):
        check_branch_points(ell, name)


@pytest.mark.parametrize(("ell", "h"), [(7, 1), (11, 1), (19, 1), (23, 3), (31, 3), (43, 1), (47, 5), (163, 1)])
def test_class_number(ell: int, h: int) -> None:
    assert class_number(ell) == h
    assert class_number_forms(ell) == h


def test_class_number_agrees_with_forms() -> None:
    for ell in primerange(7, 500):
        if ell % 4 == 3:
            assert class_number(ell) == class_number_forms(ell)


@pytest.mark.parametrize("ell", [13, 3, 15])
def test_class_number_rejects(ell: int) -> None:
    with pytest.raises(ValidationError):
        class_number(ell)


def test_three_regular_classes_of_psl2_7() -> None:
    table = g_class_table(classify(7))
    assert table.names == ("e", "r1", "r2", "s", "w^1")
    assert table.sizes == (1, 24, 24, 21, 42)
    assert table.inverse == (0, 2, 1, 3, 4)


@pytest.mark.parametrize("ell", [7, 11, 13, 17, 19])
def test_h0_character_degree(ell: int) -> None:
    assert h0_brauer(ell).degree() == genus(ell)
