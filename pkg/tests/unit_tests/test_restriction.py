import pytest
from sympy import primerange

from holodiff.errors import GroupError
from holodiff.graph import run_pipeline
from holodiff.hypogroup import Decomp
from holodiff.psl2mod3.cases import classify, genus
from holodiff.psl2mod3.counts import ram_input, restriction_group, subgroups
from holodiff.psl2mod3.decomposition import decomposition_char, full_decomposition
from holodiff.psl2mod3.restriction import (
    N1Label,
    n1_decomp_char,
    n1_decomposition,
    n1_partner,
    n1_simples,
    n1_uniserial_char,
    restrict_g_to_n1,
    restrict_n1,
    restrict_n1_char,
    restriction_closed_form,
    restriction_decomposition,
)


N1_RANGE = [ell if ell < 50 else pytest.param(ell, marks=pytest.mark.slow) for ell in primerange(7, 200)]


@pytest.mark.parametrize(
    ("ell", "name", "expected"),
    [
        (7, "V", {(0, 3): 1}),
        (7, "Delta", {(1, 3): 1}),
        (11, "V", {(0, 3): 4, (1, 3): 4, (1, 2): 1}),
        (13, "Delta2", {(0, 3): 7, (1, 3): 9, (1, 2): 1}),
    ],
)
def test_closed_form_fixtures(ell: int, name: str, expected: dict) -> None:
    assert restriction_closed_form(ell, name) == Decomp(expected)
    assert run_pipeline(ram_input(ell, name))["result"].decomp == Decomp(expected)


def test_unknown_subgroup() -> None:
    with pytest.raises(GroupError):
        restriction_closed_form(7, "Delta1")


@pytest.mark.parametrize("ell", list(primerange(7, 50)))
def test_pipeline_matches_closed_form(ell: int) -> None:
    for name in subgroups(ell):
        result = restriction_decomposition(ell, name)
        assert result.dimension() == genus(ell)


@pytest.mark.slow
@pytest.mark.parametrize("ell", list(primerange(50, 200)))
def test_pipeline_matches_closed_form_up_to_199(ell: int) -> None:
    for name in subgroups(ell):
        restriction_decomposition(ell, name)


def test_n1_decomposition_fixtures() -> None:
    assert n1_decomposition(7).counts == {N1Label("S_1", 3): 1}
    assert n1_decomposition(19).counts == {
        N1Label("S_0", 9): 9,
        N1Label("S_1", 7): 1,
        N1Label("S_1", 9): 12,
    }
    eleven = n1_decomposition(11)
    assert eleven.counts == {
        N1Label("S_00", 3): 1,
        N1Label("S_01", 2): 1,
        N1Label("S_01", 3): 2,
        N1Label("S_10", 3): 2,
        N1Label("S_11", 3): 3,
    }
    assert eleven.non_projective() == {N1Label("S_01", 2): 1}
    report = eleven.to_json()
    assert [row["name"] for row in report["projective"]] == ["P(S_00)", "P(S_01)", "P(S_10)", "P(S_11)"]
    assert report["uniserial"] == [{"socle": "S_01", "length": 2, "mult": 1, "dim": 2}]
    assert report["dimension"] == 26


@pytest.mark.parametrize("ell", list(primerange(7, 80)))
def test_n1_dimension_is_genus(ell: int) -> None:
    assert n1_decomposition(ell).dimension() == genus(ell)


@pytest.mark.parametrize("ell", N1_RANGE)
def test_n1_restricts_to_closed_forms(ell: int) -> None:
    n1 = n1_decomposition(ell)
    for name in subgroups(ell):
        assert restrict_n1(n1, name) == restriction_closed_form(ell, name)


@pytest.mark.parametrize("ell", N1_RANGE)
def test_n1_character_restricts_to_pipeline_character(ell: int) -> None:
    case = classify(ell)
    char = n1_decomp_char(n1_decomposition(ell))
    for name in subgroups(ell):
        result = restriction_decomposition(ell, name, check=False)
        assert restrict_n1_char(case, char, name) == result.character(restriction_group(case, name))


def test_n1_simples_and_partners() -> None:
    assert n1_simples(classify(31)) == ["S_0", "S_1", "S~_1", "S~_2"]
    assert n1_simples(classify(11)) == ["S_00", "S_01", "S_10", "S_11"]
    assert n1_partner("S_01") == "S_10"
    assert n1_partner("S_1") == "S_0"
    assert n1_partner("S~_2") == "S~_2"


def test_tilde_uniserial_dimension() -> None:
    case = classify(31)
    assert n1_uniserial_char(case, N1Label("S~_1", 2)).degree() == 4


@pytest.mark.parametrize("ell", N1_RANGE)
def test_full_decomposition_restricts_to_n1_character(ell: int) -> None:
    case = classify(ell)
    char = decomposition_char(full_decomposition(ell))
    assert restrict_g_to_n1(case, char) == n1_decomp_char(n1_decomposition(ell))
