from dataclasses import replace
from fractions import Fraction

import pytest
from sympy import primerange

from holodiff.errors import GroupError, IntegralityError, VerificationError
from holodiff.psl2mod3 import decomposition
from holodiff.psl2mod3.blocks import GLabel, block_data, principal_line, single_edge
from holodiff.psl2mod3.cases import classify, genus
from holodiff.psl2mod3.characters import h0_brauer
from holodiff.psl2mod3.congruence import brauer_tree, congruence_report, lift_constituents
from holodiff.psl2mod3.decomposition import (
    closed_form_multiplicities,
    decomposition_char,
    decomposition_for,
    full_decomposition,
    uniserial_summands,
)
from holodiff.psl2mod3.verify import SweepRow, verify

FIXTURES = {
    7: ({"gamma_2": 1}, {}),
    11: ({"T~_0": 1}, {GLabel("T_01", 1): 1}),
    13: ({"eta_1": 1, "eta_2": 1, "eta_3": 1}, {GLabel("T_01", 2): 1}),
    17: ({"T~_0": 1, "eta_1": 1, "eta_3": 1}, {GLabel("T~_0", 1): 1}),
    19: (
        {"gamma_2": 1, "eta_1": 1, "eta_2": 2, "eta_3": 1, "eta_4": 2},
        {GLabel("T_1", 7): 1},
    ),
    31: (
        {
            "T_1": 2,
            "T~_1": 1,
            "T~_2": 1,
            "gamma_2": 3,
            **{f"eta_{k}": 2 if k % 2 else 3 for k in range(1, 8)},
        },
        {GLabel("T~_1", 2): 1, GLabel("T~_2", 2): 1},
    ),
    37: (
        {"T_11": 1, "T_01": 1, "T_10": 1, **{f"eta_{k}": 3 for k in range(1, 10)}},
        {GLabel("T_11", 7): 1, GLabel("T_01", 6): 1},
    ),
}


@pytest.mark.parametrize("ell", sorted(FIXTURES))
def test_decomposition_fixtures(ell: int) -> None:
    projective, uniserial = FIXTURES[ell]
    decomp = full_decomposition(ell)
    assert dict(decomp.projective) == projective
    assert dict(decomp.uniserial) == uniserial
    assert decomp.dimension() == genus(ell)


def test_named_dimensions() -> None:
    eleven = full_decomposition(11)
    assert eleven.projective_dims["T~_0"] == 21
    assert eleven.uniserial_dims[GLabel("T_01", 1)] == 5
    assert eleven.s01 == -1
    assert str(full_decomposition(7)) == "1*P(gamma_2)"
    assert full_decomposition(19).uniserial_dims[GLabel("T_1", 7)] == 79


def test_sign_choice_for_23() -> None:
    decomp = full_decomposition(23)
    assert decomp.s01 == -1
    assert not decomp.ambiguous
    assert decomp.projective["T_01"] == 2
    assert "T_10" not in decomp.projective
    with pytest.raises(IntegralityError):
        decomposition_for(classify(23), 1)


def test_closed_forms_for_seven() -> None:
    assert closed_form_multiplicities(classify(7)) == {
        "T_0": 0,
        "T_1": 0,
        "gamma_1": 0,
        "gamma_2": 1,
        "eta_1": 0,
    }
    assert closed_form_multiplicities(classify(23), 1)["T_01"] == Fraction(-1)


def test_uniserial_summands_come_from_n1() -> None:
    assert uniserial_summands(classify(11)) == {GLabel("T_01", 1): 1}
    assert uniserial_summands(classify(7)) == {}


@pytest.mark.parametrize("ell", [7, 11, 13, 17])
def test_decomposition_character_is_h0(ell: int) -> None:
    assert decomposition_char(full_decomposition(ell)) == h0_brauer(ell)


def test_report_form() -> None:
    report = full_decomposition(11).to_json()
    assert report["projective"] == [{"name": "P(T~_0)", "mult": 1, "dim": 21}]
    assert report["uniserial"] == [{"socle": "T_01", "length": 1, "mult": 1, "dim": 5}]
    assert report["dimension"] == 26
    assert report["s01"] == -1
    assert report["ambiguous"] is False


def test_lift_constituents() -> None:
    line = principal_line(classify(11), "T_0", "T~_0")
    assert lift_constituents(line, {"T_0": 1, "T~_0": 1}) == 1
    assert lift_constituents(line, {"T~_0": 1}) == 1
    with pytest.raises(VerificationError):
        lift_constituents(line, {"T_0": 2})
    edge = single_edge(classify(31), "T~_1")
    assert lift_constituents(edge, {"T~_1": 2}) == 2


def test_congruence_reports() -> None:
    seven = congruence_report(7)
    assert [(r.block, r.defect, r.congruence) for r in seven] == [("B(gamma_2)", 0, False)]
    eleven = congruence_report(11)
    assert [(r.block, r.congruence) for r in eleven] == [("B_0", True), ("B_01", False)]
    assert eleven[1].constituents == 1
    assert eleven[0].to_json() == {
        "block": "B_0",
        "defect": 1,
        "projective": True,
        "constituents": 0,
        "congruence": True,
    }


def test_brauer_tree_of_defect_zero_block() -> None:
    data = block_data(classify(7))
    assert brauer_tree(data.block_of("gamma_1")) is None
    assert brauer_tree(data.block_of("T_1")).exceptional == 1
    with pytest.raises(GroupError):
        data.block_of("T~_0")


@pytest.mark.parametrize("ell", [7, 11, 13])
def test_verify_passes(ell: int) -> None:
    row = verify(ell)
    assert isinstance(row, SweepRow)
    assert row.status == "pass", row.failures
    assert row.to_json()["genus"] == genus(ell)


def test_verify_rejects_composite() -> None:
    with pytest.raises(GroupError):
        verify(9)


def test_both_admissible_signs_are_reported(monkeypatch: pytest.MonkeyPatch) -> None:
    case = classify(23)
    admissible_decomp = decomposition.decomposition_for(case, -1)
    monkeypatch.setattr(
        decomposition, "decomposition_for", lambda case, s01: replace(admissible_decomp, s01=s01)
    )
    full_decomposition.cache_clear()
    try:
        result = full_decomposition(23)
    finally:
        full_decomposition.cache_clear()
    assert result.ambiguous
    assert result.s01 == 1
    assert [alt.s01 for alt in result.alternatives] == [-1]
    assert result.to_json()["ambiguous"] is True


@pytest.mark.parametrize("ell", list(primerange(7, 98)))
def test_congruence_flags_follow_block_rule(ell: int) -> None:
    decomp = full_decomposition(ell)
    reports = congruence_report(ell, decomp)
    assert reports == congruence_report(ell)
    data = block_data(classify(ell), decomp.s01 or 1)
    covered = set()
    for report in reports:
        block = next(b for b in data.blocks if b.name == report.block)
        assert report.defect == block.defect
        assert report.projective or report.uniserial is not None
        assert report.congruence == (block.defect > 0 and (bool(report.projective) or report.constituents >= 2))
        covered.update(block.simples)
    assert set(decomp.projective) <= covered
    assert {label.socle for label in decomp.uniserial} <= covered


def test_congruence_report_rejects_other_prime() -> None:
    with pytest.raises(VerificationError):
        congruence_report(11, full_decomposition(7))


@pytest.mark.slow
@pytest.mark.parametrize("ell", list(primerange(7, 998)))
def test_dimension_and_character_identities(ell: int) -> None:
    decomp = full_decomposition(ell)
    assert decomp.dimension() == genus(ell)
    assert all(isinstance(mult, int) and mult > 0 for mult in decomp.projective.values())
    assert all(isinstance(mult, int) and mult > 0 for mult in decomp.uniserial.values())
    assert decomposition_char(decomp) == h0_brauer(ell)
