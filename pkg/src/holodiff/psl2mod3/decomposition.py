"""Decomposition of H^0(X(l), Omega) over k[PSL(2, F_l)], l >= 7, in characteristic 3.

Two independent computations must agree:

1. closed-form multiplicities of the projective covers, case by case;
2. the character route: remove the Green correspondents of the non-projective
   k[N_1]-summands from the Brauer character of H^0, then read off the
   multiplicity of P(E) as the inner product of the remainder with the simple
   character of E.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from holodiff.errors import IntegralityError, VerificationError
from holodiff.hypogroup import BrauerChar, inner_product
from holodiff.psl2mod3.blocks import BlockData, GLabel, block_data, green_correspondent
from holodiff.psl2mod3.cases import Psl2Case, classify, genus
from holodiff.psl2mod3.characters import class_number, h0_brauer
from holodiff.psl2mod3.restriction import n1_decomposition

logger = logging.getLogger(__name__)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


@dataclass(frozen=True)
class NamedDecomp:
    """Projective covers P(E) and uniserial modules with their multiplicities."""

    ell: int
    projective: Mapping[str, int]
    uniserial: Mapping[GLabel, int]
    projective_dims: Mapping[str, int] = field(default_factory=dict, compare=False)
    uniserial_dims: Mapping[GLabel, int] = field(default_factory=dict, compare=False)
    s01: int | None = None
    ambiguous: bool = False
    alternatives: tuple[NamedDecomp, ...] = field(default=(), compare=False)

    def dimension(self) -> int:
        """Return the total dimension."""
        return sum(mult * self.projective_dims[name] for name, mult in self.projective.items()) + sum(
            mult * self.uniserial_dims[label] for label, mult in self.uniserial.items()
        )

    def to_json(self) -> dict:
        """Return the report form of the decomposition."""
        return {
            "projective": [
                {"name": f"P({name})", "mult": mult, "dim": mult * self.projective_dims[name]}
                for name, mult in self.projective.items()
            ],
            "uniserial": [
                {"socle": label.socle, "length": label.length, "mult": mult, "dim": mult * self.uniserial_dims[label]}
                for label, mult in self.uniserial.items()
            ],
            "dimension": self.dimension(),
            "s01": self.s01,
            "ambiguous": self.ambiguous,
        }

    def __str__(self) -> str:
        parts = [f"{mult}*P({name})" for name, mult in self.projective.items()]
        parts += [f"{mult}*U({label.socle},{label.length})" for label, mult in self.uniserial.items()]
        return " + ".join(parts) or "0"


def uniserial_summands(case: Psl2Case) -> dict[GLabel, int]:
    """Return the non-projective summands: Green correspondents of the k[N_1] ones."""
    found: dict[GLabel, int] = {}
    for label, mult in n1_decomposition(case.ell).non_projective().items():
        target = green_correspondent(case, label)
        if target is not None:
            found[target] = found.get(target, 0) + mult
    return found


def closed_form_multiplicities(case: Psl2Case, s01: int | None = None) -> dict[str, Fraction]:
    """Return the multiplicity of every projective cover, from the case formulas."""
    ell, m = case.ell, case.m
    delta = 1 if case.n == 1 else 0
    mults: dict[str, Fraction] = {}
    if case.case_id == 1:
        mults["T_0"] = Fraction(0)
        for t in range((m - 1) // 2 + 1):
            mults[f"T~_{t}"] = Fraction(ell - 5, 12)
        gamma = Fraction(ell - 17, 24) if ell % 8 == 1 else Fraction(ell - 5, 24)
        mults["gamma_1"] = mults["gamma_2"] = gamma
        for k in range(1, (ell - 5) // 4 + 1):
            mults[f"eta_{k}"] = Fraction(ell - 5, 12) if k % 2 else Fraction(ell - 17, 12)
    elif case.case_id == 2:
        h = class_number(ell)
        mults["T_0"] = Fraction(0)
        mults["T_1"] = Fraction(ell - 19, 12) + delta
        for t in range(1, (m - 1) // 2 + 1):
            mults[f"T~_{t}"] = Fraction(ell - 19, 12)
        base = Fraction(ell - 7, 24) if ell % 8 == 3 else Fraction(ell + 5, 24)
        mults["gamma_1"] = base - Fraction(h, 2)
        mults["gamma_2"] = base + Fraction(h, 2)
        for k in range(1, (ell - 3) // 4 + 1):
            mults[f"eta_{k}"] = Fraction(ell - 7, 12) if k % 2 else Fraction(ell + 5, 12)
    elif case.case_id == 3:
        mults["T_00"] = Fraction(0)
        mults["T_11"] = Fraction(ell - 25, 12) + delta
        mults["T_01"] = mults["T_10"] = Fraction(ell - 19 - 6 * _sign(m // 2), 24)
        for t in range(1, m // 2):
            mults[f"T~_{t}"] = Fraction(ell - 19 - 6 * _sign(t), 12)
        for k in range(1, (ell - 1) // 4 + 1):
            mults[f"eta_{k}"] = Fraction(ell - 1, 12)
    else:
        h = class_number(ell)
        s = 1 if s01 is None else s01
        mults["T_0"] = Fraction(0)
        mults["T~_0"] = Fraction(ell + 1, 12)
        base = Fraction(ell - 5 + 6 * _sign(m // 2), 24)
        mults["T_01"] = base - Fraction(s * h + 1, 2)
        mults["T_10"] = base + Fraction(s * h + 1, 2)
        for t in range(1, m // 2):
            mults[f"T~_{t}"] = Fraction(ell - 5 + 6 * _sign(t), 12)
        for k in range(1, (ell - 3) // 4 + 1):
            mults[f"eta_{k}"] = Fraction(ell - 11, 12)
    return mults


def projective_remainder(data: BlockData, uniserials: Mapping[GLabel, int]) -> BrauerChar:
    """Return the character of the largest projective summand of H^0."""
    beta = h0_brauer(data.case.ell)
    if not uniserials:
        return beta
    removed = BrauerChar.combine(beta.table, ((mult, data.uniserial_char(label)) for label, mult in uniserials.items()))
    return beta - removed


def character_multiplicities(data: BlockData, remainder: BrauerChar) -> dict[str, Fraction]:
    """Return <remainder, phi_E> for every simple E, the multiplicity of P(E)."""
    return {name: inner_product(remainder, char) for name, char in data.simples.items()}


def admissible(mults: Mapping[str, Fraction]) -> bool:
    """Return whether every multiplicity is a non-negative integer."""
    return all(value.denominator == 1 and value >= 0 for value in mults.values())


def _build(data: BlockData, mults: Mapping[str, Fraction], uniserials: Mapping[GLabel, int], s01: int | None) -> NamedDecomp:
    projective = {name: int(value) for name, value in mults.items() if value}
    return NamedDecomp(
        ell=data.case.ell,
        projective=projective,
        uniserial=dict(uniserials),
        projective_dims={name: data.projective_dim(name) for name in projective},
        uniserial_dims={label: data.uniserial_dim(label) for label in uniserials},
        s01=s01,
    )


def _check_reconstruction(data: BlockData, mults: Mapping[str, Fraction], remainder: BrauerChar) -> None:
    rebuilt = BrauerChar.combine(
        remainder.table, ((int(value), data.projective_char(name)) for name, value in mults.items() if value)
    )
    if rebuilt != remainder:
        raise VerificationError(f"l={data.case.ell}: projective covers do not rebuild the remainder character")


def decomposition_for(case: Psl2Case, s01: int | None) -> NamedDecomp:
    """Decompose for one labelling of T_01/T_10, checking both routes agree.

    Raises ``IntegralityError`` if the character route gives a negative or
    non-integral multiplicity.
    """
    data = block_data(case, s01 or 1)
    uniserials = uniserial_summands(case)
    remainder = projective_remainder(data, uniserials)
    by_character = character_multiplicities(data, remainder)
    if not admissible(by_character):
        bad = {name: str(value) for name, value in by_character.items() if value.denominator != 1 or value < 0}
        raise IntegralityError(f"l={case.ell}, s01={s01}: multiplicities {bad}")
    closed = closed_form_multiplicities(case, s01)
    if {k: v for k, v in closed.items() if v} != {k: v for k, v in by_character.items() if v}:
        raise VerificationError(f"l={case.ell}: closed forms {closed} differ from the character route {by_character}")
    _check_reconstruction(data, by_character, remainder)
    result = _build(data, by_character, uniserials, s01)
    if result.dimension() != genus(case.ell):
        raise VerificationError(f"l={case.ell}: dimension {result.dimension()} differs from genus {genus(case.ell)}")
    return result


def decomposition_char(decomp: NamedDecomp) -> BrauerChar:
    """Return the Brauer character of a decomposition."""
    case = classify(decomp.ell)
    data = block_data(case, decomp.s01 or 1)
    table = h0_brauer(decomp.ell).table
    terms = [(mult, data.projective_char(name)) for name, mult in decomp.projective.items()]
    terms += [(mult, data.uniserial_char(label)) for label, mult in decomp.uniserial.items()]
    return BrauerChar.combine(table, terms)


@lru_cache(maxsize=64)
def full_decomposition(ell: int) -> NamedDecomp:
    """Return the k[G]-decomposition of H^0(X(l), Omega).

    When l = 3 mod 4 and m is even, both signs s01 are tried and the
    admissible ones kept; if both are, the first is returned tagged ambiguous
    with the other in ``alternatives``.
    """
    case = classify(ell)
    if case.case_id != 4:
        result = decomposition_for(case, None)
        logger.info("l=%d: %s", ell, result)
        return result
    found = []
    for s01 in (1, -1):
        try:
            found.append(decomposition_for(case, s01))
        except IntegralityError as exc:
            logger.debug("s01=%d rejected: %s", s01, exc)
    if not found:
        raise IntegralityError(f"l={ell}: neither sign of s01 gives non-negative integral multiplicities")
    if len(found) == 1:
        logger.info("l=%d: s01=%d, %s", ell, found[0].s01, found[0])
        return found[0]
    logger.warning("l=%d: both signs of s01 are admissible", ell)
    first, second = found
    return NamedDecomp(
        ell=first.ell,
        projective=first.projective,
        uniserial=first.uniserial,
        projective_dims=first.projective_dims,
        uniserial_dims=first.uniserial_dims,
        s01=first.s01,
        ambiguous=True,
        alternatives=(second,),
    )
