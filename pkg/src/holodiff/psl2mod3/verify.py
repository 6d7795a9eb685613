"""Run every PSL(2, F_l) mod 3 identity for one prime."""

from __future__ import annotations

import logging
import time
from collections.abc import Callable
from dataclasses import dataclass, field

from holodiff.errors import HolodiffError, VerificationError
from holodiff.psl2mod3.cases import classify, genus
from holodiff.psl2mod3.characters import class_number, class_number_forms, h0_brauer
from holodiff.psl2mod3.congruence import congruence_report
from holodiff.psl2mod3.counts import check_branch_points, mass_check, restriction_group, subgroups
from holodiff.psl2mod3.decomposition import decomposition_char, full_decomposition
from holodiff.psl2mod3.restriction import (
    n1_decomp_char,
    n1_decomposition,
    restrict_g_to_n1,
    restrict_n1,
    restrict_n1_char,
    restriction_decomposition,
)

logger = logging.getLogger(__name__)


@dataclass
class SweepRow:
    """Outcome of ``verify`` for one prime."""

    ell: int
    case: int
    genus: int
    status: str = "pass"
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def to_json(self) -> dict:
        """Return the row as a plain dict."""
        return {
            "ell": self.ell,
            "case": self.case,
            "genus": self.genus,
            "status": self.status,
            "failures": list(self.failures),
            "seconds": round(self.seconds, 3),
        }


def _check_mass(ell: int) -> None:
    if not mass_check(ell):
        raise VerificationError("fixed-point mass identity fails")


def _check_restrictions(ell: int) -> None:
    case = classify(ell)
    n1 = n1_decomposition(ell)
    if n1.dimension() != genus(ell):
        raise VerificationError(f"k[N_1]-decomposition has dimension {n1.dimension()}")
    n1_char = n1_decomp_char(n1)
    for name in subgroups(ell):
        check_branch_points(ell, name)
        engine = restriction_decomposition(ell, name)
        if restrict_n1(n1, name) != engine.decomp:
            raise VerificationError(f"k[N_1]-decomposition restricted to {name} differs from the pipeline")
        group = restriction_group(case, name)
        if restrict_n1_char(case, n1_char, name) != engine.character(group):
            raise VerificationError(f"characters of the restrictions to {name} differ")


def _check_full(ell: int) -> None:
    case = classify(ell)
    decomp = full_decomposition(ell)
    char = decomposition_char(decomp)
    if char != h0_brauer(ell):
        raise VerificationError("character of the decomposition differs from the Brauer character of H^0")
    if restrict_g_to_n1(case, char) != n1_decomp_char(n1_decomposition(ell)):
        raise VerificationError("restriction to N_1 differs from the k[N_1]-decomposition")
    congruence_report(ell, decomp)


def _check_class_number(ell: int) -> None:
    if ell % 4 == 3 and class_number(ell) != class_number_forms(ell):
        raise VerificationError(f"class number {class_number(ell)} differs from the form count {class_number_forms(ell)}")


CHECKS: tuple[tuple[str, Callable[[int], None]], ...] = (
    ("mass", _check_mass),
    ("class_number", _check_class_number),
    ("restriction", _check_restrictions),
    ("decomposition", _check_full),
)


def verify(ell: int) -> SweepRow:
    """Run all checks for l; failures are collected, not raised.

    Raises ``ValidationError`` if l is not a prime >= 7.
    """
    case = classify(ell)
    row = SweepRow(ell=ell, case=case.case_id, genus=genus(ell))
    start = time.perf_counter()
    for name, check in CHECKS:
        try:
            check(ell)
        except HolodiffError as exc:
            row.failures.append(f"{name}: {exc}")
    row.seconds = time.perf_counter() - start
    if row.failures:
        row.status = "fail"
    logger.info("l=%d: %s in %.2fs", ell, row.status, row.seconds)
    return row
