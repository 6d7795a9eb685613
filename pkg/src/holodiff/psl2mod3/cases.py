"""Classification of primes l into the four cases for PSL(2, F_l) mod 3."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from sympy import isprime, multiplicity

from holodiff.errors import GroupError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Psl2Case:
    """Invariants of l: l = eps mod 3 and l - eps = 2 * 3^n * m with 3 not dividing m."""

    ell: int
    eps: int
    n: int
    m: int
    case_id: int

    @property
    def plus(self) -> bool:
        """Whether l = eps mod 4, the case with two classes of dihedral groups of order 2*3^n."""
        return self.m % 2 == 0

    @property
    def group_order(self) -> int:
        """Return #PSL(2, F_l)."""
        return self.ell * (self.ell * self.ell - 1) // 2

    @property
    def sylow_order(self) -> int:
        """Return 3^n."""
        return 3**self.n

    @property
    def me(self) -> int:
        """Return (3^n - 1)/2, the multiplicity of the exceptional vertex."""
        return (3**self.n - 1) // 2

    @property
    def v_order(self) -> int:
        """Return #V = (l - eps)/2."""
        return (self.ell - self.eps) // 2

    @property
    def w_order(self) -> int:
        """Return #W = (l + eps)/2."""
        return (self.ell + self.eps) // 2


def classify(ell: int) -> Psl2Case:
    """Return the case data of a prime l >= 7."""
    if ell < 7 or not isprime(ell):
        raise GroupError(f"l = {ell} must be a prime >= 7")
    eps = 1 if ell % 3 == 1 else -1
    half = (ell - eps) // 2
    n = multiplicity(3, half)
    m = half // 3**n
    if ell % 4 == 1:
        case_id = 1 if eps == -1 else 3
    else:
        case_id = 2 if eps == 1 else 4
    case = Psl2Case(ell=ell, eps=eps, n=n, m=m, case_id=case_id)
    if (m % 2 == 0) != (case_id in (3, 4)):
        raise GroupError(f"l = {ell}: parity of m = {m} does not match case {case_id}")
    logger.debug("classified l=%d: %s", ell, case)
    return case


def genus(ell: int) -> int:
    """Return g(X(l)) = 1 + (l^2 - 1)(l - 6)/24."""
    classify(ell)
    return 1 + (ell * ell - 1) * (ell - 6) // 24
