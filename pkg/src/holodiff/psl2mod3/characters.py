"""3-regular classes of PSL(2, F_l) and the Brauer character of H^0(X(l), Omega).

Class representatives are e, r_1, r_2 (order l), s (the involution class),
(v'')^i in the torus of order (l - eps)/2 and w^j in the torus of order
(l + eps)/2. Characters are built from one value per family, the family
members being Galois conjugate so that inner products stay rational family by
family.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from sympy import isprime, legendre_symbol

from holodiff.errors import ValidationError
from holodiff.exactnum import CycloNumber, Scalar, gauss_sum_quadratic, sqrt_signed_ell
from holodiff.hypogroup import BrauerChar, ClassTable
from holodiff.psl2mod3.cases import Psl2Case, classify, genus

logger = logging.getLogger(__name__)

Value = CycloNumber | Scalar


def v_range(case: Psl2Case) -> range:
    """Return the exponents i of the classes (v'')^i other than e and s."""
    return range(1, case.m // 2) if case.plus else range(1, (case.m - 1) // 2 + 1)


def w_range(case: Psl2Case) -> range:
    """Return the exponents j of the classes w^j other than e and s."""
    if case.plus:
        return range(1, (case.w_order - 1) // 2 + 1)
    return range(1, case.w_order // 2)


def s_centralizer(case: Psl2Case) -> int:
    """Return #C_G(s), the one of l +- 1 divisible by 4."""
    return case.ell - case.eps if case.plus else case.ell + case.eps


@lru_cache(maxsize=64)
def g_class_table(case: Psl2Case) -> ClassTable:
    """Return the 3-regular class data of G = PSL(2, F_l)."""
    order = case.group_order
    names = ["e", "r1", "r2", "s"]
    sizes = [1, order // case.ell, order // case.ell, order // s_centralizer(case)]
    v_names = [f"v^{i}" for i in v_range(case)]
    w_names = [f"w^{j}" for j in w_range(case)]
    names += v_names + w_names
    sizes += [order // case.v_order] * len(v_names) + [order // case.w_order] * len(w_names)
    inverse = list(range(len(names)))
    if case.ell % 4 == 3:
        inverse[1], inverse[2] = 2, 1
    families = [(0,), (1, 2), (3,)]
    start = 4
    for block in (v_names, w_names):
        if block:
            families.append(tuple(range(start, start + len(block))))
        start += len(block)
    return ClassTable(
        name=f"PSL(2,{case.ell})",
        order=order,
        classes=tuple(names),
        names=tuple(names),
        sizes=tuple(sizes),
        inverse=tuple(inverse),
        families=tuple(families),
    )


def _as_cyclo(value: Value) -> CycloNumber:
    return value if isinstance(value, CycloNumber) else CycloNumber.rational(value)


def g_char(
    case: Psl2Case,
    e: Value,
    r1: Value,
    r2: Value,
    s: Value,
    v: Callable[[int], Value],
    w: Callable[[int], Value],
) -> BrauerChar:
    """Build a class function of G from its values per family."""
    values = [e, r1, r2, s]
    values += [v(i) for i in v_range(case)]
    values += [w(j) for j in w_range(case)]
    return BrauerChar(g_class_table(case), tuple(_as_cyclo(x) for x in values))


def two_cos(conductor: int, k: int) -> CycloNumber:
    """Return zeta^k + zeta^-k for a primitive root of unity of the given order."""
    return CycloNumber.sum([CycloNumber.zeta(conductor, k), CycloNumber.zeta(conductor, -k)])


def root_at_r(ell: int) -> CycloNumber:
    """Return sqrt(l) for l = 1 mod 4, and for l = 3 mod 4 the sqrt(-l) fixed by the residue sum."""
    if ell % 4 == 3:
        return gauss_sum_quadratic(ell).root
    return sqrt_signed_ell(ell)


def class_number(ell: int) -> int:
    """Return h(Q(sqrt(-l))) from l*h = -sum_{a<l} (a/l) a, for l = 3 mod 4, l > 3."""
    if ell <= 3 or not isprime(ell) or ell % 4 != 3:
        raise ValidationError(f"class number formula needs a prime l = 3 mod 4 with l > 3, got {ell}")
    total = -sum(legendre_symbol(a, ell) * a for a in range(1, ell))
    if total % ell:
        raise ValidationError(f"character sum {total} is not divisible by {ell}")
    return total // ell


def class_number_forms(ell: int) -> int:
    """Count reduced binary quadratic forms of discriminant -l.

    (a, b, c) is reduced when |b| <= a <= c, with b >= 0 if |b| = a or a = c.
    Only odd b occur since -l = 1 mod 4.
    """
    if ell <= 3 or ell % 4 != 3:
        raise ValidationError(f"discriminant -{ell} is not a fundamental discriminant = 1 mod 4")
    disc = -ell
    count = 0
    for b in range(1, isqrt(ell // 3) + 1, 2):
        q = (b * b - disc) // 4
        a = b
        while a * a <= q:
            if q % a == 0:
                c = q // a
                count += 1 if a == b or a == c else 2
            a += 1
    return count


@lru_cache(maxsize=64)
def h0_brauer(ell: int) -> BrauerChar:
    """Return the Brauer character of H^0(X(l), Omega) on the 3-regular classes of G."""
    case = classify(ell)
    base = 1 - Fraction(ell - 1, 4)
    if ell % 4 == 1:
        r1 = r2 = CycloNumber.rational(base)
    else:
        half_h = Fraction(class_number(ell), 2)
        root = root_at_r(ell)
        r1 = base - root.scale(half_h)
        r2 = base + root.scale(half_h)
    at_s = 1 - Fraction(s_centralizer(case), 4)
    return g_char(case, genus(ell), r1, r2, at_s, lambda i: 1, lambda j: 1)

