"""H^0(X(l), Omega) restricted to V, Delta_i and N_1 = N_G(I).

V = Z/3^n x Z/m and the dihedral groups Delta_i of order 2*3^n are
3-hypo-elementary, so their decompositions come from the layer pipeline.
N_1 is dihedral of order l - eps. Its indecomposables are uniserial:

* U(S_x, b) with a one-dimensional socle, factors alternating between S_x
  and its partner (S_0 <-> S_1, or S_ab <-> S_(1-a)(1-b));
* U(S~_t, b), all factors the two-dimensional S~_t, of dimension 2b.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from holodiff.assembler import AssembledDecomp
from holodiff.errors import GroupError, IntegralityError, VerificationError
from holodiff.exactnum import CycloNumber
from holodiff.graph import run_pipeline
from holodiff.hypogroup import BrauerChar, ClassTable, Decomp, IndecLabel
from holodiff.psl2mod3.cases import Psl2Case, classify
from holodiff.psl2mod3.characters import two_cos
from holodiff.psl2mod3.counts import ram_input, restriction_group, subgroups

logger = logging.getLogger(__name__)


def _whole(value: Fraction | int, what: str) -> int:
    value = Fraction(value)
    if value.denominator != 1 or value < 0:
        raise IntegralityError(f"{what} = {value} is not a non-negative integer")
    return int(value)


# ============================================================================
# V AND DELTA
# ============================================================================


def restriction_closed_form(ell: int, name: str) -> Decomp:
    """Return the decomposition of Res_Gamma H^0 predicted in closed form."""
    case = classify(ell)
    if name not in subgroups(ell):
        raise GroupError(f"{name!r} is not used for l = {ell}; expected one of {subgroups(ell)}")
    eps, n, m = case.eps, case.n, case.m
    full, half, tail = case.sylow_order, 2 * 3 ** (n - 1), 2 * 3 ** (n - 1) + 1
    big = (ell + eps) * (ell - 6)
    counts: Counter[IndecLabel] = Counter()
    if name == "V":
        n2 = _whole(Fraction(big - (14 if case.plus else 8), 12), "n2(V)")
        for a in range(m):
            counts[IndecLabel(a, full)] += n2
        if case.plus:
            for t in range(1, m // 2 + 1):
                counts[IndecLabel(2 * t - 1, full)] += 1
        counts[IndecLabel(0, tail)] += 1
        for t in range(1, m):
            counts[IndecLabel(t, half)] += 1
        return Decomp(dict(counts))
    # n2 is -1 for l = 7
    side = ell - eps if case.plus else ell + eps
    n2 = _whole(Fraction(m * (big - 8), 24) - Fraction(side, 8) + 1, f"n2({name}) + 1") - 1
    shift = Fraction(side, 4)
    counts[IndecLabel(0, full)] += n2 + 1
    counts[IndecLabel(1, full)] += _whole(n2 + shift - 1, f"{name} multiplicity of U(1, {full})")
    counts[IndecLabel(1, tail)] += 1
    if not case.plus:
        counts[IndecLabel(0, half)] += (m - 1) // 2
        counts[IndecLabel(1, half)] += (m - 1) // 2
    elif name == "Delta1":
        counts[IndecLabel(0, half)] += m // 2
        counts[IndecLabel(1, half)] += m // 2 - 1
    else:
        counts[IndecLabel(0, half)] += m // 2 - 1
        counts[IndecLabel(1, half)] += m // 2
    return Decomp(dict(counts))


def restriction_decomposition(ell: int, name: str, check: bool = True) -> AssembledDecomp:
    """Run the layer pipeline on X(l) -> X(l)/Gamma.

    With ``check`` the result must agree with ``restriction_closed_form``.
    """
    result = run_pipeline(ram_input(ell, name))["result"]
    if check:
        expected = restriction_closed_form(ell, name)
        if result.decomp != expected:
            raise VerificationError(
                f"l={ell}, {name}: pipeline gives {result.decomp.rows()}, closed form {expected.rows()}"
            )
    logger.info("l=%d %s: %d summands, dimension %d", ell, name, len(result.decomp.counts), result.dimension())
    return result


# ============================================================================
# N_1
# ============================================================================


class N1Label(NamedTuple):
    """Uniserial k[N_1]-module with the given socle and length."""

    socle: str
    length: int


@dataclass(frozen=True)
class N1Decomp:
    """Multiplicities of uniserial k[N_1]-modules."""

    case: Psl2Case
    counts: Mapping[N1Label, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", {N1Label(*k): v for k, v in sorted(self.counts.items()) if v})

    def dimension(self) -> int:
        """Return the total dimension."""
        return sum(n1_dim(label) * mult for label, mult in self.counts.items())

    def non_projective(self) -> dict[N1Label, int]:
        """Return the summands of length below 3^n."""
        return {label: mult for label, mult in self.counts.items() if label.length < self.case.sylow_order}

    def rows(self) -> list[dict]:
        """Return report rows."""
        return [
            {"socle": label.socle, "length": label.length, "mult": mult, "dim": mult * n1_dim(label)}
            for label, mult in self.counts.items()
        ]

    def to_json(self) -> dict:
        """Return projective covers and non-projective uniserials in report form."""
        rest = self.non_projective()
        return {
            "projective": [
                {"name": f"P({label.socle})", "mult": mult, "dim": mult * n1_dim(label)}
                for label, mult in self.counts.items()
                if label not in rest
            ],
            "uniserial": [row for row in self.rows() if N1Label(row["socle"], row["length"]) in rest],
            "dimension": self.dimension(),
        }


def is_tilde(socle: str) -> bool:
    """Return whether the socle is a two-dimensional simple S~_t."""
    return socle.startswith("S~_")


def tilde_index(socle: str) -> int:
    """Return t for S~_t."""
    return int(socle[3:])


def n1_dim(label: N1Label) -> int:
    """Return the dimension of a uniserial k[N_1]-module."""
    return 2 * label.length if is_tilde(label.socle) else label.length


def n1_simples(case: Psl2Case) -> list[str]:
    """Return the simple k[N_1]-modules."""
    if case.plus:
        return ["S_00", "S_01", "S_10", "S_11"] + [f"S~_{t}" for t in range(1, case.m // 2)]
    return ["S_0", "S_1"] + [f"S~_{t}" for t in range(1, (case.m - 1) // 2 + 1)]


def n1_partner(socle: str) -> str:
    """Return the simple following ``socle`` in a uniserial module."""
    if is_tilde(socle):
        return socle
    bits = socle[2:]
    return "S_" + "".join("1" if b == "0" else "0" for b in bits)


def n1_decomposition(ell: int) -> N1Decomp:
    """Return the decomposition of Res_{N_1} H^0(X(l), Omega)."""
    case = classify(ell)
    eps, n, m = case.eps, case.n, case.m
    full, half, tail = case.sylow_order, 2 * 3 ** (n - 1), 2 * 3 ** (n - 1) + 1
    a_, b_ = ell + eps, ell - eps
    big = a_ * (ell - 6)
    counts: Counter[N1Label] = Counter()
    if not case.plus:
        counts[N1Label("S_0", full)] += _whole(Fraction(a_ * (ell - 9) + 16, 24), "U(S_0)")
        counts[N1Label("S_1", full)] += _whole(Fraction(a_ * (ell - 3) - 32, 24), "U(S_1)")
        for t in range(1, (m - 1) // 2 + 1):
            counts[N1Label(f"S~_{t}", full)] += _whole(Fraction(big - 8, 12), f"U(S~_{t})")
        counts[N1Label("S_1", tail)] += 1
        for t in range(1, (m - 1) // 2 + 1):
            counts[N1Label(f"S~_{t}", half)] += 1
    else:
        counts[N1Label("S_00", full)] += _whole(Fraction(big - 14, 24) - Fraction(b_, 8) + 1, "U(S_00)")
        mixed = (big - 2) // 24
        counts[N1Label("S_01", full)] += mixed
        counts[N1Label("S_10", full)] += mixed
        counts[N1Label("S_11", full)] += _whole(Fraction(big - 14, 24) + Fraction(b_, 8) - 1, "U(S_11)")
        for t in range(1, (m - 2) // 4 + 1):
            counts[N1Label(f"S~_{2 * t}", full)] += _whole(Fraction(big - 14, 12), f"U(S~_{2 * t})")
        for t in range(1, m // 4 + 1):
            counts[N1Label(f"S~_{2 * t - 1}", full)] += _whole(Fraction(big - 2, 12), f"U(S~_{2 * t - 1})")
        counts[N1Label("S_11", tail)] += 1
        counts[N1Label("S_01", half)] += 1
        for t in range(1, m // 2):
            counts[N1Label(f"S~_{t}", half)] += 1
    return N1Decomp(case, dict(counts))


def restrict_n1(decomp: N1Decomp, name: str) -> Decomp:
    """Restrict a k[N_1]-decomposition to V or Delta_i, summand by summand."""
    case = decomp.case
    m = case.m
    counts: Counter[IndecLabel] = Counter()
    for (socle, length), mult in decomp.counts.items():
        if is_tilde(socle):
            t = tilde_index(socle)
            images = [t, m - t] if name == "V" else [0, 1]
            for a in images:
                counts[IndecLabel(a, length)] += mult
            continue
        bits = [int(b) for b in socle[2:]]
        if name == "V":
            a = ((bits[0] + bits[1]) * m // 2) % m if case.plus else 0
        elif name == "Delta2":
            a = bits[1]
        else:
            a = bits[0]
        counts[IndecLabel(a, length)] += mult
    return Decomp(dict(counts))


# ============================================================================
# CHARACTERS OF N_1
# ============================================================================


def n1_class_data(case: Psl2Case) -> ClassTable:
    """Return the 3-regular classes of N_1: e, rotations v^i, z = v^(m/2) and reflections."""
    m, three_n = case.m, case.sylow_order
    top = m // 2 if case.plus else (m - 1) // 2 + 1
    v_names = [f"v^{i}" for i in range(1, top)]
    names = ["e", *v_names]
    sizes = [1] + [2] * len(v_names)
    if case.plus:
        names += ["z", "t1", "t2"]
        sizes += [1, three_n * m // 2, three_n * m // 2]
    else:
        names += ["t"]
        sizes += [three_n * m]
    families: list[tuple[int, ...]] = [(0,)]
    if v_names:
        families.append(tuple(range(1, 1 + len(v_names))))
    families += [(k,) for k in range(1 + len(v_names), len(names))]
    return ClassTable(
        name=f"N1({case.ell})",
        order=case.ell - case.eps,
        classes=tuple(names),
        names=tuple(names),
        sizes=tuple(sizes),
        inverse=tuple(range(len(names))),
        families=tuple(families),
    )


def n1_simple_char(case: Psl2Case, socle: str) -> BrauerChar:
    """Return the Brauer character of a simple k[N_1]-module."""
    table = n1_class_data(case)
    values = []
    for name in table.names:
        if is_tilde(socle):
            t = tilde_index(socle)
            if name == "e":
                values.append(CycloNumber.rational(2))
            elif name.startswith("v^"):
                values.append(two_cos(case.m, t * int(name[2:])))
            elif name == "z":
                values.append(CycloNumber.rational(2 * (-1) ** t))
            else:
                values.append(CycloNumber.rational(0))
            continue
        bits = [int(b) for b in socle[2:]]
        if name == "e":
            value = 1
        elif not case.plus:
            value = 1 if name.startswith("v^") else (-1) ** bits[0]
        elif name.startswith("v^"):
            value = (-1) ** ((bits[0] + bits[1]) * int(name[2:]))
        elif name == "z":
            value = (-1) ** ((bits[0] + bits[1]) * case.m // 2)
        else:
            value = (-1) ** bits[0 if name == "t1" else 1]
        values.append(CycloNumber.rational(value))
    return BrauerChar(table, tuple(values))


def n1_uniserial_char(case: Psl2Case, label: N1Label) -> BrauerChar:
    """Return the Brauer character of a uniserial k[N_1]-module."""
    factors: Counter[str] = Counter()
    socle = label.socle
    for _ in range(label.length):
        factors[socle] += 1
        socle = n1_partner(socle)
    return BrauerChar.combine(
        n1_class_data(case), ((mult, n1_simple_char(case, name)) for name, mult in factors.items())
    )


def n1_decomp_char(decomp: N1Decomp) -> BrauerChar:
    """Return the Brauer character of a k[N_1]-decomposition."""
    return BrauerChar.combine(
        n1_class_data(decomp.case),
        ((mult, n1_uniserial_char(decomp.case, label)) for label, mult in decomp.counts.items()),
    )


def restrict_g_to_n1(case: Psl2Case, char: BrauerChar) -> BrauerChar:
    """Restrict a Brauer character of G to N_1; z and the reflections fuse to s."""
    table = n1_class_data(case)
    values = []
    for name in table.names:
        source = name if name == "e" or name.startswith("v^") else "s"
        values.append(char[source])
    return BrauerChar(table, tuple(values))


def restrict_n1_char(case: Psl2Case, char: BrauerChar, name: str) -> BrauerChar:
    """Restrict a Brauer character of N_1 to V or Delta_i."""
    group = restriction_group(case, name)
    table = group.class_table
    values = []
    for _, j in table.classes:
        if name == "V":
            if j == 0:
                source = "e"
            elif case.plus and 2 * j == case.m:
                source = "z"
            else:
                source = f"v^{min(j, case.m - j)}"
        elif j == 0:
            source = "e"
        else:
            source = {"Delta": "t", "Delta1": "t1", "Delta2": "t2"}[name]
        values.append(char[source])
    return BrauerChar(table, tuple(values))
