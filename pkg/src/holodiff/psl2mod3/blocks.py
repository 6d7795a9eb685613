"""Simple k[G]-modules, 3-blocks and their Brauer trees for G = PSL(2, F_l).

Blocks of full defect have Brauer trees that are lines. Vertex multiplicities
are 1 except at the exceptional vertex, whose multiplicity is (3^n - 1)/e for
a block with e edges. Uniserial modules are read off the tree by walking
around a vertex: the composition factors cycle through the edges at that
vertex, starting with the socle.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import NamedTuple

from holodiff.errors import GroupError
from holodiff.hypogroup import BrauerChar
from holodiff.psl2mod3.cases import Psl2Case
from holodiff.psl2mod3.characters import g_char, root_at_r, two_cos
from holodiff.psl2mod3.restriction import N1Label

logger = logging.getLogger(__name__)


class GLabel(NamedTuple):
    """Uniserial non-projective k[G]-module with the given socle and length."""

    socle: str
    length: int


@dataclass(frozen=True)
class BrauerTree:
    """A tree whose edges are simple modules and whose vertices are ordinary characters."""

    vertices: tuple[str, ...]
    multiplicities: tuple[int, ...]
    edges: tuple[tuple[str, int, int], ...]
    exceptional: int | None = None

    def edge(self, simple: str) -> tuple[str, int, int]:
        """Return the edge labelled by ``simple``."""
        for item in self.edges:
            if item[0] == simple:
                return item
        raise GroupError(f"{simple} is not an edge of this tree")

    def around(self, vertex: int) -> list[str]:
        """Return the edges at a vertex, in their cyclic order."""
        return [name for name, u, v in self.edges if vertex in (u, v)]

    def arm(self, vertex: int) -> int:
        """Return multiplicity times valency, the longest walk around a vertex."""
        return self.multiplicities[vertex] * len(self.around(vertex))

    def cartan(self, simples: tuple[str, ...]) -> tuple[tuple[int, ...], ...]:
        """Return c(E, E') = sum of multiplicities of the vertices shared by E and E'."""
        rows = []
        for a in simples:
            _, a1, a2 = self.edge(a)
            row = []
            for b in simples:
                _, b1, b2 = self.edge(b)
                shared = {a1, a2} & {b1, b2}
                row.append(sum(self.multiplicities[v] for v in shared))
            rows.append(tuple(row))
        return tuple(rows)


def principal_line(case: Psl2Case, inner: str, outer: str) -> BrauerTree:
    """Return trivial -inner- Steinberg -outer- exceptional, Cartan ((2, 1), (1, me + 1))."""
    return BrauerTree(
        vertices=("trivial", "Steinberg", "exceptional"),
        multiplicities=(1, 1, case.me),
        edges=((inner, 0, 1), (outer, 1, 2)),
        exceptional=2,
    )


def middle_line(case: Psl2Case, left: str, right: str) -> BrauerTree:
    """Return a -left- exceptional -right- b, Cartan ((me + 1, me), (me, me + 1))."""
    return BrauerTree(
        vertices=(f"leaf({left})", "exceptional", f"leaf({right})"),
        multiplicities=(1, case.me, 1),
        edges=((left, 0, 1), (right, 1, 2)),
        exceptional=1,
    )


def single_edge(case: Psl2Case, simple: str) -> BrauerTree:
    """Return leaf -simple- exceptional with multiplicity 3^n - 1."""
    return BrauerTree(
        vertices=(f"leaf({simple})", "exceptional"),
        multiplicities=(1, case.sylow_order - 1),
        edges=((simple, 0, 1),),
        exceptional=1,
    )


@dataclass(frozen=True)
class Block:
    """A 3-block: its simples, Cartan matrix, defect and Brauer tree (None for defect 0)."""

    name: str
    simples: tuple[str, ...]
    cartan: tuple[tuple[int, ...], ...]
    defect: int
    tree: BrauerTree | None = None


def _block(case: Psl2Case, name: str, tree: BrauerTree) -> Block:
    simples = tuple(edge[0] for edge in tree.edges)
    return Block(name, simples, tree.cartan(simples), case.n, tree)


def _defect_zero(simple: str) -> Block:
    return Block(f"B({simple})", (simple,), ((1,),), 0)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _zero(_: int) -> int:
    return 0


def _one(_: int) -> int:
    return 1


def simple_characters(case: Psl2Case, s01: int = 1) -> dict[str, BrauerChar]:
    """Return the simple Brauer characters, keyed by name.

    ``s01`` fixes which of the two conjugate characters of degree (l - 1)/2 is
    called T_01 when l = 3 mod 4 and m is even.
    """
    ell, m, W = case.ell, case.m, case.w_order
    root = root_at_r(ell)
    chars = {}
    if case.case_id == 1:
        chars["T_0"] = g_char(case, 1, 1, 1, 1, _one, _one)
        for t in range((m - 1) // 2 + 1):
            chars[f"T~_{t}"] = g_char(case, ell - 1, -1, -1, 0, lambda i, t=t: -two_cos(m, t * i), _zero)
        half = (ell + 1) // 2
        for k, sign in ((1, 1), (2, -1)):
            chars[f"gamma_{k}"] = g_char(
                case, half, (1 + sign * root) / 2, (1 - sign * root) / 2, _sign((ell - 1) // 4), _zero, _sign
            )
        for k in range(1, (ell - 5) // 4 + 1):
            chars[f"eta_{k}"] = g_char(case, ell + 1, 1, 1, 2 * _sign(k), _zero, lambda j, k=k: two_cos(W, k * j))
    elif case.case_id == 2:
        chars["T_0"] = g_char(case, 1, 1, 1, 1, _one, _one)
        chars["T_1"] = g_char(case, ell, 0, 0, -1, _one, lambda _: -1)
        for t in range(1, (m - 1) // 2 + 1):
            chars[f"T~_{t}"] = g_char(case, ell + 1, 1, 1, 0, lambda i, t=t: two_cos(m, t * i), _zero)
        half = (ell - 1) // 2
        for k, sign in ((1, 1), (2, -1)):
            chars[f"gamma_{k}"] = g_char(
                case,
                half,
                (-1 + sign * root) / 2,
                (-1 - sign * root) / 2,
                -_sign((ell + 1) // 4),
                _zero,
                lambda j: -_sign(j),
            )
        for k in range(1, (ell - 3) // 4 + 1):
            chars[f"eta_{k}"] = g_char(
                case, ell - 1, -1, -1, -2 * _sign(k), _zero, lambda j, k=k: -two_cos(W, k * j)
            )
    elif case.case_id == 3:
        chars["T_00"] = g_char(case, 1, 1, 1, 1, _one, _one)
        chars["T_11"] = g_char(case, ell, 0, 0, 1, _one, lambda _: -1)
        half = (ell + 1) // 2
        for name, sign in (("T_01", 1), ("T_10", -1)):
            chars[name] = g_char(
                case, half, (1 + sign * root) / 2, (1 - sign * root) / 2, _sign(m // 2), _sign, _zero
            )
        for t in range(1, m // 2):
            chars[f"T~_{t}"] = g_char(case, ell + 1, 1, 1, 2 * _sign(t), lambda i, t=t: two_cos(m, t * i), _zero)
        for k in range(1, (ell - 1) // 4 + 1):
            chars[f"eta_{k}"] = g_char(case, ell - 1, -1, -1, 0, _zero, lambda j, k=k: -two_cos(W, k * j))
    else:
        chars["T_0"] = g_char(case, 1, 1, 1, 1, _one, _one)
        for t in range(m // 2):
            chars[f"T~_{t}"] = g_char(
                case, ell - 1, -1, -1, -2 * _sign(t), lambda i, t=t: -two_cos(m, t * i), _zero
            )
        half = (ell - 1) // 2
        for name, sign in (("T_01", s01), ("T_10", -s01)):
            chars[name] = g_char(
                case,
                half,
                (-1 + sign * root) / 2,
                (-1 - sign * root) / 2,
                -_sign(m // 2),
                lambda i: -_sign(i),
                _zero,
            )
        for k in range(1, (ell - 3) // 4 + 1):
            chars[f"eta_{k}"] = g_char(case, ell + 1, 1, 1, 0, _zero, lambda j, k=k: two_cos(W, k * j))
    return chars


def blocks(case: Psl2Case) -> tuple[Block, ...]:
    """Return the 3-blocks of G, principal block first."""
    m = case.m
    found: list[Block] = []
    if case.case_id in (1, 4):
        found.append(_block(case, "B_0", principal_line(case, "T_0", "T~_0")))
    elif case.case_id == 2:
        found.append(_block(case, "B_0", middle_line(case, "T_0", "T_1")))
    else:
        found.append(_block(case, "B_0", middle_line(case, "T_00", "T_11")))
    if case.plus:
        found.append(_block(case, "B_01", middle_line(case, "T_01", "T_10")))
    tildes = range(1, m // 2) if case.plus else range(1, (m - 1) // 2 + 1)
    found += [_block(case, f"B_{t}", single_edge(case, f"T~_{t}")) for t in tildes]
    if not case.plus:
        found += [_defect_zero("gamma_1"), _defect_zero("gamma_2")]
    eta_top = {1: (case.ell - 5) // 4, 2: (case.ell - 3) // 4, 3: (case.ell - 1) // 4, 4: (case.ell - 3) // 4}
    found += [_defect_zero(f"eta_{k}") for k in range(1, eta_top[case.case_id] + 1)]
    return tuple(found)


@dataclass(frozen=True)
class BlockData:
    """Simple characters and blocks of G for one choice of s01."""

    case: Psl2Case
    s01: int
    blocks: tuple[Block, ...]

    @cached_property
    def simples(self) -> dict[str, BrauerChar]:
        """Return the simple Brauer characters."""
        return simple_characters(self.case, self.s01)

    def block_of(self, simple: str) -> Block:
        """Return the block containing ``simple``."""
        for block in self.blocks:
            if simple in block.simples:
                return block
        raise GroupError(f"unknown simple module {simple!r} for l = {self.case.ell}")

    def dim(self, simple: str) -> int:
        """Return the dimension of a simple module."""
        return int(self.simples[simple].degree())

    def projective_counts(self, simple: str) -> dict[str, int]:
        """Return the composition factors of the projective cover of ``simple``."""
        block = self.block_of(simple)
        col = block.simples.index(simple)
        return {other: block.cartan[row][col] for row, other in enumerate(block.simples)}

    @cached_property
    def projective_chars(self) -> dict[str, BrauerChar]:
        """Return the characters of all projective covers."""
        found = {}
        for simple, char in self.simples.items():
            counts = self.projective_counts(simple)
            found[simple] = BrauerChar.combine(char.table, ((mult, self.simples[name]) for name, mult in counts.items()))
        return found

    def projective_char(self, simple: str) -> BrauerChar:
        """Return the character of the projective cover of ``simple``."""
        if simple not in self.projective_chars:
            raise GroupError(f"unknown simple module {simple!r} for l = {self.case.ell}")
        return self.projective_chars[simple]

    def projective_dim(self, simple: str) -> int:
        """Return the dimension of the projective cover of ``simple``."""
        return sum(mult * self.dim(name) for name, mult in self.projective_counts(simple).items())

    def uniserial_factors(self, label: GLabel) -> Counter[str]:
        """Return the composition factors of a uniserial module.

        The walk goes around the endpoint of the socle edge with the longer
        arm, preferring the exceptional vertex on a tie.
        """
        block = self.block_of(label.socle)
        if block.tree is None:
            if label.length != 1:
                raise GroupError(f"{label.socle} lies in a block of defect zero; no uniserial of length {label.length}")
            return Counter({label.socle: 1})
        tree = block.tree
        _, u, v = tree.edge(label.socle)
        vertex = max((u, v), key=lambda x: (tree.arm(x), x == tree.exceptional))
        if not 1 <= label.length <= tree.arm(vertex):
            raise GroupError(f"no uniserial module with socle {label.socle} of length {label.length}")
        ring = tree.around(vertex)
        start = ring.index(label.socle)
        return Counter(ring[(start + i) % len(ring)] for i in range(label.length))

    def uniserial_char(self, label: GLabel) -> BrauerChar:
        """Return the character of a uniserial module."""
        factors = self.uniserial_factors(label)
        table = self.simples[label.socle].table
        return BrauerChar.combine(table, ((mult, self.simples[name]) for name, mult in factors.items()))

    def uniserial_dim(self, label: GLabel) -> int:
        """Return the dimension of a uniserial module."""
        return sum(mult * self.dim(name) for name, mult in self.uniserial_factors(label).items())


@lru_cache(maxsize=16)
def block_data(case: Psl2Case, s01: int = 1) -> BlockData:
    """Return the block data of G for one labelling of T_01 and T_10."""
    if s01 not in (1, -1):
        raise GroupError(f"s01 must be +1 or -1, got {s01}")
    return BlockData(case, s01, blocks(case))


def green_correspondent(case: Psl2Case, label: N1Label) -> GLabel | None:
    """Return the Green correspondent of a non-projective uniserial k[N_1]-module.

    Projective labels and correspondents of length zero give None.
    """
    full = case.sylow_order
    if label.length >= full:
        return None
    b = label.length
    socle = label.socle
    if socle.startswith("S~_"):
        length = full - b if case.case_id in (1, 4) else b
        target = "T~_" + socle[3:]
    elif case.case_id == 1 and socle == "S_1":
        target, length = "T~_0", (full - b) // 2
    elif case.case_id == 2 and socle == "S_1":
        target, length = "T_1", b
    elif case.case_id == 3 and socle in ("S_11", "S_01"):
        target, length = "T_" + socle[2:], b
    elif case.case_id == 4 and socle == "S_11":
        target, length = "T~_0", (full - b) // 2
    elif case.case_id == 4 and socle == "S_01":
        target, length = "T_01", full - b
    else:
        raise GroupError(f"no Green correspondent rule for {label} in case {case.case_id}")
    if length <= 0:
        return None
    return GLabel(target, length)
