"""Blockwise congruence report for H^0(X(l), Omega).

Every block B of k[G] carries a summand P_B + U_B of H^0, with P_B projective
and U_B uniserial or zero. B gives rise to congruences between cusp forms in
different isotypic components when its defect is non-trivial and either
P_B != 0 or a lift of U_B has at least two distinct ordinary constituents.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import product

from holodiff.errors import VerificationError
from holodiff.psl2mod3.blocks import Block, BrauerTree, GLabel, block_data
from holodiff.psl2mod3.cases import classify
from holodiff.psl2mod3.decomposition import NamedDecomp, full_decomposition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockReport:
    """The part of H^0 in one block and whether it produces congruences."""

    block: str
    defect: int
    projective: dict[str, int]
    uniserial: GLabel | None
    constituents: int

    @property
    def congruence(self) -> bool:
        """Whether the block produces congruences."""
        return self.defect > 0 and (bool(self.projective) or self.constituents >= 2)

    def to_json(self) -> dict:
        """Return the report row."""
        return {
            "block": self.block,
            "defect": self.defect,
            "projective": bool(self.projective),
            "constituents": self.constituents,
            "congruence": self.congruence,
        }


def brauer_tree(block: Block) -> BrauerTree | None:
    """Return the Brauer tree of a block, None for defect zero."""
    return block.tree


def lift_constituents(tree: BrauerTree, factors: Counter[str]) -> int:
    """Return the fewest distinct ordinary characters whose reductions sum to ``factors``.

    Each non-exceptional vertex is used at most once; the exceptional vertex
    stands for its family of exceptional characters and may be used up to its
    multiplicity. An ordinary character at a vertex reduces to the sum of the
    edges at that vertex.
    """
    ranges = []
    for vertex, mult in enumerate(tree.multiplicities):
        top = mult if vertex == tree.exceptional else 1
        ranges.append(range(top + 1))
    best: int | None = None
    for choice in product(*ranges):
        if all(choice[u] + choice[v] == factors.get(name, 0) for name, u, v in tree.edges):
            total = sum(choice)
            best = total if best is None else min(best, total)
    if best is None:
        raise VerificationError(f"composition factors {dict(factors)} do not lift along the Brauer tree")
    return best


def block_reports(decomp: NamedDecomp) -> list[BlockReport]:
    """Split a decomposition by blocks; only occupied blocks are reported."""
    case = classify(decomp.ell)
    data = block_data(case, decomp.s01 or 1)
    reports = []
    for block in data.blocks:
        projective = {name: decomp.projective[name] for name in block.simples if decomp.projective.get(name)}
        uniserials = [label for label in decomp.uniserial if label.socle in block.simples]
        if len(uniserials) > 1:
            raise VerificationError(f"block {block.name} holds {len(uniserials)} uniserial summands")
        uniserial = uniserials[0] if uniserials else None
        constituents = 0
        if uniserial is not None:
            factors = data.uniserial_factors(uniserial)
            constituents = lift_constituents(block.tree, factors) if block.tree is not None else 1
        if projective or uniserial is not None:
            reports.append(BlockReport(block.name, block.defect, projective, uniserial, constituents))
    return reports


def congruence_report(ell: int, decomp: NamedDecomp | None = None) -> list[BlockReport]:
    """Return the per-block report of H^0(X(l), Omega).

    ``decomp`` is the already computed ``full_decomposition(ell)``, if any.
    """
    if decomp is None:
        decomp = full_decomposition(ell)
    elif decomp.ell != ell:
        raise VerificationError(f"decomposition for l={decomp.ell} passed for l={ell}")
    reports = block_reports(decomp)
    flagged = [report.block for report in reports if report.congruence]
    logger.info("l=%d: congruence-producing blocks %s", ell, flagged or "none")
    return reports
