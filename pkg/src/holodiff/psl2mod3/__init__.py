"""PSL(2, F_l) acting on the modular curve X(l) in characteristic 3."""

from holodiff.psl2mod3.blocks import BlockData, GLabel, block_data, green_correspondent
from holodiff.psl2mod3.cases import Psl2Case, classify, genus
from holodiff.psl2mod3.characters import class_number, class_number_forms, g_class_table, h0_brauer
from holodiff.psl2mod3.congruence import BlockReport, brauer_tree, congruence_report, lift_constituents
from holodiff.psl2mod3.counts import mass_check, ram_counts, ram_input
from holodiff.psl2mod3.decomposition import NamedDecomp, full_decomposition
from holodiff.psl2mod3.restriction import (
    N1Decomp,
    N1Label,
    n1_class_data,
    n1_decomposition,
    restrict_n1,
    restriction_closed_form,
    restriction_decomposition,
)
from holodiff.psl2mod3.verify import SweepRow, verify

__all__ = [
    "BlockData",
    "BlockReport",
    "GLabel",
    "N1Decomp",
    "N1Label",
    "NamedDecomp",
    "Psl2Case",
    "SweepRow",
    "block_data",
    "brauer_tree",
    "class_number",
    "class_number_forms",
    "classify",
    "congruence_report",
    "full_decomposition",
    "g_class_table",
    "genus",
    "green_correspondent",
    "h0_brauer",
    "lift_constituents",
    "mass_check",
    "n1_class_data",
    "n1_decomposition",
    "ram_counts",
    "ram_input",
    "restrict_n1",
    "restriction_closed_form",
    "restriction_decomposition",
    "verify",
]
