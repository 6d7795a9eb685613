"""Holomorphic differentials of curves with p-hypo-elementary actions, as modular representations.

The decomposition pipeline is exposed as the compiled graph ``holodiff.graph.graph``.
"""

from holodiff.graph import graph, run_pipeline
from holodiff.hypogroup import Decomp, HypoGroup, IndecLabel
from holodiff.ramfilter import RamInput, RamPoint

__all__ = ["Decomp", "HypoGroup", "IndecLabel", "RamInput", "RamPoint", "graph", "run_pipeline"]
