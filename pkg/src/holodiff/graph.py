"""Decomposition pipeline as a LangGraph state graph.

validate -> build_layers -> decompose_layers -> assemble

Input is either a parsed ``RamInput`` under ``ram_input`` or a raw
RamInputDocument under ``document``.
"""

from __future__ import annotations

import logging
from typing import Any, TypedDict

from langgraph.graph import END, START, StateGraph

from holodiff.assembler import AssembledDecomp, assemble
from holodiff.documents import ram_input_from_document
from holodiff.errors import VerificationError
from holodiff.ramfilter import (
    LayerDivisors,
    RamInput,
    build_layers,
    genus_X,
    genus_Y,
    riemann_hurwitz_genus,
)
from holodiff.tamechar import LayerDecomp, TameCoverData, decompose_layers

logger = logging.getLogger(__name__)


class PipelineState(TypedDict, total=False):
    """Values carried between pipeline stages."""

    document: dict[str, Any]
    ram_input: RamInput
    layers: LayerDivisors
    genus: dict[str, int]
    cover: TameCoverData
    layer_decomp: LayerDecomp
    result: AssembledDecomp


# ============================================================================
# NODES
# ============================================================================


def validate(state: PipelineState) -> PipelineState:
    """Parse the document unless a ``RamInput`` was passed directly."""
    if "ram_input" in state:
        return {"ram_input": state["ram_input"]}
    return {"ram_input": ram_input_from_document(state["document"])}


def layers_node(state: PipelineState) -> PipelineState:
    """Compute the divisors D_j and the genera of Z, Y and X."""
    ram = state["ram_input"]
    layers = build_layers(ram)
    g_x = genus_X(ram, layers)
    g_rh = riemann_hurwitz_genus(ram)
    if g_x != g_rh:
        raise VerificationError(f"g(X) = {g_x} from the layers but {g_rh} from Riemann-Hurwitz")
    return {"layers": layers, "genus": {"Z": ram.genus_Z, "Y": genus_Y(ram), "X": g_x}}


def decompose_node(state: PipelineState) -> PipelineState:
    """Decompose each layer over H/I."""
    cover = TameCoverData.from_input(state["ram_input"], state["layers"])
    return {"cover": cover, "layer_decomp": decompose_layers(cover)}


def assemble_node(state: PipelineState) -> PipelineState:
    """Glue the layers and check the dimension against g(X)."""
    ram = state["ram_input"]
    result = assemble(state["layer_decomp"], ram.group, ram.n_I)
    if result.dimension() != state["genus"]["X"]:
        raise VerificationError(f"assembled dimension {result.dimension()} differs from g(X) = {state['genus']['X']}")
    return {"result": result}


# ============================================================================
# GRAPH
# ============================================================================

builder = StateGraph(PipelineState)
builder.add_node("validate", validate)
builder.add_node("build_layers", layers_node)
builder.add_node("decompose_layers", decompose_node)
builder.add_node("assemble", assemble_node)
builder.add_edge(START, "validate")
builder.add_edge("validate", "build_layers")
builder.add_edge("build_layers", "decompose_layers")
builder.add_edge("decompose_layers", "assemble")
builder.add_edge("assemble", END)

graph = builder.compile(name="holodiff")


def run_pipeline(ram: RamInput) -> PipelineState:
    """Run the whole pipeline on a parsed input."""
    return graph.invoke({"ram_input": ram})
