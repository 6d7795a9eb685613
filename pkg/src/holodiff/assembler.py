"""Glue the layer decompositions into the k[H]-decomposition of H^0(X, Omega_X)."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

from holodiff.errors import AssemblyError
from holodiff.hypogroup import BrauerChar, Decomp, HypoGroup, IndecLabel, decomp_char
from holodiff.tamechar import LayerDecomp

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AssembledDecomp:
    """The decomposition over H with the (n1, n2) pair behind each multiplicity."""

    decomp: Decomp
    provenance: dict[IndecLabel, tuple[int, int]] = field(default_factory=dict)

    def character(self, group: HypoGroup) -> BrauerChar:
        """Return the Brauer character of the assembled module."""
        return decomp_char(group, self.decomp)

    def dimension(self) -> int:
        """Return the total dimension."""
        return self.decomp.dimension()


def dump_layers(layers: LayerDecomp) -> str:
    """Render every layer as text for diagnostics."""
    lines = []
    for j, decomp in enumerate(layers.layers):
        parts = ", ".join(f"{mult}*U({a},{b})" for (a, b), mult in decomp.counts.items()) or "0"
        lines.append(f"  layer {j}: {parts}")
    return "\n".join(lines)


def _socle_count(decomp: Decomp, socle: int, length: int | None = None) -> int:
    return sum(
        mult for label, mult in decomp.counts.items() if label.socle == socle and (length is None or label.length == length)
    )


def assemble(layers: LayerDecomp, group: HypoGroup, n_I: int) -> AssembledDecomp:
    """Return n(a, b) for every label of ``group``.

    With q = p^(n - n_I) and b = b' + b'' q: for b' >= 1, n(a,b) counts the
    summands of layer b'' with socle chi^-b''(a) and length b'; for b' = 0 it
    is n1 - n2 where n1 counts full-length summands of layer b''-1 with socle
    chi^-(b''-1)(a) and n2 counts all summands of layer b'' with socle
    chi^-b''(a).
    """
    count = group.p**n_I
    if len(layers.layers) != count:
        raise AssemblyError(f"expected {count} layers, got {len(layers.layers)}", dump_layers(layers))
    q = group.p ** (group.n - n_I)
    counts: dict[IndecLabel, int] = {}
    provenance: dict[IndecLabel, tuple[int, int]] = {}
    for a in range(group.c):
        for b in range(1, group.p_order + 1):
            b1, b2 = b % q, b // q
            label = IndecLabel(a, b)
            if b1:
                mult = layers.layers[b2].get(group.chi_shift(a, b2), b1)
                n1, n2 = mult, 0
            else:
                n1 = _socle_count(layers.layers[b2 - 1], group.chi_shift(a, b2 - 1), q)
                n2 = _socle_count(layers.layers[b2], group.chi_shift(a, b2)) if b2 < count else 0
                mult = n1 - n2
            if mult < 0:
                raise AssemblyError(f"n({a},{b}) = {n1} - {n2} is negative", dump_layers(layers))
            if mult:
                counts[label] = mult
                provenance[label] = (n1, n2)
    result = AssembledDecomp(decomp=Decomp(counts), provenance=provenance)
    logger.debug("assembled: %s", result.decomp.rows())
    return result


def slice_layers(decomp: Decomp, group: HypoGroup, n_I: int) -> LayerDecomp:
    """Cut each U_{a,b} along the kernels of (tau - 1)^j into its layers.

    U_{a,b} contributes U_{chi^-j(a), min(q, b - q j)} to layer j for
    0 <= j < ceil(b / q).
    """
    q = group.p ** (group.n - n_I)
    buckets: list[Counter[IndecLabel]] = [Counter() for _ in range(group.p**n_I)]
    for (a, b), mult in decomp.counts.items():
        for j in range(-(-b // q)):
            buckets[j][IndecLabel(group.chi_shift(a, j), min(q, b - q * j))] += mult
    quotient = group.quotient(n_I)
    top = buckets[-1]
    extra = quotient.n > 0 and top.get(IndecLabel(quotient.chi_index, 1), 0) > 0
    return LayerDecomp(group=quotient, layers=tuple(Decomp(dict(bucket)) for bucket in buckets), extra_simple=extra)
