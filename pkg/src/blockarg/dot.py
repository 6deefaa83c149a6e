"""Graphviz export: one cluster per block occurrence."""

from __future__ import annotations

import json

from .flatrep import ROOT, FlatRep, Position
from .labelling import Labelling

FILL = {"+": "palegreen", "-": "lightcoral", "?": "lightgrey"}


def node_id(p: Position) -> str:
    return "n_" + "_".join(map(str, p))


def export_dot(flat: FlatRep, labelling: Labelling | None = None) -> str:
    """Render ``flat`` as a digraph.

    Every block position becomes a cluster holding a node per child; attacks
    are solid edges and supports dashed ones. With a labelling, nodes are
    filled by label.
    """
    out = ["digraph blockarg {", "  compound=true;", "  node [shape=box, style=filled, fillcolor=white];"]
    edges: list[str] = []

    def node(p: Position, indent: str) -> None:
        label = flat.name(p)
        attrs = [f"label={json.dumps(label)}"]
        if labelling is not None:
            mark = labelling[p].value
            attrs[0] = f"label={json.dumps(f'{label} [{mark}]')}"
            attrs.append(f"fillcolor={FILL[mark]}")
        out.append(f"{indent}{node_id(p)} [{', '.join(attrs)}];")

    def cluster(p: Position, depth: int) -> None:
        indent = "  " * depth
        out.append(f"{indent}subgraph cluster_{node_id(p)[2:]} {{")
        out.append(f"{indent}  label={json.dumps(flat.name(p))};")
        for q in flat.children(p):
            if flat.is_block(q):
                cluster(q, depth + 1)
            node(q, indent + "  ")
            for a in flat.attackers(q):
                edges.append(f"  {node_id(a)} -> {node_id(q)};")
            for s in flat.supporters(q):
                edges.append(f"  {node_id(s)} -> {node_id(q)} [style=dashed];")
        out.append(f"{indent}}}")

    if flat.is_block(ROOT):
        cluster(ROOT, 1)
    else:
        node(ROOT, "  ")
    out.extend(edges)
    out.append("}")
    return "\n".join(out) + "\n"
