"""Graphviz rendering of the digraph of a complex, or of its Morse graph."""

from __future__ import annotations

from .complex import BasedComplex
from .morsegraph import MATCHED, Matching, build_digraph, build_morse_graph, critical_cells, require_valid


def export_dot(c: BasedComplex, matching: Matching | None = None) -> str:
    """DOT text with nodes and edges in (degree, id) order.

    Critical cells are drawn as double circles and reversed matched edges in
    bold.  Without a matching the plain digraph is drawn and no cell is marked.
    """
    if matching is None:
        g = build_digraph(c)
        critical = set()
    else:
        require_valid(c, matching)
        g = build_morse_graph(c, matching)
        critical = set(critical_cells(c, matching))

    lines = ["digraph G {"]
    for cell in c.cells:
        attrs = f'label="{cell.id} (deg {cell.degree})"'
        if cell.id in critical:
            attrs += ", shape=doublecircle"
        lines.append(f'  "{cell.id}" [{attrs}];')
    for a, b, label in g.labeled_edges():
        style = " [style=bold]" if label == MATCHED else ""
        lines.append(f'  "{a}" -> "{b}"{style};')
    lines.append("}")
    return "\n".join(lines) + "\n"
