"""DOT rendering of a decision network: eleven nodes, ten labeled edges.

The output is plain Graphviz source (render with `dot -Tpng`); the tool
itself never rasterizes. Node and edge order are fixed so the same
network always produces the same bytes.
"""

from __future__ import annotations

from .network import DecisionNetwork, TEAM_SIZE


def export_network_dot(network: DecisionNetwork) -> str:
    """Graphviz source with every edge labeled (s, tau, p, r), 3 decimals."""
    lines = [
        "graph decision_network {",
        "  layout=circo;",
        "  node [shape=circle, fontsize=11];",
        f"  t{network.holder} [style=filled, fillcolor=gold];",
    ]
    for j in range(1, TEAM_SIZE + 1):
        if j != network.holder:
            lines.append(f"  t{j};")
    for j in network.teammates():
        e = network.edges[j]
        label = f"({e.s:.3f}, {e.tau:.3f}, {e.p:.3f}, {e.r})"
        lines.append(f'  t{network.holder} -- t{j} [label="{label}", fontsize=9];')
    lines.append("}")
    return "\n".join(lines) + "\n"
