"""Graphviz DOT rendering of a decision model.

Output is byte-stable: nodes sorted by id, flow edges in canonical order,
then complement edges (one per pair, smaller id first), then constraint
attachments. Gateways are diamonds marked X (exclusive), O (inclusive),
and + (parallel); patterns are rounded boxes; constraints octagons.
"""

from __future__ import annotations

from .model import DecisionModel

_GATEWAY_MARKS = {"xor": "X", "or": "O", "and": "+"}


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(model: DecisionModel) -> str:
    lines = ["digraph decision_model {", "  rankdir=LR;"]

    for node in model.nodes:
        if node.kind == "start":
            lines.append(f'  "{node.id}" [shape=circle, label="start"];')
        elif node.kind == "pattern":
            pattern = model.pattern(node.pattern)
            label = _escape(pattern.name if pattern else node.id)
            lines.append(f'  "{node.id}" [shape=box, style=rounded, label="{label}"];')
        else:
            lines.append(f'  "{node.id}" [shape=diamond, label="{_GATEWAY_MARKS[node.kind]}"];')
    for pattern in model.patterns:
        for constraint in pattern.constraints:
            lines.append(
                f'  "{pattern.id}__{constraint.id}" [shape=octagon, label="{_escape(constraint.id)}"];'
            )

    for edge in model.edges:
        if edge.guard is None:
            lines.append(f'  "{edge.source}" -> "{edge.target}";')
        else:
            lines.append(
                f'  "{edge.source}" -> "{edge.target}" [label="{_escape(str(edge.guard))}"];'
            )

    def node_id_for(pattern_id: str) -> str:
        node = model.node_for_pattern(pattern_id)
        return node.id if node else pattern_id

    emitted: set[tuple[str, str]] = set()
    for pattern in model.patterns:
        for other in pattern.complements:
            pair = tuple(sorted((pattern.id, other)))
            if pair in emitted:
                continue
            emitted.add(pair)
            lines.append(
                f'  "{node_id_for(pair[0])}" -> "{node_id_for(pair[1])}"'
                " [style=dashed, dir=both, label=\"complements\"];"
            )

    for pattern in model.patterns:
        for constraint in pattern.constraints:
            lines.append(
                f'  "{node_id_for(pattern.id)}" -> "{pattern.id}__{constraint.id}" [style=dashed];'
            )

    lines.append("}")
    return "\n".join(lines) + "\n"
