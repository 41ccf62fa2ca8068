"""Structural validation of decision models.

Checks are pure and deterministic: the same model always yields the same
report with findings in the same order. Errors make the model unusable for
recommendation; warnings do not.
"""

from __future__ import annotations

import itertools
from collections import deque

from .jsonio import canonical_dumps
from .model import CONTEXT_FACT_DOMAINS, ContextFacts, DecisionModel, Finding, ValidationReport


def _all_contexts() -> list[ContextFacts]:
    names = list(CONTEXT_FACT_DOMAINS)
    combos = itertools.product(*(CONTEXT_FACT_DOMAINS[name] for name in names))
    return [ContextFacts(**dict(zip(names, combo))) for combo in combos]


def _find_cycle(model: DecisionModel) -> list[str] | None:
    """Return one cycle as a node-id path (first node repeated), or None."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {n.id: WHITE for n in model.nodes}
    parent: dict[str, str] = {}

    for root in model.nodes:
        if color[root.id] != WHITE:
            continue
        stack: list[tuple[str, iter]] = [(root.id, iter(model.outgoing(root.id)))]
        color[root.id] = GRAY
        while stack:
            node_id, edges = stack[-1]
            advanced = False
            for edge in edges:
                if color[edge.target] == GRAY:
                    cycle = [edge.target, node_id]
                    walker = node_id
                    while walker != edge.target:
                        walker = parent[walker]
                        cycle.append(walker)
                    cycle.reverse()
                    return cycle
                if color[edge.target] == WHITE:
                    color[edge.target] = GRAY
                    parent[edge.target] = node_id
                    stack.append((edge.target, iter(model.outgoing(edge.target))))
                    advanced = True
                    break
            if not advanced:
                color[node_id] = BLACK
                stack.pop()
    return None


def validate_model(model: DecisionModel) -> ValidationReport:
    findings: list[Finding] = []

    starts = model.start_nodes()
    if len(starts) != 1:
        ids = ", ".join(n.id for n in starts) or "none"
        findings.append(
            Finding(
                code="E_START",
                severity="error",
                message=f"expected exactly one start node, found {len(starts)} ({ids})",
            )
        )

    for pattern in model.patterns:
        owners = [n.id for n in model.pattern_nodes() if n.pattern == pattern.id]
        if len(owners) != 1:
            findings.append(
                Finding(
                    code="E_PATTERN_NODES",
                    severity="error",
                    message=f"pattern {pattern.id!r} must appear on exactly one node, found {len(owners)}",
                    element=pattern.id,
                )
            )

    cycle = _find_cycle(model)
    if cycle is not None:
        findings.append(
            Finding(
                code="E_CYCLE",
                severity="error",
                message="decision flow contains a cycle: " + " -> ".join(cycle),
                element=cycle[0],
            )
        )

    if len(starts) == 1:
        reached = {starts[0].id}
        queue = deque([starts[0].id])
        while queue:
            current = queue.popleft()
            for edge in model.outgoing(current):
                if edge.target not in reached:
                    reached.add(edge.target)
                    queue.append(edge.target)
        for node in model.nodes:
            if node.id not in reached:
                findings.append(
                    Finding(
                        code="E_UNREACHABLE",
                        severity="error",
                        message=f"node {node.id!r} is not reachable from the start node",
                        element=node.id,
                    )
                )

    contexts = None
    for node in model.nodes:
        if node.kind != "xor":
            continue
        outgoing = model.outgoing(node.id)
        plain = [e for e in outgoing if e.guard is None or not e.guard.otherwise]
        defaults = [e for e in outgoing if e.guard is not None and e.guard.otherwise]
        if len(defaults) > 1:
            findings.append(
                Finding(
                    code="E_AMBIGUOUS_EXCLUSIVE",
                    severity="error",
                    message=f"exclusive gateway {node.id!r} has {len(defaults)} otherwise edges",
                    element=node.id,
                )
            )
            continue
        if len(plain) < 2:
            continue
        if contexts is None:
            contexts = _all_contexts()
        for context in contexts:
            holding = [
                e for e in plain if e.guard is None or e.guard.evaluate(context) is True
            ]
            if len(holding) >= 2:
                facts = ", ".join(f"{k}={v}" for k, v in context.as_dict().items())
                targets = ", ".join(e.target for e in holding)
                findings.append(
                    Finding(
                        code="E_AMBIGUOUS_EXCLUSIVE",
                        severity="error",
                        message=(
                            f"exclusive gateway {node.id!r} activates {len(holding)} edges "
                            f"(to {targets}) when {facts}"
                        ),
                        element=node.id,
                    )
                )
                break

    for node in model.nodes:
        if node.is_gateway and len(model.outgoing(node.id)) == 1:
            findings.append(
                Finding(
                    code="W_DEGENERATE_GATEWAY",
                    severity="warning",
                    message=f"gateway {node.id!r} has a single outgoing edge",
                    element=node.id,
                )
            )

    for pattern in model.patterns:
        if not pattern.impacts:
            findings.append(
                Finding(
                    code="W_NO_IMPACTS",
                    severity="warning",
                    message=f"pattern {pattern.id!r} declares no quality attribute impacts",
                    element=pattern.id,
                )
            )

    ok = not any(f.severity == "error" for f in findings)
    return ValidationReport(ok=ok, findings=tuple(findings))


def validation_document(report: ValidationReport) -> dict:
    findings = []
    for finding in report.findings:
        entry = {"code": finding.code, "severity": finding.severity, "message": finding.message}
        if finding.element:
            entry["element"] = finding.element
        findings.append(entry)
    return {"ok": report.ok, "findings": findings}


def validation_json(report: ValidationReport) -> str:
    return canonical_dumps(validation_document(report))
