"""Decision engine: guard evaluation, eligibility traversal, scoring, ranking.

The engine answers one question: given a project context and quality-attribute
weights, which decomposition patterns apply and in what order of preference?
Everything here is deterministic. Collections come pre-sorted from the model,
traversal is breadth-first over canonically ordered edges, scores are running
sums in impact order, and every tie is broken down to pattern id. Running the
same inputs twice yields byte-identical reports.
"""

from __future__ import annotations

import hashlib
import math
from collections import defaultdict, deque
from dataclasses import dataclass, field

from .errors import AmbiguousExclusiveError, RequirementsError
from .jsonio import canonical_dumps, format_number
from .model import (
    CONTEXT_FACT_DOMAINS,
    ContextFacts,
    DecisionModel,
    Edge,
    Guard,
    Node,
    Pattern,
)

R_NOT_REACHED = "R_NOT_REACHED"
R_HARD_CONSTRAINT = "R_HARD_CONSTRAINT"

# Traversal certainty levels.
_UNREACHED, _TAINTED, _CERTAIN = 0, 1, 2


def eval_guard(guard: Guard, context: ContextFacts) -> bool | None:
    """Evaluate a guard: True, False, or None when facts are unanswered."""
    return guard.evaluate(context)


@dataclass(frozen=True)
class WarningMessage:
    code: str
    message: str


@dataclass(frozen=True)
class Requirements:
    """Stakeholder input: non-negative QA weights plus the project context."""

    weights: tuple[tuple[str, float], ...] = ()
    context: ContextFacts = ContextFacts()
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(sorted(self.weights)))
        object.__setattr__(self, "_index", dict(self.weights))

    def weight(self, qa: str) -> float:
        return self._index.get(qa, 0.0)


def parse_requirements(document, model: DecisionModel) -> Requirements:
    """Build Requirements from a plain JSON document, rejecting anything off-shape."""
    if not isinstance(document, dict):
        raise RequirementsError(f"requirements must be an object, got {type(document).__name__}")
    unknown = sorted(set(document) - {"weights", "context"})
    if unknown:
        raise RequirementsError(f"unknown requirements key {unknown[0]!r}")

    weights_doc = document.get("weights", {})
    if not isinstance(weights_doc, dict):
        raise RequirementsError("weights: expected an object mapping quality attributes to numbers")
    weights = []
    for qa, value in weights_doc.items():
        if model.qa(qa) is None:
            raise RequirementsError(f"weights.{qa}: unknown quality attribute")
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise RequirementsError(f"weights.{qa}: expected a number")
        value = float(value)
        if math.isnan(value) or math.isinf(value) or value < 0:
            raise RequirementsError(f"weights.{qa}: weights must be finite and non-negative")
        weights.append((qa, value))

    context_doc = document.get("context", {})
    if not isinstance(context_doc, dict):
        raise RequirementsError("context: expected an object mapping context facts to values")
    facts = {}
    for fact, value in context_doc.items():
        if fact not in CONTEXT_FACT_DOMAINS:
            raise RequirementsError(f"context.{fact}: unknown context fact")
        if not isinstance(value, str) or value not in CONTEXT_FACT_DOMAINS[fact]:
            allowed = ", ".join(CONTEXT_FACT_DOMAINS[fact])
            raise RequirementsError(f"context.{fact}: expected one of {allowed}")
        facts[fact] = value

    return Requirements(weights=tuple(weights), context=ContextFacts(**facts))


def requirements_document(requirements: Requirements) -> dict:
    return {
        "weights": {qa: value for qa, value in requirements.weights},
        "context": requirements.context.as_dict(),
    }


def requirements_digest(requirements: Requirements) -> str:
    """First 12 hex digits of the SHA-256 of the canonical requirements text."""
    text = canonical_dumps(requirements_document(requirements))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]


@dataclass(frozen=True)
class EligibilityTrace:
    """How the decision flow was walked: nodes in visit order, edge outcomes,
    and the patterns that fell out with the reason code."""

    visited: tuple[str, ...] = ()
    activated_edges: tuple[tuple[str, str, str], ...] = ()
    excluded: tuple[tuple[str, str], ...] = ()


def _activations(model: DecisionModel, node: Node, context: ContextFacts) -> list[tuple[Edge, bool | None]]:
    """Outgoing edges a node activates under a context, with their certainty."""
    outgoing = model.outgoing(node.id)
    if node.kind in ("start", "pattern", "and"):
        return [(edge, True) for edge in outgoing]

    plain = [e for e in outgoing if e.guard is None or not e.guard.otherwise]
    defaults = [e for e in outgoing if e.guard is not None and e.guard.otherwise]
    outcomes = [(e, True if e.guard is None else e.guard.evaluate(context)) for e in plain]
    true_edges = [e for e, value in outcomes if value is True]
    unknown_edges = [e for e, value in outcomes if value is None]

    if node.kind == "or":
        active = [(e, value) for e, value in outcomes if value is not False]
        if defaults and not active:
            active = [(e, True) for e in defaults]
        return active

    # Exclusive gateway.
    if len(true_edges) > 1:
        facts = ", ".join(f"{k}={v}" for k, v in context.as_dict().items())
        targets = ", ".join(e.target for e in true_edges)
        raise AmbiguousExclusiveError(
            f"exclusive gateway {node.id!r} activates edges to {targets} at once ({facts})",
            details={"gateway": node.id},
        )
    if true_edges:
        return [(true_edges[0], True)]
    if unknown_edges:
        return [(e, None) for e in unknown_edges]
    if len(defaults) > 1:
        raise AmbiguousExclusiveError(
            f"exclusive gateway {node.id!r} has {len(defaults)} otherwise edges",
            details={"gateway": node.id},
        )
    if defaults:
        return [(defaults[0], True)]
    return []


def _traverse(model: DecisionModel, context: ContextFacts):
    """Walk the flow; return (visit order, activation log, certainty per node)."""
    starts = model.start_nodes()
    if len(starts) != 1:
        return [], [], {}
    start = starts[0]

    visited: list[str] = [start.id]
    seen = {start.id}
    activated: list[tuple[str, str, bool | None]] = []
    queue = deque([start.id])
    while queue:
        node_id = queue.popleft()
        for edge, outcome in _activations(model, model.node(node_id), context):
            activated.append((edge.source, edge.target, outcome))
            if edge.target not in seen:
                seen.add(edge.target)
                visited.append(edge.target)
                queue.append(edge.target)

    # Certainty propagates along activated edges in topological order: a node
    # is certain if some path to it holds outright, tainted if every path
    # crosses an unknown guard.
    level = {node_id: _UNREACHED for node_id in seen}
    level[start.id] = _CERTAIN
    indegree = {node_id: 0 for node_id in seen}
    adjacency = defaultdict(list)
    for source, target, outcome in activated:
        adjacency[source].append((target, outcome))
        indegree[target] += 1
    ready = deque(sorted(n for n in seen if indegree[n] == 0))
    while ready:
        node_id = ready.popleft()
        for target, outcome in adjacency[node_id]:
            step = min(level[node_id], _CERTAIN if outcome is True else _TAINTED)
            if step > level[target]:
                level[target] = step
            indegree[target] -= 1
            if indegree[target] == 0:
                ready.append(target)

    return visited, activated, level


def _eligibility(model: DecisionModel, context: ContextFacts):
    """Return ({eligible pattern id: warnings}, EligibilityTrace)."""
    visited, activated, level = _traverse(model, context)
    excluded: list[tuple[str, str]] = []
    eligible: dict[str, list[WarningMessage]] = {}

    for pattern in model.patterns:
        node = model.node_for_pattern(pattern.id)
        if node is None or level.get(node.id, _UNREACHED) == _UNREACHED:
            excluded.append((pattern.id, R_NOT_REACHED))
            continue
        warnings: list[WarningMessage] = []
        if level[node.id] == _TAINTED:
            warnings.append(
                WarningMessage(
                    "W_CONTEXT_INCOMPLETE",
                    f"{pattern.id} is reached only through guards over unanswered context facts",
                )
            )
        hard_failed = False
        for constraint in pattern.constraints:
            value = constraint.guard.evaluate(context)
            if value is True:
                continue
            if constraint.severity == "hard":
                if value is False:
                    hard_failed = True
                    break
                warnings.append(
                    WarningMessage(
                        "W_CONTEXT_INCOMPLETE",
                        f"constraint {constraint.id} of {pattern.id} cannot be checked yet ({constraint.guard})",
                    )
                )
            elif value is False:
                warnings.append(
                    WarningMessage(
                        "W_SOFT_CONSTRAINT",
                        f"soft constraint {constraint.id} of {pattern.id} is not satisfied: {constraint.description}",
                    )
                )
            else:
                warnings.append(
                    WarningMessage(
                        "W_CONTEXT_INCOMPLETE",
                        f"constraint {constraint.id} of {pattern.id} cannot be checked yet ({constraint.guard})",
                    )
                )
        if hard_failed:
            excluded.append((pattern.id, R_HARD_CONSTRAINT))
            continue
        eligible[pattern.id] = warnings

    trace = EligibilityTrace(
        visited=tuple(visited),
        activated_edges=tuple((s, t, "true" if o is True else "unknown") for s, t, o in activated),
        excluded=tuple(sorted(excluded)),
    )
    return eligible, trace


def eligible_patterns(model: DecisionModel, context: ContextFacts) -> tuple[tuple[str, ...], EligibilityTrace]:
    """Pattern ids the flow admits under a context, plus the traversal trace."""
    eligible, trace = _eligibility(model, context)
    return tuple(sorted(eligible)), trace


@dataclass(frozen=True)
class Contribution:
    qa: str
    weight: float
    effect: str
    value: float


def score_pattern(pattern: Pattern, requirements: Requirements):
    """Return (score, contributions, warnings) for one pattern.

    The score is the running sum of contribution values in impact order.
    Impacts whose condition is definitely false are dropped; impacts whose
    condition rests on an unanswered fact stay visible as zero-valued
    contributions with a warning so callers can see what might change.
    Unconditional impacts with zero weight add nothing and are omitted.
    """
    score = 0.0
    contributions: list[Contribution] = []
    warnings: list[WarningMessage] = []
    for impact in pattern.impacts:
        weight = requirements.weight(impact.qa)
        if impact.condition is not None:
            held = impact.condition.evaluate(requirements.context)
            if held is False:
                continue
            if held is None:
                contributions.append(Contribution(impact.qa, weight, impact.effect, 0.0))
                warnings.append(
                    WarningMessage(
                        "W_CONDITIONAL_IMPACT_UNKNOWN",
                        f"impact of {pattern.id} on {impact.qa} applies only when "
                        f"{impact.condition}, which is unanswered",
                    )
                )
                score += 0.0
                continue
        if weight == 0.0:
            continue
        value = weight if impact.effect == "positive" else -weight
        contributions.append(Contribution(impact.qa, weight, impact.effect, value))
        score += value
    return score, tuple(contributions), tuple(warnings)


@dataclass(frozen=True)
class RecommendationEntry:
    pattern: str
    score: float
    contributions: tuple[Contribution, ...] = ()
    warnings: tuple[WarningMessage, ...] = ()
    complements: tuple[str, ...] = ()


@dataclass(frozen=True)
class RecommendationReport:
    model_version: str
    entries: tuple[RecommendationEntry, ...] = ()
    trace: EligibilityTrace = EligibilityTrace()
    warnings: tuple[WarningMessage, ...] = ()


def recommend(model: DecisionModel, requirements: Requirements) -> RecommendationReport:
    """Score every eligible pattern and rank the results.

    Ranking is a total order: higher score first, then more positive
    contributions, then fewer negative contributions, then pattern id.
    """
    eligible, trace = _eligibility(model, requirements.context)

    ranked: list[tuple[tuple, RecommendationEntry]] = []
    for pattern_id in sorted(eligible):
        pattern = model.pattern(pattern_id)
        score, contributions, impact_warnings = score_pattern(pattern, requirements)
        warnings = list(eligible[pattern_id]) + list(impact_warnings)
        kept_complements = []
        for other in pattern.complements:
            if other in eligible:
                kept_complements.append(other)
            else:
                warnings.append(
                    WarningMessage(
                        "W_COMPLEMENT_EXCLUDED",
                        f"complement {other} of {pattern_id} is not applicable in this context",
                    )
                )
        entry = RecommendationEntry(
            pattern=pattern_id,
            score=score,
            contributions=contributions,
            warnings=tuple(warnings),
            complements=tuple(kept_complements),
        )
        positives = sum(1 for c in contributions if c.value > 0)
        negatives = sum(1 for c in contributions if c.value < 0)
        ranked.append(((-score, -positives, negatives, pattern_id), entry))

    ranked.sort(key=lambda item: item[0])
    entries = tuple(entry for _, entry in ranked)
    global_warnings: tuple[WarningMessage, ...] = ()
    if not entries:
        global_warnings = (WarningMessage("W_NO_CANDIDATES", "no pattern is applicable in this context"),)
    return RecommendationReport(
        model_version=model.metadata.version,
        entries=entries,
        trace=trace,
        warnings=global_warnings,
    )


def report_document(report: RecommendationReport) -> dict:
    return {
        "model_version": report.model_version,
        "entries": [
            {
                "pattern": entry.pattern,
                "score": entry.score,
                "contributions": [
                    {"qa": c.qa, "weight": c.weight, "effect": c.effect, "value": c.value}
                    for c in entry.contributions
                ],
                "warnings": [{"code": w.code, "message": w.message} for w in entry.warnings],
                "complements": list(entry.complements),
            }
            for entry in report.entries
        ],
        "trace": {
            "visited": list(report.trace.visited),
            "activated_edges": [
                {"from": source, "to": target, "outcome": outcome}
                for source, target, outcome in report.trace.activated_edges
            ],
            "excluded": [
                {"pattern": pattern_id, "reason": reason}
                for pattern_id, reason in report.trace.excluded
            ],
        },
        "warnings": [{"code": w.code, "message": w.message} for w in report.warnings],
    }


def report_json(report: RecommendationReport) -> str:
    return canonical_dumps(report_document(report))


@dataclass(frozen=True)
class MatrixCell:
    effect: str
    condition: str | None = None


@dataclass(frozen=True)
class TradeoffMatrix:
    rows: tuple[str, ...]
    columns: tuple[str, ...]
    cells: tuple[tuple[MatrixCell | None, ...], ...]


def tradeoff_matrix(model: DecisionModel) -> TradeoffMatrix:
    """Patterns (rows) against quality attributes (columns), both sorted by id.

    When a pattern touches the same attribute both unconditionally and under
    a condition, the unconditional effect fills the cell.
    """
    columns = tuple(q.id for q in model.qas)
    rows = tuple(p.id for p in model.patterns)
    cells = []
    for pattern in model.patterns:
        by_qa: dict[str, MatrixCell] = {}
        for impact in pattern.impacts:
            cell = MatrixCell(
                effect=impact.effect,
                condition=None if impact.condition is None else str(impact.condition),
            )
            previous = by_qa.get(impact.qa)
            if previous is None or (previous.condition is not None and cell.condition is None):
                by_qa[impact.qa] = cell
        cells.append(tuple(by_qa.get(qa) for qa in columns))
    return TradeoffMatrix(rows=rows, columns=columns, cells=tuple(cells))


def matrix_document(matrix: TradeoffMatrix) -> dict:
    rendered = []
    for row in matrix.cells:
        cells = []
        for cell in row:
            if cell is None:
                cells.append(None)
            elif cell.condition is None:
                cells.append({"effect": cell.effect})
            else:
                cells.append({"effect": cell.effect, "condition": cell.condition})
        rendered.append(cells)
    return {"rows": list(matrix.rows), "columns": list(matrix.columns), "cells": rendered}


def matrix_json(matrix: TradeoffMatrix) -> str:
    return canonical_dumps(matrix_document(matrix))


def matrix_csv(matrix: TradeoffMatrix) -> str:
    """CSV with +, -, +?, -? cells; ? marks a conditional effect."""
    marks = {"positive": "+", "negative": "-"}
    lines = ["pattern," + ",".join(matrix.columns)]
    for pattern_id, row in zip(matrix.rows, matrix.cells):
        cells = ["" if cell is None else marks[cell.effect] + ("?" if cell.condition else "") for cell in row]
        lines.append(pattern_id + "," + ",".join(cells))
    return "\n".join(lines) + "\n"


def matrix_text(matrix: TradeoffMatrix) -> str:
    """Terminal-friendly rendering: one block per pattern, one line per effect."""
    marks = {"positive": "+", "negative": "-"}
    lines = []
    for pattern_id, row in zip(matrix.rows, matrix.cells):
        lines.append(pattern_id)
        for qa, cell in zip(matrix.columns, row):
            if cell is None:
                continue
            glyph = marks[cell.effect] + ("?" if cell.condition else "")
            entry = f"  {glyph:<2} {qa}"
            if cell.condition:
                entry += f" (when {cell.condition})"
            lines.append(entry)
    if not lines:
        return "(no patterns)\n"
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class WhatIfEntry:
    pattern: str
    base_rank: int | None
    variant_rank: int | None
    base_score: float | None
    variant_score: float | None
    status: str


@dataclass(frozen=True)
class WhatIfDiff:
    base_digest: str
    variant_digest: str
    entries: tuple[WhatIfEntry, ...]


def what_if(model: DecisionModel, base: Requirements, variant: Requirements) -> WhatIfDiff:
    """Compare the rankings two requirement sets produce."""
    base_report = recommend(model, base)
    variant_report = recommend(model, variant)
    base_entries = {e.pattern: (rank, e.score) for rank, e in enumerate(base_report.entries, 1)}
    variant_entries = {e.pattern: (rank, e.score) for rank, e in enumerate(variant_report.entries, 1)}

    entries = []
    for pattern_id in sorted(set(base_entries) | set(variant_entries)):
        base_item = base_entries.get(pattern_id)
        variant_item = variant_entries.get(pattern_id)
        if base_item and variant_item:
            if variant_item[0] < base_item[0]:
                status = "promoted"
            elif variant_item[0] > base_item[0]:
                status = "demoted"
            else:
                status = "unchanged"
        elif variant_item:
            status = "entered"
        else:
            status = "left"
        entries.append(
            WhatIfEntry(
                pattern=pattern_id,
                base_rank=base_item[0] if base_item else None,
                variant_rank=variant_item[0] if variant_item else None,
                base_score=base_item[1] if base_item else None,
                variant_score=variant_item[1] if variant_item else None,
                status=status,
            )
        )
    return WhatIfDiff(
        base_digest=requirements_digest(base),
        variant_digest=requirements_digest(variant),
        entries=tuple(entries),
    )


def whatif_document(diff: WhatIfDiff) -> dict:
    return {
        "base_digest": diff.base_digest,
        "variant_digest": diff.variant_digest,
        "entries": [
            {
                "pattern": entry.pattern,
                "base_rank": entry.base_rank,
                "variant_rank": entry.variant_rank,
                "base_score": entry.base_score,
                "variant_score": entry.variant_score,
                "status": entry.status,
            }
            for entry in diff.entries
        ],
    }


def whatif_json(diff: WhatIfDiff) -> str:
    return canonical_dumps(whatif_document(diff))


def whatif_text(diff: WhatIfDiff) -> str:
    """Aligned table of rank and score movements; '-' marks an absent side."""
    header = ("pattern", "base", "variant", "base_score", "variant_score", "status")
    table = [header]
    for entry in diff.entries:
        table.append(
            (
                entry.pattern,
                "-" if entry.base_rank is None else str(entry.base_rank),
                "-" if entry.variant_rank is None else str(entry.variant_rank),
                "-" if entry.base_score is None else format_number(entry.base_score),
                "-" if entry.variant_score is None else format_number(entry.variant_score),
                entry.status,
            )
        )
    widths = [max(len(row[col]) for row in table) for col in range(len(header))]
    lines = []
    for row in table:
        cells = [row[0].ljust(widths[0])]
        cells.extend(row[col].rjust(widths[col]) for col in range(1, 5))
        cells.append(row[5])
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


_EXCLUSION_TEXT = {
    R_NOT_REACHED: "not reached by the decision flow",
    R_HARD_CONSTRAINT: "a hard constraint is not satisfied",
}


def explain(model: DecisionModel, report: RecommendationReport) -> str:
    """Render a recommendation report as readable text, best candidate first."""
    lines = [f"{model.metadata.title} (version {report.model_version})", ""]
    if not report.entries:
        lines.append("No pattern is applicable in this context.")
    for rank, entry in enumerate(report.entries, 1):
        pattern = model.pattern(entry.pattern)
        name = pattern.name if pattern else entry.pattern
        lines.append(f"{rank}. {name} [{entry.pattern}]  score {format_number(entry.score)}")
        for contribution in entry.contributions:
            if contribution.value > 0:
                mark = "+"
            elif contribution.value < 0:
                mark = "-"
            else:
                mark = "?"
            line = (
                f"   {mark} {contribution.qa}: {format_number(contribution.value)}"
                f" (weight {format_number(contribution.weight)})"
            )
            if pattern:
                for impact in pattern.impacts:
                    if impact.qa == contribution.qa and impact.phrase:
                        line += f"; {impact.phrase}"
                        break
            lines.append(line)
        for warning in entry.warnings:
            lines.append(f"   ! {warning.code}: {warning.message}")
        if entry.complements:
            lines.append(f"   works well with: {', '.join(entry.complements)}")
    if report.trace.excluded:
        lines.append("")
        lines.append("Not applicable:")
        for pattern_id, reason in report.trace.excluded:
            lines.append(f"- {pattern_id}: {_EXCLUSION_TEXT.get(reason, reason)}")
    for warning in report.warnings:
        lines.append("")
        lines.append(f"! {warning.code}: {warning.message}")
    return "\n".join(lines) + "\n"
