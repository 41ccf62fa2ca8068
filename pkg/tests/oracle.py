"""Reference implementation and generators used to cross-check the engine.

Everything here is deliberately written differently from the production
code: guards are re-evaluated clause by clause, reachability enumerates
paths from the start node with a memoized depth-first walk, and scores are
summed straight off the impact lists. Slow and obvious on purpose. Also
hosts generators for valid-by-construction random models and requirement
sets, used by the equivalence and property suites.
"""

from __future__ import annotations

import dataclasses
import itertools
import random

from msa_decide.errors import AmbiguousExclusiveError
from msa_decide.model import (
    CONTEXT_FACT_DOMAINS,
    Constraint,
    ContextFacts,
    DecisionModel,
    Edge,
    Guard,
    Impact,
    Metadata,
    Node,
    Pattern,
    QualityAttribute,
)
from msa_decide.engine import Requirements
from msa_decide.validate import validate_model

WEIGHT_GRID = (0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0)

QA_POOL = (
    "latency",
    "throughput",
    "resilience",
    "elasticity",
    "auditability",
    "operability",
    "simplicity",
    "evolvability",
    "cost_of_change",
    "observability",
    "testability",
    "autonomy",
)

PATTERN_POOL = (
    "strangler",
    "sidecar",
    "event_sourcing",
    "cqrs",
    "saga",
    "bulkhead",
    "api_gateway",
    "shared_database",
    "backend_for_frontend",
    "anti_corruption",
)


def guard_value(guard: Guard, context: ContextFacts):
    """Three-valued guard evaluation, reimplemented from the clause tuples.

    An unanswered fact makes its clause unknown no matter what value the
    clause asks for, so requiring "unknown" can never come out true.
    """
    if guard.otherwise:
        raise ValueError("otherwise is gateway-relative")
    result = True
    for fact, required in guard.clauses:
        actual = getattr(context, fact)
        if actual == "unknown":
            result = None
        elif actual != required:
            return False
    return result


def active_edges(model: DecisionModel, node: Node, context: ContextFacts):
    """Edges a node activates, as (edge, certainty) pairs."""
    out = model.outgoing(node.id)
    if node.kind in ("start", "pattern", "and"):
        return [(e, True) for e in out]
    regular = [e for e in out if e.guard is None or not e.guard.otherwise]
    fallback = [e for e in out if e.guard is not None and e.guard.otherwise]
    value_of = {}
    for e in regular:
        value_of[id(e)] = True if e.guard is None else guard_value(e.guard, context)
    if node.kind == "or":
        chosen = [(e, value_of[id(e)]) for e in regular if value_of[id(e)] is not False]
        if not chosen and fallback:
            chosen = [(e, True) for e in fallback]
        return chosen
    trues = [e for e in regular if value_of[id(e)] is True]
    if len(trues) > 1:
        raise AmbiguousExclusiveError(f"oracle: {node.id} ambiguous")
    if trues:
        return [(trues[0], True)]
    unknowns = [e for e in regular if value_of[id(e)] is None]
    if unknowns:
        return [(e, None) for e in unknowns]
    if len(fallback) > 1:
        raise AmbiguousExclusiveError(f"oracle: {node.id} has several otherwise edges")
    return [(e, True) for e in fallback]


def reachability(model: DecisionModel, context: ContextFacts) -> dict:
    """node id -> 2 (some fully-certain path) or 1 (unknown guards on every path)."""
    starts = model.start_nodes()
    if len(starts) != 1:
        return {}
    best: dict[str, int] = {}

    def walk(node_id: str, level: int) -> None:
        if best.get(node_id, 0) >= level:
            return
        best[node_id] = level
        for edge, certainty in active_edges(model, model.node(node_id), context):
            walk(edge.target, min(level, 2 if certainty is True else 1))

    walk(starts[0].id, 2)
    return best


@dataclasses.dataclass
class OracleRow:
    pattern: str
    score: float
    positives: int
    negatives: int
    warning_codes: list
    complements: list


def expected_outcome(model: DecisionModel, requirements: Requirements):
    """Return (ranked OracleRows, excluded (pattern, reason) pairs)."""
    context = requirements.context
    weights = dict(requirements.weights)
    levels = reachability(model, context)

    eligible: dict[str, int] = {}
    excluded = []
    for pattern in model.patterns:
        node = model.node_for_pattern(pattern.id)
        level = levels.get(node.id, 0) if node else 0
        if level == 0:
            excluded.append((pattern.id, "R_NOT_REACHED"))
            continue
        hard_failed = any(
            c.severity == "hard" and guard_value(c.guard, context) is False
            for c in pattern.constraints
        )
        if hard_failed:
            excluded.append((pattern.id, "R_HARD_CONSTRAINT"))
            continue
        eligible[pattern.id] = level

    rows = []
    for pattern_id, level in eligible.items():
        pattern = model.pattern(pattern_id)
        codes = []
        if level == 1:
            codes.append("W_CONTEXT_INCOMPLETE")
        for constraint in pattern.constraints:
            value = guard_value(constraint.guard, context)
            if value is None:
                codes.append("W_CONTEXT_INCOMPLETE")
            elif value is False and constraint.severity == "soft":
                codes.append("W_SOFT_CONSTRAINT")
        total = 0.0
        positives = negatives = 0
        for impact in pattern.impacts:
            weight = weights.get(impact.qa, 0.0)
            if impact.condition is not None:
                held = guard_value(impact.condition, context)
                if held is False:
                    continue
                if held is None:
                    total += 0.0
                    codes.append("W_CONDITIONAL_IMPACT_UNKNOWN")
                    continue
            if weight == 0.0:
                continue
            term = weight if impact.effect == "positive" else -weight
            total += term
            if term > 0:
                positives += 1
            else:
                negatives += 1
        complements = []
        for other in pattern.complements:
            if other in eligible:
                complements.append(other)
            else:
                codes.append("W_COMPLEMENT_EXCLUDED")
        rows.append(
            OracleRow(
                pattern=pattern_id,
                score=total,
                positives=positives,
                negatives=negatives,
                warning_codes=codes,
                complements=sorted(complements),
            )
        )
    rows.sort(key=lambda r: (-r.score, -r.positives, r.negatives, r.pattern))
    return rows, sorted(excluded)


def assert_matches(model: DecisionModel, requirements: Requirements, report) -> None:
    """Compare an engine report against the reference outcome, exactly."""
    rows, excluded = expected_outcome(model, requirements)
    got = [(e.pattern, e.score) for e in report.entries]
    want = [(r.pattern, r.score) for r in rows]
    assert got == want, f"ranking mismatch:\n got {got}\nwant {want}"
    for row, entry in zip(rows, report.entries):
        assert sorted(row.warning_codes) == sorted(w.code for w in entry.warnings), row.pattern
        assert row.complements == list(entry.complements), row.pattern
        assert sum(c.value for c in entry.contributions) == entry.score, row.pattern
    assert list(report.trace.excluded) == excluded


def random_guard(rng: random.Random, max_clauses: int = 2) -> Guard:
    facts = rng.sample(list(CONTEXT_FACT_DOMAINS), rng.randint(1, max_clauses))
    return Guard.of({fact: rng.choice(CONTEXT_FACT_DOMAINS[fact]) for fact in facts})


def random_context(rng: random.Random) -> ContextFacts:
    return ContextFacts(**{fact: rng.choice(values) for fact, values in CONTEXT_FACT_DOMAINS.items()})


def random_requirements(rng: random.Random, model: DecisionModel) -> Requirements:
    weights = tuple(
        (qa.id, rng.choice(WEIGHT_GRID)) for qa in model.qas if rng.random() < 0.7
    )
    return Requirements(weights=weights, context=random_context(rng))


def _split(rng: random.Random, items: list, groups: int) -> list:
    items = list(items)
    rng.shuffle(items)
    if groups <= 1:
        return [items]
    cuts = sorted(rng.sample(range(1, len(items)), groups - 1))
    out = []
    previous = 0
    for cut in cuts + [len(items)]:
        out.append(items[previous:cut])
        previous = cut
    return out


def random_model(rng: random.Random) -> DecisionModel:
    """A structurally valid model with a random gateway tree.

    Exclusive gateways stay unambiguous by construction: every child edge
    tests the same fact for a different value.
    """
    qa_ids = sorted(rng.sample(QA_POOL, rng.randint(3, 8)))
    qas = tuple(
        QualityAttribute(
            id=qa,
            name=qa.replace("_", " ").capitalize(),
            polarity=rng.choice(("benefit", "cost")),
        )
        for qa in qa_ids
    )

    pattern_ids = sorted(rng.sample(PATTERN_POOL, rng.randint(2, 6)))
    patterns = []
    for pattern_id in pattern_ids:
        impacts = []
        for qa in rng.sample(qa_ids, rng.randint(0, min(4, len(qa_ids)))):
            condition = random_guard(rng, max_clauses=1) if rng.random() < 0.25 else None
            impacts.append(
                Impact(
                    qa=qa,
                    effect=rng.choice(("positive", "negative")),
                    condition=condition,
                    phrase=f"affects {qa}",
                )
            )
        constraints = ()
        if rng.random() < 0.35:
            constraints = (
                Constraint(
                    id=f"applies_when_{rng.randrange(1000)}",
                    description="synthetic applicability rule",
                    guard=random_guard(rng, max_clauses=2),
                    severity=rng.choice(("hard", "soft")),
                ),
            )
        patterns.append(
            Pattern(
                id=pattern_id,
                name=pattern_id.replace("_", " ").title(),
                kind=rng.choice(("pattern", "strategy")),
                summary=f"Synthetic candidate {pattern_id}.",
                impacts=tuple(impacts),
                constraints=constraints,
            )
        )
    if len(patterns) >= 2 and rng.random() < 0.5:
        first, second = rng.sample(range(len(patterns)), 2)
        patterns[first] = dataclasses.replace(patterns[first], complements=(patterns[second].id,))
        patterns[second] = dataclasses.replace(patterns[second], complements=(patterns[first].id,))

    counter = itertools.count()
    nodes = [Node(id="entry", kind="start")]
    edges = []

    def build(pids: list, depth: int) -> str:
        if len(pids) == 1 and (depth >= 3 or rng.random() < 0.5):
            node_id = f"p{next(counter)}"
            nodes.append(Node(id=node_id, kind="pattern", pattern=pids[0]))
            return node_id
        kind = rng.choice(("xor", "or", "and"))
        gateway_id = f"g{next(counter)}"
        nodes.append(Node(id=gateway_id, kind=kind))
        if kind == "xor":
            fact = rng.choice(list(CONTEXT_FACT_DOMAINS))
            values = list(CONTEXT_FACT_DOMAINS[fact])
            rng.shuffle(values)
            group_count = rng.randint(1, min(len(pids), len(values)))
            for value, group in zip(values, _split(rng, pids, group_count)):
                edges.append(Edge(source=gateway_id, target=build(group, depth + 1), guard=Guard.of({fact: value})))
            if rng.random() < 0.4:
                sink_id = f"g{next(counter)}"
                nodes.append(Node(id=sink_id, kind="xor"))
                edges.append(Edge(source=gateway_id, target=sink_id, guard=Guard(otherwise=True)))
        else:
            group_count = rng.randint(1, min(len(pids), 3))
            for group in _split(rng, pids, group_count):
                guard = None
                if kind == "or" and rng.random() < 0.5:
                    guard = random_guard(rng, max_clauses=2)
                edges.append(Edge(source=gateway_id, target=build(group, depth + 1), guard=guard))
        return gateway_id

    root = build(list(pattern_ids), 0)
    edges.append(Edge(source="entry", target=root))

    model = DecisionModel(
        metadata=Metadata(id="synthetic_model", title="Synthetic decision model", version="0.0.1"),
        qas=qas,
        patterns=tuple(patterns),
        nodes=tuple(nodes),
        edges=tuple(edges),
    )
    report = validate_model(model)
    assert report.ok, [f.message for f in report.findings]
    return model
