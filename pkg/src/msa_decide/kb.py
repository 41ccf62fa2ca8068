"""Reading and writing knowledge-base documents (.dmkb.json).

The format is strict JSON with five required top-level keys: metadata, qas,
patterns, nodes, edges. Unknown keys anywhere are rejected rather than
ignored so that typos surface at load time instead of silently changing
behavior. Serialization is canonical: fixed key order, collections sorted
by id, guards as sorted fact-to-value objects, two-space indent, trailing
newline. load and serialize are exact inverses on canonical documents.
"""

from __future__ import annotations

import dataclasses
import json
import os

from .errors import DuplicateIdError, IoKbError, SyntaxKbError, UnresolvedRefError
from .jsonio import canonical_dumps
from .model import (
    CONTEXT_FACT_DOMAINS,
    OTHERWISE,
    Constraint,
    DecisionModel,
    Edge,
    Guard,
    Impact,
    Metadata,
    Node,
    Pattern,
    QualityAttribute,
)


def _expect_object(value, where: str, allowed: tuple[str, ...], required: tuple[str, ...]) -> dict:
    if not isinstance(value, dict):
        raise SyntaxKbError(f"{where}: expected an object, got {type(value).__name__}")
    unknown = sorted(set(value) - set(allowed))
    if unknown:
        raise SyntaxKbError(f"{where}: unknown key {unknown[0]!r}")
    missing = [key for key in required if key not in value]
    if missing:
        raise SyntaxKbError(f"{where}: missing required key {missing[0]!r}")
    return value


def _expect_str(value, where: str) -> str:
    if not isinstance(value, str):
        raise SyntaxKbError(f"{where}: expected a string, got {type(value).__name__}")
    return value


def _expect_list(value, where: str) -> list:
    if not isinstance(value, list):
        raise SyntaxKbError(f"{where}: expected a list, got {type(value).__name__}")
    return value


def _parse_guard(value, where: str, *, allow_otherwise: bool) -> Guard:
    if value == "otherwise":
        if not allow_otherwise:
            raise SyntaxKbError(f"{where}: otherwise is only valid on edges")
        return OTHERWISE
    if not isinstance(value, dict):
        raise SyntaxKbError(f"{where}: expected a fact-to-value object or \"otherwise\"")
    if not value:
        raise SyntaxKbError(f"{where}: a guard needs at least one fact")
    clauses = []
    for fact, required in value.items():
        if fact not in CONTEXT_FACT_DOMAINS:
            raise UnresolvedRefError(f"{where}: unknown context fact {fact!r}")
        required = _expect_str(required, f"{where}.{fact}")
        if required not in CONTEXT_FACT_DOMAINS[fact]:
            raise UnresolvedRefError(
                f"{where}: {required!r} is not a value of {fact} "
                f"(allowed: {', '.join(CONTEXT_FACT_DOMAINS[fact])})"
            )
        clauses.append((fact, required))
    return Guard(clauses=tuple(clauses))


def _parse_qa(value, where: str) -> QualityAttribute:
    obj = _expect_object(value, where, ("id", "name", "polarity", "description"), ("id", "name", "polarity"))
    try:
        return QualityAttribute(
            id=_expect_str(obj["id"], f"{where}.id"),
            name=_expect_str(obj["name"], f"{where}.name"),
            polarity=_expect_str(obj["polarity"], f"{where}.polarity"),
            description=_expect_str(obj.get("description", ""), f"{where}.description"),
        )
    except ValueError as exc:
        raise SyntaxKbError(f"{where}: {exc}") from exc


def _parse_impact(value, where: str) -> Impact:
    obj = _expect_object(value, where, ("qa", "effect", "condition", "phrase"), ("qa", "effect"))
    condition = None
    if "condition" in obj:
        condition = _parse_guard(obj["condition"], f"{where}.condition", allow_otherwise=False)
    try:
        return Impact(
            qa=_expect_str(obj["qa"], f"{where}.qa"),
            effect=_expect_str(obj["effect"], f"{where}.effect"),
            condition=condition,
            phrase=_expect_str(obj.get("phrase", ""), f"{where}.phrase"),
        )
    except ValueError as exc:
        raise SyntaxKbError(f"{where}: {exc}") from exc


def _parse_constraint(value, where: str) -> Constraint:
    obj = _expect_object(
        value, where, ("id", "description", "guard", "severity"), ("id", "description", "guard", "severity")
    )
    guard = _parse_guard(obj["guard"], f"{where}.guard", allow_otherwise=False)
    try:
        return Constraint(
            id=_expect_str(obj["id"], f"{where}.id"),
            description=_expect_str(obj["description"], f"{where}.description"),
            guard=guard,
            severity=_expect_str(obj["severity"], f"{where}.severity"),
        )
    except ValueError as exc:
        raise SyntaxKbError(f"{where}: {exc}") from exc


def _parse_pattern(value, where: str) -> Pattern:
    obj = _expect_object(
        value,
        where,
        ("id", "name", "kind", "summary", "impacts", "constraints", "complements", "sources"),
        ("id", "name", "kind", "summary"),
    )
    impacts = tuple(
        _parse_impact(item, f"{where}.impacts[{i}]")
        for i, item in enumerate(_expect_list(obj.get("impacts", []), f"{where}.impacts"))
    )
    constraints = tuple(
        _parse_constraint(item, f"{where}.constraints[{i}]")
        for i, item in enumerate(_expect_list(obj.get("constraints", []), f"{where}.constraints"))
    )
    complements = tuple(
        _expect_str(item, f"{where}.complements[{i}]")
        for i, item in enumerate(_expect_list(obj.get("complements", []), f"{where}.complements"))
    )
    sources = tuple(
        _expect_str(item, f"{where}.sources[{i}]")
        for i, item in enumerate(_expect_list(obj.get("sources", []), f"{where}.sources"))
    )
    constraint_ids = set()
    for constraint in constraints:
        if constraint.id in constraint_ids:
            raise DuplicateIdError(f"{where}: duplicate constraint id {constraint.id!r}")
        constraint_ids.add(constraint.id)
    try:
        return Pattern(
            id=_expect_str(obj["id"], f"{where}.id"),
            name=_expect_str(obj["name"], f"{where}.name"),
            kind=_expect_str(obj["kind"], f"{where}.kind"),
            summary=_expect_str(obj["summary"], f"{where}.summary"),
            impacts=impacts,
            constraints=constraints,
            complements=complements,
            sources=sources,
        )
    except ValueError as exc:
        message = str(exc)
        if "more than one impact" in message:
            raise DuplicateIdError(f"{where}: {message}") from exc
        raise SyntaxKbError(f"{where}: {message}") from exc


def _parse_node(value, where: str) -> Node:
    obj = _expect_object(value, where, ("id", "kind", "pattern"), ("id", "kind"))
    pattern = None
    if "pattern" in obj:
        pattern = _expect_str(obj["pattern"], f"{where}.pattern")
    try:
        return Node(id=_expect_str(obj["id"], f"{where}.id"), kind=_expect_str(obj["kind"], f"{where}.kind"), pattern=pattern)
    except ValueError as exc:
        raise SyntaxKbError(f"{where}: {exc}") from exc


def _parse_edge(value, where: str) -> Edge:
    obj = _expect_object(value, where, ("from", "to", "guard"), ("from", "to"))
    guard = None
    if "guard" in obj:
        guard = _parse_guard(obj["guard"], f"{where}.guard", allow_otherwise=True)
    return Edge(
        source=_expect_str(obj["from"], f"{where}.from"),
        target=_expect_str(obj["to"], f"{where}.to"),
        guard=guard,
    )


def loads_model(text: str) -> DecisionModel:
    """Parse a knowledge-base document from JSON text."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SyntaxKbError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    top = _expect_object(
        document, "document", ("metadata", "qas", "patterns", "nodes", "edges"),
        ("metadata", "qas", "patterns", "nodes", "edges"),
    )

    meta_obj = _expect_object(top["metadata"], "metadata", ("id", "title", "version"), ("id", "title", "version"))
    try:
        metadata = Metadata(
            id=_expect_str(meta_obj["id"], "metadata.id"),
            title=_expect_str(meta_obj["title"], "metadata.title"),
            version=_expect_str(meta_obj["version"], "metadata.version"),
        )
    except ValueError as exc:
        raise SyntaxKbError(f"metadata: {exc}") from exc

    qas = tuple(_parse_qa(item, f"qas[{i}]") for i, item in enumerate(_expect_list(top["qas"], "qas")))
    patterns = tuple(
        _parse_pattern(item, f"patterns[{i}]") for i, item in enumerate(_expect_list(top["patterns"], "patterns"))
    )
    nodes = tuple(_parse_node(item, f"nodes[{i}]") for i, item in enumerate(_expect_list(top["nodes"], "nodes")))
    edges = tuple(_parse_edge(item, f"edges[{i}]") for i, item in enumerate(_expect_list(top["edges"], "edges")))

    for collection, name in ((qas, "quality attribute"), (patterns, "pattern"), (nodes, "node")):
        seen: set[str] = set()
        for element in collection:
            if element.id in seen:
                raise DuplicateIdError(f"duplicate {name} id {element.id!r}")
            seen.add(element.id)

    qa_ids = {q.id for q in qas}
    pattern_ids = {p.id for p in patterns}
    node_ids = {n.id for n in nodes}

    for pattern in patterns:
        for impact in pattern.impacts:
            if impact.qa not in qa_ids:
                raise UnresolvedRefError(f"pattern {pattern.id!r}: unknown quality attribute {impact.qa!r}")
        for other in pattern.complements:
            if other not in pattern_ids:
                raise UnresolvedRefError(f"pattern {pattern.id!r}: unknown complement {other!r}")
    for node in nodes:
        if node.pattern is not None and node.pattern not in pattern_ids:
            raise UnresolvedRefError(f"node {node.id!r}: unknown pattern {node.pattern!r}")
    for edge in edges:
        if edge.source not in node_ids:
            raise UnresolvedRefError(f"edge from {edge.source!r}: unknown node {edge.source!r}")
        if edge.target not in node_ids:
            raise UnresolvedRefError(f"edge to {edge.target!r}: unknown node {edge.target!r}")

    # Complement relations are symmetric; listing one side is enough.
    complement_sets = {p.id: set(p.complements) for p in patterns}
    for pattern in patterns:
        for other in pattern.complements:
            complement_sets[other].add(pattern.id)
    patterns = tuple(
        dataclasses.replace(p, complements=tuple(sorted(complement_sets[p.id]))) for p in patterns
    )

    return DecisionModel(metadata=metadata, qas=qas, patterns=patterns, nodes=nodes, edges=edges)


def load_model(path: str | os.PathLike) -> DecisionModel:
    """Load a knowledge-base document from a file."""
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise IoKbError(f"cannot read {os.fspath(path)!r}: {exc.strerror or exc}") from exc
    return loads_model(text)


def _guard_doc(guard: Guard):
    if guard.otherwise:
        return "otherwise"
    return {fact: value for fact, value in guard.clauses}


def _impact_doc(impact: Impact) -> dict:
    doc: dict = {"qa": impact.qa, "effect": impact.effect}
    if impact.condition is not None:
        doc["condition"] = _guard_doc(impact.condition)
    if impact.phrase:
        doc["phrase"] = impact.phrase
    return doc


def _constraint_doc(constraint: Constraint) -> dict:
    return {
        "id": constraint.id,
        "description": constraint.description,
        "guard": _guard_doc(constraint.guard),
        "severity": constraint.severity,
    }


def _pattern_doc(pattern: Pattern) -> dict:
    doc: dict = {"id": pattern.id, "name": pattern.name, "kind": pattern.kind, "summary": pattern.summary}
    if pattern.impacts:
        doc["impacts"] = [_impact_doc(i) for i in pattern.impacts]
    if pattern.constraints:
        doc["constraints"] = [_constraint_doc(c) for c in pattern.constraints]
    if pattern.complements:
        doc["complements"] = list(pattern.complements)
    if pattern.sources:
        doc["sources"] = list(pattern.sources)
    return doc


def _qa_doc(qa: QualityAttribute) -> dict:
    doc: dict = {"id": qa.id, "name": qa.name, "polarity": qa.polarity}
    if qa.description:
        doc["description"] = qa.description
    return doc


def _node_doc(node: Node) -> dict:
    doc: dict = {"id": node.id, "kind": node.kind}
    if node.pattern is not None:
        doc["pattern"] = node.pattern
    return doc


def _edge_doc(edge: Edge) -> dict:
    doc: dict = {"from": edge.source, "to": edge.target}
    if edge.guard is not None:
        doc["guard"] = _guard_doc(edge.guard)
    return doc


def model_document(model: DecisionModel) -> dict:
    """Build the canonical plain-dict form of a model."""
    return {
        "metadata": {"id": model.metadata.id, "title": model.metadata.title, "version": model.metadata.version},
        "qas": [_qa_doc(q) for q in model.qas],
        "patterns": [_pattern_doc(p) for p in model.patterns],
        "nodes": [_node_doc(n) for n in model.nodes],
        "edges": [_edge_doc(e) for e in model.edges],
    }


def serialize_model(model: DecisionModel) -> str:
    """Serialize a model to its canonical document text."""
    return canonical_dumps(model_document(model))
