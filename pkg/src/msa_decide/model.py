"""Domain types for decomposition decision models.

A decision model couples a catalog of quality attributes and decomposition
patterns/strategies with a gateway graph that routes a project context to
the applicable candidates. All types are immutable after construction and
safe to share across threads; collection fields are normalized to a
canonical order so that structural equality and canonical serialization
agree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import UnknownFactError

ID_RE = re.compile(r"^[a-z][a-z0-9_]*$")

POLARITIES = ("benefit", "cost")
EFFECTS = ("positive", "negative")
SEVERITIES = ("hard", "soft")
PATTERN_KINDS = ("pattern", "strategy")
NODE_KINDS = ("start", "xor", "or", "and", "pattern")
GATEWAY_KINDS = ("xor", "or", "and")

TRI_STATE = ("yes", "no", "unknown")
TEAM_SIZES = ("undefined", "small_5_to_9", "large")

# Fact name -> allowed values, in declaration order. team_size's "undefined"
# is an ordinary value (the team size was not fixed), not a missing answer;
# the tri-state facts use "unknown" for a missing answer.
CONTEXT_FACT_DOMAINS: dict[str, tuple[str, ...]] = {
    "team_size": TEAM_SIZES,
    "legacy_code_available": TRI_STATE,
    "dfds_available": TRI_STATE,
    "business_understanding": TRI_STATE,
    "time_for_scenarios": TRI_STATE,
    "project_scale_large": TRI_STATE,
}


def _check_value(name: str, value: str, allowed: tuple[str, ...]) -> None:
    if value not in allowed:
        raise ValueError(f"{name} must be one of {allowed}, got {value!r}")


@dataclass(frozen=True)
class ContextFacts:
    """Project circumstances that gate decision-flow branches."""

    team_size: str = "undefined"
    legacy_code_available: str = "unknown"
    dfds_available: str = "unknown"
    business_understanding: str = "unknown"
    time_for_scenarios: str = "unknown"
    project_scale_large: str = "unknown"

    def __post_init__(self) -> None:
        for name, allowed in CONTEXT_FACT_DOMAINS.items():
            _check_value(name, getattr(self, name), allowed)

    def value(self, fact: str) -> str:
        if fact not in CONTEXT_FACT_DOMAINS:
            raise UnknownFactError(f"unknown context fact {fact!r}")
        return getattr(self, fact)

    def as_dict(self) -> dict[str, str]:
        return {name: getattr(self, name) for name in CONTEXT_FACT_DOMAINS}


@dataclass(frozen=True)
class Guard:
    """Conjunction of (fact, required value) tests, or the OTHERWISE marker.

    Three-valued evaluation: any clause that is definitely violated makes
    the guard false; otherwise any clause over an unanswered fact makes it
    unknown; otherwise true. A clause requiring the value "unknown" can
    never be true (an unanswered fact stays unknown), only false or unknown.
    OTHERWISE is the default edge of a gateway and cannot be evaluated in
    isolation: it holds exactly when every sibling guard is false.
    """

    clauses: tuple[tuple[str, str], ...] = ()
    otherwise: bool = False

    def __post_init__(self) -> None:
        if self.otherwise:
            if self.clauses:
                raise ValueError("an otherwise guard carries no clauses")
            return
        if not self.clauses:
            raise ValueError("a guard needs at least one clause (or otherwise)")
        object.__setattr__(self, "clauses", tuple(sorted(self.clauses)))
        for fact, value in self.clauses:
            if fact not in CONTEXT_FACT_DOMAINS:
                raise UnknownFactError(f"unknown context fact {fact!r}")
            _check_value(f"guard value for {fact}", value, CONTEXT_FACT_DOMAINS[fact])

    @classmethod
    def of(cls, mapping: dict[str, str]) -> Guard:
        return cls(clauses=tuple(mapping.items()))

    def evaluate(self, context: ContextFacts) -> bool | None:
        """Return True, False, or None (unknown) under the given context."""
        if self.otherwise:
            raise ValueError("otherwise guards are resolved by the owning gateway")
        saw_unknown = False
        for fact, required in self.clauses:
            actual = context.value(fact)
            if actual == "unknown":
                saw_unknown = True
            elif actual != required:
                return False
        return None if saw_unknown else True

    def __str__(self) -> str:
        if self.otherwise:
            return "otherwise"
        return " and ".join(f"{fact} = {value}" for fact, value in self.clauses)


OTHERWISE = Guard(otherwise=True)


@dataclass(frozen=True)
class QualityAttribute:
    """A named quality dimension with a desirability polarity."""

    id: str
    name: str
    polarity: str  # "benefit": more is desirable; "cost": more is undesirable
    description: str = ""

    def __post_init__(self) -> None:
        if not ID_RE.match(self.id):
            raise ValueError(f"invalid quality attribute id {self.id!r}")
        _check_value("polarity", self.polarity, POLARITIES)


@dataclass(frozen=True)
class Impact:
    """A pattern's signed effect on one quality attribute.

    The effect is stored desirability-normalized: "positive" always means
    the stakeholder is better off, regardless of the attribute's polarity.
    The phrase keeps the source wording for explanation output.
    """

    qa: str
    effect: str
    condition: Guard | None = None
    phrase: str = ""

    def __post_init__(self) -> None:
        _check_value("effect", self.effect, EFFECTS)
        if self.condition is not None and self.condition.otherwise:
            raise ValueError("impact conditions cannot be otherwise")


@dataclass(frozen=True)
class Constraint:
    """An applicability condition attached to a pattern.

    Hard constraints exclude the pattern when their guard is false; soft
    constraints only annotate the recommendation.
    """

    id: str
    description: str
    guard: Guard
    severity: str

    def __post_init__(self) -> None:
        if not ID_RE.match(self.id):
            raise ValueError(f"invalid constraint id {self.id!r}")
        _check_value("severity", self.severity, SEVERITIES)
        if self.guard.otherwise:
            raise ValueError("constraint guards cannot be otherwise")


def _impact_sort_key(impact: Impact) -> tuple:
    return (impact.qa, "" if impact.condition is None else str(impact.condition))


@dataclass(frozen=True)
class Pattern:
    """A decomposition pattern or strategy with its impacts and constraints."""

    id: str
    name: str
    kind: str
    summary: str
    impacts: tuple[Impact, ...] = ()
    constraints: tuple[Constraint, ...] = ()
    complements: tuple[str, ...] = ()
    sources: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not ID_RE.match(self.id):
            raise ValueError(f"invalid pattern id {self.id!r}")
        _check_value("kind", self.kind, PATTERN_KINDS)
        object.__setattr__(self, "impacts", tuple(sorted(self.impacts, key=_impact_sort_key)))
        object.__setattr__(self, "constraints", tuple(sorted(self.constraints, key=lambda c: c.id)))
        object.__setattr__(self, "complements", tuple(sorted(self.complements)))
        object.__setattr__(self, "sources", tuple(self.sources))
        if self.id in self.complements:
            raise ValueError(f"pattern {self.id!r} cannot complement itself")
        seen = set()
        for impact in self.impacts:
            key = _impact_sort_key(impact)
            if key in seen:
                raise ValueError(
                    f"pattern {self.id!r} has more than one impact on {impact.qa!r} "
                    "with the same condition"
                )
            seen.add(key)


@dataclass(frozen=True)
class Node:
    """A decision-graph node: the start circle, a gateway, or a pattern box."""

    id: str
    kind: str
    pattern: str | None = None

    def __post_init__(self) -> None:
        if not ID_RE.match(self.id):
            raise ValueError(f"invalid node id {self.id!r}")
        _check_value("node kind", self.kind, NODE_KINDS)
        if (self.kind == "pattern") != (self.pattern is not None):
            raise ValueError(f"node {self.id!r}: pattern reference required iff kind is pattern")

    @property
    def is_gateway(self) -> bool:
        return self.kind in GATEWAY_KINDS


@dataclass(frozen=True)
class Edge:
    """A directed flow edge, optionally guarded."""

    source: str
    target: str
    guard: Guard | None = None


def _edge_sort_key(edge: Edge) -> tuple:
    return (edge.source, edge.target, "" if edge.guard is None else str(edge.guard))


@dataclass(frozen=True)
class Metadata:
    id: str
    title: str
    version: str

    def __post_init__(self) -> None:
        if not ID_RE.match(self.id):
            raise ValueError(f"invalid model id {self.id!r}")


@dataclass(frozen=True)
class DecisionModel:
    """The full decision graph plus its pattern and QA catalogs.

    Collections are kept in canonical order (sorted by id; edges by
    endpoints); lookups are indexed once at construction. Instances are
    immutable and never mutated by any operation in this package.
    """

    metadata: Metadata
    qas: tuple[QualityAttribute, ...] = ()
    patterns: tuple[Pattern, ...] = ()
    nodes: tuple[Node, ...] = ()
    edges: tuple[Edge, ...] = ()

    # Derived indexes, excluded from equality/repr.
    _qa_index: dict = field(default_factory=dict, repr=False, compare=False)
    _pattern_index: dict = field(default_factory=dict, repr=False, compare=False)
    _node_index: dict = field(default_factory=dict, repr=False, compare=False)
    _outgoing: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "qas", tuple(sorted(self.qas, key=lambda q: q.id)))
        object.__setattr__(self, "patterns", tuple(sorted(self.patterns, key=lambda p: p.id)))
        object.__setattr__(self, "nodes", tuple(sorted(self.nodes, key=lambda n: n.id)))
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=_edge_sort_key)))
        object.__setattr__(self, "_qa_index", {q.id: q for q in self.qas})
        object.__setattr__(self, "_pattern_index", {p.id: p for p in self.patterns})
        object.__setattr__(self, "_node_index", {n.id: n for n in self.nodes})
        outgoing: dict[str, list[Edge]] = {n.id: [] for n in self.nodes}
        for edge in self.edges:
            outgoing.setdefault(edge.source, []).append(edge)
        object.__setattr__(self, "_outgoing", {k: tuple(v) for k, v in outgoing.items()})

    def qa(self, qa_id: str) -> QualityAttribute | None:
        return self._qa_index.get(qa_id)

    def pattern(self, pattern_id: str) -> Pattern | None:
        return self._pattern_index.get(pattern_id)

    def node(self, node_id: str) -> Node | None:
        return self._node_index.get(node_id)

    def outgoing(self, node_id: str) -> tuple[Edge, ...]:
        return self._outgoing.get(node_id, ())

    def start_nodes(self) -> tuple[Node, ...]:
        return tuple(n for n in self.nodes if n.kind == "start")

    def pattern_nodes(self) -> tuple[Node, ...]:
        return tuple(n for n in self.nodes if n.kind == "pattern")

    def node_for_pattern(self, pattern_id: str) -> Node | None:
        for node in self.nodes:
            if node.kind == "pattern" and node.pattern == pattern_id:
                return node
        return None


@dataclass(frozen=True)
class Finding:
    """One validation finding; severity is "error" or "warning"."""

    code: str
    severity: str
    message: str
    element: str = ""


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    findings: tuple[Finding, ...] = ()

    def errors(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == "error")

    def warnings(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == "warning")
