"""Built-in knowledge base: decomposition of an application into microservices.

Seven decomposition patterns and strategies from the practitioner literature
(Richardson's pattern catalog, the AWS prescriptive guidance, and three
published migration strategies), their reported effects on nineteen quality
attributes, and a decision flow that narrows the candidates by team size and
by what the project has to start from (legacy code, data flow diagrams).
"""

from __future__ import annotations

from .model import (
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

RICHARDSON = "Richardson (2018), Microservices Patterns"
AWS = "AWS Prescriptive Guidance"
TUSJUNT = "Tusjunt and Vatanawood (2018), refactoring web services into microservices"
KAMIMURA = "Kamimura et al. (2018), extracting candidates of microservices from monolithic application code"
LI = "Li et al. (2019), dataflow-driven identification of microservices from monolithic applications"

_QAS = (
    ("availability", "Availability", "benefit"),
    ("scalability", "Scalability", "benefit"),
    ("cohesion", "Cohesion", "benefit"),
    ("deployability", "Deployability", "benefit"),
    ("performance", "Performance", "benefit"),
    ("maintainability", "Maintainability", "benefit"),
    ("flexibility", "Flexibility", "benefit"),
    ("granularity", "Granularity", "benefit"),
    ("reliability", "Reliability", "benefit"),
    ("reusability", "Reusability", "benefit"),
    ("security", "Security", "benefit"),
    ("functional_suitability", "Functional suitability", "benefit"),
    ("portability", "Portability", "benefit"),
    ("response_time", "Response time", "benefit"),
    ("data_consistency", "Data consistency", "benefit"),
    ("understandability", "Understandability", "benefit"),
    ("execution_cost", "Execution cost", "cost"),
    ("coupling", "Coupling", "cost"),
    ("development_cost", "Development cost", "cost"),
)


def _pos(qa: str, phrase: str, condition: Guard | None = None) -> Impact:
    return Impact(qa=qa, effect="positive", condition=condition, phrase=phrase)


def _neg(qa: str, phrase: str, condition: Guard | None = None) -> Impact:
    return Impact(qa=qa, effect="negative", condition=condition, phrase=phrase)


_SUBDOMAINS_PHRASE = (
    "guides practitioners in defining each microservice responsibility, "
    "boundaries, and relationships with other microservices"
)

_PATTERNS = (
    Pattern(
        id="subdomains",
        name="Decomposed by subdomains",
        kind="pattern",
        summary="Define services corresponding to Domain-Driven Design (DDD) subdomains.",
        impacts=tuple(
            _pos(qa, _SUBDOMAINS_PHRASE)
            for qa in (
                "flexibility",
                "granularity",
                "reliability",
                "reusability",
                "security",
                "functional_suitability",
                "portability",
            )
        ),
        constraints=(
            Constraint(
                id="understand_overall_business",
                description="Practitioners must understand the overall business to identify the subdomains.",
                guard=Guard.of({"business_understanding": "yes"}),
                severity="hard",
            ),
        ),
        complements=("service_per_team",),
        sources=(RICHARDSON, AWS),
    ),
    Pattern(
        id="business_capabilities",
        name="Decomposed by business capabilities",
        kind="pattern",
        summary="Define services corresponding to business capabilities.",
        impacts=(
            _pos(
                "granularity",
                "improves Granularity, Performance, and Security when business capabilities are "
                "identified by understanding the client organization's structure, purposes, and "
                "business processes",
            ),
            _pos(
                "performance",
                "improves Granularity, Performance, and Security when business capabilities are "
                "identified by understanding the client organization's structure, purposes, and "
                "business processes",
            ),
            _pos(
                "security",
                "improves Granularity, Performance, and Security when business capabilities are "
                "identified by understanding the client organization's structure, purposes, and "
                "business processes",
            ),
            _neg("flexibility", "reduces Flexibility as the application design is tightly coupled with the business model"),
        ),
        constraints=(
            Constraint(
                id="understand_organization",
                description=(
                    "Business capabilities are identified by understanding the client organization's "
                    "structure, purposes, and business processes."
                ),
                guard=Guard.of({"business_understanding": "yes"}),
                severity="hard",
            ),
        ),
        complements=("service_per_team",),
        sources=(RICHARDSON, AWS),
    ),
    Pattern(
        id="service_per_team",
        name="Service per team",
        kind="pattern",
        summary="Break down the application into microservices that individual teams can manage.",
        impacts=(
            _pos("availability", "increases Availability, Scalability, Cohesion, Deployment, Performance, and Maintainability"),
            _pos("scalability", "increases Availability, Scalability, Cohesion, Deployment, Performance, and Maintainability"),
            _pos("cohesion", "increases Availability, Scalability, Cohesion, Deployment, Performance, and Maintainability"),
            _pos("deployability", "increases Availability, Scalability, Cohesion, Deployment, Performance, and Maintainability"),
            _pos("performance", "increases Availability, Scalability, Cohesion, Deployment, Performance, and Maintainability"),
            _pos("maintainability", "increases Availability, Scalability, Cohesion, Deployment, Performance, and Maintainability"),
            _neg(
                "development_cost",
                "if the project is large and needs to hire more people, it negatively impacts the "
                "development cost of microservices",
                condition=Guard.of({"project_scale_large": "yes"}),
            ),
        ),
        constraints=(
            Constraint(
                id="one_small_team_per_service",
                description="Each service is owned by exactly one small team of five to nine people.",
                guard=Guard.of({"team_size": "small_5_to_9"}),
                severity="hard",
            ),
        ),
        complements=("business_capabilities", "subdomains"),
        sources=(RICHARDSON, AWS),
    ),
    Pattern(
        id="transactions",
        name="Decomposed by transactions",
        kind="pattern",
        summary=(
            "An application typically needs to call multiple microservices to complete one business "
            "transaction. To avoid latency issues, services can be defined based on business transactions."
        ),
        impacts=(
            _pos("response_time", "can help to improve Response time, Data consistency, and Availability of microservices"),
            _pos("data_consistency", "can help to improve Response time, Data consistency, and Availability of microservices"),
            _pos("availability", "can help to improve Response time, Data consistency, and Availability of microservices"),
            _neg(
                "execution_cost",
                "increases Execution cost and Coupling of microservices due to multiple functionalities "
                "being implemented in one microservice",
            ),
            _neg(
                "coupling",
                "increases Execution cost and Coupling of microservices due to multiple functionalities "
                "being implemented in one microservice",
            ),
        ),
        sources=(AWS,),
    ),
    Pattern(
        id="scenario_analysis",
        name="Scenario analysis",
        kind="strategy",
        summary="Identify the business capabilities by analyzing the nouns and verbs from given business scenarios.",
        impacts=(
            _pos("scalability", "this strategy increases Scalability"),
            _neg("performance", "Performance and Coupling could be compromised because of the imprecise boundaries of microservices"),
            _neg("coupling", "Performance and Coupling could be compromised because of the imprecise boundaries of microservices"),
        ),
        constraints=(
            Constraint(
                id="time_to_develop_scenarios",
                description="The team needs enough time to develop the business scenarios.",
                guard=Guard.of({"time_for_scenarios": "yes"}),
                severity="hard",
            ),
        ),
        sources=(TUSJUNT,),
    ),
    Pattern(
        id="graph_based",
        name="Graph-based approach",
        kind="strategy",
        summary=(
            "Identify microservices from the source code of existing monolithic applications by graph "
            "clustering and visualization techniques."
        ),
        impacts=(
            _pos("reusability", "increases the Reusability of the existing code"),
            _pos("understandability", "increases the Understandability about the MSA design"),
        ),
        sources=(KAMIMURA,),
    ),
    Pattern(
        id="data_flow_driven",
        name="Data Flow-Driven (DFD) approach",
        kind="strategy",
        summary=(
            "Follow a top-down approach in which data flow diagrams contain the business requirements "
            "that are later partitioned through a formal algebra algorithm for identifying microservices."
        ),
        impacts=(
            _pos("availability", "increases Availability, Scalability, and Flexibility"),
            _pos("scalability", "increases Availability, Scalability, and Flexibility"),
            _pos("flexibility", "increases Availability, Scalability, and Flexibility"),
            _neg("performance", "decreases Performance and Reusability mainly because of complex DFDs"),
            _neg("reusability", "decreases Performance and Reusability mainly because of complex DFDs"),
        ),
        sources=(LI,),
    ),
)

_SMALL_TEAM_CANDIDATES = (
    "subdomains",
    "business_capabilities",
    "service_per_team",
    "transactions",
    "scenario_analysis",
)


def default_model() -> DecisionModel:
    """Build the built-in application-decomposition model."""
    nodes = [
        Node(id="start", kind="start"),
        Node(id="team_size_choice", kind="xor"),
        Node(id="small_team_options", kind="or"),
        Node(id="undefined_team_options", kind="xor"),
        Node(id="no_guidance", kind="xor"),
    ]
    nodes.extend(Node(id=p.id, kind="pattern", pattern=p.id) for p in _PATTERNS)

    edges = [
        Edge(source="start", target="team_size_choice"),
        Edge(source="team_size_choice", target="small_team_options", guard=Guard.of({"team_size": "small_5_to_9"})),
        Edge(source="team_size_choice", target="undefined_team_options", guard=Guard.of({"team_size": "undefined"})),
        Edge(source="team_size_choice", target="no_guidance", guard=Guard(otherwise=True)),
    ]
    edges.extend(Edge(source="small_team_options", target=pid) for pid in _SMALL_TEAM_CANDIDATES)
    edges.append(
        Edge(source="undefined_team_options", target="graph_based", guard=Guard.of({"legacy_code_available": "yes"}))
    )
    edges.append(
        Edge(
            source="undefined_team_options",
            target="data_flow_driven",
            guard=Guard.of({"legacy_code_available": "no", "dfds_available": "yes"}),
        )
    )

    return DecisionModel(
        metadata=Metadata(
            id="msa_application_decomposition",
            title="Application decomposition decision model",
            version="1.0.0",
        ),
        qas=tuple(QualityAttribute(id=i, name=n, polarity=p) for i, n, p in _QAS),
        patterns=_PATTERNS,
        nodes=tuple(nodes),
        edges=tuple(edges),
    )
