"""Decision support for decomposing applications into microservices.

The package bundles a knowledge base of decomposition patterns and
strategies, a three-valued guard engine that narrows them down by project
context, weighted scoring over quality attributes, and CLI/HTTP frontends.
"""

from .api import create_app
from .defaults import default_model
from .dotexport import export_dot
from .engine import (
    Contribution,
    EligibilityTrace,
    MatrixCell,
    RecommendationEntry,
    RecommendationReport,
    Requirements,
    TradeoffMatrix,
    WarningMessage,
    WhatIfDiff,
    WhatIfEntry,
    eligible_patterns,
    eval_guard,
    explain,
    matrix_csv,
    matrix_json,
    matrix_text,
    parse_requirements,
    recommend,
    report_json,
    requirements_digest,
    score_pattern,
    tradeoff_matrix,
    what_if,
    whatif_json,
    whatif_text,
)
from .errors import (
    AmbiguousExclusiveError,
    DecideError,
    DuplicateIdError,
    IoKbError,
    RequirementsError,
    SyntaxKbError,
    UnknownFactError,
    UnresolvedRefError,
)
from .kb import load_model, loads_model, serialize_model
from .model import (
    CONTEXT_FACT_DOMAINS,
    Constraint,
    ContextFacts,
    DecisionModel,
    Edge,
    Finding,
    Guard,
    Impact,
    Metadata,
    Node,
    Pattern,
    QualityAttribute,
    ValidationReport,
)
from .validate import validate_model, validation_json

__version__ = "0.1.0"

__all__ = [
    "AmbiguousExclusiveError",
    "CONTEXT_FACT_DOMAINS",
    "Constraint",
    "ContextFacts",
    "Contribution",
    "DecideError",
    "DecisionModel",
    "DuplicateIdError",
    "Edge",
    "EligibilityTrace",
    "Finding",
    "Guard",
    "Impact",
    "IoKbError",
    "MatrixCell",
    "Metadata",
    "Node",
    "Pattern",
    "QualityAttribute",
    "RecommendationEntry",
    "RecommendationReport",
    "Requirements",
    "RequirementsError",
    "SyntaxKbError",
    "TradeoffMatrix",
    "UnknownFactError",
    "UnresolvedRefError",
    "ValidationReport",
    "WarningMessage",
    "WhatIfDiff",
    "WhatIfEntry",
    "create_app",
    "default_model",
    "eligible_patterns",
    "eval_guard",
    "explain",
    "export_dot",
    "load_model",
    "loads_model",
    "matrix_csv",
    "matrix_json",
    "matrix_text",
    "parse_requirements",
    "recommend",
    "report_json",
    "requirements_digest",
    "score_pattern",
    "serialize_model",
    "tradeoff_matrix",
    "validate_model",
    "validation_json",
    "what_if",
    "whatif_json",
    "whatif_text",
]
