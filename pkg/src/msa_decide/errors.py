"""Error taxonomy shared by the loader, the engine, the CLI, and the API.

Every raised condition carries a stable machine-readable code so that CLI
output and API error bodies can expose it without string matching.
"""

from __future__ import annotations


class DecideError(Exception):
    """Base class for all package errors."""

    code = "E_INTERNAL"

    def __init__(self, message: str, *, details: dict | None = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class IoKbError(DecideError):
    """A knowledge-base file could not be read."""

    code = "E_IO"


class SyntaxKbError(DecideError):
    """The knowledge-base document is not well-formed or violates the schema."""

    code = "E_SYNTAX"


class DuplicateIdError(DecideError):
    """Two elements in one collection share an id."""

    code = "E_DUP_ID"


class UnresolvedRefError(DecideError):
    """A reference points at a qa, pattern, node, or fact that does not exist."""

    code = "E_UNRESOLVED_REF"


class UnknownFactError(DecideError):
    """A guard or requirements document names a context fact outside the domain."""

    code = "E_UNKNOWN_FACT"


class AmbiguousExclusiveError(DecideError):
    """More than one guard held at an exclusive gateway for one context."""

    code = "E_AMBIGUOUS_EXCLUSIVE"


class RequirementsError(DecideError):
    """A requirements document is malformed or references unknown ids."""

    code = "E_BAD_REQUIREMENTS"
