"""Command-line interface.

Subcommands: validate, recommend, matrix, whatif, export-dot, serve.
Every subcommand takes an optional model path; when omitted, the
MSA_DECIDE_MODEL environment variable is consulted, and the built-in
model is used as the last resort.

Exit codes: 0 success, 1 usage or input error, 2 invalid model,
3 no applicable pattern.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import socket
import sys

from .api import create_app
from .defaults import default_model
from .dotexport import export_dot
from .engine import (
    Requirements,
    explain,
    matrix_csv,
    matrix_json,
    matrix_text,
    parse_requirements,
    recommend,
    report_json,
    tradeoff_matrix,
    what_if,
    whatif_json,
    whatif_text,
)
from .errors import DecideError, RequirementsError
from .kb import load_model
from .model import DecisionModel
from .validate import validate_model, validation_json

ENV_MODEL = "MSA_DECIDE_MODEL"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID_MODEL = 2
EXIT_NO_CANDIDATES = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; we reserve 2 for
    invalid models, so usage errors exit 1 instead."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="msa-decide", description="Decomposition pattern recommendation for microservice architectures.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_model_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "model",
            nargs="?",
            default=None,
            help=f"knowledge base file (default: ${ENV_MODEL} or the built-in model)",
        )

    p_validate = sub.add_parser("validate", help="check a knowledge base for structural problems")
    add_model_arg(p_validate)
    p_validate.add_argument("--json", action="store_true", help="print the report as JSON instead of text")

    p_recommend = sub.add_parser("recommend", help="rank applicable patterns for a context")
    add_model_arg(p_recommend)
    p_recommend.add_argument("--req", metavar="FILE", help="requirements JSON file")
    p_recommend.add_argument(
        "--weight", action="append", default=[], metavar="QA=VALUE", help="weight for one quality attribute"
    )
    p_recommend.add_argument(
        "--fact", action="append", default=[], metavar="NAME=VALUE", help="context fact value"
    )
    p_recommend.add_argument("--json", action="store_true", help="print the report as JSON instead of text")

    p_matrix = sub.add_parser("matrix", help="print the pattern/quality trade-off matrix")
    add_model_arg(p_matrix)
    p_matrix.add_argument("--format", choices=("text", "csv", "json"), default="text", help="output format")

    p_whatif = sub.add_parser("whatif", help="compare the rankings of two requirement sets")
    add_model_arg(p_whatif)
    p_whatif.add_argument("--base", required=True, metavar="FILE", help="base requirements JSON file")
    p_whatif.add_argument("--variant", required=True, metavar="FILE", help="variant requirements JSON file")
    p_whatif.add_argument("--json", action="store_true", help="print the diff as JSON instead of a table")

    p_dot = sub.add_parser("export-dot", help="render the decision flow as Graphviz DOT")
    add_model_arg(p_dot)

    p_serve = sub.add_parser("serve", help="serve the HTTP API")
    add_model_arg(p_serve)
    p_serve.add_argument("--bind", default="127.0.0.1", help="bind address (default 127.0.0.1)")
    p_serve.add_argument("--port", type=int, default=8000, help="bind port (default 8000)")
    p_serve.add_argument(
        "--allow-origin", action="append", default=[], metavar="ORIGIN", help="origin allowed for CORS (repeatable)"
    )
    return parser


def _resolve_model(path: str | None) -> DecisionModel:
    if path is None:
        path = os.environ.get(ENV_MODEL) or None
    if path is None:
        return default_model()
    return load_model(path)


def _fail(exc: DecideError) -> None:
    print(f"error [{exc.code}]: {exc.message}", file=sys.stderr)


def _parse_assignment(text: str, flag: str) -> tuple[str, str]:
    name, sep, value = text.partition("=")
    if not sep or not name or not value:
        raise RequirementsError(f"{flag} expects NAME=VALUE, got {text!r}")
    return name, value


def _read_json_file(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise RequirementsError(f"cannot read {path!r}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise RequirementsError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from exc


def _gather_requirements(args: argparse.Namespace, model: DecisionModel) -> Requirements:
    document = _read_json_file(args.req) if args.req else {}
    if not isinstance(document, dict):
        raise RequirementsError("requirements file must hold a JSON object")
    weights = dict(document.get("weights", {}))
    context = dict(document.get("context", {}))
    for item in args.weight:
        qa, value = _parse_assignment(item, "--weight")
        try:
            weights[qa] = float(value)
        except ValueError:
            raise RequirementsError(f"--weight {qa}: {value!r} is not a number") from None
    for item in args.fact:
        fact, value = _parse_assignment(item, "--fact")
        context[fact] = value
    merged = {key: value for key, value in document.items() if key not in ("weights", "context")}
    merged["weights"] = weights
    merged["context"] = context
    return parse_requirements(merged, model)


def _print_findings(model: DecisionModel) -> bool:
    report = validate_model(model)
    for finding in report.findings:
        print(f"{finding.severity}: [{finding.code}] {finding.message}")
    print("ok" if report.ok else "not ok")
    return report.ok


def _require_valid(model: DecisionModel) -> bool:
    report = validate_model(model)
    if report.ok:
        return True
    for finding in report.errors():
        print(f"error: [{finding.code}] {finding.message}", file=sys.stderr)
    return False


def _cmd_validate(args: argparse.Namespace) -> int:
    model = _resolve_model(args.model)
    if args.json:
        report = validate_model(model)
        sys.stdout.write(validation_json(report))
        return EXIT_OK if report.ok else EXIT_INVALID_MODEL
    return EXIT_OK if _print_findings(model) else EXIT_INVALID_MODEL


def _cmd_recommend(args: argparse.Namespace) -> int:
    model = _resolve_model(args.model)
    if not _require_valid(model):
        return EXIT_INVALID_MODEL
    requirements = _gather_requirements(args, model)
    report = recommend(model, requirements)
    if args.json:
        sys.stdout.write(report_json(report))
    else:
        sys.stdout.write(explain(model, report))
    if not report.entries:
        return EXIT_NO_CANDIDATES
    return EXIT_OK


def _cmd_matrix(args: argparse.Namespace) -> int:
    model = _resolve_model(args.model)
    matrix = tradeoff_matrix(model)
    renderers = {"text": matrix_text, "csv": matrix_csv, "json": matrix_json}
    sys.stdout.write(renderers[args.format](matrix))
    return EXIT_OK


def _cmd_whatif(args: argparse.Namespace) -> int:
    model = _resolve_model(args.model)
    if not _require_valid(model):
        return EXIT_INVALID_MODEL
    base = parse_requirements(_read_json_file(args.base), model)
    variant = parse_requirements(_read_json_file(args.variant), model)
    diff = what_if(model, base, variant)
    sys.stdout.write(whatif_json(diff) if args.json else whatif_text(diff))
    return EXIT_OK


def _cmd_export_dot(args: argparse.Namespace) -> int:
    model = _resolve_model(args.model)
    sys.stdout.write(export_dot(model))
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    model = _resolve_model(args.model)
    if not _require_valid(model):
        return EXIT_INVALID_MODEL
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        probe.bind((args.bind, args.port))
    except OSError as exc:
        print(f"error: cannot bind {args.bind}:{args.port}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        probe.close()
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    app = create_app(model, allow_origins=tuple(args.allow_origin), log_requests=True)
    uvicorn.run(app, host=args.bind, port=args.port, log_level="warning", access_log=False)
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "recommend": _cmd_recommend,
    "matrix": _cmd_matrix,
    "whatif": _cmd_whatif,
    "export-dot": _cmd_export_dot,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        try:
            sys.stdout.reconfigure(line_buffering=True)
        except (OSError, ValueError):
            pass
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except RequirementsError as exc:
        _fail(exc)
        return EXIT_USAGE
    except DecideError as exc:
        _fail(exc)
        if exc.code in ("E_IO", "E_SYNTAX", "E_DUP_ID", "E_UNRESOLVED_REF"):
            return EXIT_USAGE
        return EXIT_INVALID_MODEL


if __name__ == "__main__":
    raise SystemExit(main())
