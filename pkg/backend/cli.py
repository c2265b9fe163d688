"""
wbafrac command line

Build, check, localize and emit the catalog examples. Exit status is 0 when
every requested suite passes, 1 when a suite fails (the report is still
written) and 2 on usage or configuration errors.
"""

import argparse
import logging
import sys
from typing import Dict, List, Optional

from pydantic import ValidationError

from backend.adapters.json_codec import (
    dumps,
    element_to_doc,
    emit,
    graph_from_doc,
    load_json,
    load_wba,
    rform_to_doc,
    wba_to_doc,
)
from backend.adapters.text_report import render_run
from backend.core.axioms import check_wba_axioms
from backend.core.catalog import (
    CatalogEntry,
    build,
    describe,
    graph_entry,
    list_examples,
    localization_run,
    run_manifest,
)
from backend.core.errors import CatalogError, DocumentError, WBAError
from backend.core.exactfield import RootOfUnityLevel
from backend.core.graphs import build_graph_wba, linear_graph
from backend.core.quantum import quantum_determinant
from backend.core.settings import TOOL_VERSION
from shared.schemas.config import CommandConfig
from shared.schemas.reports import RunReport

logger = logging.getLogger("wbafrac")

USAGE_ERROR = 2
SUITE_FAILURE = 1


class UsageError(WBAError):
    """Bad command-line usage."""


def _csv(value: str) -> List[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def _param(value: str) -> str:
    if "=" not in value:
        raise argparse.ArgumentTypeError(f"expected k=v, got {value!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json", help="Output format (default: json)")
    common.add_argument("-o", "--output", default="-", help="Output path (default: stdout)")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG on stderr")

    example = argparse.ArgumentParser(add_help=False)
    example.add_argument("example", help="Catalog example name (see `wbafrac list`)")
    example.add_argument("--r", type=int, help="Root-of-unity level r ≥ 3")
    example.add_argument("--alpha", help="Sweedler parameter α, a rational such as 2 or -1/3")
    example.add_argument("--cutoff", type=int, help="Largest degree materialized")
    example.add_argument("--param", action="append", type=_param, default=[], metavar="K=V",
                         help="Extra constructor parameter (repeatable)")

    parser = argparse.ArgumentParser(prog="wbafrac", description="Weak bialgebras of fractions, exactly")
    parser.add_argument("--version", action="version", version=f"wbafrac {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sub.add_parser("list", parents=[common], help="List the catalog examples")

    p = sub.add_parser("info", parents=[common, example], help="Describe one example")

    p = sub.add_parser("build", parents=[common, example], help="Build an example and emit its structure tables")
    p.add_argument("--graph", help="JSON graph file, with example name 'graph'")

    p = sub.add_parser("check", parents=[common], help="Run check suites on an example or an algebra document")
    p.add_argument("example", nargs="?", help="Catalog example name")
    p.add_argument("--r", type=int)
    p.add_argument("--alpha")
    p.add_argument("--cutoff", type=int)
    p.add_argument("--param", action="append", type=_param, default=[], metavar="K=V")
    p.add_argument("--suite", dest="suites", type=_csv, default=[], help="Comma-separated suites (default: manifest)")
    p.add_argument("--input", help="Algebra document to check with the wba suite")

    p = sub.add_parser("localize", parents=[common, example], help="Localize an example at named generators")
    p.add_argument("--at", type=_csv, default=[], help="Comma-separated generator names (default: manifest)")
    p.add_argument("--strategy", help="declared-regular, finite-test-set or bounded-search")
    p.add_argument("--bound", type=int, help="Denominator word bound")

    p = sub.add_parser("detq", parents=[common], help="Emit the quantum determinant of the level-r graph algebra")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--emit", dest="emit_path", help="Output path; '-' for stdout")

    p = sub.add_parser("emit", parents=[common], help="Emit an example's tables, r-form or named elements")
    p.add_argument("example", nargs="?")
    p.add_argument("--r", type=int)
    p.add_argument("--alpha")
    p.add_argument("--cutoff", type=int)
    p.add_argument("--param", action="append", type=_param, default=[], metavar="K=V")
    p.add_argument("--what", choices=["wba", "rform", "elements"], default="wba")
    p.add_argument("--input", help="Algebra document to load and re-emit")

    p = sub.add_parser("dims", parents=[common, example], help="Graded dimension table of a localization")
    p.add_argument("--at", type=_csv, default=[])
    p.add_argument("--strategy")
    p.add_argument("--bound", type=int)
    return parser


def configure(args: argparse.Namespace) -> CommandConfig:
    """Validate parsed arguments into a CommandConfig."""
    raw = {
        "subcommand": args.subcommand,
        "example": getattr(args, "example", None),
        "r": getattr(args, "r", None),
        "alpha": getattr(args, "alpha", None),
        "cutoff": getattr(args, "cutoff", None),
        "strategy": getattr(args, "strategy", None),
        "bound": getattr(args, "bound", None),
        "suites": getattr(args, "suites", []),
        "at": getattr(args, "at", []),
        "params": dict(item.split("=", 1) for item in getattr(args, "param", [])),
        "graph": getattr(args, "graph", None),
        "input": getattr(args, "input", None),
        "output": getattr(args, "emit_path", None) or args.output,
        "format": args.format,
        "verbose": args.verbose,
        "what": getattr(args, "what", "wba"),
    }
    return CommandConfig(**raw)


def setup_logging(verbose: int) -> None:
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s", force=True)


def _entry(config: CommandConfig) -> CatalogEntry:
    if not config.example:
        raise UsageError("an example name is required")
    if config.example == "graph" and config.graph:
        return graph_entry(graph_from_doc(load_json(config.graph)), config.cutoff)
    params: Dict[str, object] = dict(config.params)
    if config.r is not None:
        params["r"] = config.r
    if config.alpha is not None:
        params["alpha"] = config.alpha
    return build(config.example, cutoff=config.cutoff, **params)


def _write(config: CommandConfig, document, text: Optional[str] = None) -> None:
    if config.format == "text":
        out = text if text is not None else dumps(document)
        if config.output == "-":
            sys.stdout.write(out)
        else:
            with open(config.output, "w", encoding="utf-8") as f:
                f.write(out)
        return
    emit(document, config.output)


def _finish(config: CommandConfig, run: RunReport) -> int:
    _write(config, run, render_run(run))
    return 0 if run.passed else SUITE_FAILURE


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_list(config: CommandConfig) -> int:
    examples = list_examples()
    doc = {"examples": [d.model_dump(mode="json") for d in examples]}
    text = "".join(f"{d.name:<12} {d.title}\n" for d in examples)
    _write(config, doc, text)
    return 0


def cmd_info(config: CommandConfig) -> int:
    descriptor = describe(config.example)
    entry = _entry(config)
    H = entry.host
    top = H.cutoff
    doc = {
        "descriptor": descriptor.model_dump(mode="json"),
        "parameters": entry.parameters,
        "algebra": H.name,
        "conductor": H.field.conductor,
        "cutoff": top,
        "dims": H.dims(top),
        "elements": {name: H.render(x) for name, x in sorted(entry.elements.items())},
    }
    lines = [f"{descriptor.name}: {descriptor.title}", f"algebra {H.name} over ℚ(ζ_{H.field.conductor})"]
    lines.append("dims: " + ", ".join(f"{d}:{n}" for d, n in sorted(doc["dims"].items())))
    lines.extend(f"  {name} = {value}" for name, value in doc["elements"].items())
    lines.append("suites: " + ", ".join(descriptor.suites))
    _write(config, doc, "\n".join(lines) + "\n")
    return 0


def cmd_build(config: CommandConfig) -> int:
    if config.example == "graph" and not config.graph:
        raise UsageError("`build graph` needs --graph FILE")
    entry = _entry(config)
    _write(config, wba_to_doc(entry.host, config.cutoff))
    return 0


def cmd_check(config: CommandConfig) -> int:
    if config.input:
        H = load_wba(config.input)
        run = RunReport(version=TOOL_VERSION, command="check", example=H.name)
        run.reports.append(check_wba_axioms(H, config.cutoff))
        return _finish(config, run)
    entry = _entry(config)
    return _finish(config, run_manifest(entry, config.suites or None, config.cutoff))


def cmd_localize(config: CommandConfig) -> int:
    entry = _entry(config)
    run = localization_run(entry, config.at or None, config.strategy, config.cutoff, config.bound)
    return _finish(config, run)


def cmd_dims(config: CommandConfig) -> int:
    entry = _entry(config)
    if not (config.at or entry.generator_names):
        run = RunReport(version=TOOL_VERSION, command="dims", example=entry.name, parameters=entry.parameters)
        run.results["dims"] = entry.host.dims(config.cutoff)
        return _finish(config, run)
    run = localization_run(entry, config.at or None, config.strategy, config.cutoff, config.bound,
                           command="dims", checks=False)
    return _finish(config, run)


def cmd_detq(config: CommandConfig) -> int:
    level = RootOfUnityLevel(config.r if config.r is not None else 3)
    H = build_graph_wba(linear_graph(level.r), 2, level.field, name=f"A({level.r})")
    det = quantum_determinant(level, H)
    doc = element_to_doc(H, det)
    _write(config, doc, f"det_q = {H.render(det)}\n")
    return 0


def cmd_emit(config: CommandConfig) -> int:
    if config.input:
        H = load_wba(config.input)
        _write(config, wba_to_doc(H))
        return 0
    entry = _entry(config)
    if config.what == "rform":
        if entry.rform is None:
            raise CatalogError(f"{entry.name} has no r-form")
        _write(config, rform_to_doc(entry.rform, config.cutoff))
    elif config.what == "elements":
        H = entry.host
        doc = {name: element_to_doc(H, x).model_dump(mode="json") for name, x in sorted(entry.elements.items())}
        _write(config, doc, "".join(f"{n} = {H.render(x)}\n" for n, x in sorted(entry.elements.items())))
    else:
        _write(config, wba_to_doc(entry.host, config.cutoff))
    return 0


COMMANDS = {
    "list": cmd_list,
    "info": cmd_info,
    "build": cmd_build,
    "check": cmd_check,
    "localize": cmd_localize,
    "dims": cmd_dims,
    "detq": cmd_detq,
    "emit": cmd_emit,
}


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    try:
        config = configure(args)
    except ValidationError as exc:
        print(f"Error: invalid arguments: {exc.errors()[0]['msg']}", file=sys.stderr)
        return USAGE_ERROR
    setup_logging(config.verbose)
    try:
        return COMMANDS[config.subcommand](config)
    except (UsageError, CatalogError, DocumentError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except FileNotFoundError as exc:
        print(f"Error: File not found: {exc.filename}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except WBAError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return SUITE_FAILURE
    except ValueError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except Exception as exc:
        logger.debug("unexpected failure", exc_info=True)
        print(f"Error: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return SUITE_FAILURE


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
