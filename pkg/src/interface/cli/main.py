"""
CLI Entry point.

Subcommands: color, verify, bounds, oracle, demo. Exit codes: 0 ok,
1 verification failed, 2 bad input or violated hypothesis, 3 search budget
exhausted.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from src.core.bounds import deficiency_report
from src.core.config import settings
from src.core.constructions.registry import AUTO_ORDER, registry
from src.core.exceptions import DeficiencyError, ValidationError
from src.core.graph import ColoredGraph, build_multipartite
from src.core.oracle import (
    SearchBudget,
    VerdictStatus,
    exact_deficiency,
    exact_interval_spans,
    pendant_deficiency,
)
from src.infra.document import (
    document_from_coloring,
    parse_document,
    render_document,
    verify_document,
)
from src.infra.export import write_dot
from src.infra.logging import setup_logging
from src.interface.ui.console import ui

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_EXHAUSTED = 3

# figure number -> (method, sizes)
DEMOS = {
    1: ("thm2", (4, 2, 1, 3)),
    2: ("thm3", (3, 3, 6)),
    3: ("thm4", (2, 2, 6)),
}


def _positive(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value!r}")
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {number}")
    return number


def _nonnegative(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value!r}")
    if number < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {number}")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="icdef",
        description="Interval edge-colorings and deficiency of complete multipartite graphs."
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=settings.log_level,
        help="logging threshold (records go to stderr)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    methods = "\n".join(
        f"  {schema.name:<7} {schema.reference}: {schema.hypothesis}"
        for schema in sorted(registry.get_schemas(), key=lambda s: s.name)
    )
    color = sub.add_parser(
        "color",
        help="build a coloring and print its document",
        epilog=f"methods:\n{methods}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    color.add_argument("sizes", nargs="+", type=_positive, help="part sizes")
    color.add_argument(
        "--method",
        choices=["auto", *sorted(registry.names())],
        default="auto",
        help=f"construction; auto tries {', '.join(AUTO_ORDER)} in order"
    )
    color.add_argument("--case", type=int, choices=[1, 2], help="staggered layout for thm5/thm6")
    color.add_argument(
        "--balanced",
        choices=["auto", "blowup", "completion"],
        default="auto",
        help="method for lemma3"
    )
    color.add_argument("--dot", type=Path, help="also write Graphviz DOT to this path")

    verify = sub.add_parser("verify", help="check a coloring document")
    verify.add_argument("document", help="path to the document, or - for stdin")
    verify.add_argument(
        "--require-interval", action="store_true", help="fail unless every spectrum is an interval"
    )

    bounds = sub.add_parser("bounds", help="print lower, upper and exact deficiency")
    bounds.add_argument("sizes", nargs="+", type=_positive)
    bounds.add_argument("--json", action="store_true", help="print the report as JSON")

    oracle = sub.add_parser("oracle", help="exhaustive search for exact values")
    oracle.add_argument("sizes", nargs="+", type=_positive)
    oracle.add_argument("--max-colors", type=_positive, help="palette size (default |E|)")
    oracle.add_argument(
        "--deficiency-cap", type=_nonnegative, default=settings.oracle.deficiency_cap
    )
    oracle.add_argument(
        "--node-limit", type=_positive, default=settings.oracle.node_limit,
        help="search nodes per top-level branch"
    )
    oracle.add_argument("--single-thread", action="store_true", help="do not use a process pool")
    mode = oracle.add_mutually_exclusive_group()
    mode.add_argument("--spans", action="store_true", help="list every interval span t")
    mode.add_argument(
        "--pendants", type=_nonnegative, metavar="K",
        help="fewest pendant edges (at most K) making the graph interval colorable"
    )
    oracle.add_argument("--witness", type=Path, help="write the witness document to this path")

    demo = sub.add_parser("demo", help="regenerate a figure coloring")
    demo.add_argument("figure", type=int, choices=sorted(DEMOS))
    demo.add_argument("--dot", type=Path, help="also write Graphviz DOT to this path")

    return parser


# ============================================
# Commands
# ============================================

def _emit_coloring(colored: ColoredGraph, reference: str, dot: Optional[Path]) -> int:
    ui.print_document(render_document(document_from_coloring(colored.graph, colored.coloring)))
    ui.show_coloring_summary(colored, reference)
    if dot is not None:
        write_dot(colored.graph, colored.coloring, dot)
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    sizes: Sequence[int] = args.sizes
    if args.method == "auto":
        construction, _ = registry.resolve_auto(sizes)
    else:
        construction = registry.get(args.method)
    options = {"case": args.case, "balanced": args.balanced}
    colored = construction.run(sizes, **options)
    return _emit_coloring(colored, construction.reference, args.dot)


def cmd_verify(args: argparse.Namespace) -> int:
    if args.document == "-":
        text = sys.stdin.read()
    else:
        path = Path(args.document)
        if not path.is_file():
            raise ValidationError(f"No such document: {path}")
        text = path.read_text(encoding="utf-8")
    report = verify_document(parse_document(text), require_interval=args.require_interval)
    ui.show_verification(report)
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_bounds(args: argparse.Namespace) -> int:
    report = deficiency_report(args.sizes)
    if args.json:
        ui.print_document(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        ui.show_bound_report(report)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g = build_multipartite(args.sizes)
    budget = SearchBudget(
        max_colors=args.max_colors,
        deficiency_cap=args.deficiency_cap,
        node_limit=args.node_limit,
    )
    workers = 1 if args.single_thread else settings.oracle.workers
    logger.info(f"Oracle on {g.describe()} with {workers} worker(s)")

    if args.spans:
        spans = exact_interval_spans(g, args.max_colors, budget, workers)
        ui.show_spans(g, spans)
        if args.witness is not None and spans:
            smallest = spans[min(spans)]
            args.witness.write_text(render_document(document_from_coloring(g, smallest)), encoding="utf-8")
        return EXIT_OK

    if args.pendants is not None:
        k = pendant_deficiency(g, args.pendants, budget, workers)
        ui.show_pendants(g, args.pendants, k)
        return EXIT_OK

    verdict = exact_deficiency(g, budget, workers)
    ui.show_verdict(g, verdict)
    if verdict.witness is not None and args.witness is not None:
        args.witness.write_text(render_document(document_from_coloring(g, verdict.witness)), encoding="utf-8")
    if verdict.status is VerdictStatus.EXHAUSTED:
        return EXIT_EXHAUSTED
    return EXIT_OK


def cmd_demo(args: argparse.Namespace) -> int:
    method, sizes = DEMOS[args.figure]
    construction = registry.get(method)
    return _emit_coloring(construction.run(sizes), construction.reference, args.dot)


COMMANDS = {
    "color": cmd_color,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "oracle": cmd_oracle,
    "demo": cmd_demo,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(getattr(logging, args.log_level))
    try:
        return COMMANDS[args.command](args)
    except DeficiencyError as e:
        logger.debug(f"{type(e).__name__}: {e.to_dict()}")
        ui.show_error(e)
        return e.exit_code


def main_sync() -> None:
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        ui.print_system_message("\nProgram terminated.")
        sys.exit(130)


if __name__ == "__main__":
    main_sync()
