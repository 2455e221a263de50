"""
UI Manager using Rich.
Reports go to stdout; summaries, progress and errors go to stderr so that
coloring documents on stdout can be piped straight into `verify -`.
"""
import sys
from typing import Dict, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from src.core.bounds import BoundReport, Colorability
from src.core.exceptions import DeficiencyError
from src.core.graph import ColoredGraph, EdgeColoring, PartitionedGraph, part_deficiencies
from src.core.oracle import OracleVerdict, VerdictStatus
from src.infra.document import VerificationReport

console = Console(highlight=False)
err_console = Console(stderr=True, highlight=False)


class UIManager:
    """
    Manages terminal output with rich formatting.
    """
    def __init__(self):
        self.console = console
        self.err_console = err_console

    def print_system_message(self, message: str, style: str = "bold blue"):
        self.err_console.print(f"[{style}]{message}[/{style}]")

    def print_document(self, text: str):
        """Write a rendered document verbatim; rich would re-wrap long lines."""
        sys.stdout.write(text)
        sys.stdout.flush()

    def show_coloring_summary(self, colored: ColoredGraph, reference: Optional[str] = None):
        """One summary line: t, total deficiency, per-part deficiency."""
        per_part = ", ".join(str(d) for d in part_deficiencies(colored.graph, colored.coloring))
        line = Text()
        line.append(f"{colored.graph.describe()}", style="bold")
        if colored.label:
            source = f"{colored.label}, {reference}" if reference else colored.label
            line.append(f" [{source}]", style="cyan")
        line.append(f": t={colored.t}, deficiency={colored.deficiency}, per-part=({per_part})")
        self.err_console.print(line, soft_wrap=True)

    def show_bound_report(self, report: BoundReport):
        sizes = ",".join(str(s) for s in report.sizes)
        table = Table(title=f"def(K_{{{sizes}}})", show_header=True, header_style="bold magenta")
        table.add_column("bound")
        table.add_column("value", justify="right")
        table.add_column("source")
        table.add_row("lower", str(report.lower.value), report.lower.source.value)
        table.add_row("upper", str(report.upper.value), report.upper.source.value)
        if report.exact is not None:
            table.add_row("exact", str(report.exact.value), report.exact.source.value, style="green")
        else:
            table.add_row("exact", "-", "open", style="dim")
        self.console.print(table)

        style = {
            Colorability.YES: "green",
            Colorability.NO: "red",
            Colorability.UNKNOWN: "yellow",
        }[report.interval_colorable]
        self.console.print(
            f"interval colorable: [{style}]{report.interval_colorable.value}[/{style}]", soft_wrap=True
        )
        if report.span_range is not None:
            low, high = report.span_range
            self.console.print(f"interval spans: {low}..{high}", soft_wrap=True)

    def show_verification(self, report: VerificationReport):
        if not report.ok:
            self.console.print(Text(report.summary, style="bold red"), soft_wrap=True)
            return
        self.console.print(Text(report.summary, style="bold green"), soft_wrap=True)
        per_part = ", ".join(str(d) for d in report.per_part)
        self.console.print(f"per-part deficiency: ({per_part})", soft_wrap=True)

    def show_verdict(self, g: PartitionedGraph, verdict: OracleVerdict):
        name = g.describe()
        if verdict.status is VerdictStatus.EXACT:
            self.console.print(f"def({name}) = [bold]{verdict.value}[/bold] (exact)", soft_wrap=True)
            if verdict.witness is not None:
                self.console.print(f"witness uses {verdict.witness.t} colors", soft_wrap=True)
        elif verdict.status is VerdictStatus.CAPPED:
            self.console.print(
                f"def({name}) >= {verdict.lower} (every smaller value refuted)", soft_wrap=True
            )
        else:
            self.console.print(
                f"[yellow]node limit reached[/yellow]: def({name}) >= {verdict.lower}", soft_wrap=True
            )
        self.err_console.print(f"[dim]{verdict.nodes} search nodes[/dim]")

    def show_spans(self, g: PartitionedGraph, spans: Dict[int, EdgeColoring]):
        if not spans:
            self.console.print(f"{g.describe()} has no interval coloring in range", soft_wrap=True)
            return
        values = ", ".join(str(t) for t in sorted(spans))
        self.console.print(f"interval spans of {g.describe()}: {values}", soft_wrap=True)

    def show_pendants(self, g: PartitionedGraph, k_max: int, k: Optional[int]):
        if k is None:
            self.console.print(
                f"{g.describe()}: no attachment of at most {k_max} pendant edge(s) works", soft_wrap=True
            )
        else:
            self.console.print(f"{g.describe()}: {k} pendant edge(s) suffice", soft_wrap=True)

    def show_error(self, error: DeficiencyError | str):
        if isinstance(error, DeficiencyError):
            self.err_console.print(
                Panel(Text(error.message), title=f"Error {error.code.value}", border_style="red")
            )
        else:
            self.err_console.print(f"[bold red]Error:[/bold red] {error}")


ui = UIManager()
