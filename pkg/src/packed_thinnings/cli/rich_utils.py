"""
Rich Terminal Utilities

Formatting utilities for rich terminal output. Rich honours NO_COLOR on its
own, so nothing here checks it.
"""

from typing import Any, Dict, List, Optional

from rich.console import Console
from rich.markup import escape
from rich.table import Table


def get_console(stderr: bool = False) -> Console:
    """A console bound to the current stdout/stderr."""
    return Console(stderr=stderr)


def print_table(
    data: List[Dict[str, Any]],
    title: Optional[str] = None,
    show_header: bool = True,
    header_style: str = "bold cyan",
    markup_columns: Optional[List[str]] = None,
) -> None:
    """Print data as a Rich table.

    Args:
        data: List of dictionaries to display
        title: Optional table title
        show_header: Show column headers
        header_style: Header style
        markup_columns: Columns whose values carry rich markup; all other
            cells are escaped, since patterns like "[0110]" look like tags
    """
    console = get_console()
    if not data:
        console.print("[dim]No data to display[/dim]")
        return

    columns = list(data[0].keys())
    markup = set(markup_columns or [])

    table = Table(show_header=show_header, title=title)
    for col in columns:
        table.add_column(col, header_style=header_style)

    for row in data:
        cells = []
        for col in columns:
            value = str(row.get(col, ""))
            cells.append(value if col in markup else escape(value))
        table.add_row(*cells)

    console.print(table)


def print_warning(message: str) -> None:
    """Print warning message in yellow, on stderr."""
    get_console(stderr=True).print(f"[yellow]⚠[/yellow] {escape(message)}")


def print_info(message: str) -> None:
    """Print info message in blue."""
    get_console().print(f"[blue]ℹ[/blue] {escape(message)}")


def format_ratio(ratio: float, thresholds: Optional[Dict[str, float]] = None) -> str:
    """Format a speedup ratio with color coding.

    Args:
        ratio: oracle time over packed time
        thresholds: Optional thresholds dict with 'good' and 'poor' keys

    Returns:
        Formatted ratio string with color
    """
    if thresholds is None:
        thresholds = {"good": 10.0, "poor": 2.0}

    if ratio >= thresholds.get("good", 10.0):
        color = "green"
    elif ratio >= thresholds.get("poor", 2.0):
        color = "yellow"
    else:
        color = "red"

    return f"[{color}]{ratio:.1f}x[/{color}]"
