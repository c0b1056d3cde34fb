"""
Error Formatter

Formats library errors for terminal output or as structured records.
"""

from typing import Any, Dict, Optional

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel

from packed_thinnings.errors.exceptions import ThinningsError


class ErrorFormatter:
    """Formats ThinningsError instances for different output modes."""

    def __init__(self, console: Optional[Console] = None):
        """Initialize formatter.

        Args:
            console: Optional Rich console used for CLI output (stderr by default)
        """
        self.console = console or Console(stderr=True)

    def format(self, error: ThinningsError, format_type: str = "cli") -> Any:
        """Format an error.

        Args:
            error: The error to format
            format_type: "cli" for a rich panel, "structured" for a dict

        Returns:
            Panel for CLI output, dict for structured output
        """
        if format_type == "cli":
            return self._format_cli(error)
        elif format_type == "structured":
            return error.to_dict()
        else:
            raise ValueError(f"Unknown format type: {format_type}")

    def emit(self, error: ThinningsError) -> None:
        """Write the error panel to the console."""
        self.console.print(self._format_cli(error))

    def _format_cli(self, error: ThinningsError) -> Panel:
        error_text = f"[red]{escape(error.message)}[/red]"

        context = self._printable_context(error.context)
        if context:
            context_text = "\n".join(
                f"  • {k}: [cyan]{escape(str(v))}[/cyan]" for k, v in context.items()
            )
            error_text += f"\n\n[bold]Context:[/bold]\n{context_text}"

        return Panel(
            error_text,
            title=f"[bold red]{type(error).__name__}[/bold red]",
            border_style="red",
        )

    @staticmethod
    def _printable_context(context: Dict[str, Any]) -> Dict[str, Any]:
        # Long inputs are already part of the message.
        return {k: v for k, v in context.items() if not (isinstance(v, str) and len(v) > 60)}
