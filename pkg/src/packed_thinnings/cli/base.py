"""
Base CLI Utilities

Shared plumbing for every command: the --structured and --scope options,
input loading, single-record JSON output, and the mapping from library errors
to exit codes.
"""

import functools
import json
import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Set

import click

from packed_thinnings.config import ThinningsSettings, get_settings
from packed_thinnings.errors import ErrorFormatter, ParseError, ThinningsError
from packed_thinnings.thin import Scope

logger = logging.getLogger(__name__)

structured_option = click.option(
    "--structured",
    is_flag=True,
    default=False,
    help="Print a single JSON record instead of text.",
)

scope_option = click.option(
    "--scope",
    default="",
    show_default=False,
    help="Free variables, outermost first (e.g. x,y,z).",
)


def settings_from(ctx: click.Context) -> ThinningsSettings:
    """Settings loaded by the root group, or the process defaults."""
    obj = ctx.find_root().obj
    if isinstance(obj, dict) and "settings" in obj:
        return obj["settings"]
    return get_settings()


def emit_record(command: str, inputs: Dict[str, Any], **payload: Any) -> None:
    """Write the one JSON record a structured invocation produces."""
    record = {"command": command, "inputs": inputs, **payload}
    click.echo(json.dumps(record, sort_keys=True, default=str))


def command_errors(command: str) -> Callable:
    """Map library errors raised by a command to its exit code.

    The wrapped command must take a `structured` keyword. Errors go to stderr
    as a rich panel, or to stdout as the invocation's single record when
    structured output was requested. ValueError is reported as a usage error,
    and exhausting the interpreter stack as a usage error on the input.
    """

    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            structured = bool(kwargs.get("structured", False))
            try:
                return func(*args, **kwargs)
            except ThinningsError as e:
                error = e
            except ValueError as e:
                error = ThinningsError(str(e))
            except RecursionError:
                error = ThinningsError("Input nested too deeply to process", {"command": command})
            logger.debug(f"{command} failed: {error.message}")
            if structured:
                record = ErrorFormatter().format(error, "structured")
                click.echo(json.dumps({"command": command, **record}, sort_keys=True, default=str))
            else:
                ErrorFormatter().emit(error)
            click.get_current_context().exit(error.exit_code)

        return wrapper

    return decorator


def read_expression(source: str) -> str:
    """An inline expression, or the contents of the file it names."""
    path = Path(source)
    try:
        if path.is_file():
            return path.read_text(encoding="utf-8").strip()
    except OSError:
        # Too long or otherwise not a usable path: treat as an expression.
        pass
    return source


def parse_scope(text: str) -> Scope:
    """Scope from a comma list; names must be distinct identifiers.

    Raises:
        ParseError: On a malformed or repeated name, at its offset
    """
    scope = Scope.parse(text)
    offset = 0
    seen: Set[str] = set()
    for name in text.split(","):
        stripped = name.strip()
        if not stripped:
            offset += len(name) + 1
            continue
        position = offset + name.find(stripped)
        if not (stripped[0].isalpha() and stripped.replace("_", "a").isalnum()):
            raise ParseError(f"Invalid scope name {stripped!r}", text, position)
        if stripped in seen:
            raise ParseError(f"Repeated scope name {stripped!r}", text, position)
        seen.add(stripped)
        offset += len(name) + 1
    return scope


def parse_int_list(text: str) -> List[int]:
    """Parse "64,1024,4096".

    Raises:
        ParseError: With the position of the first non-integer item
    """
    values: List[int] = []
    offset = 0
    for item in text.split(","):
        stripped = item.strip()
        try:
            values.append(int(stripped))
        except ValueError:
            raise ParseError(f"Not an integer: {stripped!r}", text, offset) from None
        offset += len(item) + 1
    return values


def parse_name_list(text: Optional[str]) -> List[str]:
    return [item.strip() for item in (text or "").split(",") if item.strip()]


class ThinningsGroup(click.Group):
    """Click group reporting usage errors with exit code 1.

    Click's default for usage errors is 2, which this CLI reserves for scope
    mismatches.
    """

    def make_context(self, *args: Any, **kwargs: Any) -> click.Context:
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            e.exit_code = 1
            raise

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = 1
            raise
