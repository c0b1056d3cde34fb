"""`thinnings thin ...`: the thinning algebra on bracketed-bit patterns."""

import json
from typing import Tuple

import click

from packed_thinnings.cli.base import (
    ThinningsGroup,
    command_errors,
    emit_record,
    structured_option,
)
from packed_thinnings.thin import (
    Done,
    compose,
    join,
    kept,
    meet,
    parse,
    render,
    thicken,
    to_dict,
    view,
)


@click.group(cls=ThinningsGroup)
def thin():
    """Operations on thinnings written as bit patterns, e.g. "[01101]"."""


@thin.command("view")
@click.argument("pattern")
@structured_option
@command_errors("thin view")
def view_cmd(pattern: str, structured: bool):
    """Show the outermost view step: Done, Keep <tail> or Drop <tail>."""
    step = view(parse(pattern))
    if structured:
        tail = None if isinstance(step, Done) else render(step.tail)
        result = {"case": type(step).__name__, "tail": tail}
        emit_record("thin view", {"pattern": pattern}, result=result)
    else:
        click.echo(str(step))


def _binary(name: str, op, a: str, b: str, structured: bool) -> None:
    result = render(op(parse(a), parse(b)))
    if structured:
        emit_record(f"thin {name}", {"patterns": [a, b]}, result=result)
    else:
        click.echo(result)


@thin.command("join")
@click.argument("a")
@click.argument("b")
@structured_option
@command_errors("thin join")
def join_cmd(a: str, b: str, structured: bool):
    """Union of two thinnings of the same width."""
    _binary("join", join, a, b, structured)


@thin.command("meet")
@click.argument("a")
@click.argument("b")
@structured_option
@command_errors("thin meet")
def meet_cmd(a: str, b: str, structured: bool):
    """Intersection of two thinnings of the same width."""
    _binary("meet", meet, a, b, structured)


@thin.command("compose")
@click.argument("inner")
@click.argument("outer")
@structured_option
@command_errors("thin compose")
def compose_cmd(inner: str, outer: str, structured: bool):
    """INNER then OUTER; INNER's width must equal the count of OUTER's ones."""
    _binary("compose", compose, inner, outer, structured)


@thin.command("thicken")
@click.argument("ph")
@click.argument("th")
@structured_option
@command_errors("thin thicken")
def thicken_cmd(ph: str, th: str, structured: bool):
    """Factor TH through PH, printing "absent" when it does not factor."""
    found = thicken(parse(ph), parse(th))
    result = None if found is None else render(found)
    if structured:
        emit_record("thin thicken", {"patterns": [ph, th]}, result=result)
    else:
        click.echo("absent" if result is None else result)


@thin.command("kept")
@click.argument("pattern")
@structured_option
@command_errors("thin kept")
def kept_cmd(pattern: str, structured: bool):
    """Number of kept variables (the small end)."""
    count = kept(parse(pattern))
    if structured:
        emit_record("thin kept", {"pattern": pattern}, result=count)
    else:
        click.echo(str(count))


@thin.command("render")
@click.argument("patterns", nargs=-1, required=True)
@click.option("--dump", is_flag=True, help="Print the {bigEnd, encoding} record instead.")
@structured_option
@command_errors("thin render")
def render_cmd(patterns: Tuple[str, ...], dump: bool, structured: bool):
    """Re-render patterns canonically, or dump their structured form."""
    parsed = [parse(p) for p in patterns]
    if structured:
        result = [to_dict(t) if dump else render(t) for t in parsed]
        emit_record("thin render", {"patterns": list(patterns), "dump": dump}, result=result)
        return
    for t in parsed:
        click.echo(json.dumps(to_dict(t), sort_keys=True) if dump else render(t))
