"""`thinnings term ...`: conversion, alpha-equivalence, reduction and CSE."""

from typing import Optional

import click

from packed_thinnings.cli.base import (
    ThinningsGroup,
    command_errors,
    emit_record,
    parse_scope,
    read_expression,
    scope_option,
    settings_from,
    structured_option,
)
from packed_thinnings.cli.rich_utils import print_info, print_table
from packed_thinnings.errors import FuelExhaustedError
from packed_thinnings.terms import (
    OpenTerm,
    alpha_eq,
    cse_scan,
    from_named,
    from_named_open,
    normalize,
    parse_named,
    show_debruijn,
    show_named,
    show_open,
    to_debruijn,
    to_named_open,
)
from packed_thinnings.thin import Scope

EQUAL_EXIT = 0
NOT_EQUAL_EXIT = 3


def _load(source: str, scope: Scope) -> OpenTerm:
    return from_named_open(scope, parse_named(read_expression(source)))


@click.group(cls=ThinningsGroup)
def term():
    """Untyped lambda terms: `\\x. t`, application by juxtaposition."""


@term.command("show")
@click.argument("source")
@click.option(
    "--as",
    "syntax",
    type=click.Choice(["named", "debruijn", "codebruijn"]),
    default="named",
    show_default=True,
    help="Syntax to print the term in.",
)
@scope_option
@structured_option
@click.pass_context
@command_errors("term show")
def show_cmd(ctx: click.Context, source: str, syntax: str, scope: str, structured: bool):
    """Print a term (inline or from a file) in the chosen syntax."""
    sc = parse_scope(scope)
    named = parse_named(read_expression(source))
    if syntax == "debruijn":
        text = show_debruijn(from_named(sc, named))
    elif syntax == "codebruijn":
        text = show_open(from_named_open(sc, named))
    else:
        base = settings_from(ctx).fresh_name_base
        text = show_named(to_named_open(sc, from_named_open(sc, named), base))
    if structured:
        emit_record(
            "term show", {"source": source, "as": syntax, "scope": list(sc.names)}, result=text
        )
    else:
        click.echo(text)


@term.command("alpha-eq")
@click.argument("left")
@click.argument("right")
@scope_option
@structured_option
@command_errors("term alpha-eq")
def alpha_eq_cmd(left: str, right: str, scope: str, structured: bool):
    """Exit 0 if the two terms are alpha-equivalent, 3 if not."""
    sc = parse_scope(scope)
    equal = alpha_eq(_load(left, sc), _load(right, sc))
    if structured:
        emit_record(
            "term alpha-eq", {"left": left, "right": right, "scope": list(sc.names)}, result=equal
        )
    else:
        click.echo("equal" if equal else "not equal")
    click.get_current_context().exit(EQUAL_EXIT if equal else NOT_EQUAL_EXIT)


@term.command("normalize")
@click.argument("source")
@click.option("--fuel", type=click.IntRange(min=0), default=None, help="Step limit.")
@scope_option
@structured_option
@click.pass_context
@command_errors("term normalize")
def normalize_cmd(
    ctx: click.Context, source: str, fuel: Optional[int], scope: str, structured: bool
):
    """Beta-reduce leftmost-outermost; exit 4 if fuel runs out."""
    settings = settings_from(ctx)
    limit = settings.default_fuel if fuel is None else fuel
    sc = parse_scope(scope)
    result = normalize(_load(source, sc), limit)
    if not result.normalized:
        raise FuelExhaustedError(limit, result.steps)
    named = show_named(to_named_open(sc, result.term, settings.fresh_name_base))
    if structured:
        emit_record(
            "term normalize",
            {"source": source, "fuel": limit, "scope": list(sc.names)},
            result={
                "named": named,
                "debruijn": show_debruijn(to_debruijn(result.term)),
                "steps": result.steps,
            },
        )
    else:
        click.echo(named)


@term.command("cse")
@click.argument("source")
@click.option("--min-size", type=click.IntRange(min=1), default=1, show_default=True)
@scope_option
@structured_option
@command_errors("term cse")
def cse_cmd(source: str, min_size: int, scope: str, structured: bool):
    """Report alpha-equivalent subterms that occur more than once."""
    sc = parse_scope(scope)
    report = cse_scan(_load(source, sc), min_size)
    if structured:
        emit_record(
            "term cse",
            {"source": source, "min_size": min_size, "scope": list(sc.names)},
            result=report.model_dump(),
        )
        return
    if not report.groups:
        print_info("No repeated subterms")
        return
    print_table(
        [
            {
                "size": g.size,
                "count": g.count,
                "key": g.key,
                "paths": ", ".join(o.path or "(root)" for o in g.occurrences),
            }
            for g in report.groups
        ],
        title=f"Repeated subterms (min size {min_size})",
    )
