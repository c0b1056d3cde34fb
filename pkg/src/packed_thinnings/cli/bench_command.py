"""`thinnings bench`: packed against oracle timings."""

from typing import Optional

import click

from packed_thinnings.bench import OPS, run_benchmarks
from packed_thinnings.cli.base import (
    command_errors,
    emit_record,
    parse_int_list,
    parse_name_list,
    settings_from,
    structured_option,
)
from packed_thinnings.cli.rich_utils import format_ratio, print_table, print_warning
from packed_thinnings.config import get_preset, list_presets

DEFAULTS = {"widths": [64], "ops": ["join"], "iters": 1000, "seed": 7, "density": 0.5}


@click.command("bench")
@click.option("--widths", default=None, help="Comma-separated widths, e.g. 64,1024,4096.")
@click.option("--ops", default=None, help=f"Comma-separated ops from: {', '.join(OPS)}.")
@click.option("--iters", type=int, default=None, help="Operations per timed batch.")
@click.option("--seed", type=int, default=None, help="Input generation seed.")
@click.option("--density", type=float, default=None, help="Probability a bit is set.")
@click.option("--batches", type=int, default=None, help="Timed batches (at least 3).")
@click.option("--preset", default=None, help="Named parameter set; explicit flags override it.")
@click.option(
    "--list-presets",
    "list_presets_flag",
    is_flag=True,
    default=False,
    help="Show the presets and exit.",
)
@structured_option
@click.pass_context
@command_errors("bench")
def bench(
    ctx: click.Context,
    widths: Optional[str],
    ops: Optional[str],
    iters: Optional[int],
    seed: Optional[int],
    density: Optional[float],
    batches: Optional[int],
    preset: Optional[str],
    list_presets_flag: bool,
    structured: bool,
):
    """Time thinning operations on packed thinnings and the step-list oracle."""
    if list_presets_flag:
        _show_presets(structured)
        return
    params = dict(DEFAULTS)
    if preset:
        params.update(get_preset(preset))
    if widths is not None:
        params["widths"] = parse_int_list(widths)
    if ops is not None:
        params["ops"] = parse_name_list(ops)
    for name, value in (("iters", iters), ("seed", seed), ("density", density)):
        if value is not None:
            params[name] = value

    report = run_benchmarks(
        params["widths"],
        params["ops"],
        iters=params["iters"],
        seed=params["seed"],
        density=params["density"],
        batches=batches if batches is not None else settings_from(ctx).bench_batches,
    )
    if structured:
        click.echo(report.model_dump_json())
        return
    print_table(
        [
            {
                "op": t.op,
                "width": t.width,
                "packed ns/op": f"{t.packed_ns_per_op:.1f}",
                "oracle ns/op": f"{t.oracle_ns_per_op:.1f}",
                "speedup": format_ratio(t.ratio),
            }
            for t in report.timings
        ],
        title=f"bench (iters {params['iters']}, seed {params['seed']})",
        markup_columns=["speedup"],
    )
    for t in report.timings:
        if t.ratio < 1.0:
            print_warning(f"{t.op}@{t.width}: packed slower than the oracle ({t.ratio:.2f}x)")


def _show_presets(structured: bool) -> None:
    presets = list_presets()
    if structured:
        emit_record("bench", {"list_presets": True}, result=presets)
        return
    print_table(
        [
            {"preset": name, "description": description, **get_preset(name)}
            for name, description in presets.items()
        ],
        title="bench presets",
    )
