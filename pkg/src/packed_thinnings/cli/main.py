"""
Command-Line Entry Point

`thinnings` root group: loads settings, installs logging, and registers the
thin, term, bench and config commands.
"""

import logging
from typing import Optional, cast

import click
from rich.console import Console
from rich.logging import RichHandler

from packed_thinnings import __version__
from packed_thinnings.cli.base import ThinningsGroup
from packed_thinnings.cli.bench_command import bench
from packed_thinnings.cli.config_commands import config
from packed_thinnings.cli.term_commands import term
from packed_thinnings.cli.thin_commands import thin
from packed_thinnings.config import ThinningsSettings, load_config, set_debug_checks

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def setup_logging(level: str) -> None:
    """Route library logs through rich on stderr."""
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


@click.group(cls=ThinningsGroup)
@click.version_option(version=__version__, prog_name="thinnings")
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="YAML settings file (default: $THINNINGS_CONFIG or ./thinnings.yaml).",
)
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=None,
    help="Override the configured log level.",
)
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], log_level: Optional[str]):
    """Packed thinnings and co-de Bruijn terms."""
    settings = cast(ThinningsSettings, load_config(ThinningsSettings, config_path))
    if log_level:
        settings.log_level = log_level.upper()
    setup_logging(settings.log_level)
    set_debug_checks(settings.debug_checks)
    ctx.ensure_object(dict)
    ctx.obj["settings"] = settings
    ctx.obj["config_path"] = config_path


cli.add_command(thin)
cli.add_command(term)
cli.add_command(bench)
cli.add_command(config)


if __name__ == "__main__":
    cli()
