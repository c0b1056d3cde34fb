"""`thinnings config ...`: inspect and edit the YAML settings file."""

from typing import Optional, cast

import click

from packed_thinnings.cli.base import (
    ThinningsGroup,
    command_errors,
    emit_record,
    settings_from,
    structured_option,
)
from packed_thinnings.cli.rich_utils import print_info, print_table
from packed_thinnings.config import ThinningsSettings, load_config, save_config
from packed_thinnings.config.yaml import ConfigManager
from packed_thinnings.errors import ThinningsError

SETTING_KEYS = tuple(ThinningsSettings.model_fields)


def _config_path(ctx: click.Context) -> Optional[str]:
    obj = ctx.find_root().obj
    return obj.get("config_path") if isinstance(obj, dict) else None


def _check_key(key: str) -> None:
    if key not in SETTING_KEYS:
        raise ThinningsError(
            f"Unknown setting {key!r}; expected one of {', '.join(SETTING_KEYS)}",
            {"key": key, "valid": list(SETTING_KEYS)},
        )


@click.group(cls=ThinningsGroup)
def config():
    """Settings as the other commands see them, and the file they come from."""


@config.command("show")
@structured_option
@click.pass_context
@command_errors("config show")
def show_cmd(ctx: click.Context, structured: bool):
    """Print every effective setting."""
    settings = settings_from(ctx)
    path = str(ConfigManager(_config_path(ctx)).path)
    if structured:
        emit_record("config show", {"path": path}, result=settings.model_dump())
        return
    print_table(
        [{"setting": key, "value": value} for key, value in settings.model_dump().items()],
        title=path,
    )


@config.command("get")
@click.argument("key")
@structured_option
@click.pass_context
@command_errors("config get")
def get_cmd(ctx: click.Context, key: str, structured: bool):
    """Print one effective setting."""
    _check_key(key)
    value = settings_from(ctx).get(key)
    if structured:
        emit_record("config get", {"key": key}, result=value)
    else:
        click.echo(value)


@config.command("set")
@click.argument("key")
@click.argument("value")
@structured_option
@click.pass_context
@command_errors("config set")
def set_cmd(ctx: click.Context, key: str, value: str, structured: bool):
    """Validate a new value and write the settings file with it."""
    _check_key(key)
    path = _config_path(ctx)
    current = cast(ThinningsSettings, load_config(ThinningsSettings, path))
    updated = ThinningsSettings(**{**current.model_dump(), key: value})
    target = ConfigManager(path).path
    try:
        save_config(updated, path)
    except OSError as e:
        raise ThinningsError(f"Cannot write {target}: {e}", {"path": str(target)}) from e
    new_value = updated.get(key)
    if structured:
        emit_record("config set", {"key": key, "value": value}, result=new_value)
    else:
        print_info(f"{key} = {new_value} written to {target}")
