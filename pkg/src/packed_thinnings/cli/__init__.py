"""
CLI

The `thinnings` command and the rich terminal helpers it prints with.
"""

from packed_thinnings.cli.base import ThinningsGroup, command_errors, emit_record
from packed_thinnings.cli.main import cli
from packed_thinnings.cli.rich_utils import (
    format_ratio,
    print_info,
    print_table,
    print_warning,
)

__all__ = [
    "cli",
    "ThinningsGroup",
    "command_errors",
    "emit_record",
    "print_table",
    "print_warning",
    "print_info",
    "format_ratio",
]
