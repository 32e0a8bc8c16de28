"""
Logging Setup
Routes every module logger to a rich handler on standard error
"""
import logging
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

from .config import settings

# Standard output is reserved for certificate envelopes
stderr_console = Console(stderr=True)


def configure_logging(level: Optional[str] = None) -> None:
    """Install a RichHandler on the root logger (idempotent)"""
    root = logging.getLogger()
    root.setLevel(settings.get_log_level(level))
    for handler in root.handlers:
        if isinstance(handler, RichHandler):
            return
    handler = RichHandler(
        console=stderr_console,
        show_time=False,
        show_path=False,
        rich_tracebacks=False,
    )
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    root.addHandler(handler)
