"""
Logging configuration for the application.
"""
import logging

from rich.console import Console
from rich.logging import RichHandler


def setup_logging(level: int = logging.WARNING) -> None:
    """
    Configure global logging settings.

    Records go to stderr; stdout carries coloring documents and reports.

    Args:
        level: The logging level to use. Defaults to WARNING.
    """
    root = logging.getLogger()
    # Avoid adding handlers if they already exist to prevent duplicate logs
    if root.handlers:
        root.setLevel(level)
        return

    logging.basicConfig(
        level=level,
        format="(%(name)-15s): %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)]
    )
