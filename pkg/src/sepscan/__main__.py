"""Allow ``python -m sepscan``."""

from .cli import run

run()
