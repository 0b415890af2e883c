"""Run the command line via ``python -m vbereq``."""

from .cli import entrypoint

entrypoint()
