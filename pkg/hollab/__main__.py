"""Entry point for ``python -m hollab``."""

from .cli import cli

if __name__ == "__main__":
    cli()
