import functools
import logging
from typing import Any, Callable

import click
import typer
from pydantic import ValidationError
from rich.console import Console

from app.exceptions import PipelineError

logger = logging.getLogger(__name__)

console = Console(stderr=True)


def handle_pipeline_errors(func: Callable) -> Callable:
    """
    A decorator that turns pipeline failures into a one-line diagnostic and an exit status.

    Expected failures (bad files, unknown ids, diverged training, invalid settings)
    exit with status 1; anything else is logged with its traceback and exits with
    status 2. Usage errors raised by click keep their own handling.

    Example:
        @handle_pipeline_errors
        def summarize(corpus: options.Corpus, ...):
            ...
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> Any:
        try:
            return func(*args, **kwargs)
        except (typer.Exit, typer.Abort, click.ClickException):
            raise
        except (PipelineError, ValidationError) as e:
            logger.error(f"{func.__name__} failed: {e}")
            console.print(f"[bold red]error:[/bold red] {e}", markup=True, highlight=False)
            raise typer.Exit(code=1)
        except Exception as e:
            logger.error(f"Unexpected error in {func.__name__}: {e}", exc_info=True)
            console.print(f"[bold red]unexpected error:[/bold red] {type(e).__name__}: {e}", highlight=False)
            raise typer.Exit(code=2)

    return wrapper
