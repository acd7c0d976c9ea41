import logging
from pathlib import Path
from typing import Iterable, Optional

import typer
from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from app.repositories.report_repository import render

logger = logging.getLogger(__name__)

console = Console(stderr=True)


def emit(report: BaseModel, out: Optional[Path] = None):
    """Write a report as JSON to the out file, or to stdout when no file is given."""
    text = render(report)
    if out is None:
        typer.echo(text, nl=False)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    console.print(f"Wrote {out}", highlight=False)


def emit_lines(records: Iterable[BaseModel], out: Optional[Path] = None):
    """Write records as JSON lines to the out file, or to stdout."""
    lines = [record.model_dump_json(exclude_none=True) + "\n" for record in records]
    if out is None:
        typer.echo("".join(lines), nl=False)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", encoding="utf-8", newline="\n") as handle:
        handle.writelines(lines)
    console.print(f"Wrote {len(lines)} record(s) to {out}", highlight=False)


def table(title: str, columns: Iterable[str], rows: Iterable[Iterable[object]]):
    """Human-readable view of a result, printed on stderr."""
    view = Table(title=title, title_justify="left")
    for column in columns:
        view.add_column(column)
    for row in rows:
        view.add_row(*(str(value) for value in row))
    console.print(view)
