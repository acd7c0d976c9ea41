import json
import logging
from pathlib import Path
from typing import Generic, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from app.exceptions import CorpusFormatError

T = TypeVar("T", bound=BaseModel)

logger = logging.getLogger(__name__)


def render(report: BaseModel) -> str:
    """Stable JSON text of a report: two-space indent, trailing newline."""
    return report.model_dump_json(indent=2) + "\n"


class ReportRepository(Generic[T]):
    """
    Repository for single-document JSON reports (summaries, evaluations, training runs).

    Attributes:
        path (Path): Report file
        model_class (Type[T]): Report schema
    """

    def __init__(self, path: Union[str, Path], model_class: Type[T]):
        self.path = Path(path)
        self.model_class = model_class

    def save(self, report: T) -> Path:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("w", encoding="utf-8", newline="\n") as handle:
            handle.write(render(report))
        logger.info(f"Wrote {self.model_class.__name__} to {self.path}")
        return self.path

    def load(self) -> T:
        """
        Raises:
            CorpusFormatError: If the file is unreadable, not JSON, or not a valid report
        """
        try:
            with self.path.open("r", encoding="utf-8") as handle:
                payload = json.load(handle)
        except (OSError, UnicodeDecodeError) as e:
            raise CorpusFormatError(self.path, 0, f"cannot read report: {e}") from e
        except json.JSONDecodeError as e:
            raise CorpusFormatError(self.path, e.lineno, f"invalid JSON: {e.msg}") from e

        try:
            return self.model_class.model_validate(payload)
        except ValidationError as e:
            first = e.errors()[0]
            field = ".".join(str(part) for part in first["loc"]) or "report"
            raise CorpusFormatError(self.path, 0, f"{field}: {first['msg']}") from e
