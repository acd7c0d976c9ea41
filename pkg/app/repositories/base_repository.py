import json
import logging
from pathlib import Path
from typing import Generic, Iterable, Iterator, List, Tuple, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from app.exceptions import CorpusFormatError

T = TypeVar("T", bound=BaseModel)

logger = logging.getLogger(__name__)


class BaseRepository(Generic[T]):
    """
    Base repository class for line-delimited record files.

    This class serves as a foundation for specific repository implementations,
    providing common read and write operations over files holding one JSON
    object per line, validated against a pydantic record class.

    Attributes:
        path (Path): Location of the backing file
        model_class (Type[T]): The pydantic model each line is validated against
    """

    def __init__(self, path: Union[str, Path], model_class: Type[T]):
        """
        Initialize repository with a file path and record class.

        Parameters:
            path (str | Path): Location of the backing file
            model_class (Type[T]): The pydantic model each line is validated against
        """
        self.path = Path(path)
        self.model_class = model_class

    def iter_lines(self) -> Iterator[Tuple[int, str]]:
        """
        Yield (line number, stripped line) for every non-blank line.

        Raises:
            CorpusFormatError: If the file cannot be opened or decoded as UTF-8
        """
        try:
            with self.path.open("r", encoding="utf-8") as handle:
                for line_no, line in enumerate(handle, start=1):
                    stripped = line.strip()
                    if stripped:
                        yield line_no, stripped
        except OSError as e:
            raise CorpusFormatError(self.path, 0, f"cannot read file: {e}") from e
        except UnicodeDecodeError as e:
            raise CorpusFormatError(self.path, 0, f"not valid UTF-8: {e}") from e

    def read_records(self) -> List[Tuple[int, T]]:
        """
        Parse every line of the file into a record.

        Returns:
            List[Tuple[int, T]]: Records paired with the line they came from

        Raises:
            CorpusFormatError: If a line is not valid JSON or fails validation
        """
        records = []
        for line_no, line in self.iter_lines():
            try:
                payload = json.loads(line)
            except json.JSONDecodeError as e:
                raise CorpusFormatError(self.path, line_no, f"invalid JSON: {e.msg}") from e
            try:
                records.append((line_no, self.model_class.model_validate(payload)))
            except ValidationError as e:
                first = e.errors()[0]
                field = ".".join(str(part) for part in first["loc"]) or "record"
                raise CorpusFormatError(self.path, line_no, f"{field}: {first['msg']}") from e

        logger.debug(f"Read {len(records)} {self.model_class.__name__} record(s) from {self.path}")
        return records

    def write_records(self, records: Iterable[T]) -> int:
        """
        Write records, one JSON object per line, LF line endings.

        Fields left at None are omitted so optional keys stay absent.

        Returns:
            int: Number of records written
        """
        count = 0
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("w", encoding="utf-8", newline="\n") as handle:
            for record in records:
                payload = record.model_dump(mode="json", exclude_none=True)
                handle.write(json.dumps(payload, ensure_ascii=False) + "\n")
                count += 1

        logger.info(f"Wrote {count} {self.model_class.__name__} record(s) to {self.path}")
        return count


def read_term_lines(path: Union[str, Path]) -> List[Tuple[int, str]]:
    """
    Read a one-entry-per-line text file where '#' starts a comment line.

    Returns:
        List[Tuple[int, str]]: (line number, stripped entry) for every non-comment, non-blank line

    Raises:
        OSError, UnicodeDecodeError: Propagated for the caller to wrap
    """
    entries = []
    with Path(path).open("r", encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            entries.append((line_no, stripped))
    return entries
