import logging
from pathlib import Path
from typing import Dict, Union

import numpy as np

from app.core.embeddings import WordVectorStore
from app.exceptions import VectorFormatError

logger = logging.getLogger(__name__)


class VectorRepository:
    """
    Repository for plain-text vector files.

    The first line is "count dim"; every following line is "key v1 ... v_dim".
    Word vectors are keyed by word, tweet-vector sidecars by tweet id.

    Example:
        store = VectorRepository("app/data/fixtures/word_vectors.txt").load()
    """

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)

    def _parse_header(self, line: str) -> tuple:
        parts = line.split()
        if len(parts) != 2:
            raise VectorFormatError(self.path, 1, "header must be 'count dim'")
        try:
            count, dim = int(parts[0]), int(parts[1])
        except ValueError as e:
            raise VectorFormatError(self.path, 1, "header values must be integers") from e
        if count < 0 or dim < 1:
            raise VectorFormatError(self.path, 1, f"invalid header count={count} dim={dim}")
        return count, dim

    def load(self) -> WordVectorStore:
        """
        Parse the file into a store.

        Returns:
            WordVectorStore: Vectors keyed by the first field of each row; a key
                             repeated on a later row replaces the earlier vector

        Raises:
            VectorFormatError: If the header is malformed, a row has the wrong width
                               or a non-numeric component, or the row count disagrees
                               with the header
        """
        try:
            with self.path.open("r", encoding="utf-8") as handle:
                lines = handle.read().splitlines()
        except (OSError, UnicodeDecodeError) as e:
            raise VectorFormatError(self.path, 0, f"cannot read vector file: {e}") from e

        if not lines:
            raise VectorFormatError(self.path, 1, "missing header line")
        count, dim = self._parse_header(lines[0])

        entries: Dict[str, np.ndarray] = {}
        rows = 0
        for line_no, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            parts = line.split()
            key, values = parts[0], parts[1:]
            if len(values) != dim:
                raise VectorFormatError(self.path, line_no, f"expected {dim} components, found {len(values)}")
            try:
                vector = np.array([float(value) for value in values], dtype=np.float64)
            except ValueError as e:
                raise VectorFormatError(self.path, line_no, f"non-numeric component: {e}") from e
            if not np.all(np.isfinite(vector)):
                raise VectorFormatError(self.path, line_no, "non-finite component")
            if key in entries:
                logger.warning(f"{self.path}:{line_no}: duplicate key '{key}', last row wins")
            entries[key] = vector
            rows += 1

        if rows != count:
            raise VectorFormatError(self.path, len(lines), f"header declares {count} row(s), found {rows}")

        logger.info(f"Loaded {len(entries)} vector(s) of dim {dim} from {self.path}")
        return WordVectorStore(dim=dim, entries=entries)

    def save(self, store: WordVectorStore) -> int:
        """Write a store in the same plain-text format, keys in insertion order."""
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("w", encoding="utf-8", newline="\n") as handle:
            handle.write(f"{len(store)} {store.dim}\n")
            for key, vector in store.entries.items():
                handle.write(key + " " + " ".join(repr(float(v)) for v in vector) + "\n")
        return len(store)


def load_word_vectors(path: Union[str, Path]) -> WordVectorStore:
    return VectorRepository(path).load()


def load_tweet_vectors(path: Union[str, Path]) -> WordVectorStore:
    """Load a tweet-vector sidecar file; rows are keyed by tweet id."""
    return VectorRepository(path).load()
