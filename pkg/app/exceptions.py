"""
Pipeline Errors
===============

Every error raised by the summarization pipeline derives from PipelineError,
which is a ValueError so callers that only care about bad input can keep
catching ValueError. Each subclass carries the file, line or id that caused it.
"""
from pathlib import Path
from typing import Optional, Union

PathLike = Union[str, Path]


class PipelineError(ValueError):
    """Base class for all expected pipeline failures."""


class CorpusFormatError(PipelineError):
    """A corpus, gold or annotation file line could not be parsed."""

    def __init__(self, path: PathLike, line_no: int, reason: str):
        self.path = str(path)
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"{self.path}:{line_no}: {reason}")


class DuplicateTweetError(PipelineError):
    """Two records share the same tweet id."""

    def __init__(self, tweet_id: str, path: Optional[PathLike] = None, line_no: Optional[int] = None):
        self.tweet_id = tweet_id
        self.path = str(path) if path is not None else None
        self.line_no = line_no
        location = f"{self.path}:{line_no}: " if self.path else ""
        super().__init__(f"{location}duplicate tweet id '{tweet_id}'")


class UnknownTweetError(PipelineError):
    """A referenced tweet id does not resolve in the corpus."""

    def __init__(self, tweet_id: str, path: Optional[PathLike] = None):
        self.tweet_id = tweet_id
        self.path = str(path) if path is not None else None
        location = f"{self.path}: " if self.path else ""
        super().__init__(f"{location}tweet id '{tweet_id}' not found in corpus")


class LexiconError(PipelineError):
    """A stopword or ontology file could not be read."""

    def __init__(self, path: PathLike, reason: str):
        self.path = str(path)
        super().__init__(f"{self.path}: {reason}")


class VectorFormatError(PipelineError):
    """A plain-text vector file is malformed."""

    def __init__(self, path: PathLike, line_no: int, reason: str):
        self.path = str(path)
        self.line_no = line_no
        super().__init__(f"{self.path}:{line_no}: {reason}")


class EmbeddingMissError(PipelineError):
    """No embedding is available for a tweet id."""

    def __init__(self, tweet_id: str):
        self.tweet_id = tweet_id
        super().__init__(f"no embedding for tweet id '{tweet_id}'")


class DimensionMismatchError(PipelineError):
    """Vector or matrix dimensions disagree."""

    def __init__(self, expected: int, actual: int, what: str = "vector"):
        self.expected = expected
        self.actual = actual
        super().__init__(f"{what} dimension mismatch: expected {expected}, got {actual}")


class SpanError(PipelineError):
    """A token span falls outside its tweet."""

    def __init__(self, tweet_id: str, start: int, end: int, length: Optional[int] = None):
        self.tweet_id = tweet_id
        self.start = start
        self.end = end
        bound = f" (tweet has {length} tokens)" if length is not None else ""
        super().__init__(f"span [{start}, {end}) invalid for tweet '{tweet_id}'{bound}")


class TrainingError(PipelineError):
    """Training cannot proceed or diverged."""


class CheckpointError(PipelineError):
    """A model checkpoint could not be read or written."""

    def __init__(self, path: PathLike, reason: str):
        self.path = str(path)
        super().__init__(f"{self.path}: {reason}")
