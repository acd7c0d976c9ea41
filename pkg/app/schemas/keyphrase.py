from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.config import OUTPUT_VERSION


class KeyPhraseCandidate(BaseModel):
    """A maximal run of content words; span indexes the tweet's token sequence."""

    model_config = ConfigDict(frozen=True)

    words: Tuple[str, ...] = Field(min_length=1)
    start: int = Field(ge=0)
    end: int
    score: float = Field(0.0, ge=0)

    @property
    def span(self) -> Tuple[int, int]:
        return self.start, self.end

    @property
    def text(self) -> str:
        return " ".join(self.words)


class WordStats(BaseModel):
    model_config = ConfigDict(frozen=True)

    word: str
    freq: int = Field(ge=1)
    deg: int = Field(ge=1)
    s_wd: float = Field(gt=0)
    boosted: bool = False


class KeyPhraseResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    tweet_id: str
    phrase: Optional[KeyPhraseCandidate] = None
    all_candidates: Tuple[KeyPhraseCandidate, ...] = ()

    @property
    def none_found(self) -> bool:
        return self.phrase is None

    @property
    def words(self) -> Tuple[str, ...]:
        return self.phrase.words if self.phrase else ()


class KeyPhraseRecord(BaseModel):
    """One line of extract-keyphrases output."""

    version: str = OUTPUT_VERSION
    tweet_id: str
    words: Tuple[str, ...] = ()
    start: Optional[int] = None
    end: Optional[int] = None
    score: float = 0.0
    none_found: bool = False

    @model_validator(mode="after")
    def check_span(self) -> "KeyPhraseRecord":
        if self.none_found:
            return self
        if self.start is None or self.end is None:
            raise ValueError(f"tweet {self.tweet_id}: start and end are required unless none_found")
        if self.end <= self.start:
            raise ValueError(f"tweet {self.tweet_id}: empty span [{self.start}, {self.end})")
        return self

    @classmethod
    def from_result(cls, result: KeyPhraseResult) -> "KeyPhraseRecord":
        if result.phrase is None:
            return cls(tweet_id=result.tweet_id, none_found=True)
        return cls(
            tweet_id=result.tweet_id,
            words=result.phrase.words,
            start=result.phrase.start,
            end=result.phrase.end,
            score=result.phrase.score,
        )
