from typing import Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.config import (
    DEFAULT_LAMBDA_SALIENCE,
    DEFAULT_LAMBDA_SIMILARITY,
    DEFAULT_SIMILARITY_AGGREGATION,
    DEFAULT_SUMMARY_LENGTH,
)


class SummaryConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    length: int = Field(DEFAULT_SUMMARY_LENGTH, ge=1)
    lambda_salience: float = Field(DEFAULT_LAMBDA_SALIENCE, ge=0, le=1)
    lambda_similarity: float = Field(DEFAULT_LAMBDA_SIMILARITY, ge=0, le=1)
    aggregation: Literal["max", "mean"] = DEFAULT_SIMILARITY_AGGREGATION


class Summary(BaseModel):
    """Selected tweets in selection order with their salience scores."""

    model_config = ConfigDict(frozen=True)

    tweet_ids: Tuple[str, ...] = ()
    scores: Tuple[float, ...] = ()

    @model_validator(mode="after")
    def check_parallel(self) -> "Summary":
        if len(self.tweet_ids) != len(self.scores):
            raise ValueError("tweet_ids and scores must have the same length")
        if any(later > earlier for earlier, later in zip(self.scores, self.scores[1:])):
            raise ValueError("summary scores must be non-increasing")
        return self

    def __len__(self) -> int:
        return len(self.tweet_ids)
