"""Versioned JSON documents written by the CLI commands."""
from typing import List, Optional

from pydantic import BaseModel, Field

from app.config import OUTPUT_VERSION
from app.schemas.keyphrase import KeyPhraseRecord
from app.schemas.metrics import KeyphraseEvalReport, RougeReport
from app.schemas.model import TrainConfig


class TrainReport(BaseModel):
    version: str = OUTPUT_VERSION
    model_path: Optional[str] = None
    input_dim: int
    hidden_dim: int
    tweets: int
    positives: int
    oov_tweets: int = 0
    epoch_losses: List[float] = []
    train_accuracy: float = Field(ge=0, le=1)
    train_config: TrainConfig


class SummaryEntry(BaseModel):
    tweet_id: str
    score: float
    text: str


class SummaryReport(BaseModel):
    version: str = OUTPUT_VERSION
    length: int
    lambda_salience: float
    lambda_similarity: float
    aggregation: str
    similarity_space: str
    candidates: int
    warning: Optional[str] = None
    tweets: List[SummaryEntry] = []

    @property
    def tweet_ids(self) -> List[str]:
        return [entry.tweet_id for entry in self.tweets]


class EvaluationReport(BaseModel):
    version: str = OUTPUT_VERSION
    summary_tweets: int
    gold_tweets: int
    keep_replaced: bool = False
    rouge: RougeReport
    warning: Optional[str] = None


class KeyphraseEvaluation(KeyphraseEvalReport):
    version: str = OUTPUT_VERSION
    predictions: int
    gold_spans: int


class PipelineReport(BaseModel):
    version: str = OUTPUT_VERSION
    corpus: str
    tweets: int
    keyphrases: List[KeyPhraseRecord] = []
    training: Optional[TrainReport] = None
    summary: SummaryReport
    evaluation: Optional[EvaluationReport] = None
