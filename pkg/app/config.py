import os
from pathlib import Path
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()

ENV_PREFIX = "CRISIS_SUMM_"
OUTPUT_VERSION = "1.0"

DATA_DIR = Path(__file__).parent / "data"
FIXTURE_DIR = DATA_DIR / "fixtures"
DEFAULT_STOPWORDS_PATH = DATA_DIR / "stopwords_en.txt"

# Experimental setup defaults
DEFAULT_MAX_TOKENS = 50
DEFAULT_BOOST = 2.0
DEFAULT_LAMBDA_SALIENCE = 0.2
DEFAULT_LAMBDA_SIMILARITY = 0.3
DEFAULT_EPOCHS = 3
DEFAULT_BATCH_SIZE = 128
DEFAULT_LEARNING_RATE = 1e-3
DEFAULT_BETA1 = 0.9
DEFAULT_BETA2 = 0.999
DEFAULT_ADAM_EPS = 1e-8
DEFAULT_DROPOUT = 0.5
DEFAULT_HIDDEN_DIM = 128
DEFAULT_LOSS = "bce"
DEFAULT_SEED = 0
DEFAULT_HASH_DIM = 256
DEFAULT_SUMMARY_LENGTH = 40
DEFAULT_SIMILARITY_AGGREGATION = "max"
DEFAULT_SIMILARITY_SPACE = "te"
DEFAULT_WORKERS = 1


def env_name(flag: str) -> str:
    """Environment variable that overrides a CLI flag, e.g. lambda-salience -> CRISIS_SUMM_LAMBDA_SALIENCE."""
    return ENV_PREFIX + flag.replace("-", "_").upper()


class PipelineConfig(BaseModel):
    """Effective configuration of one CLI invocation."""

    corpus: Optional[Path] = None
    gold: Optional[Path] = None
    ontology: Optional[Path] = None
    stopwords: Optional[Path] = None
    word_vectors: Optional[Path] = None
    tweet_vectors: Optional[Path] = None
    model: Optional[Path] = None
    summary: Optional[Path] = None
    pred: Optional[Path] = None
    out: Optional[Path] = None

    max_tokens: int = Field(DEFAULT_MAX_TOKENS, ge=1)
    boost: float = Field(DEFAULT_BOOST, gt=0)
    rake: bool = False
    corpus_stats: bool = False

    hash_dim: int = Field(DEFAULT_HASH_DIM, ge=1)
    seed: int = DEFAULT_SEED

    epochs: int = Field(DEFAULT_EPOCHS, ge=0)
    batch_size: int = Field(DEFAULT_BATCH_SIZE, ge=1)
    learning_rate: float = Field(DEFAULT_LEARNING_RATE, gt=0)
    beta1: float = Field(DEFAULT_BETA1, gt=0, lt=1)
    beta2: float = Field(DEFAULT_BETA2, gt=0, lt=1)
    dropout: float = Field(DEFAULT_DROPOUT, ge=0, lt=1)
    hidden_dim: int = Field(DEFAULT_HIDDEN_DIM, ge=1)
    loss: Literal["bce", "mse"] = DEFAULT_LOSS

    length: int = Field(DEFAULT_SUMMARY_LENGTH, ge=1)
    lambda_salience: float = Field(DEFAULT_LAMBDA_SALIENCE, ge=0, le=1)
    lambda_similarity: float = Field(DEFAULT_LAMBDA_SIMILARITY, ge=0, le=1)
    similarity_aggregation: Literal["max", "mean"] = DEFAULT_SIMILARITY_AGGREGATION
    similarity_space: Literal["te", "concat"] = DEFAULT_SIMILARITY_SPACE
    keep_replaced: bool = False

    workers: int = Field(DEFAULT_WORKERS, ge=1)


def config_from_env() -> PipelineConfig:
    """Defaults overlaid with every CRISIS_SUMM_* variable that names a config field."""
    overrides = {
        name: os.environ[env_name(name)]
        for name in PipelineConfig.model_fields
        if env_name(name) in os.environ
    }
    return PipelineConfig.model_validate(overrides)
