from typing import List, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.config import (
    DEFAULT_ADAM_EPS,
    DEFAULT_BATCH_SIZE,
    DEFAULT_BETA1,
    DEFAULT_BETA2,
    DEFAULT_EPOCHS,
    DEFAULT_LEARNING_RATE,
    DEFAULT_LOSS,
    DEFAULT_SEED,
)

CHECKPOINT_VERSION = "salience-head/1"


class TrainConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    epochs: int = Field(DEFAULT_EPOCHS, ge=0)
    batch_size: int = Field(DEFAULT_BATCH_SIZE, ge=1)
    learning_rate: float = Field(DEFAULT_LEARNING_RATE, gt=0)
    beta1: float = Field(DEFAULT_BETA1, gt=0, lt=1)
    beta2: float = Field(DEFAULT_BETA2, gt=0, lt=1)
    eps: float = Field(DEFAULT_ADAM_EPS, gt=0)
    loss: Literal["bce", "mse"] = DEFAULT_LOSS
    seed: int = DEFAULT_SEED


class ModelCheckpoint(BaseModel):
    """On-disk form of a salience head: dims, row-major weights and a config echo."""

    version: str = CHECKPOINT_VERSION
    input_dim: int = Field(ge=1)
    hidden_dim: int = Field(ge=1)
    dropout_p: float = Field(ge=0, lt=1)
    W1: List[float]
    b1: List[float]
    w2: List[float]
    b2: float
    train_config: TrainConfig = TrainConfig()

    @model_validator(mode="after")
    def check_shapes(self) -> "ModelCheckpoint":
        if self.version != CHECKPOINT_VERSION:
            raise ValueError(f"unsupported checkpoint version '{self.version}'")
        if len(self.W1) != self.hidden_dim * self.input_dim:
            raise ValueError("W1 size does not match hidden_dim x input_dim")
        if len(self.b1) != self.hidden_dim or len(self.w2) != self.hidden_dim:
            raise ValueError("b1/w2 size does not match hidden_dim")
        return self
