import json
import logging
from pathlib import Path
from typing import Tuple, Union

import numpy as np
from pydantic import ValidationError

from app.core.salience import SalienceModel
from app.exceptions import CheckpointError
from app.schemas.model import ModelCheckpoint, TrainConfig

logger = logging.getLogger(__name__)


class ModelRepository:
    """
    Repository for salience-head checkpoints stored as a single JSON document.

    Example:
        repo = ModelRepository("model.json")
        repo.save(model, TrainConfig())
        model, config = repo.load()
    """

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)

    def save(self, model: SalienceModel, train_config: TrainConfig = TrainConfig()) -> ModelCheckpoint:
        """
        Write the model weights, dims and the training configuration.

        Raises:
            CheckpointError: If the file cannot be written
        """
        checkpoint = ModelCheckpoint(
            input_dim=model.input_dim,
            hidden_dim=model.hidden_dim,
            dropout_p=model.dropout_p,
            W1=model.W1.ravel().tolist(),
            b1=model.b1.tolist(),
            w2=model.w2.tolist(),
            b2=float(model.b2),
            train_config=train_config,
        )
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("w", encoding="utf-8", newline="\n") as handle:
                handle.write(checkpoint.model_dump_json(indent=2) + "\n")
        except OSError as e:
            logger.error(f"Cannot write checkpoint {self.path}: {e}")
            raise CheckpointError(self.path, f"cannot write checkpoint: {e}") from e

        logger.info(f"Saved salience head ({model.input_dim}->{model.hidden_dim}->1) to {self.path}")
        return checkpoint

    def load(self) -> Tuple[SalienceModel, TrainConfig]:
        """
        Read a checkpoint back into a model.

        Returns:
            Tuple[SalienceModel, TrainConfig]: The model and the config it was trained with

        Raises:
            CheckpointError: If the file is missing, not JSON, or has inconsistent shapes
        """
        try:
            with self.path.open("r", encoding="utf-8") as handle:
                payload = json.load(handle)
        except (OSError, UnicodeDecodeError) as e:
            raise CheckpointError(self.path, f"cannot read checkpoint: {e}") from e
        except json.JSONDecodeError as e:
            raise CheckpointError(self.path, f"invalid JSON: {e.msg}") from e

        try:
            checkpoint = ModelCheckpoint.model_validate(payload)
        except ValidationError as e:
            first = e.errors()[0]
            raise CheckpointError(self.path, f"invalid checkpoint: {first['msg']}") from e

        model = SalienceModel(
            W1=np.array(checkpoint.W1).reshape(checkpoint.hidden_dim, checkpoint.input_dim),
            b1=np.array(checkpoint.b1),
            w2=np.array(checkpoint.w2),
            b2=checkpoint.b2,
            dropout_p=checkpoint.dropout_p,
        )
        logger.info(f"Loaded salience head ({model.input_dim}->{model.hidden_dim}->1) from {self.path}")
        return model, checkpoint.train_config


def save_model(model: SalienceModel, path: Union[str, Path], train_config: TrainConfig = TrainConfig()) -> ModelCheckpoint:
    return ModelRepository(path).save(model, train_config)


def load_model(path: Union[str, Path]) -> SalienceModel:
    model, _ = ModelRepository(path).load()
    return model
