import logging
from typing import List, Optional, Tuple

from app.config import PipelineConfig
from app.core.embeddings import FeatureSet, build_features
from app.core.salience import SalienceModel, accuracy, init_model, train, training_matrix
from app.exceptions import TrainingError
from app.repositories.corpus_repository import derive_labels, load_gold_summary
from app.repositories.model_repository import save_model
from app.schemas.corpus import Corpus
from app.schemas.keyphrase import KeyPhraseResult
from app.schemas.model import TrainConfig
from app.schemas.reports import TrainReport
from app.tasks.keyphrase_task import KeyphraseTask, keyphrases_by_id

logger = logging.getLogger(__name__)


def train_config_from(config: PipelineConfig) -> TrainConfig:
    return TrainConfig(
        epochs=config.epochs,
        batch_size=config.batch_size,
        learning_rate=config.learning_rate,
        beta1=config.beta1,
        beta2=config.beta2,
        loss=config.loss,
        seed=config.seed,
    )


class TrainTask(KeyphraseTask):
    """
    Task for fitting the salience head on a corpus labeled by a gold summary.
    """

    name = "train"

    def label(self, corpus: Corpus) -> Corpus:
        with self.stage("derive labels"):
            gold = load_gold_summary(self.require("gold"), corpus)
            return derive_labels(corpus, gold)

    def features(self, corpus: Corpus, results: Optional[List[KeyPhraseResult]] = None) -> FeatureSet:
        if results is None:
            results = self.extract(corpus)
        provider, store = self.embedding_sources()
        with self.stage("build features"):
            return build_features(corpus, keyphrases_by_id(results), provider, store,
                                  self.config.similarity_space)

    def fit(self, corpus: Corpus, features: FeatureSet) -> Tuple[SalienceModel, TrainReport]:
        """
        Train a fresh head on a labeled corpus.

        Returns:
            Tuple[SalienceModel, TrainReport]: Trained model and the run summary
        """
        if not len(corpus):
            raise TrainingError("cannot train on an empty corpus")
        train_config = train_config_from(self.config)
        model = init_model(features.input_dim, self.config.hidden_dim, self.config.seed, self.config.dropout)
        with self.stage("train salience head"):
            result = train(model, corpus, features, train_config)

        X, y = training_matrix(corpus, features)
        report = TrainReport(
            input_dim=model.input_dim,
            hidden_dim=model.hidden_dim,
            tweets=len(corpus),
            positives=int(y.sum()),
            oov_tweets=len(features.oov_ids),
            epoch_losses=result.epoch_losses,
            train_accuracy=accuracy(result.model, X, y) if len(y) else 0.0,
            train_config=train_config,
        )
        return result.model, report

    def run(self) -> Tuple[SalienceModel, TrainReport]:
        corpus = self.load_corpus()
        corpus = self.label(corpus)
        features = self.features(corpus)
        model, report = self.fit(corpus, features)
        if self.config.out is not None:
            with self.stage("save model"):
                save_model(model, self.config.out, report.train_config)
            report = report.model_copy(update={"model_path": str(self.config.out)})
        return model, report
