import logging
from typing import Optional

from app.config import PipelineConfig
from app.core.embeddings import FeatureSet
from app.core.salience import SalienceModel, score_corpus
from app.core.summarizer import rank_candidates, select_summary
from app.exceptions import DimensionMismatchError
from app.repositories.model_repository import ModelRepository
from app.schemas.corpus import Corpus
from app.schemas.reports import SummaryEntry, SummaryReport
from app.schemas.summary import SummaryConfig
from app.tasks.train_task import TrainTask

logger = logging.getLogger(__name__)


def summary_config_from(config: PipelineConfig) -> SummaryConfig:
    return SummaryConfig(
        length=config.length,
        lambda_salience=config.lambda_salience,
        lambda_similarity=config.lambda_similarity,
        aggregation=config.similarity_aggregation,
    )


class SummarizeTask(TrainTask):
    """
    Task for scoring a corpus with a trained head and selecting the summary.
    """

    name = "summarize"

    def load_model(self) -> SalienceModel:
        with self.stage("load model"):
            model, _ = ModelRepository(self.require("model")).load()
        return model

    def summarize(self, corpus: Corpus, features: FeatureSet, model: SalienceModel) -> SummaryReport:
        """
        Score every tweet and run greedy selection.

        Raises:
            DimensionMismatchError: If the features do not fit the model
        """
        if len(corpus) and features.input_dim != model.input_dim:
            raise DimensionMismatchError(model.input_dim, features.input_dim,
                                         "tweet features (check --hash-dim and vector files against the model)")
        summary_config = summary_config_from(self.config)
        with self.stage("score tweets"):
            scores = score_corpus(model, corpus, features)
        with self.stage("select summary"):
            summary = select_summary(scores, features.similarity_vectors(), summary_config)

        warning: Optional[str] = None
        if len(summary) < summary_config.length:
            warning = (f"summary has {len(summary)} of {summary_config.length} requested tweet(s); "
                       f"candidates exhausted")
            logger.warning(warning)

        tweets = corpus.by_id()
        return SummaryReport(
            length=summary_config.length,
            lambda_salience=summary_config.lambda_salience,
            lambda_similarity=summary_config.lambda_similarity,
            aggregation=summary_config.aggregation,
            similarity_space=self.config.similarity_space,
            candidates=len(rank_candidates(scores, summary_config.lambda_salience)),
            warning=warning,
            tweets=[
                SummaryEntry(tweet_id=tweet_id, score=score, text=tweets[tweet_id].raw_text)
                for tweet_id, score in zip(summary.tweet_ids, summary.scores)
            ],
        )

    def run(self) -> SummaryReport:
        model = self.load_model()
        corpus = self.load_corpus()
        features = self.features(corpus)
        return self.summarize(corpus, features, model)
