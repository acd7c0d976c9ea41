import logging

from app.repositories.corpus_repository import derive_labels, load_gold_summary
from app.schemas.keyphrase import KeyPhraseRecord
from app.schemas.reports import PipelineReport
from app.tasks.evaluate_task import EvaluateTask
from app.tasks.summarize_task import SummarizeTask

logger = logging.getLogger(__name__)


class PipelineTask(SummarizeTask):
    """
    Task running every stage end to end: preprocess, key-phrases, embeddings,
    training (or a given model), scoring, selection and, with a gold summary, ROUGE.
    """

    name = "pipeline"

    def run(self) -> PipelineReport:
        if self.config.model is None and self.config.gold is None:
            self.require("gold")

        corpus = self.load_corpus()
        results = self.extract(corpus)
        features = self.features(corpus, results)

        training = None
        if self.config.model is not None:
            model = self.load_model()
        else:
            with self.stage("derive labels"):
                labeled = derive_labels(corpus, load_gold_summary(self.config.gold, corpus))
            model, training = self.fit(labeled, features)

        summary = self.summarize(corpus, features, model)

        evaluation = None
        if self.config.gold is not None:
            evaluation = EvaluateTask(self.config).evaluate(summary, corpus)

        return PipelineReport(
            corpus=corpus.name,
            tweets=len(corpus),
            keyphrases=[KeyPhraseRecord.from_result(result) for result in results],
            training=training,
            summary=summary,
            evaluation=evaluation,
        )
