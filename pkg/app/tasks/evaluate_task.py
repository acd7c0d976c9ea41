import logging
from typing import Dict, Optional, Tuple

from app.core.metrics import evaluate_keyphrases, evaluate_summary
from app.exceptions import UnknownTweetError
from app.repositories.corpus_repository import load_annotations, load_gold_summary
from app.repositories.keyphrase_repository import KeyphraseRepository
from app.repositories.report_repository import ReportRepository
from app.schemas.corpus import Corpus
from app.schemas.reports import EvaluationReport, KeyphraseEvaluation, SummaryReport
from app.tasks.base_task import BaseTask

logger = logging.getLogger(__name__)

Span = Tuple[int, int]


class EvaluateTask(BaseTask):
    """
    Task for scoring a system summary against a gold summary with ROUGE-1/2/L.
    """

    name = "evaluate"

    def evaluate(self, summary: SummaryReport, corpus: Corpus) -> EvaluationReport:
        with self.stage("load gold summary"):
            gold = load_gold_summary(self.require("gold"), corpus)
        tweets = corpus.by_id()
        with self.stage("rouge"):
            rouge = evaluate_summary(
                [entry.text for entry in summary.tweets],
                [tweets[tweet_id].raw_text for tweet_id in gold.tweet_ids],
                self.lex,
                self.config.keep_replaced,
            )
        return EvaluationReport(
            summary_tweets=len(summary.tweets),
            gold_tweets=gold.length,
            keep_replaced=self.config.keep_replaced,
            rouge=rouge,
            warning=gold.warning,
        )

    def run(self) -> EvaluationReport:
        with self.stage("load summary"):
            summary = ReportRepository(self.require("summary"), SummaryReport).load()
        corpus = self.load_corpus()
        return self.evaluate(summary, corpus)


class KeyphraseEvalTask(BaseTask):
    """
    Task for scoring extracted key-phrases against annotated spans (IOU F1 and Jaccard).
    """

    name = "eval-keyphrases"

    def run(self) -> KeyphraseEvaluation:
        corpus = self.load_corpus()
        with self.stage("load predictions and annotations"):
            records = KeyphraseRepository(self.require("pred")).load()
            annotations = load_annotations(self.require("gold"), corpus)

        known = set(corpus.ids)
        for tweet_id in records:
            if tweet_id not in known:
                raise UnknownTweetError(tweet_id, self.config.pred)

        predictions: Dict[str, Optional[Span]] = {
            tweet_id: None if record.none_found else (record.start, record.end)
            for tweet_id, record in records.items()
        }
        gold = {tweet_id: (annotation.start, annotation.end) for tweet_id, annotation in annotations.items()}
        tokens = {tweet.id: tweet.surfaces for tweet in corpus.tweets}

        with self.stage("iou and jaccard"):
            report = evaluate_keyphrases(predictions, gold, tokens)
        return KeyphraseEvaluation(
            **report.model_dump(),
            predictions=sum(1 for span in predictions.values() if span is not None),
            gold_spans=len(gold),
        )
