import logging
from typing import Dict, List, Tuple

from app.core.drake import extract_corpus
from app.schemas.corpus import Corpus
from app.schemas.keyphrase import KeyPhraseResult
from app.tasks.base_task import BaseTask

logger = logging.getLogger(__name__)


class KeyphraseTask(BaseTask):
    """
    Task for preprocessing a corpus and extracting one key-phrase per tweet.
    """

    name = "extract-keyphrases"

    def extract(self, corpus: Corpus) -> List[KeyPhraseResult]:
        lexicon = self.load_lexicon()
        with self.stage("extract key-phrases"):
            return extract_corpus(
                corpus,
                lexicon,
                boost=self.config.boost,
                corpus_stats=self.config.corpus_stats,
                workers=self.config.workers,
            )

    def run(self) -> Tuple[Corpus, List[KeyPhraseResult]]:
        """
        Returns:
            Tuple[Corpus, List[KeyPhraseResult]]: The preprocessed corpus and its
                                                  key-phrases in corpus order
        """
        corpus = self.load_corpus()
        results = self.extract(corpus)
        missing = [result.tweet_id for result in results if result.none_found]
        if missing:
            logger.info(f"{len(missing)} tweet(s) without content words: {', '.join(missing[:10])}")
        return corpus, results


def keyphrases_by_id(results: List[KeyPhraseResult]) -> Dict[str, KeyPhraseResult]:
    return {result.tweet_id: result for result in results}
