import logging
import time
from contextlib import contextmanager
from typing import Optional, Tuple

from app.config import PipelineConfig
from app.core.embeddings import HashTweetEmbeddings, HashWordVectors, PrecomputedTweetEmbeddings, TweetEmbeddingProvider
from app.core.ontology import EMPTY_LEXICON, OntologyLexicon, load_lexicon
from app.core.preprocess import LexiconSet, lexicon_set, preprocess_corpus
from app.exceptions import PipelineError
from app.repositories.corpus_repository import load_corpus
from app.repositories.vector_repository import load_word_vectors
from app.schemas.corpus import Corpus

logger = logging.getLogger(__name__)


class BaseTask:
    """
    Base class for pipeline stages.

    Holds the effective configuration and the loaders every stage shares, and
    wraps each step in a logged, timed stage.

    Attributes:
        config (PipelineConfig): Effective configuration of the invocation
    """

    name = "task"

    def __init__(self, config: PipelineConfig):
        self.config = config
        self._lex: Optional[LexiconSet] = None

    @contextmanager
    def stage(self, label: str):
        """
        Context manager logging the start, duration and failure of one step.

        Example:
            with task.stage("preprocess"):
                corpus = preprocess_corpus(corpus, lex)
        """
        started = time.perf_counter()
        logger.info(f"[{self.name}] {label}: started")
        try:
            yield
        except PipelineError as e:
            logger.error(f"[{self.name}] {label}: failed: {e}")
            raise
        except Exception as e:
            logger.error(f"[{self.name}] {label}: unexpected error: {e}", exc_info=True)
            raise
        logger.info(f"[{self.name}] {label}: done in {time.perf_counter() - started:.3f}s")

    def require(self, field: str):
        value = getattr(self.config, field)
        if value is None:
            raise PipelineError(f"{self.name} needs --{field.replace('_', '-')}")
        return value

    @property
    def lex(self) -> LexiconSet:
        if self._lex is None:
            self._lex = lexicon_set(self.config.stopwords)
        return self._lex

    def load_corpus(self) -> Corpus:
        """Load and preprocess the configured corpus."""
        with self.stage("load corpus"):
            corpus = load_corpus(self.require("corpus"))
        with self.stage("preprocess"):
            return preprocess_corpus(corpus, self.lex, self.config.max_tokens)

    def load_lexicon(self) -> OntologyLexicon:
        """The ontology lexicon; empty in RAKE mode or when no ontology is given."""
        if self.config.rake or self.config.ontology is None:
            if self.config.ontology is not None:
                logger.info("RAKE mode: ignoring --ontology")
            return EMPTY_LEXICON
        with self.stage("load ontology"):
            return load_lexicon(self.config.ontology, self.lex)

    def embedding_sources(self) -> Tuple[TweetEmbeddingProvider, object]:
        """Tweet-embedding provider and word-vector store, falling back to hashing."""
        with self.stage("load embeddings"):
            if self.config.tweet_vectors is not None:
                provider = PrecomputedTweetEmbeddings.from_file(self.config.tweet_vectors)
            else:
                provider = HashTweetEmbeddings(self.config.hash_dim, self.config.seed)
            if self.config.word_vectors is not None:
                store = load_word_vectors(self.config.word_vectors)
            else:
                store = HashWordVectors(self.config.hash_dim, self.config.seed)
        return provider, store
