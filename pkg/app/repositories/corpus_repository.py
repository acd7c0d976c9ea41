"""
Corpus Files
============

Loading and writing the line-delimited tweet corpus, gold summaries and
key-phrase annotations, plus construction of training labels.

Corpus lines look like {"id": "t1", "text": "...", "label": 1}; the label key
is optional and its absence means "unlabeled", which is distinct from 0.
"""
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from app.exceptions import (
    CorpusFormatError,
    DuplicateTweetError,
    SpanError,
    UnknownTweetError,
)
from app.repositories.base_repository import BaseRepository, read_term_lines
from app.schemas.corpus import Corpus, GoldSummary, KeyPhraseAnnotation, Tweet, TweetRecord

logger = logging.getLogger(__name__)


class CorpusRepository(BaseRepository[TweetRecord]):
    """
    Repository for corpus files.

    Example:
        repo = CorpusRepository("app/data/fixtures/tweets.jsonl")
        corpus = repo.load()
    """

    def __init__(self, path: Union[str, Path]):
        super().__init__(path, TweetRecord)

    def load(self) -> Corpus:
        """
        Load the corpus in file order.

        Returns:
            Corpus: Tweets with raw text and optional labels; tokens are left empty

        Raises:
            CorpusFormatError: If a line is malformed
            DuplicateTweetError: If an id appears twice
        """
        tweets = []
        first_seen: Dict[str, int] = {}
        for line_no, record in self.read_records():
            if record.id in first_seen:
                logger.error(f"Tweet id '{record.id}' on line {line_no} already defined on line {first_seen[record.id]}")
                raise DuplicateTweetError(record.id, self.path, line_no)
            first_seen[record.id] = line_no
            tweets.append(Tweet(id=record.id, raw_text=record.text, label=record.label))

        logger.info(f"Loaded corpus '{self.path.stem}' with {len(tweets)} tweet(s)")
        return Corpus(name=self.path.stem, tweets=tuple(tweets))

    def save(self, corpus: Corpus) -> int:
        """Write the corpus back as id/text/label records."""
        records = [TweetRecord(id=t.id, text=t.raw_text, label=t.label) for t in corpus.tweets]
        return self.write_records(records)


class AnnotationRepository(BaseRepository[KeyPhraseAnnotation]):
    """Repository for key-phrase annotation files (tweet_id, start, end per line)."""

    def __init__(self, path: Union[str, Path]):
        super().__init__(path, KeyPhraseAnnotation)

    def load(self, corpus: Optional[Corpus] = None) -> Dict[str, KeyPhraseAnnotation]:
        """
        Load annotations keyed by tweet id.

        Parameters:
            corpus (Optional[Corpus]): Preprocessed corpus used to bounds-check spans

        Raises:
            CorpusFormatError: If a line is malformed
            DuplicateTweetError: If a tweet is annotated twice
            UnknownTweetError: If a tweet id is not in the corpus
            SpanError: If a span runs past the tweet's token count
        """
        tweets = corpus.by_id() if corpus is not None else None
        annotations: Dict[str, KeyPhraseAnnotation] = {}
        for line_no, annotation in self.read_records():
            if annotation.tweet_id in annotations:
                raise DuplicateTweetError(annotation.tweet_id, self.path, line_no)
            if tweets is not None:
                tweet = tweets.get(annotation.tweet_id)
                if tweet is None:
                    raise UnknownTweetError(annotation.tweet_id, self.path)
                if annotation.end > len(tweet.tokens):
                    raise SpanError(annotation.tweet_id, annotation.start, annotation.end, len(tweet.tokens))
            annotations[annotation.tweet_id] = annotation

        logger.info(f"Loaded {len(annotations)} key-phrase annotation(s) from {self.path}")
        return annotations


def load_corpus(path: Union[str, Path]) -> Corpus:
    """Load a line-delimited corpus file. See CorpusRepository.load."""
    return CorpusRepository(path).load()


def write_corpus(corpus: Corpus, path: Union[str, Path]) -> int:
    """Write a corpus in the same format load_corpus reads."""
    return CorpusRepository(path).save(corpus)


def load_annotations(path: Union[str, Path], corpus: Optional[Corpus] = None) -> Dict[str, KeyPhraseAnnotation]:
    """Load a key-phrase annotation file. See AnnotationRepository.load."""
    return AnnotationRepository(path).load(corpus)


def load_gold_summary(path: Union[str, Path], corpus: Corpus) -> GoldSummary:
    """
    Load a gold summary: one tweet id per line, '#' starts a comment line.

    Parameters:
        path (str | Path): Gold summary file
        corpus (Corpus): Corpus every id must resolve in

    Returns:
        GoldSummary: Ids in file order, duplicates collapsed; an empty file yields
                     an empty summary with its warning set

    Raises:
        CorpusFormatError: If the file cannot be read
        UnknownTweetError: If an id is not in the corpus
    """
    try:
        entries = read_term_lines(path)
    except (OSError, UnicodeDecodeError) as e:
        raise CorpusFormatError(path, 0, f"cannot read gold summary: {e}") from e

    known = set(corpus.ids)
    ids: List[str] = []
    for _, tweet_id in entries:
        if tweet_id not in known:
            logger.error(f"Gold summary {path} references unknown tweet id '{tweet_id}'")
            raise UnknownTweetError(tweet_id, path)
        if tweet_id not in ids:
            ids.append(tweet_id)

    if not ids:
        warning = f"gold summary {path} is empty"
        logger.warning(warning)
        return GoldSummary(tweet_ids=(), warning=warning)

    logger.info(f"Loaded gold summary with {len(ids)} tweet(s) from {path}")
    return GoldSummary(tweet_ids=tuple(ids))


def derive_labels(corpus: Corpus, gold: GoldSummary) -> Corpus:
    """
    Label each tweet 1 if it is in the gold summary, else 0.

    Raises:
        UnknownTweetError: If the gold summary does not resolve in the corpus
    """
    known = set(corpus.ids)
    for tweet_id in gold.tweet_ids:
        if tweet_id not in known:
            raise UnknownTweetError(tweet_id)

    members = set(gold.tweet_ids)
    tweets = tuple(
        tweet.model_copy(update={"label": 1 if tweet.id in members else 0})
        for tweet in corpus.tweets
    )
    logger.info(f"Derived labels: {len(members)} positive, {len(tweets) - len(members)} negative")
    return corpus.model_copy(update={"tweets": tweets})
