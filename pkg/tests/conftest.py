from pathlib import Path

import pytest

from app.config import FIXTURE_DIR
from app.core.ontology import load_lexicon
from app.core.preprocess import default_lexicon_set, preprocess_corpus, preprocess_tweet
from app.repositories.corpus_repository import load_corpus
from app.schemas.corpus import Tweet


@pytest.fixture
def fixture_dir() -> Path:
    return FIXTURE_DIR


@pytest.fixture
def lex():
    return default_lexicon_set()


@pytest.fixture
def corpus(lex):
    return preprocess_corpus(load_corpus(FIXTURE_DIR / "tweets.jsonl"), lex)


@pytest.fixture
def lexicon(lex):
    return load_lexicon(FIXTURE_DIR / "ontology.txt", lex)


@pytest.fixture
def make_tweet(lex):
    def build(text: str, tweet_id: str = "x1", label=None) -> Tweet:
        return Tweet(id=tweet_id, raw_text=text, tokens=tuple(preprocess_tweet(text, lex)), label=label)
    return build
