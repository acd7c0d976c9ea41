"""
Tweet Preprocessing
===================

Turns raw tweet text into the token sequence every later stage reads.

Rules, applied left to right over the lowercased text:
- URLs become the replaced token ``url``
- ``#tag`` becomes ``htg`` followed by the tag body as an ordinary word
- ``@user`` becomes ``mtn``
- a leading ``RT`` becomes ``rtw``
- sentence punctuation becomes a phrase-delimiter token
- any other symbol (hyphen, slash, ampersand, ...) is a word delimiter and is dropped
- remaining words are stopwords or content words

The literal words url/htg/mtn/rtw are read back as replaced tokens, which keeps
preprocessing idempotent on already-normalized text.
"""
import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import FrozenSet, Iterable, List, Optional, Union

from app.config import DEFAULT_MAX_TOKENS, DEFAULT_STOPWORDS_PATH
from app.exceptions import LexiconError
from app.repositories.base_repository import read_term_lines
from app.schemas.corpus import REPLACEMENT_TOKENS, Corpus, Token, TokenKind

logger = logging.getLogger(__name__)

DEFAULT_PHRASE_DELIMITERS = frozenset({".", ",", ";", ":", "!", "?", "(", ")", '"', "—"})
DEFAULT_WORD_DELIMITERS = frozenset({" ", "\t", "\n", "\r", "-", "–", "/", "\\", "&", "*", "+", "=",
                                     "_", "|", "~", "^", "<", ">", "[", "]", "{", "}", "'", "`", "%", "$"})

_TOKEN_PATTERN = re.compile(
    r"(?P<url>(?:https?://|www\.)\S+)"
    r"|#(?P<htg>[^\W_]+)"
    r"|(?P<mtn>@\w+)"
    r"|(?P<word>[^\W_]+(?:['’][^\W_]+)*)"
    r"|(?P<symbol>\S)",
    re.UNICODE,
)
_LEADING_RT = re.compile(r"^\s*rt\b")


@dataclass(frozen=True)
class LexiconSet:
    """
    Stopwords and delimiter sets driving tokenization.

    A symbol resolves to exactly one role with precedence
    phrase delimiter > word delimiter > stopword.
    """

    stopwords: FrozenSet[str] = field(default_factory=frozenset)
    word_delimiters: FrozenSet[str] = DEFAULT_WORD_DELIMITERS
    phrase_delimiters: FrozenSet[str] = DEFAULT_PHRASE_DELIMITERS

    def role(self, symbol: str) -> Optional[TokenKind]:
        """Token kind for a symbol, or None when it only separates words."""
        if symbol in self.phrase_delimiters:
            return TokenKind.PHRASE_DELIMITER
        if symbol in self.word_delimiters:
            return None
        if symbol in self.stopwords:
            return TokenKind.STOPWORD
        return TokenKind.WORD


def load_stopwords(path: Union[str, Path]) -> FrozenSet[str]:
    """
    Load a stopword file: one term per line, '#' comments, UTF-8.

    Raises:
        LexiconError: If the file cannot be read
    """
    try:
        entries = read_term_lines(path)
    except (OSError, UnicodeDecodeError) as e:
        raise LexiconError(path, f"cannot read stopword file: {e}") from e

    stopwords = frozenset(term.lower() for _, term in entries)
    logger.debug(f"Loaded {len(stopwords)} stopword(s) from {path}")
    return stopwords


@lru_cache(maxsize=1)
def default_lexicon_set() -> LexiconSet:
    """LexiconSet built from the shipped English stop list."""
    return LexiconSet(stopwords=load_stopwords(DEFAULT_STOPWORDS_PATH))


def lexicon_set(stopwords_path: Optional[Union[str, Path]] = None) -> LexiconSet:
    if stopwords_path is None:
        return default_lexicon_set()
    return LexiconSet(stopwords=load_stopwords(stopwords_path))


def _classify_word(surface: str, lex: LexiconSet) -> List[Token]:
    if surface in REPLACEMENT_TOKENS:
        return [Token(surface=surface, kind=TokenKind.REPLACED)]
    kind = lex.role(surface)
    return [Token(surface=surface, kind=kind)] if kind is not None else []


def preprocess_tweet(raw_text: str, lex: LexiconSet, max_tokens: Optional[int] = DEFAULT_MAX_TOKENS) -> List[Token]:
    """
    Normalize a tweet into tokens.

    Parameters:
        raw_text (str): Tweet text as published
        lex (LexiconSet): Stopwords and delimiters
        max_tokens (Optional[int]): Cap on the output length; None disables the cap

    Returns:
        List[Token]: Tokens in text order, truncated to max_tokens, never padded

    Example:
        preprocess_tweet("Flood in Chennai! https://t.co/x", default_lexicon_set())
        # flood, in (stopword), chennai, ! (phrase delimiter), url
    """
    if max_tokens is not None and max_tokens < 1:
        raise ValueError(f"max_tokens must be >= 1, got {max_tokens}")

    text = raw_text.lower()
    tokens: List[Token] = []

    rt_match = _LEADING_RT.match(text)
    if rt_match:
        tokens.append(Token(surface="rtw", kind=TokenKind.REPLACED))
        text = text[rt_match.end():]

    for match in _TOKEN_PATTERN.finditer(text):
        if max_tokens is not None and len(tokens) >= max_tokens:
            break
        group = match.lastgroup
        if group == "url":
            tokens.append(Token(surface="url", kind=TokenKind.REPLACED))
        elif group == "htg":
            tokens.append(Token(surface="htg", kind=TokenKind.REPLACED))
            tokens.extend(_classify_word(match.group("htg"), lex))
        elif group == "mtn":
            tokens.append(Token(surface="mtn", kind=TokenKind.REPLACED))
        elif group == "word":
            tokens.extend(_classify_word(match.group("word").replace("’", "'"), lex))
        else:
            symbol = match.group("symbol")
            if lex.role(symbol) == TokenKind.PHRASE_DELIMITER:
                tokens.append(Token(surface=symbol, kind=TokenKind.PHRASE_DELIMITER))

    if max_tokens is not None:
        tokens = tokens[:max_tokens]
    return tokens


def content_words(tokens: Iterable[Token]) -> List[Token]:
    """Tokens of kind word, in order; stopwords, delimiters and replaced tokens are dropped."""
    return [token for token in tokens if token.kind == TokenKind.WORD]


def preprocess_corpus(corpus: Corpus, lex: LexiconSet, max_tokens: int = DEFAULT_MAX_TOKENS) -> Corpus:
    """Return a copy of the corpus with every tweet's tokens filled in."""
    tweets = tuple(
        tweet.model_copy(update={"tokens": tuple(preprocess_tweet(tweet.raw_text, lex, max_tokens))})
        for tweet in corpus.tweets
    )
    logger.info(f"Preprocessed {len(tweets)} tweet(s) (max_tokens={max_tokens})")
    return corpus.model_copy(update={"tweets": tweets})
