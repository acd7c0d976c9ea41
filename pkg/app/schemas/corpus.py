from enum import Enum
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class TokenKind(str, Enum):
    WORD = "word"
    STOPWORD = "stopword"
    PHRASE_DELIMITER = "phrase_delimiter"
    REPLACED = "replaced"
    PAD = "pad"


REPLACEMENT_TOKENS = ("url", "htg", "mtn", "rtw")


class Token(BaseModel):
    model_config = ConfigDict(frozen=True)

    surface: str
    kind: TokenKind

    @model_validator(mode="after")
    def check_surface(self) -> "Token":
        if not self.surface and self.kind != TokenKind.PAD:
            raise ValueError("token surface is empty")
        if self.kind == TokenKind.REPLACED and self.surface not in REPLACEMENT_TOKENS:
            raise ValueError(f"unknown replacement token '{self.surface}'")
        return self


class TweetRecord(BaseModel):
    """One line of a corpus file."""

    id: str = Field(min_length=1)
    text: str
    label: Optional[Literal[0, 1]] = None


class Tweet(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str = Field(min_length=1)
    raw_text: str
    tokens: Tuple[Token, ...] = ()
    label: Optional[Literal[0, 1]] = None

    @property
    def surfaces(self) -> List[str]:
        return [token.surface for token in self.tokens]


class Corpus(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = ""
    tweets: Tuple[Tweet, ...] = ()

    @model_validator(mode="after")
    def check_unique_ids(self) -> "Corpus":
        seen = set()
        for tweet in self.tweets:
            if tweet.id in seen:
                raise ValueError(f"duplicate tweet id '{tweet.id}'")
            seen.add(tweet.id)
        return self

    def __len__(self) -> int:
        return len(self.tweets)

    def __iter__(self):
        return iter(self.tweets)

    @property
    def ids(self) -> List[str]:
        return [tweet.id for tweet in self.tweets]

    def by_id(self) -> dict:
        return {tweet.id: tweet for tweet in self.tweets}


class GoldSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    tweet_ids: Tuple[str, ...] = ()
    # Set when the source file held no ids
    warning: Optional[str] = None

    @property
    def length(self) -> int:
        return len(self.tweet_ids)


class KeyPhraseAnnotation(BaseModel):
    model_config = ConfigDict(frozen=True)

    tweet_id: str = Field(min_length=1)
    start: int = Field(ge=0)
    end: int

    @model_validator(mode="after")
    def check_span(self) -> "KeyPhraseAnnotation":
        if self.end <= self.start:
            raise ValueError(f"empty or reversed span [{self.start}, {self.end})")
        return self
