"""
Tweet and Key-phrase Embeddings
===============================

Tweet embeddings (TE) come from a provider: either a precomputed sidecar file
keyed by tweet id, or a deterministic hash provider that needs no model at all
(non-semantic; meant for tests and demos). Key-phrase embeddings (KE) are the
mean of the phrase's word vectors, skipping words the store does not know.
"""
import hashlib
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, Iterable, Literal, Mapping, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from app.config import DEFAULT_HASH_DIM, DEFAULT_SEED
from app.exceptions import DimensionMismatchError, EmbeddingMissError
from app.schemas.corpus import Corpus, TokenKind, Tweet
from app.schemas.keyphrase import KeyPhraseResult

logger = logging.getLogger(__name__)


def hashed_unit_vector(key: str, dim: int, seed: int) -> np.ndarray:
    """Pseudo-random unit vector fully determined by (key, dim, seed)."""
    digest = hashlib.blake2b(f"{seed}\x1f{key}".encode("utf-8"), digest_size=8).digest()
    rng = np.random.default_rng(int.from_bytes(digest, "little"))
    vector = rng.standard_normal(dim)
    return vector / np.linalg.norm(vector)


@dataclass
class WordVectorStore:
    dim: int
    entries: Dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dim must be positive, got {self.dim}")
        for key, vector in self.entries.items():
            if vector.shape != (self.dim,):
                raise DimensionMismatchError(self.dim, vector.shape[0], f"vector '{key}'")

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def get(self, word: str) -> Optional[np.ndarray]:
        return self.entries.get(word)


class HashWordVectors:
    """Word store that hashes any word to a unit vector; stands in when no vector file is given."""

    def __init__(self, dim: int = DEFAULT_HASH_DIM, seed: int = DEFAULT_SEED):
        self.dim = dim
        self.seed = seed

    def __contains__(self, word: str) -> bool:
        return True

    def get(self, word: str) -> np.ndarray:
        return hashed_unit_vector("word:" + word, self.dim, self.seed)


class KeyphraseVector(NamedTuple):
    vector: np.ndarray
    oov_words: Tuple[str, ...] = ()
    empty_phrase: bool = False

    @property
    def oov(self) -> bool:
        """True when any phrase word was missing, or there was no phrase."""
        return bool(self.oov_words) or self.empty_phrase


def keyphrase_embedding(phrase: KeyPhraseResult, store) -> KeyphraseVector:
    """
    Mean of the vectors of the phrase's words present in the store.

    Parameters:
        phrase (KeyPhraseResult): Extraction result; may have no phrase
        store: WordVectorStore or HashWordVectors

    Returns:
        KeyphraseVector: The mean vector and the words that were skipped; a zero
                         vector when no word is known or the phrase is empty
    """
    present = []
    missing = []
    for word in phrase.words:
        vector = store.get(word)
        if vector is None:
            missing.append(word)
        else:
            present.append(vector)

    if not present:
        if phrase.words:
            logger.debug(f"Tweet {phrase.tweet_id}: no key-phrase word has a vector")
        return KeyphraseVector(np.zeros(store.dim), tuple(missing), empty_phrase=not phrase.words)
    return KeyphraseVector(np.mean(np.stack(present), axis=0), tuple(missing))


class TweetEmbeddingProvider(ABC):
    kind: str = ""

    def __init__(self, dim: int):
        self.dim = dim

    @abstractmethod
    def embed(self, tweet: Tweet) -> np.ndarray:
        """Return a dim-length vector for the tweet."""


class PrecomputedTweetEmbeddings(TweetEmbeddingProvider):
    """Looks tweets up by id in a sidecar vector file."""

    kind = "precomputed_file"

    def __init__(self, store: WordVectorStore):
        super().__init__(store.dim)
        self.store = store

    @classmethod
    def from_file(cls, path) -> "PrecomputedTweetEmbeddings":
        from app.repositories.vector_repository import load_tweet_vectors
        return cls(load_tweet_vectors(path))

    def embed(self, tweet: Tweet) -> np.ndarray:
        vector = self.store.get(tweet.id)
        if vector is None:
            raise EmbeddingMissError(tweet.id)
        return vector


class HashTweetEmbeddings(TweetEmbeddingProvider):
    """
    Mean of per-token hashed unit vectors; depends only on the token surfaces and the seed.

    Content words are hashed; a tweet without any falls back to all of its tokens.
    """

    kind = "deterministic_hash"

    def __init__(self, dim: int = DEFAULT_HASH_DIM, seed: int = DEFAULT_SEED):
        super().__init__(dim)
        self.seed = seed

    def embed(self, tweet: Tweet) -> np.ndarray:
        tokens = [token for token in tweet.tokens if token.kind == TokenKind.WORD] or list(tweet.tokens)
        if not tokens:
            return np.zeros(self.dim)
        vectors = [hashed_unit_vector("token:" + token.surface, self.dim, self.seed) for token in tokens]
        return np.mean(np.stack(vectors), axis=0)


def tweet_embedding(tweet: Tweet, provider: TweetEmbeddingProvider) -> np.ndarray:
    vector = provider.embed(tweet)
    if vector.shape != (provider.dim,):
        raise DimensionMismatchError(provider.dim, vector.shape[0], "tweet embedding")
    return vector


def concat(te: np.ndarray, ke: np.ndarray) -> np.ndarray:
    """te components first, then ke."""
    return np.concatenate([np.asarray(te, dtype=np.float64), np.asarray(ke, dtype=np.float64)])


@dataclass
class FeatureSet:
    """Per-tweet vectors in corpus order."""

    ids: Sequence[str]
    te: Dict[str, np.ndarray]
    ke: Dict[str, np.ndarray]
    oov_ids: Tuple[str, ...] = ()
    similarity_space: Literal["te", "concat"] = "te"

    @property
    def input_dim(self) -> int:
        if not self.ids:
            return 0
        first = self.ids[0]
        return self.te[first].shape[0] + self.ke[first].shape[0]

    def features(self, tweet_id: str) -> np.ndarray:
        if tweet_id not in self.te:
            raise EmbeddingMissError(tweet_id)
        return concat(self.te[tweet_id], self.ke[tweet_id])

    def matrix(self, ids: Optional[Iterable[str]] = None) -> np.ndarray:
        ids = list(self.ids if ids is None else ids)
        if not ids:
            return np.zeros((0, self.input_dim))
        return np.stack([self.features(tweet_id) for tweet_id in ids])

    def similarity_vectors(self) -> Dict[str, np.ndarray]:
        if self.similarity_space == "concat":
            return {tweet_id: self.features(tweet_id) for tweet_id in self.ids}
        return dict(self.te)


def build_features(
        corpus: Corpus,
        keyphrases: Mapping[str, KeyPhraseResult],
        provider: TweetEmbeddingProvider,
        store,
        similarity_space: Literal["te", "concat"] = "te"
) -> FeatureSet:
    """
    Compute TE and KE for every tweet of a preprocessed corpus.

    Raises:
        EmbeddingMissError: If the provider has no vector for a tweet
    """
    te: Dict[str, np.ndarray] = {}
    ke: Dict[str, np.ndarray] = {}
    oov_ids = []
    for tweet in corpus.tweets:
        te[tweet.id] = tweet_embedding(tweet, provider)
        result = keyphrases.get(tweet.id, KeyPhraseResult(tweet_id=tweet.id))
        phrase_vector = keyphrase_embedding(result, store)
        ke[tweet.id] = phrase_vector.vector
        if phrase_vector.oov:
            oov_ids.append(tweet.id)

    if oov_ids:
        logger.info(f"{len(oov_ids)} tweet(s) have a key-phrase with out-of-vocabulary words")
    logger.info(f"Built features for {len(te)} tweet(s): TE dim {provider.dim} ({provider.kind}), KE dim {store.dim}")
    return FeatureSet(ids=corpus.ids, te=te, ke=ke, oov_ids=tuple(oov_ids), similarity_space=similarity_space)
