"""
Greedy Summary Selection
========================

Tweets above the salience threshold are visited by non-increasing salience
(ties by id). The first is always admitted; each later tweet is admitted only
if its similarity to the summary built so far is below the similarity
threshold. Selection stops at L tweets or when candidates run out.
"""
import logging
from typing import List, Mapping, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from app.exceptions import DimensionMismatchError, EmbeddingMissError
from app.schemas.summary import Summary, SummaryConfig

logger = logging.getLogger(__name__)


def cosine(a, b) -> float:
    """
    Cosine similarity; 0 when either vector is all zeros.

    Raises:
        DimensionMismatchError: If the vectors differ in length
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise DimensionMismatchError(a.shape[-1], b.shape[-1], "cosine operand")
    norm = np.linalg.norm(a) * np.linalg.norm(b)
    if norm == 0:
        return 0.0
    return float(np.clip(a @ b / norm, -1.0, 1.0))


def similarity_to_summary(vector: np.ndarray, members: Sequence[np.ndarray], aggregation: str = "max") -> float:
    """Similarity of a tweet to the running summary: max (or mean) cosine over its members."""
    if not members:
        return 0.0
    sims = [cosine(vector, member) for member in members]
    return max(sims) if aggregation == "max" else float(np.mean(sims))


def rank_candidates(scores: Mapping[str, float], lambda_salience: float) -> List[Tuple[str, float]]:
    """Tweets with salience strictly above the threshold, best first, ties by id."""
    qualifying = [(tweet_id, score) for tweet_id, score in scores.items() if score > lambda_salience]
    return sorted(qualifying, key=lambda item: (-item[1], item[0]))


class Admission(NamedTuple):
    tweet_id: str
    score: float
    similarity: Optional[float]
    admitted: bool


def select_summary(
        scores: Mapping[str, float],
        embeddings: Mapping[str, np.ndarray],
        config: SummaryConfig = SummaryConfig(),
        trace: Optional[List[Admission]] = None
) -> Summary:
    """
    Pick up to config.length salient, mutually dissimilar tweets.

    Parameters:
        scores (Mapping[str, float]): Salience per tweet id
        embeddings (Mapping[str, np.ndarray]): Similarity vector per tweet id
        config (SummaryConfig): Length, thresholds and similarity aggregation
        trace (Optional[List[Admission]]): When given, every visited candidate is appended

    Returns:
        Summary: Admitted ids in selection order with their scores; may be shorter than
                 the requested length, or empty when no tweet clears the salience threshold

    Raises:
        EmbeddingMissError: If a candidate has no embedding
    """
    candidates = rank_candidates(scores, config.lambda_salience)
    for tweet_id, _ in candidates:
        if tweet_id not in embeddings:
            raise EmbeddingMissError(tweet_id)

    ids: List[str] = []
    selected_scores: List[float] = []
    members: List[np.ndarray] = []
    for tweet_id, score in candidates:
        if len(ids) >= config.length:
            break
        vector = embeddings[tweet_id]
        if not members:
            similarity = None
            admitted = True
        else:
            similarity = similarity_to_summary(vector, members, config.aggregation)
            admitted = similarity < config.lambda_similarity
        if trace is not None:
            trace.append(Admission(tweet_id, score, similarity, admitted))
        if admitted:
            ids.append(tweet_id)
            selected_scores.append(score)
            members.append(vector)

    logger.info(f"Selected {len(ids)}/{config.length} tweet(s) from {len(candidates)} candidate(s) "
                f"above salience {config.lambda_salience}")
    if len(ids) < config.length:
        logger.debug("Summary shorter than requested: candidates exhausted")
    return Summary(tweet_ids=tuple(ids), scores=tuple(selected_scores))


def replay_summary(
        summary: Summary,
        embeddings: Mapping[str, np.ndarray],
        config: SummaryConfig = SummaryConfig()
) -> List[str]:
    """
    Re-check a finished summary against the admission rules.

    Returns:
        List[str]: Problems found; empty when every member was admissible at its position
    """
    problems = []
    if len(summary) > config.length:
        problems.append(f"summary has {len(summary)} tweet(s), more than {config.length}")
    members: List[np.ndarray] = []
    for position, (tweet_id, score) in enumerate(zip(summary.tweet_ids, summary.scores)):
        if score <= config.lambda_salience:
            problems.append(f"{tweet_id}: salience {score} not above {config.lambda_salience}")
        vector = embeddings[tweet_id]
        if members:
            similarity = similarity_to_summary(vector, members, config.aggregation)
            if not similarity < config.lambda_similarity:
                problems.append(f"{tweet_id}: similarity {similarity:.4f} at position {position} "
                                f"not below {config.lambda_similarity}")
        members.append(vector)
    return problems
