"""Brute-force reference implementations the production code is checked against."""
import math
from typing import Dict, List, Sequence, Tuple

from app.schemas.corpus import Token, TokenKind


def rake_reference(tokens: Sequence[Token], boosted=frozenset(), boost: float = 2.0):
    """
    Classic RAKE over a token sequence via an explicit co-occurrence matrix.

    Returns:
        (span, score, stats): winning (start, end) or None, its score, and
        {word: (freq, deg, s_wd)}
    """
    phrases: List[Tuple[int, int]] = []
    start = None
    for i, token in enumerate(list(tokens) + [Token(surface=".", kind=TokenKind.PHRASE_DELIMITER)]):
        if token.kind == TokenKind.WORD:
            if start is None:
                start = i
        elif start is not None:
            phrases.append((start, i))
            start = None

    words = sorted({tokens[i].surface for s, e in phrases for i in range(s, e)})
    cooc: Dict[str, Dict[str, int]] = {w: {v: 0 for v in words} for w in words}
    for s, e in phrases:
        members = [tokens[i].surface for i in range(s, e)]
        for a in members:
            for b in members:
                cooc[a][b] += 1
    freq = {w: sum(1 for s, e in phrases for i in range(s, e) if tokens[i].surface == w) for w in words}
    deg = {w: sum(cooc[w].values()) for w in words}
    stats = {}
    for w in words:
        ratio = deg[w] / freq[w]
        stats[w] = (freq[w], deg[w], ratio * boost if w in boosted else ratio)

    best = None
    best_score = -math.inf
    for s, e in phrases:
        score = sum(stats[tokens[i].surface][2] for i in range(s, e))
        better = score > best_score
        tied = score == best_score
        if better or (tied and (s < best[0] or (s == best[0] and e - s < best[1] - best[0]))):
            best, best_score = (s, e), score
    return best, (best_score if best else None), stats


def _cos(a, b) -> float:
    na = math.sqrt(sum(x * x for x in a))
    nb = math.sqrt(sum(x * x for x in b))
    if na == 0 or nb == 0:
        return 0.0
    return sum(x * y for x, y in zip(a, b)) / (na * nb)


def greedy_reference(scores: Dict[str, float], vectors: Dict[str, Sequence[float]], length: int,
                     lambda_salience: float, lambda_similarity: float) -> List[str]:
    """Line-by-line greedy selection with max-cosine novelty."""
    pool = [tweet_id for tweet_id in scores if scores[tweet_id] > lambda_salience]
    pool.sort(key=lambda tweet_id: (-scores[tweet_id], tweet_id))
    summary: List[str] = []
    i = 0
    while len(summary) < length and i < len(pool):
        t = pool[i]
        i += 1
        if not summary:
            summary.append(t)
            continue
        sim = max(_cos(vectors[t], vectors[s]) for s in summary)
        if sim < lambda_similarity:
            summary.append(t)
    return summary


def lcs_reference(a: Sequence[str], b: Sequence[str]) -> int:
    table = [[0] * (len(b) + 1) for _ in range(len(a) + 1)]
    for i in range(1, len(a) + 1):
        for j in range(1, len(b) + 1):
            if a[i - 1] == b[j - 1]:
                table[i][j] = table[i - 1][j - 1] + 1
            else:
                table[i][j] = max(table[i - 1][j], table[i][j - 1])
    return table[len(a)][len(b)]
