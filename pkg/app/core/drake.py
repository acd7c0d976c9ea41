"""
Disaster-boosted RAKE
=====================

Key-phrase extraction over one tweet:

1. candidates are maximal runs of content words, broken by stopwords,
   phrase delimiters and replaced tokens
2. every word gets freq (occurrences across candidates) and deg (sum of the
   lengths of the candidates each occurrence sits in)
3. s_wd = deg / freq, multiplied by the boost factor for lexicon words
4. a candidate scores the sum of its words' s_wd, repeated words counted each time
5. the best candidate wins; ties go to the earliest, then the shortest span

With an empty lexicon this is plain RAKE.
"""
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from app.config import DEFAULT_BOOST
from app.core.ontology import EMPTY_LEXICON, OntologyLexicon
from app.schemas.corpus import Corpus, Token, TokenKind, Tweet
from app.schemas.keyphrase import KeyPhraseCandidate, KeyPhraseResult, WordStats

logger = logging.getLogger(__name__)


def candidate_phrases(tokens: Sequence[Token]) -> List[KeyPhraseCandidate]:
    """Maximal runs of word tokens in document order, scores left at 0."""
    candidates = []
    run: List[str] = []
    run_start = 0
    for index, token in enumerate(tokens):
        if token.kind == TokenKind.WORD:
            if not run:
                run_start = index
            run.append(token.surface)
            continue
        if run:
            candidates.append(KeyPhraseCandidate(words=tuple(run), start=run_start, end=index))
            run = []
    if run:
        candidates.append(KeyPhraseCandidate(words=tuple(run), start=run_start, end=len(tokens)))
    return candidates


def word_stats(
        candidates: Iterable[KeyPhraseCandidate],
        lexicon: OntologyLexicon = EMPTY_LEXICON,
        boost: float = DEFAULT_BOOST
) -> Dict[str, WordStats]:
    """
    Word-degree statistics over a set of candidates.

    Parameters:
        candidates: Candidates of one tweet (or of a whole corpus in corpus mode)
        lexicon (OntologyLexicon): Words whose score is boosted
        boost (float): Multiplier applied to lexicon words

    Returns:
        Dict[str, WordStats]: Stats keyed by word, in first-seen order
    """
    if boost <= 0:
        raise ValueError(f"boost must be positive, got {boost}")

    freq: Counter = Counter()
    deg: Counter = Counter()
    for candidate in candidates:
        length = len(candidate.words)
        for word in candidate.words:
            freq[word] += 1
            deg[word] += length

    stats = {}
    for word, count in freq.items():
        boosted = word in lexicon.terms
        ratio = deg[word] / count
        stats[word] = WordStats(
            word=word,
            freq=count,
            deg=deg[word],
            s_wd=boost * ratio if boosted else ratio,
            boosted=boosted,
        )
    return stats


def score_candidates(
        candidates: Iterable[KeyPhraseCandidate],
        stats: Mapping[str, WordStats]
) -> List[KeyPhraseCandidate]:
    """
    Score each candidate as the sum of its words' s_wd.

    Raises:
        KeyError: If a candidate word has no stats (a caller bug, not bad input)
    """
    scored = []
    for candidate in candidates:
        total = 0.0
        for word in candidate.words:
            if word not in stats:
                raise KeyError(f"no word statistics for '{word}'")
            total += stats[word].s_wd
        scored.append(candidate.model_copy(update={"score": total}))
    return scored


def best_candidate(candidates: Sequence[KeyPhraseCandidate]) -> Optional[KeyPhraseCandidate]:
    """Highest score; ties broken by earliest start, then shorter span."""
    if not candidates:
        return None
    return min(candidates, key=lambda c: (-c.score, c.start, c.end - c.start))


def extract_keyphrase(
        tweet: Tweet,
        lexicon: OntologyLexicon = EMPTY_LEXICON,
        boost: float = DEFAULT_BOOST,
        stats: Optional[Mapping[str, WordStats]] = None
) -> KeyPhraseResult:
    """
    Extract the highest-scoring key-phrase of a preprocessed tweet.

    Parameters:
        tweet (Tweet): Tweet with tokens filled in
        lexicon (OntologyLexicon): Boosted words; empty for plain RAKE
        boost (float): Boost factor
        stats (Optional[Mapping]): Precomputed statistics (corpus mode); computed
                                   from the tweet itself when omitted

    Returns:
        KeyPhraseResult: Winning phrase plus all scored candidates; phrase is None
                         when the tweet has no content words
    """
    candidates = candidate_phrases(tweet.tokens)
    if not candidates:
        logger.debug(f"No key-phrase candidates in tweet {tweet.id}")
        return KeyPhraseResult(tweet_id=tweet.id)

    if stats is None:
        stats = word_stats(candidates, lexicon, boost)
    scored = score_candidates(candidates, stats)
    winner = best_candidate(scored)
    logger.debug(f"Tweet {tweet.id}: key-phrase '{winner.text}' score={winner.score:.4f}")
    return KeyPhraseResult(tweet_id=tweet.id, phrase=winner, all_candidates=tuple(scored))


def extract_corpus(
        corpus: Corpus,
        lexicon: OntologyLexicon = EMPTY_LEXICON,
        boost: float = DEFAULT_BOOST,
        corpus_stats: bool = False,
        workers: int = 1
) -> List[KeyPhraseResult]:
    """
    Extract one key-phrase per tweet, in corpus order.

    Parameters:
        corpus (Corpus): Preprocessed corpus
        lexicon (OntologyLexicon): Boosted words
        boost (float): Boost factor
        corpus_stats (bool): Compute freq/deg over the whole corpus instead of per tweet
        workers (int): Threads to fan tweets out over; results keep corpus order
    """
    shared_stats = None
    if corpus_stats:
        all_candidates = [c for tweet in corpus.tweets for c in candidate_phrases(tweet.tokens)]
        shared_stats = word_stats(all_candidates, lexicon, boost)
        logger.info(f"Corpus-level statistics over {len(shared_stats)} word(s)")

    def run(tweet: Tweet) -> KeyPhraseResult:
        return extract_keyphrase(tweet, lexicon, boost, stats=shared_stats)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, corpus.tweets))
    else:
        results = [run(tweet) for tweet in corpus.tweets]

    found = sum(1 for result in results if not result.none_found)
    logger.info(f"Extracted key-phrases for {found}/{len(results)} tweet(s) "
                f"(lexicon={len(lexicon)} term(s), boost={boost})")
    return results
