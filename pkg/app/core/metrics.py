"""
Evaluation Metrics
==================

ROUGE-1, ROUGE-2 and ROUGE-L for summaries, and token-span IOU F1 plus Jaccard
for key-phrases.

All ROUGE variants read tokens from evaluation_tokens: lowercase, punctuation
dropped, stopwords kept, replaced boilerplate (url, htg, mtn, rtw) dropped by
default. A summary is scored as one sequence, its tweets concatenated in order.
"""
import logging
from collections import Counter
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple

from app.core.preprocess import LexiconSet, default_lexicon_set, preprocess_tweet
from app.exceptions import SpanError, UnknownTweetError
from app.schemas.corpus import TokenKind
from app.schemas.metrics import KeyphraseEvalReport, KeyphraseTweetScore, RougeReport, RougeScore

logger = logging.getLogger(__name__)

IOU_THRESHOLD = 0.5

Span = Tuple[int, int]


def evaluation_tokens(text: str, lex: Optional[LexiconSet] = None, keep_replaced: bool = False) -> List[str]:
    """Shared evaluation tokenizer; no length cap."""
    lex = lex or default_lexicon_set()
    kinds = {TokenKind.WORD, TokenKind.STOPWORD}
    if keep_replaced:
        kinds.add(TokenKind.REPLACED)
    return [token.surface for token in preprocess_tweet(text, lex, max_tokens=None) if token.kind in kinds]


def f1_score(precision: float, recall: float) -> float:
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def _score(overlap: float, candidate_total: int, reference_total: int) -> RougeScore:
    precision = overlap / candidate_total if candidate_total else 0.0
    recall = overlap / reference_total if reference_total else 0.0
    return RougeScore(precision=precision, recall=recall, f1=f1_score(precision, recall))


def ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def rouge_n(candidate: Sequence[str], reference: Sequence[str], n: int = 1) -> RougeScore:
    """
    Clipped n-gram overlap.

    Raises:
        ValueError: If n is not 1 or 2
    """
    if n not in (1, 2):
        raise ValueError(f"only ROUGE-1 and ROUGE-2 are supported, got n={n}")
    candidate_grams = ngrams(candidate, n)
    reference_grams = ngrams(reference, n)
    overlap = sum((candidate_grams & reference_grams).values())
    return _score(overlap, sum(candidate_grams.values()), sum(reference_grams.values()))


def lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    """Longest common subsequence length, O(len(a) * len(b)) time, O(len(b)) memory."""
    if not a or not b:
        return 0
    previous = [0] * (len(b) + 1)
    for x in a:
        current = [0]
        for j, y in enumerate(b, start=1):
            current.append(previous[j - 1] + 1 if x == y else max(previous[j], current[j - 1]))
        previous = current
    return previous[-1]


def rouge_l(candidate: Sequence[str], reference: Sequence[str]) -> RougeScore:
    return _score(lcs_length(candidate, reference), len(candidate), len(reference))


def flatten(texts: Sequence[str], lex: Optional[LexiconSet] = None, keep_replaced: bool = False) -> List[str]:
    tokens: List[str] = []
    for text in texts:
        tokens.extend(evaluation_tokens(text, lex, keep_replaced))
    return tokens


def evaluate_summary(
        summary_texts: Sequence[str],
        gold_texts: Sequence[str],
        lex: Optional[LexiconSet] = None,
        keep_replaced: bool = False
) -> RougeReport:
    """
    ROUGE-1/2/L of a system summary against a gold summary.

    Parameters:
        summary_texts: Raw texts of the selected tweets, in selection order
        gold_texts: Raw texts of the gold tweets, in gold-file order
        lex (Optional[LexiconSet]): Tokenization rules; the shipped stop list by default
        keep_replaced (bool): Keep url/htg/mtn/rtw tokens when scoring
    """
    candidate = flatten(summary_texts, lex, keep_replaced)
    reference = flatten(gold_texts, lex, keep_replaced)
    report = RougeReport(
        rouge1=rouge_n(candidate, reference, 1),
        rouge2=rouge_n(candidate, reference, 2),
        rougeL=rouge_l(candidate, reference),
    )
    logger.info(f"ROUGE over {len(candidate)} candidate / {len(reference)} reference token(s): "
                f"R1={report.rouge1_f1:.4f} R2={report.rouge2_f1:.4f} RL={report.rougeL_f1:.4f}")
    return report


def check_span(tweet_id: str, span: Span, length: Optional[int] = None):
    """
    Raises:
        SpanError: If the span is empty, negative, or runs past the tweet
    """
    start, end = span
    if start < 0 or end <= start or (length is not None and end > length):
        raise SpanError(tweet_id, start, end, length)


def span_iou(a: Span, b: Span) -> float:
    first = set(range(*a))
    second = set(range(*b))
    union = first | second
    return len(first & second) / len(union) if union else 1.0


def jaccard_words(a, b) -> float:
    """Jaccard similarity of two word sets; two empty sets count as identical."""
    a, b = set(a), set(b)
    union = a | b
    return len(a & b) / len(union) if union else 1.0


def _validate(spans: Mapping[str, Optional[Span]], lengths: Optional[Mapping[str, int]]):
    for tweet_id, span in spans.items():
        if span is None:
            continue
        length = lengths.get(tweet_id) if lengths is not None else None
        check_span(tweet_id, span, length)


def iou_counts(
        predictions: Mapping[str, Optional[Span]],
        gold: Mapping[str, Span],
        threshold: float = IOU_THRESHOLD,
        lengths: Optional[Mapping[str, int]] = None
) -> Tuple[int, int, int, Dict[str, float]]:
    """
    Per-tweet IOU and the counts behind IOU F1.

    A None prediction means the extractor found no phrase; it is not counted as a prediction.

    Returns:
        Tuple: (matches, number of predictions, number of gold spans, IOU per tweet
                with both a prediction and a gold span)
    """
    _validate(predictions, lengths)
    _validate(gold, lengths)
    ious: Dict[str, float] = {}
    matches = 0
    for tweet_id, gold_span in gold.items():
        predicted = predictions.get(tweet_id)
        if predicted is None:
            continue
        ious[tweet_id] = span_iou(predicted, gold_span)
        if ious[tweet_id] >= threshold:
            matches += 1
    predicted_count = sum(1 for span in predictions.values() if span is not None)
    return matches, predicted_count, len(gold), ious


def iou_f1(
        predictions: Mapping[str, Optional[Span]],
        gold: Mapping[str, Span],
        threshold: float = IOU_THRESHOLD,
        lengths: Optional[Mapping[str, int]] = None
) -> float:
    """
    F1 over IOU matches: precision = matches / predictions, recall = matches / gold spans.

    Raises:
        SpanError: If a span is out of bounds
    """
    matches, predicted_count, gold_count, _ = iou_counts(predictions, gold, threshold, lengths)
    precision = matches / predicted_count if predicted_count else 0.0
    recall = matches / gold_count if gold_count else 0.0
    return f1_score(precision, recall)


def _span_words(tokens: Sequence[str], span: Optional[Span]) -> Set[str]:
    if span is None:
        return set()
    return set(tokens[span[0]:span[1]])


def jaccard_scores(
        predictions: Mapping[str, Optional[Span]],
        gold: Mapping[str, Span],
        tokens: Mapping[str, Sequence[str]]
) -> Dict[str, float]:
    """Per gold tweet, Jaccard of the predicted and gold span word sets."""
    lengths = {tweet_id: len(surfaces) for tweet_id, surfaces in tokens.items()}
    _validate(predictions, lengths)
    _validate(gold, lengths)
    scores = {}
    for tweet_id, gold_span in gold.items():
        if tweet_id not in tokens:
            raise UnknownTweetError(tweet_id)
        surfaces = tokens[tweet_id]
        scores[tweet_id] = jaccard_words(_span_words(surfaces, predictions.get(tweet_id)),
                                         _span_words(surfaces, gold_span))
    return scores


def jaccard(
        predictions: Mapping[str, Optional[Span]],
        gold: Mapping[str, Span],
        tokens: Mapping[str, Sequence[str]]
) -> float:
    """
    Mean Jaccard over gold tweets; 1.0 when there are no gold tweets.

    Raises:
        SpanError: If a span is out of bounds
    """
    scores = jaccard_scores(predictions, gold, tokens)
    if not scores:
        return 1.0
    return sum(scores.values()) / len(scores)


def evaluate_keyphrases(
        predictions: Mapping[str, Optional[Span]],
        gold: Mapping[str, Span],
        tokens: Mapping[str, Sequence[str]],
        threshold: float = IOU_THRESHOLD
) -> KeyphraseEvalReport:
    """
    IOU F1 (with precision and recall), mean Jaccard and per-tweet details.

    Parameters:
        predictions: Predicted span per tweet id; None when no phrase was found
        gold: Annotated span per tweet id
        tokens: Token surfaces per tweet id, the sequence both spans index
        threshold (float): IOU at or above which a prediction matches
    """
    lengths = {tweet_id: len(surfaces) for tweet_id, surfaces in tokens.items()}
    matches, predicted_count, gold_count, ious = iou_counts(predictions, gold, threshold, lengths)
    precision = matches / predicted_count if predicted_count else 0.0
    recall = matches / gold_count if gold_count else 0.0
    per_tweet = jaccard_scores(predictions, gold, tokens)

    details = [
        KeyphraseTweetScore(
            tweet_id=tweet_id,
            iou=ious.get(tweet_id),
            jaccard=per_tweet[tweet_id],
            match=ious.get(tweet_id, 0.0) >= threshold,
        )
        for tweet_id in gold
    ]
    report = KeyphraseEvalReport(
        iou_f1=f1_score(precision, recall),
        iou_precision=precision,
        iou_recall=recall,
        jaccard_mean=sum(per_tweet.values()) / len(per_tweet) if per_tweet else 1.0,
        threshold=threshold,
        details=details,
    )
    logger.info(f"Key-phrase evaluation: {matches} match(es) over {predicted_count} prediction(s) and "
                f"{gold_count} gold span(s); IOU F1={report.iou_f1:.4f}, Jaccard={report.jaccard_mean:.4f}")
    return report
