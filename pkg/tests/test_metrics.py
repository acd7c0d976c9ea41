import numpy as np
import pytest

from app.core.drake import extract_corpus
from app.core.metrics import (
    evaluate_keyphrases,
    evaluate_summary,
    evaluation_tokens,
    iou_f1,
    jaccard,
    jaccard_words,
    lcs_length,
    rouge_l,
    rouge_n,
    span_iou,
)
from app.exceptions import SpanError, UnknownTweetError
from app.repositories.corpus_repository import load_annotations
from tests.oracles import lcs_reference

CANDIDATE = "the cat sat on the mat".split()
REFERENCE = "the cat was on the mat".split()


class TestRouge:
    def test_rouge1(self):
        score = rouge_n(CANDIDATE, REFERENCE, 1)
        assert score.precision == pytest.approx(5 / 6)
        assert score.recall == pytest.approx(5 / 6)

    def test_rouge2(self):
        assert rouge_n(CANDIDATE, REFERENCE, 2).f1 == pytest.approx(3 / 5)

    def test_rouge_l(self):
        assert rouge_l(CANDIDATE, REFERENCE).f1 == pytest.approx(5 / 6)

    def test_counts_are_clipped(self):
        score = rouge_n(["the", "the", "the"], ["the"], 1)
        assert score.precision == pytest.approx(1 / 3)
        assert score.recall == pytest.approx(1.0)

    def test_identical_sequences(self):
        assert rouge_n(CANDIDATE, CANDIDATE, 2).f1 == pytest.approx(1.0)
        assert rouge_l(CANDIDATE, CANDIDATE).f1 == pytest.approx(1.0)

    def test_empty_candidate(self):
        score = rouge_n([], REFERENCE, 1)
        assert (score.precision, score.recall, score.f1) == (0.0, 0.0, 0.0)

    def test_unsupported_order(self):
        with pytest.raises(ValueError):
            rouge_n(CANDIDATE, REFERENCE, 3)

    def test_f1_is_symmetric(self):
        rng = np.random.default_rng(0)
        vocab = list("abcdef")
        for _ in range(100):
            a = [str(w) for w in rng.choice(vocab, size=rng.integers(1, 12))]
            b = [str(w) for w in rng.choice(vocab, size=rng.integers(1, 12))]
            for n in (1, 2):
                forward, backward = rouge_n(a, b, n), rouge_n(b, a, n)
                assert forward.f1 == pytest.approx(backward.f1)
                assert forward.precision == pytest.approx(backward.recall)
            assert rouge_l(a, b).f1 == pytest.approx(rouge_l(b, a).f1)

    def test_lcs_matches_table_reference(self):
        rng = np.random.default_rng(1)
        vocab = list("abcd")
        for _ in range(200):
            a = [str(w) for w in rng.choice(vocab, size=rng.integers(0, 15))]
            b = [str(w) for w in rng.choice(vocab, size=rng.integers(0, 15))]
            assert lcs_length(a, b) == lcs_reference(a, b)


class TestEvaluationTokens:
    TEXT = "RT @user: Flood in #Chennai https://t.co/x"

    def test_drops_replaced_tokens(self):
        assert evaluation_tokens(self.TEXT) == ["flood", "in", "chennai"]

    def test_keep_replaced(self):
        assert evaluation_tokens(self.TEXT, keep_replaced=True) == ["rtw", "mtn", "flood", "in", "htg", "chennai", "url"]

    def test_no_length_cap(self):
        assert len(evaluation_tokens(" ".join(["flood"] * 80))) == 80

    def test_summary_against_itself(self):
        texts = ["Heavy flood in Chennai", "Rescue teams deployed"]
        report = evaluate_summary(texts, texts)
        assert report.rouge1_f1 == pytest.approx(1.0)
        assert report.rouge2_f1 == pytest.approx(1.0)
        assert report.rougeL_f1 == pytest.approx(1.0)

    def test_boilerplate_does_not_score(self):
        report = evaluate_summary(["https://t.co/a flood"], ["https://t.co/b earthquake"])
        assert report.rouge1_f1 == 0.0
        report = evaluate_summary(["https://t.co/a flood"], ["https://t.co/b earthquake"], keep_replaced=True)
        assert report.rouge1_f1 == pytest.approx(0.5)


class TestSpanMetrics:
    def test_span_iou(self):
        assert span_iou((0, 4), (2, 6)) == pytest.approx(1 / 3)
        assert span_iou((3, 7), (4, 7)) == pytest.approx(0.75)
        assert span_iou((0, 2), (2, 4)) == 0.0

    def test_perfect_predictions(self):
        gold = {"a": (0, 2), "b": (1, 3)}
        assert iou_f1(gold, gold) == pytest.approx(1.0)

    def test_missing_prediction_lowers_recall_only(self):
        predictions = {"a": (0, 2), "b": (0, 3), "c": None}
        gold = {"a": (0, 2), "b": (0, 3), "c": (1, 2)}
        assert iou_f1(predictions, gold) == pytest.approx(0.8)

    def test_threshold_is_inclusive(self):
        assert iou_f1({"a": (0, 2)}, {"a": (0, 4)}) == pytest.approx(1.0)
        assert iou_f1({"a": (0, 1)}, {"a": (0, 4)}) == 0.0

    def test_out_of_bounds_span(self):
        with pytest.raises(SpanError):
            iou_f1({"a": (0, 9)}, {"a": (0, 2)}, lengths={"a": 5})

    def test_empty_span(self):
        with pytest.raises(SpanError):
            iou_f1({"a": (2, 2)}, {"a": (0, 2)})

    def test_jaccard_words(self):
        assert jaccard_words({"a", "b"}, {"b", "c"}) == pytest.approx(1 / 3)
        assert jaccard_words(set(), set()) == 1.0

    def test_jaccard_mean(self):
        tokens = {"a": ["flood", "water", "rising"], "b": ["quake", "nepal"]}
        predictions = {"a": (0, 2), "b": None}
        gold = {"a": (1, 3), "b": (0, 2)}
        assert jaccard(predictions, gold, tokens) == pytest.approx((1 / 3 + 0.0) / 2)

    def test_jaccard_without_gold(self):
        assert jaccard({"a": (0, 1)}, {}, {"a": ["flood"]}) == 1.0

    def test_jaccard_unknown_gold_tweet(self):
        with pytest.raises(UnknownTweetError):
            jaccard({}, {"zz": (0, 1)}, {"a": ["flood"]})

    def test_invariant_to_relabeling(self):
        tokens = {"a": ["w1", "w2", "w3", "w4"], "b": ["w5", "w6", "w7"]}
        predictions = {"a": (0, 3), "b": (1, 2)}
        gold = {"a": (1, 4), "b": (0, 3)}
        rename = {"a": "x9", "b": "x8"}

        def renamed(spans):
            return {rename[key]: value for key, value in spans.items()}

        original = evaluate_keyphrases(predictions, gold, tokens)
        relabeled = evaluate_keyphrases(renamed(predictions), renamed(gold), renamed(tokens))
        assert relabeled.iou_f1 == original.iou_f1
        assert relabeled.jaccard_mean == original.jaccard_mean


class TestFixtureKeyphrases:
    def test_annotated_tweets(self, corpus, lexicon, fixture_dir):
        results = extract_corpus(corpus, lexicon)
        predictions = {result.tweet_id: result.phrase.span if result.phrase else None for result in results}
        annotations = load_annotations(fixture_dir / "keyphrases.jsonl", corpus)
        gold = {tweet_id: (a.start, a.end) for tweet_id, a in annotations.items()}
        tokens = {tweet.id: tweet.surfaces for tweet in corpus.tweets}

        report = evaluate_keyphrases(predictions, gold, tokens)
        details = {detail.tweet_id: detail for detail in report.details}
        assert details["t23"].iou == pytest.approx(1.0)
        assert details["t07"].iou == pytest.approx(0.75)
        assert details["t07"].jaccard == pytest.approx(0.75)
        assert details["t07"].match
        assert report.iou_recall <= 1.0
        assert 0.0 <= report.iou_f1 <= 1.0
