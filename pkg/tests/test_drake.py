import numpy as np
import pytest

from app.core.drake import (
    best_candidate,
    candidate_phrases,
    extract_corpus,
    extract_keyphrase,
    score_candidates,
    word_stats,
)
from app.core.ontology import EMPTY_LEXICON, OntologyLexicon
from app.schemas.corpus import Token, TokenKind, Tweet
from app.schemas.keyphrase import KeyPhraseCandidate
from tests.oracles import rake_reference
from tests.test_preprocess import EXAMPLE_SENTENCE

VOCAB = ["flood", "rescue", "water", "road", "chennai", "team", "help", "boat"]
STOPWORDS = ["the", "in", "of"]
DELIMITERS = [".", ","]
REPLACED = ["url", "htg", "mtn"]


def random_tweet(rng, tweet_id="r"):
    tokens = []
    for _ in range(rng.integers(1, 21)):
        roll = rng.random()
        if roll < 0.6:
            tokens.append(Token(surface=str(rng.choice(VOCAB)), kind=TokenKind.WORD))
        elif roll < 0.8:
            tokens.append(Token(surface=str(rng.choice(STOPWORDS)), kind=TokenKind.STOPWORD))
        elif roll < 0.9:
            tokens.append(Token(surface=str(rng.choice(DELIMITERS)), kind=TokenKind.PHRASE_DELIMITER))
        else:
            tokens.append(Token(surface=str(rng.choice(REPLACED)), kind=TokenKind.REPLACED))
    return Tweet(id=tweet_id, raw_text="", tokens=tuple(tokens))


class TestExampleSentence:
    @pytest.fixture
    def tweet(self, make_tweet):
        return make_tweet(EXAMPLE_SENTENCE)

    def test_candidates(self, tweet):
        texts = [candidate.text for candidate in candidate_phrases(tweet.tokens)]
        assert texts.count("feature extraction") == 2
        assert texts.count("rapid automatic keyword extraction") == 1

    def test_feature_stats(self, tweet):
        stats = word_stats(candidate_phrases(tweet.tokens))
        assert stats["feature"].freq == 2
        assert stats["feature"].deg == 4
        assert stats["feature"].s_wd == 2

    def test_extraction_stats(self, tweet):
        stats = word_stats(candidate_phrases(tweet.tokens))
        assert stats["extraction"].freq == 3
        assert stats["extraction"].deg == 8
        assert stats["extraction"].s_wd == pytest.approx(8 / 3)

    def test_all_stats_match_cooccurrence_oracle(self, tweet):
        stats = word_stats(candidate_phrases(tweet.tokens))
        _, _, expected = rake_reference(tweet.tokens)
        assert set(stats) == set(expected)
        for word, (freq, deg, s_wd) in expected.items():
            assert (stats[word].freq, stats[word].deg) == (freq, deg)
            assert stats[word].s_wd == pytest.approx(s_wd, abs=1e-12)

    def test_two_word_candidate_score(self, tweet):
        candidates = candidate_phrases(tweet.tokens)
        scored = score_candidates(candidates, word_stats(candidates))
        feature_extraction = next(c for c in scored if c.text == "feature extraction")
        assert feature_extraction.score == pytest.approx(14 / 3)

    def test_winner(self, tweet):
        result = extract_keyphrase(tweet)
        assert result.phrase.text == "rapid automatic keyword extraction"
        assert result.phrase.score == pytest.approx(12 + 8 / 3)
        assert tweet.surfaces[result.phrase.start:result.phrase.end] == list(result.phrase.words)


class TestWordStats:
    def test_single_word(self, make_tweet):
        stats = word_stats(candidate_phrases(make_tweet("flood").tokens))
        assert (stats["flood"].freq, stats["flood"].deg, stats["flood"].s_wd) == (1, 1, 1)

    def test_boosted_single_word(self, make_tweet):
        lexicon = OntologyLexicon(terms=frozenset({"flood"}))
        stats = word_stats(candidate_phrases(make_tweet("flood").tokens), lexicon, boost=2.0)
        assert stats["flood"].s_wd == 2
        assert stats["flood"].boosted

    def test_rejects_non_positive_boost(self, make_tweet):
        with pytest.raises(ValueError):
            word_stats(candidate_phrases(make_tweet("flood").tokens), boost=0)

    def test_degree_at_least_frequency(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            tweet = random_tweet(rng)
            candidates = candidate_phrases(tweet.tokens)
            for stats in word_stats(candidates).values():
                assert stats.deg >= stats.freq
                assert stats.s_wd >= 1
            for candidate in score_candidates(candidates, word_stats(candidates)):
                assert candidate.score >= len(candidate.words)

    def test_boost_scales_only_boosted_words(self, make_tweet):
        candidates = candidate_phrases(make_tweet("flood water rescue. flood team").tokens)
        lexicon = OntologyLexicon(terms=frozenset({"flood"}))
        base = word_stats(candidates, lexicon, boost=2.0)
        scaled = word_stats(candidates, lexicon, boost=6.0)
        assert scaled["flood"].s_wd == pytest.approx(3 * base["flood"].s_wd)
        assert scaled["water"].s_wd == base["water"].s_wd


class TestScoring:
    def test_repeated_word_counts_twice(self, make_tweet):
        candidates = candidate_phrases(make_tweet("flood flood").tokens)
        scored = score_candidates(candidates, word_stats(candidates))
        assert scored[0].score == pytest.approx(4.0)

    def test_repeated_word_matches_oracle(self, make_tweet):
        tweet = make_tweet("flood flood")
        stats = word_stats(candidate_phrases(tweet.tokens))
        assert (stats["flood"].freq, stats["flood"].deg, stats["flood"].s_wd) == (2, 4, 2.0)
        span, score, expected = rake_reference(tweet.tokens)
        assert expected["flood"] == (2, 4, 2.0)
        assert (span, score) == ((0, 2), pytest.approx(4.0))
        assert extract_keyphrase(tweet).phrase.score == pytest.approx(score)

    def test_missing_stats_is_a_contract_violation(self):
        candidate = KeyPhraseCandidate(words=("flood",), start=0, end=1)
        with pytest.raises(KeyError):
            score_candidates([candidate], {})

    def test_tie_goes_to_earliest(self, make_tweet):
        result = extract_keyphrase(make_tweet("alpha. beta"))
        assert result.phrase.text == "alpha"

    def test_best_of_nothing(self):
        assert best_candidate([]) is None


class TestExtractKeyphrase:
    def test_no_content_words(self, make_tweet):
        result = extract_keyphrase(make_tweet("RT @user: the of and https://t.co/x"))
        assert result.none_found
        assert result.words == ()

    def test_single_candidate(self, make_tweet):
        result = extract_keyphrase(make_tweet("the flood"))
        assert result.phrase.text == "flood"

    def test_fixture_tweet_with_lexicon(self, corpus, lexicon):
        result = extract_keyphrase(corpus.by_id()["t23"], lexicon)
        assert result.phrase.span == (0, 4)
        assert result.phrase.score == pytest.approx(20.0)

    def test_matches_plain_rake_with_empty_lexicon(self):
        rng = np.random.default_rng(7)
        mismatches = 0
        for i in range(150):
            tweet = random_tweet(rng, f"r{i}")
            result = extract_keyphrase(tweet, EMPTY_LEXICON, boost=float(rng.uniform(0.5, 5.0)))
            expected_span, expected_score, _ = rake_reference(tweet.tokens)
            actual_span = result.phrase.span if result.phrase else None
            if actual_span != expected_span:
                mismatches += 1
            elif expected_score is not None:
                assert result.phrase.score == pytest.approx(expected_score)
        assert mismatches == 0

    def test_boost_monotonicity(self):
        rng = np.random.default_rng(11)
        violations = 0
        for _ in range(1000):
            tweet = random_tweet(rng)
            base_terms = frozenset(str(w) for w in rng.choice(VOCAB, size=rng.integers(0, 4), replace=False))
            added = str(rng.choice(VOCAB))
            before = OntologyLexicon(terms=base_terms)
            after = before.with_term(added)
            candidates = candidate_phrases(tweet.tokens)
            old = score_candidates(candidates, word_stats(candidates, before))
            new = score_candidates(candidates, word_stats(candidates, after))
            for a, b in zip(old, new):
                if added in a.words and b.score < a.score - 1e-12:
                    violations += 1
                if added not in a.words and b.score != a.score:
                    violations += 1
        assert violations == 0

    def test_deterministic(self, corpus, lexicon):
        tweet = corpus.by_id()["t08"]
        assert extract_keyphrase(tweet, lexicon) == extract_keyphrase(tweet, lexicon)


class TestExtractCorpus:
    def test_one_result_per_tweet_in_order(self, corpus, lexicon):
        results = extract_corpus(corpus, lexicon)
        assert [result.tweet_id for result in results] == corpus.ids
        assert results[-1].none_found

    def test_threads_preserve_results(self, corpus, lexicon):
        assert extract_corpus(corpus, lexicon, workers=4) == extract_corpus(corpus, lexicon, workers=1)

    def test_corpus_statistics_mode(self, corpus, lexicon):
        results = extract_corpus(corpus, lexicon, corpus_stats=True)
        assert len(results) == len(corpus)
        found = [result for result in results if not result.none_found]
        assert all(result.phrase.score > 0 for result in found)
