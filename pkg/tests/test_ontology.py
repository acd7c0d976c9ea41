import pytest

from app.core.ontology import EMPTY_LEXICON, OntologyLexicon, contains, load_lexicon
from app.core.preprocess import content_words, preprocess_tweet
from app.exceptions import LexiconError
from app.repositories.base_repository import read_term_lines


def lexicon_file(tmp_path, text):
    path = tmp_path / "ontology.txt"
    path.write_text(text, encoding="utf-8")
    return path


class TestLoadLexicon:
    def test_normalizes_case(self, tmp_path, lex):
        lexicon = load_lexicon(lexicon_file(tmp_path, "flood\nRescue\n"), lex)
        assert lexicon.terms == frozenset({"flood", "rescue"})

    def test_splits_phrases_and_drops_stopwords(self, tmp_path, lex):
        lexicon = load_lexicon(lexicon_file(tmp_path, "search and rescue\n"), lex)
        assert lexicon.terms == frozenset({"search", "rescue"})

    def test_duplicates_collapse(self, tmp_path, lex):
        lexicon = load_lexicon(lexicon_file(tmp_path, "flood\nFLOOD\nflash flood\n"), lex)
        assert lexicon.terms == frozenset({"flood", "flash"})

    def test_comments_ignored(self, tmp_path, lex):
        lexicon = load_lexicon(lexicon_file(tmp_path, "# hazards\nwildfire\n"), lex)
        assert lexicon.terms == frozenset({"wildfire"})

    def test_empty_file_is_valid_with_warning(self, tmp_path, lex):
        lexicon = load_lexicon(lexicon_file(tmp_path, ""), lex)
        assert len(lexicon) == 0
        assert lexicon.warning

    def test_unreadable_file(self, tmp_path, lex):
        with pytest.raises(LexiconError):
            load_lexicon(tmp_path / "absent.txt", lex)

    def test_every_line_is_contained(self, fixture_dir, lex, lexicon):
        for _, line in read_term_lines(fixture_dir / "ontology.txt"):
            for token in content_words(preprocess_tweet(line, lex, max_tokens=None)):
                assert contains(lexicon, token.surface)


class TestContains:
    def test_member(self):
        assert contains(OntologyLexicon(terms=frozenset({"flood"})), "flood")

    def test_non_member(self):
        assert not contains(OntologyLexicon(terms=frozenset({"flood"})), "earthquake")

    def test_empty_lexicon(self):
        assert not contains(EMPTY_LEXICON, "flood")

    def test_rejects_unnormalized_terms(self):
        with pytest.raises(ValueError):
            OntologyLexicon(terms=frozenset({"Flood"}))
