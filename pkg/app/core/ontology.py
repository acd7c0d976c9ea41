"""
Disaster Lexicon
================

A flat set of disaster-domain words used to boost word-degree scores during
key-phrase extraction. Multi-word concepts are split into their words since the
boost is decided per word; stopwords never enter the lexicon.
"""
import logging
from pathlib import Path
from typing import FrozenSet, Iterable, Optional, Union

from pydantic import BaseModel, ConfigDict, field_validator

from app.core.preprocess import LexiconSet, content_words, preprocess_tweet
from app.exceptions import LexiconError
from app.repositories.base_repository import read_term_lines

logger = logging.getLogger(__name__)


class OntologyLexicon(BaseModel):
    model_config = ConfigDict(frozen=True)

    terms: FrozenSet[str] = frozenset()
    source_name: str = ""
    warning: Optional[str] = None

    @field_validator("terms")
    @classmethod
    def check_terms(cls, terms: FrozenSet[str]) -> FrozenSet[str]:
        for term in terms:
            if not term or term != term.lower() or any(ch.isspace() for ch in term):
                raise ValueError(f"lexicon term '{term}' is not a normalized single word")
        return terms

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, word: str) -> bool:
        return word in self.terms

    def with_term(self, word: str) -> "OntologyLexicon":
        return OntologyLexicon(terms=self.terms | {word}, source_name=self.source_name)


EMPTY_LEXICON = OntologyLexicon(source_name="empty")


def lexicon_from_lines(lines: Iterable[str], lex: LexiconSet, source_name: str = "") -> OntologyLexicon:
    """Normalize lines the way tweets are normalized and keep their content words."""
    terms = set()
    for line in lines:
        terms.update(token.surface for token in content_words(preprocess_tweet(line, lex, max_tokens=None)))
    return OntologyLexicon(terms=frozenset(terms), source_name=source_name)


def load_lexicon(path: Union[str, Path], lex: LexiconSet) -> OntologyLexicon:
    """
    Load a lexicon file: one term or multi-word phrase per line, '#' comments.

    Parameters:
        path (str | Path): Lexicon file
        lex (LexiconSet): Tokenization rules; its stopwords are filtered out

    Returns:
        OntologyLexicon: Normalized word set; an empty file yields an empty lexicon
                         with its warning set

    Raises:
        LexiconError: If the file cannot be read

    Example:
        lexicon = load_lexicon("app/data/fixtures/ontology.txt", default_lexicon_set())
        contains(lexicon, "flood")
    """
    try:
        entries = read_term_lines(path)
    except (OSError, UnicodeDecodeError) as e:
        logger.error(f"Cannot read lexicon file {path}: {e}")
        raise LexiconError(path, f"cannot read lexicon: {e}") from e

    lexicon = lexicon_from_lines((line for _, line in entries), lex, source_name=Path(path).name)
    if not lexicon.terms:
        warning = f"lexicon {path} is empty; key-phrase scoring degenerates to plain RAKE"
        logger.warning(warning)
        return lexicon.model_copy(update={"warning": warning})

    logger.info(f"Loaded lexicon '{lexicon.source_name}' with {len(lexicon)} term(s)")
    return lexicon


def contains(lexicon: OntologyLexicon, word: str) -> bool:
    return word in lexicon.terms
