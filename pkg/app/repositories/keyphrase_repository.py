import logging
from pathlib import Path
from typing import Dict, Iterable, Union

from app.exceptions import DuplicateTweetError
from app.repositories.base_repository import BaseRepository
from app.schemas.keyphrase import KeyPhraseRecord, KeyPhraseResult

logger = logging.getLogger(__name__)


class KeyphraseRepository(BaseRepository[KeyPhraseRecord]):
    """
    Repository for extract-keyphrases output: one record per tweet.

    Example:
        KeyphraseRepository("keyphrases.jsonl").save(results)
        predictions = KeyphraseRepository("keyphrases.jsonl").load()
    """

    def __init__(self, path: Union[str, Path]):
        super().__init__(path, KeyPhraseRecord)

    def save(self, results: Iterable[KeyPhraseResult]) -> int:
        return self.write_records(KeyPhraseRecord.from_result(result) for result in results)

    def load(self) -> Dict[str, KeyPhraseRecord]:
        """
        Load predictions keyed by tweet id, in file order.

        Raises:
            CorpusFormatError: If a line is malformed
            DuplicateTweetError: If a tweet appears twice
        """
        records: Dict[str, KeyPhraseRecord] = {}
        for line_no, record in self.read_records():
            if record.tweet_id in records:
                raise DuplicateTweetError(record.tweet_id, self.path, line_no)
            records[record.tweet_id] = record
        logger.info(f"Loaded {len(records)} key-phrase prediction(s) from {self.path}")
        return records
