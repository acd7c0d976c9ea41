
from app.cli import options
from app.cli.decorators import handle_pipeline_errors
from app.cli.output import emit_lines, table
from app.config import DEFAULT_BOOST, DEFAULT_MAX_TOKENS, DEFAULT_WORKERS, PipelineConfig
from app.schemas.keyphrase import KeyPhraseRecord
from app.tasks.keyphrase_task import KeyphraseTask


@handle_pipeline_errors
def extract_keyphrases(
        corpus: options.Corpus,
        ontology: options.Ontology = None,
        stopwords: options.Stopwords = None,
        boost: options.Boost = DEFAULT_BOOST,
        rake: options.Rake = False,
        corpus_stats: options.CorpusStats = False,
        max_tokens: options.MaxTokens = DEFAULT_MAX_TOKENS,
        workers: options.Workers = DEFAULT_WORKERS,
        out: options.Out = None,
):
    """
    Extract the highest-scoring key-phrase of every tweet.

    Writes one JSON record per tweet: tweet id, phrase words, token span and score.
    """
    config = PipelineConfig(
        corpus=corpus, ontology=ontology, stopwords=stopwords, boost=boost, rake=rake,
        corpus_stats=corpus_stats, max_tokens=max_tokens, workers=workers, out=out,
    )
    _, results = KeyphraseTask(config).run()
    records = [KeyPhraseRecord.from_result(result) for result in results]

    table(
        "Key-phrases",
        ["tweet", "phrase", "span", "score"],
        ([r.tweet_id, " ".join(r.words) or "-", f"[{r.start}, {r.end})" if not r.none_found else "-",
          f"{r.score:.3f}"] for r in records),
    )
    emit_lines(records, out)
