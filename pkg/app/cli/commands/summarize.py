from app.cli import options
from app.cli.decorators import handle_pipeline_errors
from app.cli.output import console, emit, table
from app.config import (
    DEFAULT_BOOST,
    DEFAULT_HASH_DIM,
    DEFAULT_LAMBDA_SALIENCE,
    DEFAULT_LAMBDA_SIMILARITY,
    DEFAULT_MAX_TOKENS,
    DEFAULT_SEED,
    DEFAULT_SIMILARITY_AGGREGATION,
    DEFAULT_SIMILARITY_SPACE,
    DEFAULT_SUMMARY_LENGTH,
    DEFAULT_WORKERS,
    PipelineConfig,
)
from app.schemas.reports import SummaryReport
from app.tasks.summarize_task import SummarizeTask


def show_summary(report: SummaryReport):
    table(
        f"Summary ({len(report.tweets)}/{report.length} tweets, {report.candidates} candidates)",
        ["#", "tweet", "salience", "text"],
        ([position, entry.tweet_id, f"{entry.score:.4f}", entry.text]
         for position, entry in enumerate(report.tweets, start=1)),
    )
    if report.warning:
        console.print(f"[yellow]warning:[/yellow] {report.warning}", highlight=False)


@handle_pipeline_errors
def summarize(
        corpus: options.Corpus,
        model: options.Model,
        ontology: options.Ontology = None,
        stopwords: options.Stopwords = None,
        word_vectors: options.WordVectors = None,
        tweet_vectors: options.TweetVectors = None,
        hash_dim: options.HashDim = DEFAULT_HASH_DIM,
        seed: options.Seed = DEFAULT_SEED,
        boost: options.Boost = DEFAULT_BOOST,
        rake: options.Rake = False,
        corpus_stats: options.CorpusStats = False,
        max_tokens: options.MaxTokens = DEFAULT_MAX_TOKENS,
        length: options.Length = DEFAULT_SUMMARY_LENGTH,
        lambda_salience: options.LambdaSalience = DEFAULT_LAMBDA_SALIENCE,
        lambda_similarity: options.LambdaSimilarity = DEFAULT_LAMBDA_SIMILARITY,
        similarity_aggregation: options.Aggregation = DEFAULT_SIMILARITY_AGGREGATION,
        similarity_space: options.SimilaritySpace = DEFAULT_SIMILARITY_SPACE,
        workers: options.Workers = DEFAULT_WORKERS,
        out: options.Out = None,
):
    """
    Select up to L salient, mutually dissimilar tweets with a trained model.

    Writes the ordered tweet ids with their scores and texts as JSON.
    """
    config = PipelineConfig(
        corpus=corpus, model=model, ontology=ontology, stopwords=stopwords,
        word_vectors=word_vectors, tweet_vectors=tweet_vectors, hash_dim=hash_dim, seed=seed,
        boost=boost, rake=rake, corpus_stats=corpus_stats, max_tokens=max_tokens,
        length=length, lambda_salience=lambda_salience, lambda_similarity=lambda_similarity,
        similarity_aggregation=similarity_aggregation, similarity_space=similarity_space,
        workers=workers, out=out,
    )
    report = SummarizeTask(config).run()
    show_summary(report)
    emit(report, out)
