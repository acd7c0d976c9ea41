from app.cli import options
from app.cli.commands.evaluate import show_rouge
from app.cli.commands.summarize import show_summary
from app.cli.decorators import handle_pipeline_errors
from app.cli.output import emit
from app.config import (
    DEFAULT_BATCH_SIZE,
    DEFAULT_BETA1,
    DEFAULT_BETA2,
    DEFAULT_BOOST,
    DEFAULT_DROPOUT,
    DEFAULT_EPOCHS,
    DEFAULT_HASH_DIM,
    DEFAULT_HIDDEN_DIM,
    DEFAULT_LAMBDA_SALIENCE,
    DEFAULT_LAMBDA_SIMILARITY,
    DEFAULT_LEARNING_RATE,
    DEFAULT_LOSS,
    DEFAULT_MAX_TOKENS,
    DEFAULT_SEED,
    DEFAULT_SIMILARITY_AGGREGATION,
    DEFAULT_SIMILARITY_SPACE,
    DEFAULT_SUMMARY_LENGTH,
    DEFAULT_WORKERS,
    PipelineConfig,
)
from app.tasks.pipeline_task import PipelineTask


@handle_pipeline_errors
def pipeline(
        corpus: options.Corpus,
        gold: options.OptionalGold = None,
        model: options.OptionalModel = None,
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
        epochs: options.Epochs = DEFAULT_EPOCHS,
        batch_size: options.BatchSize = DEFAULT_BATCH_SIZE,
        learning_rate: options.LearningRate = DEFAULT_LEARNING_RATE,
        beta1: options.Beta1 = DEFAULT_BETA1,
        beta2: options.Beta2 = DEFAULT_BETA2,
        dropout: options.Dropout = DEFAULT_DROPOUT,
        hidden_dim: options.HiddenDim = DEFAULT_HIDDEN_DIM,
        loss: options.Loss = DEFAULT_LOSS,
        length: options.Length = DEFAULT_SUMMARY_LENGTH,
        lambda_salience: options.LambdaSalience = DEFAULT_LAMBDA_SALIENCE,
        lambda_similarity: options.LambdaSimilarity = DEFAULT_LAMBDA_SIMILARITY,
        similarity_aggregation: options.Aggregation = DEFAULT_SIMILARITY_AGGREGATION,
        similarity_space: options.SimilaritySpace = DEFAULT_SIMILARITY_SPACE,
        keep_replaced: options.KeepReplaced = False,
        workers: options.Workers = DEFAULT_WORKERS,
        out: options.Out = None,
):
    """
    Run preprocess, key-phrases, embeddings, training, scoring, selection and ROUGE end to end.

    Trains on the --gold labels unless --model is given; ROUGE is reported when --gold is given.
    """
    config = PipelineConfig(
        corpus=corpus, gold=gold, model=model, ontology=ontology, stopwords=stopwords,
        word_vectors=word_vectors, tweet_vectors=tweet_vectors, hash_dim=hash_dim, seed=seed,
        boost=boost, rake=rake, corpus_stats=corpus_stats, max_tokens=max_tokens,
        epochs=epochs, batch_size=batch_size, learning_rate=learning_rate, beta1=beta1, beta2=beta2,
        dropout=dropout, hidden_dim=hidden_dim, loss=loss,
        length=length, lambda_salience=lambda_salience, lambda_similarity=lambda_similarity,
        similarity_aggregation=similarity_aggregation, similarity_space=similarity_space,
        keep_replaced=keep_replaced, workers=workers, out=out,
    )
    report = PipelineTask(config).run()
    show_summary(report.summary)
    if report.evaluation is not None:
        show_rouge(report.evaluation.rouge)
    emit(report, out)
