from app.cli import options
from app.cli.decorators import handle_pipeline_errors
from app.cli.output import emit, table
from app.config import (
    DEFAULT_BATCH_SIZE,
    DEFAULT_BETA1,
    DEFAULT_BETA2,
    DEFAULT_BOOST,
    DEFAULT_DROPOUT,
    DEFAULT_EPOCHS,
    DEFAULT_HASH_DIM,
    DEFAULT_HIDDEN_DIM,
    DEFAULT_LEARNING_RATE,
    DEFAULT_LOSS,
    DEFAULT_MAX_TOKENS,
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    PipelineConfig,
)
from app.tasks.train_task import TrainTask


@handle_pipeline_errors
def train(
        corpus: options.Corpus,
        gold: options.Gold,
        out: options.ModelOut,
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
        workers: options.Workers = DEFAULT_WORKERS,
):
    """
    Train the salience head on a corpus labeled by its gold summary.

    The checkpoint goes to --out; the training report is printed as JSON on stdout.
    """
    config = PipelineConfig(
        corpus=corpus, gold=gold, out=out, ontology=ontology, stopwords=stopwords,
        word_vectors=word_vectors, tweet_vectors=tweet_vectors, hash_dim=hash_dim, seed=seed,
        boost=boost, rake=rake, corpus_stats=corpus_stats, max_tokens=max_tokens,
        epochs=epochs, batch_size=batch_size, learning_rate=learning_rate, beta1=beta1, beta2=beta2,
        dropout=dropout, hidden_dim=hidden_dim, loss=loss, workers=workers,
    )
    _, report = TrainTask(config).run()

    table(
        f"Training ({report.tweets} tweets, {report.positives} positive)",
        ["epoch", f"mean {report.train_config.loss}"],
        ([epoch, f"{value:.6f}"] for epoch, value in enumerate(report.epoch_losses, start=1)),
    )
    emit(report)
