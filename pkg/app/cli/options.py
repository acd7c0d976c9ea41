"""Shared command-line options; every flag can also be set through its CRISIS_SUMM_* variable."""
from pathlib import Path
from typing import Annotated, Optional

import click
import typer

from app.config import env_name


def _input(flag: str, help_text: str, **kwargs):
    return typer.Option(f"--{flag}", envvar=env_name(flag), help=help_text,
                        exists=True, dir_okay=False, readable=True, **kwargs)


def _option(flag: str, help_text: str, *aliases: str, **kwargs):
    return typer.Option(f"--{flag}", *aliases, envvar=env_name(flag), help=help_text, **kwargs)


# Inputs
Corpus = Annotated[Path, _input("corpus", "Corpus file, one JSON object per line with id, text and optional label.")]
Gold = Annotated[Path, _input("gold", "Gold summary file, one tweet id per line.")]
OptionalGold = Annotated[Optional[Path], _input("gold", "Gold summary file; trains the head and enables ROUGE.")]
Annotations = Annotated[Path, _input("gold", "Key-phrase annotation file, one {tweet_id, start, end} object per line.")]
Predictions = Annotated[Path, _input("pred", "extract-keyphrases output to score.")]
SummaryFile = Annotated[Path, _input("summary", "summarize output to score.")]
Ontology = Annotated[Optional[Path], _input("ontology", "Disaster lexicon, one term or phrase per line.")]
Stopwords = Annotated[Optional[Path], _input("stopwords", "Stopword list replacing the bundled English list.")]
WordVectors = Annotated[Optional[Path], _input("word-vectors", "Word-vector text file; hashed vectors when omitted.")]
TweetVectors = Annotated[Optional[Path], _input("tweet-vectors", "Tweet-vector sidecar keyed by tweet id; hashed vectors when omitted.")]
Model = Annotated[Path, _input("model", "Salience-head checkpoint written by train.")]
OptionalModel = Annotated[Optional[Path], _input("model", "Use this checkpoint instead of training.")]

# Outputs
Out = Annotated[Optional[Path], _option("out", "Write the JSON output here instead of stdout.", dir_okay=False)]
ModelOut = Annotated[Path, _option("out", "Where to write the trained checkpoint.", dir_okay=False)]

# Preprocessing and key-phrases
MaxTokens = Annotated[int, _option("max-tokens", "Token cap per tweet.", min=1)]
Boost = Annotated[float, _option("boost", "Score multiplier for lexicon words.",
                                   click_type=click.FloatRange(0.0, min_open=True))]
Rake = Annotated[bool, _option("rake", "Plain RAKE: ignore the lexicon.")]
CorpusStats = Annotated[bool, _option("corpus-stats", "Word degree and frequency over the whole corpus instead of per tweet.")]
Workers = Annotated[int, _option("workers", "Threads for per-tweet extraction.", min=1)]

# Embeddings
HashDim = Annotated[int, _option("hash-dim", "Dimension of hashed vectors.", min=1)]
Seed = Annotated[int, _option("seed", "Seed for hashing, initialization, shuffling and dropout.")]
SimilaritySpace = Annotated[str, _option("similarity-space", "Vectors compared during selection.",
                                           click_type=click.Choice(["te", "concat"]))]

# Training
Epochs = Annotated[int, _option("epochs", "Training epochs.", min=0)]
BatchSize = Annotated[int, _option("batch-size", "Mini-batch size.", "--batch", min=1)]
LearningRate = Annotated[float, _option("learning-rate", "Adam step size.",
                                          click_type=click.FloatRange(0.0, min_open=True))]
Beta1 = Annotated[float, _option("beta1", "Adam first-moment decay.",
                                   click_type=click.FloatRange(0.0, 1.0, min_open=True, max_open=True))]
Beta2 = Annotated[float, _option("beta2", "Adam second-moment decay.",
                                   click_type=click.FloatRange(0.0, 1.0, min_open=True, max_open=True))]
Dropout = Annotated[float, _option("dropout", "Hidden-unit drop probability while training.",
                                     click_type=click.FloatRange(0.0, 1.0, max_open=True))]
HiddenDim = Annotated[int, _option("hidden-dim", "Hidden layer width.", min=1)]
Loss = Annotated[str, _option("loss", "Training loss.", click_type=click.Choice(["bce", "mse"]))]

# Selection
Length = Annotated[int, _option("length", "Summary length L in tweets.", "-L", min=1)]
LambdaSalience = Annotated[float, _option("lambda-salience", "Minimum salience (exclusive) for a candidate.", min=0.0, max=1.0)]
LambdaSimilarity = Annotated[float, _option("lambda-similarity", "Similarity to the summary (exclusive) above which a tweet is skipped.", min=0.0, max=1.0)]
Aggregation = Annotated[str, _option("similarity-aggregation", "Similarity to the summary over its members.",
                                     click_type=click.Choice(["max", "mean"]))]

# Evaluation
KeepReplaced = Annotated[bool, _option("keep-replaced", "Keep url/htg/mtn/rtw tokens when computing ROUGE.")]
