import logging

import typer

from app.cli.commands.evaluate import eval_keyphrases, evaluate
from app.cli.commands.extract_keyphrases import extract_keyphrases
from app.cli.commands.pipeline import pipeline
from app.cli.commands.show_config import show_config
from app.cli.commands.summarize import summarize
from app.cli.commands.train import train

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="crisis-summ",
    help="Extractive summarization of disaster tweets with ontology-boosted key-phrases.",
    no_args_is_help=True,
    add_completion=False,
    pretty_exceptions_enable=False,
)

app.command(name="extract-keyphrases")(extract_keyphrases)
app.command(name="train")(train)
app.command(name="summarize")(summarize)
app.command(name="evaluate")(evaluate)
app.command(name="eval-keyphrases")(eval_keyphrases)
app.command(name="pipeline")(pipeline)
app.command(name="show-config")(show_config)


def run():
    logger.debug("Dispatching command line")
    app()
