from app.cli import options
from app.cli.decorators import handle_pipeline_errors
from app.cli.output import console, emit, table
from app.config import DEFAULT_MAX_TOKENS, PipelineConfig
from app.schemas.metrics import RougeReport
from app.tasks.evaluate_task import EvaluateTask, KeyphraseEvalTask


def show_rouge(rouge: RougeReport):
    table(
        "ROUGE",
        ["metric", "precision", "recall", "f1"],
        ([name, f"{score.precision:.4f}", f"{score.recall:.4f}", f"{score.f1:.4f}"]
         for name, score in (("ROUGE-1", rouge.rouge1), ("ROUGE-2", rouge.rouge2), ("ROUGE-L", rouge.rougeL))),
    )


@handle_pipeline_errors
def evaluate(
        summary: options.SummaryFile,
        gold: options.Gold,
        corpus: options.Corpus,
        stopwords: options.Stopwords = None,
        keep_replaced: options.KeepReplaced = False,
        out: options.Out = None,
):
    """
    Score a summarize output against a gold summary with ROUGE-1, ROUGE-2 and ROUGE-L.

    The corpus supplies the gold tweets' texts.
    """
    config = PipelineConfig(summary=summary, gold=gold, corpus=corpus, stopwords=stopwords,
                            keep_replaced=keep_replaced, out=out)
    report = EvaluateTask(config).run()
    show_rouge(report.rouge)
    if report.warning:
        console.print(f"[yellow]warning:[/yellow] {report.warning}", highlight=False)
    emit(report, out)


@handle_pipeline_errors
def eval_keyphrases(
        pred: options.Predictions,
        gold: options.Annotations,
        corpus: options.Corpus,
        stopwords: options.Stopwords = None,
        max_tokens: options.MaxTokens = DEFAULT_MAX_TOKENS,
        out: options.Out = None,
):
    """
    Score extract-keyphrases output against annotated spans with IOU F1 and Jaccard.

    The corpus is preprocessed with the same settings so spans index the same tokens.
    """
    config = PipelineConfig(pred=pred, gold=gold, corpus=corpus, stopwords=stopwords,
                            max_tokens=max_tokens, out=out)
    report = KeyphraseEvalTask(config).run()
    table(
        "Key-phrase evaluation",
        ["metric", "value"],
        [
            ["IOU F1", f"{report.iou_f1:.4f}"],
            ["IOU precision", f"{report.iou_precision:.4f}"],
            ["IOU recall", f"{report.iou_recall:.4f}"],
            ["Jaccard", f"{report.jaccard_mean:.4f}"],
        ],
    )
    emit(report, out)
