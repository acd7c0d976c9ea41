import json

import pytest
from typer.testing import CliRunner

from app.cli.client import app

runner = CliRunner()

COMMANDS = ["extract-keyphrases", "train", "summarize", "evaluate", "eval-keyphrases", "pipeline", "show-config"]


def invoke(*args, env=None):
    return runner.invoke(app, [str(arg) for arg in args], env=env)


def read_json(path):
    return json.loads(path.read_text(encoding="utf-8"))


@pytest.fixture
def inputs(fixture_dir):
    return {
        "corpus": fixture_dir / "tweets.jsonl",
        "gold": fixture_dir / "gold.txt",
        "ontology": fixture_dir / "ontology.txt",
        "annotations": fixture_dir / "keyphrases.jsonl",
    }


@pytest.fixture
def model_file(tmp_path, inputs):
    path = tmp_path / "model.json"
    result = invoke("train", "--corpus", inputs["corpus"], "--gold", inputs["gold"],
                    "--ontology", inputs["ontology"], "--out", path, "--hidden-dim", 16)
    assert result.exit_code == 0, result.output
    return path


class TestHelp:
    @pytest.mark.parametrize("command", COMMANDS)
    def test_command_help(self, command):
        assert invoke(command, "--help").exit_code == 0

    def test_missing_corpus_is_a_usage_error(self):
        assert invoke("extract-keyphrases").exit_code != 0


class TestExtractKeyphrases:
    def test_one_record_per_tweet(self, tmp_path, inputs):
        out = tmp_path / "keyphrases.jsonl"
        result = invoke("extract-keyphrases", "--corpus", inputs["corpus"], "--ontology", inputs["ontology"],
                        "--out", out)
        assert result.exit_code == 0, result.output
        records = [json.loads(line) for line in out.read_text(encoding="utf-8").splitlines()]
        assert len(records) == 30
        by_id = {record["tweet_id"]: record for record in records}
        assert (by_id["t23"]["start"], by_id["t23"]["end"]) == (0, 4)
        assert by_id["t30"]["none_found"]

    def test_eval_keyphrases(self, tmp_path, inputs):
        predictions = tmp_path / "keyphrases.jsonl"
        invoke("extract-keyphrases", "--corpus", inputs["corpus"], "--ontology", inputs["ontology"],
               "--out", predictions)
        out = tmp_path / "eval.json"
        result = invoke("eval-keyphrases", "--pred", predictions, "--gold", inputs["annotations"],
                        "--corpus", inputs["corpus"], "--out", out)
        assert result.exit_code == 0, result.output
        report = read_json(out)
        assert report["gold_spans"] == 5
        assert report["predictions"] == 29
        assert 0.0 < report["iou_f1"] <= 1.0


class TestTrainAndSummarize:
    def test_train_writes_checkpoint(self, model_file):
        checkpoint = read_json(model_file)
        assert checkpoint["hidden_dim"] == 16
        assert checkpoint["input_dim"] == 512

    def test_long_summary_warns_but_succeeds(self, tmp_path, inputs, model_file):
        out = tmp_path / "summary.json"
        result = invoke("summarize", "--corpus", inputs["corpus"], "--model", model_file,
                        "--ontology", inputs["ontology"], "-L", 40, "--out", out)
        assert result.exit_code == 0, result.output
        report = read_json(out)
        assert report["length"] == 40
        assert len(report["tweets"]) < 40
        assert report["warning"]

    def test_hash_dim_must_match_model(self, tmp_path, inputs, model_file):
        result = invoke("summarize", "--corpus", inputs["corpus"], "--model", model_file,
                        "--hash-dim", 8, "--out", tmp_path / "summary.json")
        assert result.exit_code == 1

    def test_evaluate_summary(self, tmp_path, inputs, model_file):
        summary = tmp_path / "summary.json"
        invoke("summarize", "--corpus", inputs["corpus"], "--model", model_file, "-L", 5, "--out", summary)
        out = tmp_path / "rouge.json"
        result = invoke("evaluate", "--summary", summary, "--gold", inputs["gold"],
                        "--corpus", inputs["corpus"], "--out", out)
        assert result.exit_code == 0, result.output
        report = read_json(out)
        assert report["gold_tweets"] == 13
        assert 0.0 <= report["rouge"]["rouge1"]["f1"] <= 1.0


class TestPipeline:
    def run_pipeline(self, inputs, out, *extra):
        return invoke("pipeline", "--corpus", inputs["corpus"], "--gold", inputs["gold"],
                      "--ontology", inputs["ontology"], "-L", 5, "--out", out, *extra)

    def test_five_tweet_summary(self, tmp_path, inputs):
        out = tmp_path / "run.json"
        result = self.run_pipeline(inputs, out)
        assert result.exit_code == 0, result.output
        report = read_json(out)
        ids = [entry["tweet_id"] for entry in report["summary"]["tweets"]]
        assert len(ids) == 5
        assert len(set(ids)) == 5
        assert report["evaluation"]["gold_tweets"] == 13
        assert len(report["keyphrases"]) == 30

    def test_reproducible(self, tmp_path, inputs):
        first, second = tmp_path / "first.json", tmp_path / "second.json"
        assert self.run_pipeline(inputs, first).exit_code == 0
        assert self.run_pipeline(inputs, second).exit_code == 0
        assert first.read_bytes() == second.read_bytes()

    def test_needs_gold_or_model(self, tmp_path, inputs):
        result = invoke("pipeline", "--corpus", inputs["corpus"], "--out", tmp_path / "run.json")
        assert result.exit_code == 1

    def test_unknown_gold_id(self, tmp_path, inputs):
        gold = tmp_path / "gold.txt"
        gold.write_text("t01\nt99\n", encoding="utf-8")
        result = invoke("pipeline", "--corpus", inputs["corpus"], "--gold", gold, "--out", tmp_path / "run.json")
        assert result.exit_code == 1
        assert not (tmp_path / "run.json").exists()


class TestShowConfig:
    def test_defaults(self, tmp_path):
        out = tmp_path / "config.json"
        assert invoke("show-config", "--out", out).exit_code == 0
        config = read_json(out)["config"]
        assert config["length"] == 40
        assert config["lambda_salience"] == 0.2

    def test_environment_override(self, tmp_path):
        out = tmp_path / "config.json"
        result = invoke("show-config", "--out", out, env={"CRISIS_SUMM_LENGTH": "7"})
        assert result.exit_code == 0, result.output
        assert read_json(out)["config"]["length"] == 7

    def test_invalid_environment_value(self, tmp_path):
        result = invoke("show-config", "--out", tmp_path / "config.json", env={"CRISIS_SUMM_LENGTH": "zero"})
        assert result.exit_code == 1

    def test_invalid_workers_environment_value(self, tmp_path):
        result = invoke("show-config", "--out", tmp_path / "config.json", env={"CRISIS_SUMM_WORKERS": "four"})
        assert result.exit_code == 1
        assert "Traceback" not in result.output


class TestOptionRanges:
    @pytest.mark.parametrize("flag, value", [("--boost", "0"), ("--dropout", "1.0"), ("--beta1", "1.0"),
                                             ("--beta2", "0"), ("--learning-rate", "0")])
    def test_open_bounds_rejected(self, tmp_path, inputs, flag, value):
        command = "extract-keyphrases" if flag == "--boost" else "train"
        args = ["--corpus", inputs["corpus"], flag, value, "--out", tmp_path / "out.json"]
        if command == "train":
            args += ["--gold", inputs["gold"]]
        result = invoke(command, *args)
        assert result.exit_code == 2

    def test_dropout_inside_range_accepted(self, tmp_path, inputs):
        result = invoke("train", "--corpus", inputs["corpus"], "--gold", inputs["gold"], "--dropout", "0",
                        "--hidden-dim", 8, "--epochs", 1, "--out", tmp_path / "model.json")
        assert result.exit_code == 0, result.output

    def test_workers_environment_value_is_a_usage_error(self, tmp_path, inputs):
        result = invoke("extract-keyphrases", "--corpus", inputs["corpus"], "--out", tmp_path / "out.jsonl",
                        env={"CRISIS_SUMM_WORKERS": "four"})
        assert result.exit_code == 2
