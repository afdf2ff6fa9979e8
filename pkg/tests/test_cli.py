import json
import subprocess
import sys

import pytest

DATASET_LINES = [
    json.dumps({"id": "s1", "hyp": "a wonderful day", "ref": "a wonderful day",
                "human": 9.0, "ext": {"contextual": 0.58}}),
    json.dumps({"id": "s2", "hyp": "a terrible day", "ref": "a wonderful day",
                "human": 2.0, "ext": {"contextual": 0.60}}),
    json.dumps({"id": "s3", "hyp": "a big day", "ref": "a large day",
                "human": 7.0, "ext": {"contextual": 0.55}}),
]


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "samscore", *args],
        capture_output=True, text=True)


@pytest.fixture()
def dataset(tmp_path):
    path = tmp_path / "data.jsonl"
    path.write_text("\n".join(DATASET_LINES) + "\n", encoding="utf-8")
    return path


class TestSelftest:
    """The bundled demonstration pairs through the CLI."""

    def test_exit_zero_and_both_rows_printed(self):
        proc = run_cli("selftest")
        assert proc.returncode == 0
        assert "negation-drop" in proc.stdout
        assert "polarity-swap" in proc.stdout
        assert "selftest passed" in proc.stdout
        assert "FAIL" not in proc.stdout


class TestScore:
    """The score subcommand end to end."""

    def test_writes_reports(self, dataset, tmp_path):
        out = tmp_path / "out"
        proc = run_cli("score", "--dataset", str(dataset), "--out", str(out))
        assert proc.returncode == 0, proc.stderr
        payload = json.loads((out / "report.json").read_text(encoding="utf-8"))
        assert payload["summary"]["segments"] == 3
        assert payload["correlations"] == []
        metrics_seen = {row["metric"] for row in payload["per_segment"]}
        assert metrics_seen == {"bleu", "meteor"}
        assert (out / "report.txt").exists()

    def test_metric_selection(self, dataset, tmp_path):
        out = tmp_path / "out"
        proc = run_cli("score", "--dataset", str(dataset),
                       "--metrics", "bleu", "--out", str(out))
        assert proc.returncode == 0, proc.stderr
        payload = json.loads((out / "report.json").read_text(encoding="utf-8"))
        assert {row["metric"] for row in payload["per_segment"]} == {"bleu"}

    def test_external_scores_from_record_fields(self, dataset, tmp_path):
        out = tmp_path / "out"
        proc = run_cli("score", "--dataset", str(dataset),
                       "--metrics", "bleu,ext:contextual", "--out", str(out))
        assert proc.returncode == 0, proc.stderr
        payload = json.loads((out / "report.json").read_text(encoding="utf-8"))
        contextual = {row["id"]: row for row in payload["per_segment"]
                      if row["metric"] == "contextual"}
        assert contextual["s1"]["base"] == pytest.approx(0.58)

    def test_external_scores_from_file(self, dataset, tmp_path):
        scores = tmp_path / "scores.json"
        scores.write_text(json.dumps({
            "metric": "contextual",
            "scores": {"s1": 0.9, "s2": 0.8, "s3": 0.7}}), encoding="utf-8")
        out = tmp_path / "out"
        proc = run_cli("score", "--dataset", str(dataset),
                       "--metrics", f"ext:ctx={scores}", "--out", str(out))
        assert proc.returncode == 0, proc.stderr
        payload = json.loads((out / "report.json").read_text(encoding="utf-8"))
        ctx = {row["id"]: row for row in payload["per_segment"]
               if row["metric"] == "ctx"}
        assert ctx["s1"]["base"] == pytest.approx(0.9)

    def test_lemma_exception_override_accepted(self, dataset, tmp_path):
        table = tmp_path / "exc.tsv"
        table.write_text("n't\tnot\tr\n", encoding="utf-8")
        out = tmp_path / "out"
        proc = run_cli("score", "--dataset", str(dataset),
                       "--lemma-exceptions", str(table), "--out", str(out))
        assert proc.returncode == 0, proc.stderr

    def test_custom_lexicon_file(self, dataset, tmp_path):
        lexicon = tmp_path / "lex.tsv"
        lexicon.write_text("terrible#a\t-0.8\nwonderful#a\t0.8\n",
                           encoding="utf-8")
        out = tmp_path / "out"
        proc = run_cli("score", "--dataset", str(dataset),
                       "--lexicon", str(lexicon), "--out", str(out))
        assert proc.returncode == 0, proc.stderr


class TestCorrelate:
    """The correlate subcommand and its variant flags."""

    def test_writes_correlations(self, dataset, tmp_path):
        out = tmp_path / "out"
        proc = run_cli("correlate", "--dataset", str(dataset),
                       "--metrics", "bleu,meteor,ext:contextual",
                       "--out", str(out))
        assert proc.returncode == 0, proc.stderr
        csv_lines = (out / "correlations.csv").read_text(
            encoding="utf-8").strip().splitlines()
        assert csv_lines[0].startswith("metric,variant,")
        assert len(csv_lines) == 1 + 3 * 2
        payload = json.loads((out / "report.json").read_text(encoding="utf-8"))
        assert len(payload["correlations"]) == 6

    def test_without_sam_filters_variants(self, dataset, tmp_path):
        out = tmp_path / "out"
        proc = run_cli("correlate", "--dataset", str(dataset),
                       "--metrics", "bleu", "--without-sam", "--out", str(out))
        assert proc.returncode == 0, proc.stderr
        csv_lines = (out / "correlations.csv").read_text(
            encoding="utf-8").strip().splitlines()
        assert len(csv_lines) == 2
        assert ",raw," in csv_lines[1]

    def test_with_sam_filters_variants(self, dataset, tmp_path):
        out = tmp_path / "out"
        proc = run_cli("correlate", "--dataset", str(dataset),
                       "--metrics", "bleu", "--with-sam", "--out", str(out))
        assert proc.returncode == 0, proc.stderr
        csv_lines = (out / "correlations.csv").read_text(
            encoding="utf-8").strip().splitlines()
        assert len(csv_lines) == 2
        assert ",sam_adjusted," in csv_lines[1]


class TestExitCodes:
    """Usage errors exit 1; data errors exit 2."""

    def test_malformed_dataset_exits_2_with_line_number(self, tmp_path):
        bad = tmp_path / "bad.jsonl"
        bad.write_text(DATASET_LINES[0] + "\n{broken\n", encoding="utf-8")
        proc = run_cli("score", "--dataset", str(bad),
                       "--out", str(tmp_path / "out"))
        assert proc.returncode == 2
        assert ":2:" in proc.stderr

    def test_missing_dataset_file_exits_2(self, tmp_path):
        proc = run_cli("score", "--dataset", str(tmp_path / "absent.jsonl"),
                       "--out", str(tmp_path / "out"))
        assert proc.returncode == 2

    def test_bad_external_score_file_exits_2(self, dataset, tmp_path):
        scores = tmp_path / "scores.json"
        scores.write_text(json.dumps({
            "metric": "ctx", "scores": {"s1": 1.5}}), encoding="utf-8")
        proc = run_cli("score", "--dataset", str(dataset),
                       "--metrics", f"ext:ctx={scores}",
                       "--out", str(tmp_path / "out"))
        assert proc.returncode == 2
        assert "s1" in proc.stderr

    def test_unknown_metric_exits_1(self, dataset, tmp_path):
        proc = run_cli("score", "--dataset", str(dataset),
                       "--metrics", "rouge", "--out", str(tmp_path / "out"))
        assert proc.returncode == 1

    def test_missing_required_argument_exits_1(self):
        proc = run_cli("score")
        assert proc.returncode == 1

    def test_unknown_subcommand_exits_1(self):
        proc = run_cli("frobnicate")
        assert proc.returncode == 1
