"""Benchmark tests: set shapes and determinism, the lenient scoring policy,
oracle/noisy/scripted runs, and report files."""

import json
import random

import pytest

from chemagent.agent import AgentConfig, BackendConfig, make_backend, make_template
from chemagent.benchmark import (
    SUMMARY_HEADER,
    generate,
    load_molecules,
    read_summary_csv,
    resolve_question,
    run_benchmark,
    score_answer,
    write_reports,
)
from chemagent.benchmark.scoring import COMPLEMENT
from chemagent.toolbox import default_registry

REGISTRY = default_registry()
ORACLE = AgentConfig(backend=BackendConfig(kind="rule_oracle"))


class TestGenerate:
    def test_set_sizes(self):
        assert len(generate("qualitative", seed=3, per_tool=10)) == 50
        assert len(generate("quantitative", seed=3, per_tool=10)) == 50
        assert len(generate("full", seed=3, per_tool=10)) == 100

    def test_full_set_default_counts(self):
        full = generate("full", seed=5)
        assert len(full) == 1000
        per_tool = {}
        for q in full.questions:
            per_tool[q.tool] = per_tool.get(q.tool, 0) + 1
        assert per_tool == {name: 100 for name in REGISTRY.names()}

    def test_same_seed_identical(self):
        a = generate("full", seed=9, per_tool=8)
        b = generate("full", seed=9, per_tool=8)
        assert a.questions == b.questions

    def test_different_seed_differs(self):
        a = generate("full", seed=9, per_tool=8)
        b = generate("full", seed=10, per_tool=8)
        assert a.questions != b.questions

    def test_partition_union_equals_full(self):
        qual = generate("qualitative", seed=4, per_tool=6)
        quant = generate("quantitative", seed=4, per_tool=6)
        full = generate("full", seed=4, per_tool=6)
        assert sorted(qual.questions + quant.questions, key=lambda q: q.id) == sorted(
            full.questions, key=lambda q: q.id
        )

    def test_quantitative_only_real_tools(self):
        quant = generate("quantitative", seed=2, per_tool=5)
        assert {q.tool for q in quant.questions} == {
            "calculate_molwt", "calculate_logp", "calculate_tpsa", "calculate_qed", "calculate_sa",
        }
        assert all(q.kind == "quantitative" for q in quant.questions)

    def test_gold_self_consistency(self):
        full = generate("full", seed=7, per_tool=5)
        for q in full.questions:
            assert score_answer(q.gold, q.gold, q.kind), q

    def test_questions_resolve_back(self):
        full = generate("full", seed=8, per_tool=5)
        for q in full.questions:
            assert resolve_question(q.question) == (q.tool, q.smiles), q.question

    def test_bad_molecules_excluded(self):
        molecules = ["CCO", "not_a_smiles", "c1ccccc1", "C((C"] + ["CC"] * 8
        bench = generate("quantitative", molecules=molecules, seed=1, per_tool=4)
        assert all(q.smiles in ("CCO", "c1ccccc1", "CC") for q in bench.questions)

    def test_insufficient_molecules_error(self):
        with pytest.raises(ValueError, match="insufficient"):
            generate("full", molecules=["CCO", "bad("], seed=1)

    def test_unknown_set_name(self):
        with pytest.raises(ValueError):
            generate("everything", seed=1)

    def test_shipped_molecule_list_loads(self):
        assert len(load_molecules()) >= 200


class TestScoring:
    def test_examples(self):
        assert score_answer("The TPSA is 20.23 A2 which is low", "20.23", "quantitative")
        assert not score_answer("20.2", "20.23", "quantitative")
        assert score_answer("Yes, CCON=O is BBB permeant", "Yes", "qualitative")
        assert not score_answer(None, "Yes", "qualitative")

    def test_rounding_equivalence(self):
        # |delta| <= 0.005 before rounding scores correct
        assert score_answer("20.2349", "20.23", "quantitative")
        assert not score_answer("20.236", "20.23", "quantitative")
        assert score_answer("20.225", "20.23", "quantitative")  # half-up

    def test_first_number_wins(self):
        assert score_answer("value: 20.23 (not 99.99)", "20.23", "quantitative")
        assert not score_answer("99.99 then 20.23", "20.23", "quantitative")

    def test_case_insensitive_word_boundary(self):
        assert score_answer("yes", "Yes", "qualitative")
        assert score_answer("YES.", "Yes", "qualitative")
        assert not score_answer("eyes", "Yes", "qualitative")
        assert not score_answer("the lowest value", "Low", "qualitative")

    def test_complement_before_gold_rejected(self):
        assert not score_answer("No, wait - Yes", "Yes", "qualitative")
        assert score_answer("Yes, not No", "Yes", "qualitative")

    def test_absent_or_empty(self):
        assert not score_answer(None, "20.23", "quantitative")
        assert not score_answer("", "Yes", "qualitative")
        assert not score_answer("   ", "High", "qualitative")

    def test_suffix_tolerance_property(self):
        rng = random.Random(99)
        suffix_words = ["indeed", "for", "this", "molecule", "(approximately)", "grams", "A^2"]
        golds = [("Yes", "qualitative"), ("No", "qualitative"), ("High", "qualitative"),
                 ("Low", "qualitative"), ("True", "qualitative"), ("False", "qualitative"),
                 ("20.23", "quantitative"), ("0.44", "quantitative"), ("-1.05", "quantitative")]
        for _ in range(1000):
            gold, kind = rng.choice(golds)
            suffix = " ".join(rng.choice(suffix_words) for _ in range(rng.randint(0, 6)))
            assert score_answer(f"{gold} {suffix}", gold, kind), (gold, suffix)

    def test_complement_property(self):
        for gold, complement in COMPLEMENT.items():
            assert not score_answer(f"{complement} and then {gold}", gold, "qualitative")
            assert score_answer(f"{gold} rather than {complement}", gold, "qualitative")


class TestRunBenchmark:
    def test_oracle_accuracy_100(self):
        bench = generate("full", seed=6, per_tool=4)
        result, summary, per_tool = run_benchmark(bench, ORACLE, parallelism=2,
                                                  model_label="oracle", node_label="here")
        assert result.accuracy == 100.0
        assert summary.accuracy == 100.0
        assert summary.prompt == "Full"  # domain strategy reports as Full
        assert sum(row.asked for row in per_tool) == 40
        assert all(row.accuracy == 100.0 for row in per_tool)

    def test_always_banana_accuracy_0(self):
        bench = generate("qualitative", seed=6, per_tool=3)
        cfg = AgentConfig(
            backend=BackendConfig(kind="scripted", scripted_replies=("Final Answer: banana",))
        )
        result, summary, _ = run_benchmark(bench, cfg)
        assert result.accuracy == 0.0

    def test_accuracy_weighted_mean_of_per_tool(self):
        bench = generate("full", seed=13, per_tool=4)
        cfg = AgentConfig(backend=BackendConfig(kind="rule_oracle", flip_probability=0.5,
                                                noise_seed=3))
        result, summary, per_tool = run_benchmark(bench, cfg)
        weighted = sum(row.correct for row in per_tool) / sum(row.asked for row in per_tool)
        assert summary.accuracy == pytest.approx(100.0 * weighted, abs=1e-9)

    def test_parallelism_independence(self):
        bench = generate("qualitative", seed=21, per_tool=5)
        cfg = AgentConfig(backend=BackendConfig(kind="rule_oracle", flip_probability=0.3,
                                                noise_seed=5))
        flags1 = [r.correct for r in run_benchmark(bench, cfg, parallelism=1)[0].results]
        flags4 = [r.correct for r in run_benchmark(bench, cfg, parallelism=4)[0].results]
        assert flags1 == flags4

    def test_backend_errors_counted(self):
        bench = generate("qualitative", seed=2, per_tool=1)
        cfg = AgentConfig(backend=BackendConfig(kind="scripted", scripted_replies=()))
        result, _, _ = run_benchmark(bench, cfg)
        assert result.backend_errors == len(bench.questions)
        assert result.accuracy == 0.0

    def test_noisy_oracle_calibration(self):
        bench = generate("qualitative", seed=17)
        assert len(bench) == 500
        cfg = AgentConfig(backend=BackendConfig(kind="rule_oracle", flip_probability=0.1,
                                                noise_seed=17))
        result, _, _ = run_benchmark(bench, cfg, parallelism=4)
        # 3-sigma binomial window around 90% on n=500
        assert 86.0 <= result.accuracy <= 94.0


class TestReports:
    def test_report_files(self, tmp_path):
        bench = generate("full", seed=6, per_tool=2)
        result, summary, per_tool = run_benchmark(bench, ORACLE, model_label="oracle",
                                                  node_label="local")
        paths = write_reports(result, summary, per_tool, tmp_path)
        text = paths["summary"].read_text().splitlines()
        assert text[0] == ",".join(SUMMARY_HEADER)
        assert text[1].startswith("oracle,local,Full,Full,")
        assert text[1].endswith(",100.0")

        per_tool_lines = paths["per_tool"].read_text().splitlines()
        assert per_tool_lines[0] == "tool,asked,correct,accuracy"
        assert len(per_tool_lines) == 11

        transcripts = [json.loads(line) for line in paths["transcripts"].read_text().splitlines()]
        assert len(transcripts) == len(bench.questions)
        assert all(t["correct"] for t in transcripts)
        assert all("steps" in t and "wall_time" not in t for t in transcripts)

        assert paths["per_tool_figure"].exists()
        assert paths["summary_figure"].exists()

    def test_external_summary_row_parses(self, tmp_path):
        # a hand-written row in the documented schema round-trips through the reader
        path = tmp_path / "summary.csv"
        path.write_text(
            "Model,Node,QuestionSet,Prompt,Time,Accuracy\n"
            "gemma7b,A100 80GB,Full,Full,43.1,94.7\n"
        )
        rows = read_summary_csv(path)
        assert rows[0].model == "gemma7b"
        assert rows[0].node == "A100 80GB"
        assert rows[0].time == 43.1
        assert rows[0].accuracy == 94.7

    def test_transcripts_deterministic(self, tmp_path):
        bench = generate("qualitative", seed=30, per_tool=2)
        cfg = AgentConfig(
            backend=BackendConfig(kind="scripted", scripted_replies=("Final Answer: Yes",))
        )

        def render(path):
            result, summary, per_tool = run_benchmark(bench, cfg)
            write_reports(result, summary, per_tool, path, figures=False)
            return (path / "transcripts.jsonl").read_bytes()

        assert render(tmp_path / "a") == render(tmp_path / "b")

    def test_empty_results_header_only(self, tmp_path):
        from chemagent.benchmark.runner import RunResult, SummaryRow

        empty = RunResult(set_name="full", results=())
        summary = SummaryRow(model="m", node="n", question_set="Full", prompt="Full",
                             time=1e-9, accuracy=0.0)
        paths = write_reports(empty, summary, [], tmp_path, figures=True)
        assert paths["summary"].read_text().splitlines() == [",".join(SUMMARY_HEADER)]
        assert paths["per_tool"].read_text().splitlines() == ["tool,asked,correct,accuracy"]
        assert paths["transcripts"].read_text() == ""
        assert "per_tool_figure" not in paths
