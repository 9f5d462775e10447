from __future__ import annotations

import json

import pytest

from helpers import FIXTURES
from prymcheck.cli import main
from prymcheck.dicing import condition_star, condition_star_star
from prymcheck.fs import is_fs_degeneration
from prymcheck.graphs import load_graph

ALL_FIXTURES = ["fs2", "fs4", "boldbanana", "square", "fs4tail"]


def fixture_path(name: str) -> str:
    return str(FIXTURES / f"{name}.json")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_fs4_human(self, capsys):
        code, out, _ = run(capsys, "check", "--input", fixture_path("fs4"))
        assert code == 0
        assert "condition (*): FAILS" in out
        assert "condition (**): FAILS" in out
        assert "witness" in out
        assert "multiply by 1/2" in out
        assert "threshold 4: YES" in out
        assert "indeterminacy: YES" in out

    def test_boldbanana_human(self, capsys):
        code, out, _ = run(capsys, "check", "--input", fixture_path("boldbanana"))
        assert code == 0
        assert "condition (*): holds" in out
        assert "condition (**): holds" in out
        assert "indeterminacy: NO" in out

    def test_structured_matches_library(self, capsys):
        for name in ALL_FIXTURES:
            code, out, _ = run(
                capsys, "check", "--input", fixture_path(name), "--format", "structured"
            )
            assert code == 0
            payload = json.loads(out)
            g = load_graph(fixture_path(name))
            star = condition_star(g)
            starstar = condition_star_star(g)
            assert payload["schema_version"] == 1
            assert payload["conditions"]["star"]["holds"] == star.is_dicing
            assert payload["conditions"]["starstar"]["holds"] == starstar.is_dicing
            assert payload["indeterminacy"] == (not star.is_dicing)
            assert payload["d"] == star.d
            assert (payload["fs"]["min4"] is not None) == (
                is_fs_degeneration(g, 4) is not None
            )

    def test_human_structured_parity(self, capsys):
        for name in ALL_FIXTURES:
            _, human, _ = run(capsys, "check", "--input", fixture_path(name))
            _, structured, _ = run(
                capsys, "check", "--input", fixture_path(name), "--format", "structured"
            )
            payload = json.loads(structured)
            assert ("indeterminacy: YES" in human) == payload["indeterminacy"]
            assert ("condition (*): holds" in human) == payload["conditions"]["star"]["holds"]
            assert ("condition (**): holds" in human) == payload["conditions"]["starstar"]["holds"]

    def test_structured_is_reproducible(self, capsys):
        _, first, _ = run(
            capsys, "check", "--input", fixture_path("fs4"), "--format", "structured"
        )
        _, second, _ = run(
            capsys, "check", "--input", fixture_path("fs4"), "--format", "structured"
        )
        assert first == second

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "report.txt"
        code, out, _ = run(
            capsys, "check", "--input", fixture_path("fs2"), "--output", str(target)
        )
        assert code == 0
        assert out == ""
        assert "indeterminacy: NO" in target.read_text()

    def test_witness_payload(self, capsys):
        _, out, _ = run(
            capsys, "check", "--input", fixture_path("fs2"), "--format", "structured"
        )
        witness = json.loads(out)["conditions"]["starstar"]["witness"]
        assert witness["rows"] == ["e1"]
        assert witness["determinant"] == 2
        assert witness["point_doubled"] == {"e1": "2", "e2": "-2"}
        assert "multiply by 1/2" in witness["units"]


class TestClassify:
    def test_human(self, capsys):
        code, out, _ = run(capsys, "classify", "--input", fixture_path("fs4tail"))
        assert code == 0
        assert "rank d = 2" in out
        assert "c (fixed): type 1" in out
        assert "a1 ~ a2: type 3" in out

    def test_structured(self, capsys):
        code, out, _ = run(
            capsys, "classify", "--input", fixture_path("fs2"), "--format", "structured"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["d"] == 1
        assert payload["edge_classes"] == [
            {"orbit": ["e1", "e2"], "type": 2, "multiplier": 1, "gcd": 2}
        ]


class TestFS:
    def test_threshold_default(self, capsys):
        code, out, _ = run(capsys, "fs", "--input", fixture_path("fs2"))
        assert code == 0
        assert ">= 4 crossing edges: no" in out

    def test_threshold_two(self, capsys):
        code, out, _ = run(
            capsys, "fs", "--input", fixture_path("fs2"), "--min-fs-edges", "2"
        )
        assert code == 0
        assert ">= 2 crossing edges: YES" in out

    def test_structured(self, capsys):
        code, out, _ = run(
            capsys, "fs", "--input", fixture_path("fs4tail"), "--format", "structured"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["found"] is True
        assert payload["witness"]["part2"] == ["v2", "v3"]
        assert payload["witness"]["crossing_count"] == 4


class TestVerify:
    ARGS = (
        "verify",
        "--max-fixed-vertices", "2",
        "--max-vertex-pairs", "1",
        "--max-fixed-edges", "2",
        "--max-edge-pairs", "2",
        "--max-edge-orbits", "2",
    )

    def test_clean_run(self, capsys, tmp_path):
        out_path = tmp_path / "suite.ndjson"
        code, out, _ = run(capsys, *self.ARGS, "--output", str(out_path))
        assert code == 0
        assert "failed checks: 0" in out
        assert out_path.exists()
        assert (tmp_path / "suite.summary.json").exists()
        assert (tmp_path / "suite.counterexamples.ndjson").read_text() == ""

    def test_structured_run(self, capsys, tmp_path):
        out_path = tmp_path / "suite.ndjson"
        code, out, _ = run(
            capsys, *self.ARGS, "--output", str(out_path), "--format", "structured"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] is True
        assert payload["failed_checks"] == 0
        assert payload["graphs"] > 0
        assert payload["per_check"]["theorem1"]["fail"] == 0

    def test_mutant_exits_four(self, capsys, tmp_path):
        out_path = tmp_path / "mut.ndjson"
        code, out, _ = run(
            capsys, *self.ARGS, "--output", str(out_path), "--mutant-starstar"
        )
        assert code == 4
        assert (tmp_path / "mut.counterexamples.ndjson").read_text() != ""

    def test_deterministic_reports(self, capsys, tmp_path):
        a = tmp_path / "a.ndjson"
        b = tmp_path / "b.ndjson"
        run(capsys, *self.ARGS, "--output", str(a))
        run(capsys, *self.ARGS, "--output", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_dedup_cap_exits_three(self, capsys, tmp_path):
        code, _, err = run(
            capsys,
            "verify",
            "--max-fixed-vertices", "9",
            "--output", str(tmp_path / "cap.ndjson"),
        )
        assert code == 3
        assert "rerun without dedup" in err


class TestComponents:
    def test_human(self, capsys):
        code, out, _ = run(capsys, "components", "5", "2")
        assert code == 0
        assert "(0, 4)" in out and "(1, 3)" in out and "(2, 2)" in out
        assert "count: 3" in out

    def test_structured(self, capsys):
        code, out, _ = run(capsys, "components", "6", "3", "--format", "structured")
        assert code == 0
        payload = json.loads(out)
        assert payload["splittings"] == [[0, 4], [1, 3], [2, 2]]
        assert payload["count"] == 3

    def test_boundary(self, capsys):
        code, out, _ = run(capsys, "components", "3", "4")
        assert code == 0
        assert "(0, 0)" in out and "count: 1" in out

    @pytest.mark.parametrize("argv", [("5", "1"), ("2", "4")])
    def test_out_of_range(self, capsys, argv):
        code, _, err = run(capsys, "components", *argv)
        assert code == 2
        assert "error:" in err


class TestErrorExits:
    def test_malformed_json(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        code, _, err = run(capsys, "check", "--input", str(bad))
        assert code == 2
        assert "error:" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "check", "--input", "/does/not/exist.json")
        assert code == 2

    def test_type2_document(self, capsys, tmp_path):
        doc = {
            "vertices": [{"id": "v1"}, {"id": "v2"}],
            "edges": [{"id": "e", "from": "v1", "to": "v2"}],
            "involution": {
                "vertices": {"v1": "v2", "v2": "v1"},
                "edges": {"e": "e"},
            },
        }
        path = tmp_path / "type2.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "check", "--input", str(path))
        assert code == 2
        assert "type-2-node" in err

    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 2

    def test_no_arguments(self, capsys):
        assert run(capsys)[0] == 2

    def test_bad_threshold(self, capsys):
        code, _, _ = run(
            capsys, "fs", "--input", fixture_path("fs2"), "--min-fs-edges", "3"
        )
        assert code == 2
