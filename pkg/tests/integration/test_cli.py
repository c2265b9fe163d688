import json

from backend.cli import SUITE_FAILURE, USAGE_ERROR, UsageError, run
from backend.core.errors import CatalogError, IndeterminateError, WBAError


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


class TestListAndInfo:
    """Catalog listing and descriptions."""

    def test_list(self, capsys):
        code, doc = run_json(capsys, ["list"])
        assert code == 0
        names = [d["name"] for d in doc["examples"]]
        assert "sweedler" in names and "h4" in names

    def test_info_text(self, capsys):
        assert run(["info", "sweedler", "--format", "text"]) == 0
        out = capsys.readouterr().out
        assert "dims: 0:4" in out
        assert "suites:" in out

    def test_unknown_example(self, capsys):
        assert run(["info", "nosuch"]) == USAGE_ERROR
        assert "Error" in capsys.readouterr().err


class TestCheck:
    """Suites on catalog examples and documents."""

    def test_sweedler_passes(self, capsys):
        code, doc = run_json(capsys, ["check", "sweedler", "--suite", "wba,coquasi"])
        assert code == 0
        assert [r["suite"] for r in doc["reports"]] == ["wba", "coquasi"]
        assert all(not r["violations"] for r in doc["reports"])

    def test_failing_suite_exits_one(self, capsys):
        code = run(["check", "sweedler", "--param", "antipode=as_printed", "--suite", "antipode", "--format", "text"])
        out = capsys.readouterr().out
        assert code == SUITE_FAILURE
        assert "antipode.target" in out
        assert out.rstrip().endswith("FAIL")

    def test_unknown_suite(self, capsys):
        assert run(["check", "sweedler", "--suite", "nosuch"]) == USAGE_ERROR

    def test_bad_param_syntax(self, capsys):
        assert run(["check", "sweedler", "--param", "alpha"]) == USAGE_ERROR

    def test_check_document(self, capsys, tmp_path):
        path = tmp_path / "w.json"
        assert run(["emit", "sweedler", "-o", str(path)]) == 0
        code, doc = run_json(capsys, ["check", "--input", str(path)])
        assert code == 0
        assert doc["example"] == "W"
        assert doc["reports"][0]["suite"] == "wba"

    def test_missing_input(self, capsys, tmp_path):
        assert run(["check", "--input", str(tmp_path / "missing.json")]) == USAGE_ERROR


class TestLocalize:
    """Fraction algebras from the command line."""

    def test_h4(self, capsys):
        code, doc = run_json(capsys, ["localize", "h4", "--at", "zerobar,onebar"])
        assert code == 0
        assert doc["results"]["materialized_dim"] == 1

    def test_sweedler_text(self, capsys):
        assert run(["localize", "sweedler", "--format", "text"]) == 0
        out = capsys.readouterr().out
        assert "materialized_dim: 4" in out

    def test_dims(self, capsys):
        code, doc = run_json(capsys, ["dims", "h4", "--at", "zerobar,onebar"])
        assert code == 0
        assert doc["command"] == "dims"
        assert doc["dimensions"]["fraction_dims"] == {"0": 1}


class TestEmitAndBuild:
    """Documents written by the CLI."""

    def test_detq(self, capsys):
        code, doc = run_json(capsys, ["detq", "--r", "3"])
        assert code == 0
        assert len(doc["terms"]) == 4

    def test_detq_emit_path(self, capsys, tmp_path):
        path = tmp_path / "det.json"
        assert run(["detq", "--r", "4", "--emit", str(path)]) == 0
        assert len(json.loads(path.read_text(encoding="utf-8"))["terms"]) == 16

    def test_detq_bad_level(self, capsys):
        assert run(["detq", "--r", "2"]) == USAGE_ERROR

    def test_emit_rform(self, capsys):
        code, doc = run_json(capsys, ["emit", "sweedler", "--what", "rform", "--alpha", "2"])
        assert code == 0
        assert doc["mode"] == "recursive"
        values = {(e["left"], e["right"]): e["value"]["coeffs"] for e in doc["entries"]}
        assert values[("y", "y")] == ["2"]

    def test_emit_elements(self, capsys):
        assert run(["emit", "h4", "--what", "elements", "--format", "text"]) == 0
        assert "zerobar = 0̄" in capsys.readouterr().out

    def test_build_graph(self, capsys, tmp_path):
        graph = tmp_path / "g.json"
        graph.write_text(json.dumps({"vertices": 2, "edges": [[0, 1], [1, 0]]}), encoding="utf-8")
        code, doc = run_json(capsys, ["build", "graph", "--graph", str(graph), "--cutoff", "1"])
        assert code == 0
        assert {int(d): len(labels) for d, labels in doc["labels"].items()} == {0: 4, 1: 4}

    def test_build_graph_needs_file(self, capsys):
        assert run(["build", "graph"]) == USAGE_ERROR

    def test_version(self, capsys):
        assert run(["--version"]) == 0


class TestErrorMapping:
    """Engine exceptions become exit codes."""

    def test_catalog_error_is_usage(self, capsys, mocker):
        mocker.patch("backend.cli.run_manifest", side_effect=CatalogError("sweedler has no r-form"))
        assert run(["check", "sweedler"]) == USAGE_ERROR
        assert "sweedler has no r-form" in capsys.readouterr().err

    def test_engine_error_is_failure(self, capsys, mocker):
        mocker.patch("backend.cli.localization_run", side_effect=IndeterminateError("search did not close"))
        assert run(["localize", "sweedler"]) == SUITE_FAILURE

    def test_verbose_sets_debug(self, capsys, mocker):
        setup = mocker.patch("backend.cli.setup_logging")
        run(["list", "-vv"])
        setup.assert_called_once_with(2)

    def test_unexpected_error_is_reported(self, capsys, mocker):
        mocker.patch("backend.cli.run_manifest", side_effect=TypeError("unsupported operand"))
        assert run(["check", "sweedler"]) == SUITE_FAILURE
        err = capsys.readouterr().err
        assert "internal error: TypeError" in err
        assert "Traceback" not in err

    def test_usage_error_belongs_to_the_engine_hierarchy(self):
        assert issubclass(UsageError, WBAError)
