"""
Tests for the command-line interface.
"""
import argparse
import json

import pytest

from src import config
from src.cli import (
    EXIT_FAILED,
    EXIT_INPUT,
    EXIT_OK,
    EXIT_RESOURCE,
    RunConfig,
    build_parser,
    load_group,
    main,
)
from src.theory_checks.corpus import build_group
from src.theory_checks.report import SuiteReport

KLEIN = "gens x,y\norders 2,2\n"


class TestRunConfig:

    def test_defaults_from_args(self):
        """Test RunConfig defaults."""
        args = build_parser().parse_args(["maol", "sym:3"])
        run = RunConfig.from_args(args)
        assert run.cap == config.AUT_ORDER_LIMIT
        assert run.jobs == 1
        assert run.fmt == "json"
        assert run.out is None

    def test_build_default_cap(self):
        """Test the default cap of the build command."""
        run = RunConfig.from_args(build_parser().parse_args(["build", "Gn:1"]))
        assert run.cap == config.MAX_GROUP_ORDER

    def test_rejects_bad_jobs(self):
        """Test that a nonpositive job count is rejected."""
        with pytest.raises(ValueError):
            RunConfig(command="verify", suite="gn", jobs=0)

    def test_rejects_cap_above_aut_limit(self):
        """Test that maol caps above the automorphism limit are rejected."""
        with pytest.raises(ValueError):
            RunConfig(command="maol", source="sym:3", cap=config.AUT_ORDER_LIMIT + 1)

    def test_unknown_suite_is_an_argparse_error(self):
        """Test that argparse rejects unknown suites."""
        with pytest.raises(SystemExit):
            build_parser().parse_args(["verify", "everything"])


class TestLoadGroup:

    def test_builtin(self):
        """Test loading a builtin identifier."""
        assert load_group("cyclic:6", cap=100).order == 6

    def test_presentation_file(self, tmp_path):
        """Test loading a presentation file named after its stem."""
        path = tmp_path / "klein.pc"
        path.write_text(KLEIN, encoding="utf-8")
        G = load_group(str(path), cap=100)
        assert G.order == 4
        assert G.name == "klein"

    def test_table_file(self, tmp_path):
        """Test loading a serialised table."""
        path = tmp_path / "sym3.json"
        path.write_text(json.dumps(build_group("sym:3").to_dict()), encoding="utf-8")
        assert load_group(str(path), cap=100) == build_group("sym:3")


class TestMain:

    def test_build_json(self, capsys):
        """Test JSON output of the build command."""
        assert main(["build", "cyclic:6"]) == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert document["summary"]["order"] == 6
        assert document["summary"]["abelian"] is True
        assert document["group"]["order"] == 6

    def test_build_table(self, capsys):
        """Test table output of the build command."""
        assert main(["build", "Gn:1", "--format", "table"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "order: 32" in out
        assert "center_order: 4" in out
        assert "mul" not in out

    def test_maol(self, capsys):
        """Test JSON output of the maol command."""
        assert main(["maol", "abelian:2x2"]) == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert document["maol"] == 3
        assert document["orbit_lengths"] == [1, 3]
        assert document["aut_order"] == 6
        assert document["central_index"] == 1

    def test_maol_table(self, capsys):
        """Test table output of the maol command."""
        assert main(["maol", "sym:3", "--format", "table"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "maol: 3" in out
        assert "central_index: 6" in out

    def test_out_file(self, tmp_path, capsys):
        """Test writing output to a file."""
        out = tmp_path / "q8.json"
        assert main(["maol", "quaternion", "--out", str(out)]) == EXIT_OK
        assert capsys.readouterr().out == ""
        assert json.loads(out.read_text(encoding="utf-8"))["maol"] == 6

    def test_verify(self, tmp_path):
        """Test running a suite from the command line."""
        out = tmp_path / "report.json"
        assert main(["verify", "extraspecial", "--out", str(out)]) == EXIT_OK
        document = json.loads(out.read_text(encoding="utf-8"))
        assert document["suite"] == "extraspecial"
        assert document["passed"] is True
        assert all(check["pass"] for check in document["checks"])

    def test_failed_verification(self, monkeypatch):
        """Test the exit code of a failed suite."""
        report = SuiteReport("demo")
        report.add("always_fails", {}, 0, 1, False)
        monkeypatch.setattr("src.cli.run_suite", lambda name, jobs, long: report)
        assert main(["verify", "gn"]) == EXIT_FAILED

    def test_unknown_group(self):
        """Test the exit code for unknown groups."""
        assert main(["build", "nope:1"]) == EXIT_INPUT

    def test_bad_jobs(self):
        """Test the exit code for a bad job count."""
        assert main(["build", "cyclic:6", "--jobs", "0"]) == EXIT_INPUT

    def test_syntax_error(self, tmp_path):
        """Test the exit code for a malformed presentation."""
        path = tmp_path / "broken.pc"
        path.write_text("gens x,y\norders 2,,2\n", encoding="utf-8")
        assert main(["build", str(path)]) == EXIT_INPUT

    def test_resource_cap(self):
        """Test the exit code when a cap is hit."""
        assert main(["maol", "sym:5", "--cap", "100"]) == EXIT_RESOURCE

    def test_parser_namespace(self):
        """Test parsing of shared options."""
        args = build_parser().parse_args(["verify", "all", "--jobs", "2", "--long", "-vv"])
        assert isinstance(args, argparse.Namespace)
        assert args.suite == "all"
        assert args.jobs == 2
        assert args.long
        assert args.verbose == 2
