"""End-to-end runs of the quiver-stability command line."""

import json
import tempfile
from pathlib import Path

import jsonschema
import pytest
from click.testing import CliRunner

from quiver_stability import __version__
from quiver_stability.main import cli

from .conftest import FIXTURES, load_schema


def make_runner() -> CliRunner:
    # click < 8.2 mixes stderr into stdout unless told otherwise
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        return CliRunner()


@pytest.fixture
def invoke():
    with tempfile.TemporaryDirectory() as temp_dir:
        runner = make_runner()

        def run(*args):
            return runner.invoke(cli, ["--config", temp_dir, *args])
        yield run


class TestCommands:

    def test_version(self):
        result = make_runner().invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.stdout

    def test_help_lists_subcommands(self):
        result = make_runner().invoke(cli, ["--help"])
        for name in ("indec", "king", "hn", "torsion", "chain", "mgs", "walls", "chambers",
                     "path", "render"):
            assert name in result.stdout

    def test_king(self, invoke):
        result = invoke("king", "--algebra", "builtin:A2", "--theta", "1,-1", "--bound", "1,1")
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        jsonschema.validate(document, load_schema("king"))
        assert {m["id"]: m["status"] for m in document["modules"]}["P1"] == "stable"

    def test_indec_from_file(self, invoke):
        result = invoke("indec", "--algebra", str(FIXTURES / "algebras" / "a3.quiver"),
                        "--bound", "1,1,1")
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        jsonschema.validate(document, load_schema("indec"))
        assert document["count"] == 6

    def test_output_is_stable(self, invoke):
        args = ("chambers", "--algebra", "builtin:A2")
        assert invoke(*args).stdout == invoke(*args).stdout

    def test_mgs_from_table(self, invoke):
        table = FIXTURES / "tables" / "a2-slope.table"
        result = invoke("mgs", "--algebra", "builtin:A2", "--stability", f"table {table}")
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        jsonschema.validate(document, load_schema("mgs"))
        assert document["mgs"] is True

    def test_path(self, invoke):
        result = invoke("path", "--algebra", "builtin:A2", "--path",
                        str(FIXTURES / "paths" / "a2-mgs2.path"))
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        jsonschema.validate(document, load_schema("path"))
        assert document["chain"]["classes"] == [[], ["S2"], ["S2", "S1", "P1"]]

    def test_out_file_suppresses_stdout(self, invoke):
        with tempfile.TemporaryDirectory() as out_dir:
            out = Path(out_dir) / "walls.json"
            result = invoke("walls", "--algebra", "builtin:A2", "--out", str(out))
            assert result.exit_code == 0
            assert result.stdout == ""
            jsonschema.validate(json.loads(out.read_text(encoding="utf-8")),
                                load_schema("walls"))

    def test_render_svg(self, invoke):
        result = invoke("render", "--algebra", "builtin:A2", "--path",
                        str(FIXTURES / "paths" / "a2-mgs3.path"))
        assert result.exit_code == 0
        assert result.stdout.count('class="crossing"') == 3

    def test_render_pdf(self, invoke):
        with tempfile.TemporaryDirectory() as out_dir:
            out = Path(out_dir) / "a2.pdf"
            result = invoke("render", "--algebra", "builtin:A2", "--format", "pdf",
                            "--out", str(out))
            assert result.exit_code == 0
            document = json.loads(result.stdout)
            jsonschema.validate(document, load_schema("render"))
            assert out.read_bytes().startswith(b"%PDF")


class TestExitCodes:

    @pytest.mark.parametrize("args", [
        ("indec", "--algebra", "builtin:E8"),
        ("indec", "--algebra", "builtin:A2", "--bound", "1,-1"),
        ("torsion", "--algebra", "builtin:A2", "--phase", "1/2"),
        ("render", "--algebra", "builtin:A2", "--format", "pdf"),
    ])
    def test_usage_errors(self, invoke, args):
        result = invoke(*args)
        assert result.exit_code == 2
        jsonschema.validate(json.loads(result.stdout), load_schema("error"))

    def test_domain_error(self, invoke):
        result = invoke("chambers", "--algebra", "builtin:A3")
        assert result.exit_code == 1
        assert json.loads(result.stdout)["error"]["code"] == "RANK_UNSUPPORTED"

    def test_missing_required_option(self, invoke):
        assert invoke("king", "--algebra", "builtin:A2").exit_code == 2
