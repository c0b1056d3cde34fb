"""Tests for the command-line interface."""

import json

import pytest
from click.testing import CliRunner

from packed_thinnings import __version__
from packed_thinnings.cli import cli
from packed_thinnings.cli.base import parse_int_list, parse_scope, read_expression
from packed_thinnings.cli.rich_utils import format_ratio, print_info, print_table, print_warning
from packed_thinnings.config import ThinningsSettings, load_config
from packed_thinnings.errors import ParseError


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(cli, list(args))


class TestThinCommands:
    """`thinnings thin ...`."""

    @pytest.mark.parametrize(
        "pattern,expected",
        [("[01101]", "Keep [0110]"), ("[0110]", "Drop [011]"), ("[]", "Done")],
    )
    def test_view(self, runner, pattern, expected):
        """One view step."""
        result = run(runner, "thin", "view", pattern)
        assert result.exit_code == 0
        assert result.stdout.strip() == expected

    def test_join_meet(self, runner):
        """The lattice operations print patterns."""
        assert run(runner, "thin", "join", "[00110]", "[10011]").stdout.strip() == "[10111]"
        assert run(runner, "thin", "meet", "[00110]", "[10011]").stdout.strip() == "[00010]"

    def test_compose_thicken_kept(self, runner):
        """The remaining algebra."""
        assert run(runner, "thin", "compose", "[10]", "[0110]").stdout.strip() == "[0100]"
        assert run(runner, "thin", "thicken", "[0110]", "[0100]").stdout.strip() == "[10]"
        assert run(runner, "thin", "thicken", "[0110]", "[0101]").stdout.strip() == "absent"
        assert run(runner, "thin", "kept", "[01101]").stdout.strip() == "3"

    def test_render_dump(self, runner):
        """Dump prints one record per pattern."""
        result = run(runner, "thin", "render", "--dump", "[01101]", "[]")
        lines = result.stdout.strip().splitlines()
        assert json.loads(lines[0]) == {"bigEnd": 5, "encoding": "13"}
        assert json.loads(lines[1]) == {"bigEnd": 0, "encoding": "0"}

    def test_parse_error_exits_1(self, runner):
        """Malformed patterns are usage errors."""
        result = run(runner, "thin", "view", "[01a]")
        assert result.exit_code == 1

    def test_width_mismatch_exits_2(self, runner):
        """Different big ends are scope mismatches."""
        result = run(runner, "thin", "join", "[01]", "[011]")
        assert result.exit_code == 2

    def test_structured_error(self, runner):
        """Structured errors are the invocation's single stdout record."""
        result = run(runner, "thin", "join", "[01]", "[011]", "--structured")
        assert result.exit_code == 2
        record = json.loads(result.stdout)
        assert record["command"] == "thin join"
        assert record["error_type"] == "ScopeMismatchError"
        assert record["context"]["left"] == 2

    def test_structured_view(self, runner):
        """A structured result echoes its inputs."""
        result = run(runner, "thin", "view", "[01101]", "--structured")
        record = json.loads(result.stdout)
        assert record == {
            "command": "thin view",
            "inputs": {"pattern": "[01101]"},
            "result": {"case": "Keep", "tail": "[0110]"},
        }

    def test_missing_argument_exits_1(self, runner):
        """Click usage errors use exit code 1."""
        assert run(runner, "thin", "join", "[01]").exit_code == 1
        assert run(runner, "thin", "frobnicate").exit_code == 1


class TestTermCommands:
    """`thinnings term ...`."""

    def test_show_debruijn(self, runner):
        """The S combinator without names."""
        result = run(runner, "term", "show", "--as", "debruijn", "\\g.\\f.\\x. g x (f x)")
        assert result.exit_code == 0
        assert result.stdout.strip() == "\\ \\ \\ (2 0) (1 0)"

    def test_show_codebruijn(self, runner):
        """Open terms print their outer thinning first."""
        result = run(runner, "term", "show", "--as", "codebruijn", "--scope", "x,y,z", "x z")
        assert result.stdout.strip() == "[101] (app [10] (var) [01] (var))"

    def test_show_named_renames_binders(self, runner):
        """Binders are renamed canonically from the fresh-name base."""
        result = run(runner, "term", "show", "\\a. \\b. a")
        assert result.stdout.strip() == "\\x. \\x1. x"

    def test_unbound_variable(self, runner):
        """Free names must be in --scope."""
        assert run(runner, "term", "show", "x y", "--scope", "x").exit_code == 1

    def test_bad_scope(self, runner):
        """Scope names must be identifiers."""
        assert run(runner, "term", "show", "x", "--scope", "x,1y").exit_code == 1

    def test_alpha_eq(self, runner):
        """Exit 0 when equal, 3 when not."""
        equal = run(runner, "term", "alpha-eq", "\\a. a", "\\b. b")
        assert equal.exit_code == 0
        assert equal.stdout.strip() == "equal"
        different = run(runner, "term", "alpha-eq", "\\a. \\b. a", "\\a. \\b. b")
        assert different.exit_code == 3
        assert different.stdout.strip() == "not equal"

    def test_normalize(self, runner):
        """S K K v normalises to v."""
        source = "(\\g f x. g x (f x)) (\\a b. a) (\\a b. a) v"
        result = run(runner, "term", "normalize", source, "--scope", "v")
        assert result.exit_code == 0
        assert result.stdout.strip() == "v"

    def test_normalize_structured(self, runner):
        """Structured output carries both syntaxes and the step count."""
        result = run(runner, "term", "normalize", "(\\x. x) (\\y. y)", "--structured")
        record = json.loads(result.stdout)
        assert record["result"] == {"named": "\\x. x", "debruijn": "\\ 0", "steps": 1}
        assert record["inputs"]["fuel"] == 1000

    def test_fuel_exhausted_exits_4(self, runner):
        """No fuel on a redex."""
        result = run(runner, "term", "normalize", "(\\x. x) y", "--scope", "y", "--fuel", "0")
        assert result.exit_code == 4

    def test_omega_runs_out(self, runner):
        """Omega exhausts any fuel."""
        result = run(runner, "term", "normalize", "(\\x. x x) (\\x. x x)", "--fuel", "25")
        assert result.exit_code == 4

    def test_cse_fixture(self, runner, fixtures_dir):
        """The duplicated redex is reported from a file."""
        path = str(fixtures_dir / "dup.lam")
        args = ["term", "cse", path, "--scope", "f,y", "--min-size", "3", "--structured"]
        result = run(runner, *args)
        assert result.exit_code == 0
        groups = json.loads(result.stdout)["result"]["groups"]
        assert len(groups) == 1
        assert (groups[0]["size"], groups[0]["count"]) == (4, 2)

    def test_cse_table(self, runner, fixtures_dir):
        """Text mode prints a table of groups."""
        path = str(fixtures_dir / "dup.lam")
        result = run(runner, "term", "cse", path, "--scope", "f,y", "--min-size", "3")
        assert result.exit_code == 0
        assert "Repeated subterms" in result.stdout

    def test_cse_nothing(self, runner):
        """A term with no repeats says so."""
        result = run(runner, "term", "cse", "\\x. x")
        assert result.exit_code == 0
        assert "No repeated subterms" in result.stdout

    def test_show_deep_spine(self, runner):
        """A 5,000-deep application spine prints nameless and named."""
        source = "\\f. f" + " f" * 5000
        result = run(runner, "term", "show", "--as", "debruijn", source)
        assert result.exit_code == 0
        text = result.stdout.strip()
        assert text.startswith("\\ " + "(" * 4999 + "0 0) 0)")
        assert text.count("0") == 5001
        named = run(runner, "term", "show", source)
        assert named.stdout.strip() == "\\x. x" + " x" * 5000

    def test_show_deep_lambda_nest(self, runner):
        """A 5,000-deep lambda nest prints in co-de Bruijn form."""
        result = run(runner, "term", "show", "--as", "codebruijn", "\\x. " * 5000 + "x")
        assert result.exit_code == 0
        expected = "[] " + "(lam- " * 4999 + "(lam+ (var))" + ")" * 4999
        assert result.stdout.strip() == expected

    def test_stack_exhaustion_is_a_usage_error(self, runner, monkeypatch):
        """A RecursionError inside a command becomes an exit-1 error record."""

        def overflow(term):
            raise RecursionError("maximum recursion depth exceeded")

        monkeypatch.setattr("packed_thinnings.cli.term_commands.show_debruijn", overflow)
        result = run(runner, "term", "show", "--as", "debruijn", "\\x. x", "--structured")
        assert result.exit_code == 1
        record = json.loads(result.stdout)
        assert record["command"] == "term show"
        assert record["error_type"] == "ThinningsError"
        assert "nested too deeply" in record["message"]


class TestBenchCommand:
    """`thinnings bench`."""

    def test_structured_schema(self, runner):
        """One JSON record with the command, inputs and timings."""
        args = ["bench", "--widths", "16", "--ops", "join,kept", "--iters", "5", "--structured"]
        result = run(runner, *args)
        assert result.exit_code == 0
        record = json.loads(result.stdout)
        assert record["command"] == "bench"
        assert record["inputs"]["widths"] == [16]
        assert [t["op"] for t in record["timings"]] == ["join", "kept"]
        for timing in record["timings"]:
            assert timing["packed_ns_per_op"] > 0
            assert timing["batches"] >= 3

    def test_table(self, runner):
        """Text mode prints a table."""
        result = run(runner, "bench", "--widths", "8", "--iters", "3")
        assert result.exit_code == 0
        assert "join" in result.stdout

    def test_preset_with_override(self, runner):
        """Explicit flags win over the preset."""
        args = ["bench", "--preset", "quick", "--iters", "2", "--widths", "8", "--structured"]
        record = json.loads(run(runner, *args).stdout)
        assert record["inputs"]["iters"] == 2
        assert record["inputs"]["widths"] == [8]
        assert record["inputs"]["ops"] == ["join", "kept"]

    @pytest.mark.parametrize(
        "args",
        [
            ["--widths", "0"],
            ["--widths", "64,abc"],
            ["--ops", "frobnicate"],
            ["--iters", "0"],
            ["--density", "1.5"],
            ["--preset", "nope"],
        ],
    )
    def test_bad_arguments_exit_1(self, runner, args):
        """Invalid widths, ops, counts and presets."""
        assert run(runner, "bench", *args).exit_code == 1

    def test_list_presets(self, runner):
        """--list-presets shows the presets without timing anything."""
        result = run(runner, "bench", "--list-presets", "--structured")
        assert result.exit_code == 0
        record = json.loads(result.stdout)
        assert set(record["result"]) == {"quick", "acceptance", "full", "stress"}
        assert "timings" not in record
        table = run(runner, "bench", "--list-presets")
        assert table.exit_code == 0
        assert "acceptance" in table.stdout


class TestConfigCommands:
    """`thinnings config ...`."""

    @pytest.fixture
    def config_file(self, tmp_path):
        path = tmp_path / "thinnings.yaml"
        path.write_text("default_fuel: 12\n")
        return path

    def test_show(self, runner, config_file):
        """Effective settings, with the file they were read from."""
        result = run(runner, "--config", str(config_file), "config", "show", "--structured")
        assert result.exit_code == 0
        record = json.loads(result.stdout)
        assert record["inputs"]["path"] == str(config_file)
        assert record["result"]["default_fuel"] == 12
        assert set(record["result"]) >= {"debug_checks", "log_level", "fresh_name_base"}

    def test_show_table(self, runner, config_file):
        """Text mode lists every setting."""
        result = run(runner, "--config", str(config_file), "config", "show")
        assert result.exit_code == 0
        assert "default_fuel" in result.stdout

    def test_get(self, runner, config_file):
        """One value, plain or structured."""
        result = run(runner, "--config", str(config_file), "config", "get", "default_fuel")
        assert result.stdout.strip() == "12"
        args = ["--config", str(config_file), "config", "get", "fresh_name_base", "--structured"]
        assert json.loads(run(runner, *args).stdout)["result"] == "x"

    @pytest.mark.parametrize("command", ["get", "set"])
    def test_unknown_key(self, runner, config_file, command):
        """Keys must name a setting."""
        args = ["--config", str(config_file), "config", command, "fuel"]
        if command == "set":
            args.append("3")
        result = run(runner, *args, "--structured")
        assert result.exit_code == 1
        assert "Unknown setting 'fuel'" in json.loads(result.stdout)["message"]

    def test_set_writes_file(self, runner, config_file):
        """A valid value is written and seen by the next invocation."""
        result = run(runner, "--config", str(config_file), "config", "set", "default_fuel", "0")
        assert result.exit_code == 0
        assert load_config(ThinningsSettings, str(config_file)).default_fuel == 0
        normalize = ["--config", str(config_file), "term", "normalize", "(\\x. x) (\\y. y)"]
        assert run(runner, *normalize).exit_code == 4

    def test_set_coerces_booleans(self, runner, config_file):
        """Values are parsed by the settings model."""
        args = ["--config", str(config_file), "config", "set", "debug_checks", "false"]
        assert run(runner, *args, "--structured").exit_code == 0
        assert load_config(ThinningsSettings, str(config_file)).debug_checks is False

    @pytest.mark.parametrize(
        "key,value",
        [("bench_batches", "2"), ("default_fuel", "lots"), ("log_level", "LOUD")],
    )
    def test_set_rejects_invalid(self, runner, config_file, key, value):
        """Invalid values exit 1 and leave the file alone."""
        result = run(runner, "--config", str(config_file), "config", "set", key, value)
        assert result.exit_code == 1
        assert config_file.read_text() == "default_fuel: 12\n"

    def test_set_unwritable(self, runner, tmp_path):
        """A path that cannot be written is reported, not ignored."""
        blocker = tmp_path / "file"
        blocker.write_text("")
        path = str(blocker / "thinnings.yaml")
        result = run(runner, "--config", path, "config", "set", "default_fuel", "5", "--structured")
        assert result.exit_code == 1
        assert "Cannot write" in json.loads(result.stdout)["message"]


class TestRoot:
    """Root group options."""

    def test_version(self, runner):
        """--version prints the package version."""
        result = run(runner, "--version")
        assert result.exit_code == 0
        assert __version__ in result.stdout

    def test_config_file(self, runner, tmp_path):
        """Settings from --config reach the commands."""
        path = tmp_path / "thinnings.yaml"
        path.write_text("default_fuel: 0\n")
        result = run(runner, "--config", str(path), "term", "normalize", "(\\x. x) (\\y. y)")
        assert result.exit_code == 4

    def test_log_level(self, runner):
        """--log-level accepts any case."""
        assert run(runner, "--log-level", "debug", "thin", "kept", "[1]").exit_code == 0


class TestHelpers:
    """Input parsing helpers."""

    def test_parse_int_list(self):
        """Positions point at the offending item."""
        assert parse_int_list("64, 1024,4096") == [64, 1024, 4096]
        with pytest.raises(ParseError) as info:
            parse_int_list("64,x")
        assert info.value.position == 3

    def test_parse_scope(self):
        """Identifiers only."""
        assert parse_scope("x, y_1").names == ("x", "y_1")
        with pytest.raises(ParseError):
            parse_scope("x,-y")

    @pytest.mark.parametrize("text,position", [("x,y,x", 4), ("a, b,  b", 7), ("q,q", 2)])
    def test_parse_scope_rejects_repeats(self, text, position):
        """A repeated name is reported at its second occurrence."""
        with pytest.raises(ParseError, match="Repeated scope name") as info:
            parse_scope(text)
        assert info.value.position == position

    def test_parse_scope_skips_empty_items(self):
        """Blank items are not names, so they never repeat."""
        assert parse_scope("x,,y,").names == ("x", "y")

    def test_read_expression(self, tmp_path):
        """Files are read, anything else is inline."""
        path = tmp_path / "t.lam"
        path.write_text("\\x. x\n")
        assert read_expression(str(path)) == "\\x. x"
        assert read_expression("\\y. y") == "\\y. y"


class TestRichUtils:
    """Terminal helpers."""

    @pytest.mark.parametrize(
        "ratio,color", [(25.0, "green"), (10.0, "green"), (3.0, "yellow"), (0.5, "red")]
    )
    def test_format_ratio(self, ratio, color):
        """Speedups are colored by threshold."""
        assert format_ratio(ratio) == f"[{color}]{ratio:.1f}x[/{color}]"

    def test_custom_thresholds(self):
        """Thresholds can be overridden."""
        assert format_ratio(3.0, {"good": 2.0, "poor": 1.0}).startswith("[green]")

    def test_table_escapes_patterns(self, capsys):
        """Bracketed patterns are printed, not read as markup."""
        print_table([{"pattern": "[0110]", "n": 2}], title="t")
        assert "[0110]" in capsys.readouterr().out

    def test_empty_table(self, capsys):
        """No rows prints a placeholder."""
        print_table([])
        assert "No data to display" in capsys.readouterr().out

    def test_messages(self, capsys):
        """Info goes to stdout, warnings to stderr."""
        print_info("hello [1]")
        print_warning("careful")
        captured = capsys.readouterr()
        assert "hello [1]" in captured.out
        assert "careful" in captured.err
