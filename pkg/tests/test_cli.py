import json

import pytest
from typer.testing import CliRunner

from mixdiff import __version__
from mixdiff.cli import app
from mixdiff.renderers import expansion_from_json

runner = CliRunner()


@pytest.mark.parametrize("args, golden_name", [
    (["expand", "x1 x2^2", "--mode", "composition", "--format", "latex"], "expand_x1_x2sq_latex.txt"),
    (["expand", "x1 x2 x3", "--mode", "exponential"], "expand_x1_x2_x3_exponential.txt"),
    (["expand", "x1^8", "--mode", "composition"], "expand_x1_8_composition.txt"),
])
def test_expand_matches_golden(args, golden_name, golden):
    first = runner.invoke(app, args)
    second = runner.invoke(app, args)
    assert first.exit_code == 0, first.output
    assert first.output == golden(golden_name)
    assert first.output == second.output


@pytest.mark.parametrize("args", [
    ["expand", "x1 x2^2", "--mode", "composition", "--format", "json"],
    ["expand", "x1 x2 x3", "--mode", "exponential", "--format", "json"],
    ["expand", "x1^8", "--format", "json"],
    ["expand", "x1 x2^2", "--mode", "product", "--format", "json"],
])
def test_expand_json_round_trip(args):
    from mixdiff.expansion import expand_composition, expand_exponential, expand_product
    from mixdiff.parser import parse_signature

    result = runner.invoke(app, args)
    assert result.exit_code == 0, result.output
    expansion = expansion_from_json(result.output)
    tau = parse_signature(args[1])
    mode = args[args.index("--mode") + 1] if "--mode" in args else "composition"
    expected = {
        "composition": expand_composition,
        "exponential": expand_exponential,
        "product": expand_product,
    }[mode](tau)
    assert expansion == expected


def test_expand_syntax_error_exits_2():
    result = runner.invoke(app, ["expand", "x1 y2"])
    assert result.exit_code == 2
    assert "column 4" in result.output


def test_expand_unknown_mode_and_format_exit_2():
    assert runner.invoke(app, ["expand", "x1", "--mode", "quotient"]).exit_code == 2
    assert runner.invoke(app, ["expand", "x1", "--format", "html"]).exit_code == 2


def test_expand_guard_exits_3():
    result = runner.invoke(app, ["expand", "x1^16"])
    assert result.exit_code == 3
    assert "exceeds the limit of 15" in result.output


def test_expand_guard_override():
    result = runner.invoke(app, ["expand", "x1^3", "--max-size", "2"])
    assert result.exit_code == 3
    result = runner.invoke(app, ["expand", "x1^3", "--mode", "product", "--max-size", "2"])
    assert result.exit_code == 3


def test_multiplicity_worked_example():
    result = runner.invoke(app, ["multiplicity", "x1^4 x5^2 x7 x8", "[x1^2 x5][x1^2 x5][x7 x8]"])
    assert result.exit_code == 0
    assert result.output == "6\n"


def test_multiplicity_check():
    result = runner.invoke(app, ["multiplicity", "x1^3", "[x1][x1][x1]", "--check"])
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "1"
    assert "Brute force agrees" in result.output


def test_multiplicity_distinct_is_one():
    result = runner.invoke(app, ["multiplicity", "x1 x2 x3 x4", "[x1 x3][x2][x4]"])
    assert result.output == "1\n"


def test_multiplicity_non_partition_exits_2():
    result = runner.invoke(app, ["multiplicity", "x1 x2", "[x1][x1]"])
    assert result.exit_code == 2
    assert "Error" in result.output


def test_bell():
    result = runner.invoke(app, ["bell", "8"])
    assert result.exit_code == 0
    assert result.output == "4140\n"


def test_bell_with_stirling_row():
    result = runner.invoke(app, ["bell", "3", "--stirling"])
    assert result.output.splitlines() == ["5", "S(3,0) = 0", "S(3,1) = 1", "S(3,2) = 3", "S(3,3) = 1"]


def test_bell_rejects_negative():
    assert runner.invoke(app, ["bell", "-1"]).exit_code == 2


def test_partitions():
    result = runner.invoke(app, ["partitions", "x1 x2^2"])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "1 [x1 x2^2]",
        "1 [x1][x2^2]",
        "2 [x2][x1 x2]",
        "1 [x1][x2][x2]",
    ]


def test_verify_multiplicity():
    result = runner.invoke(app, ["verify", "multiplicity", "--max-size", "8"])
    assert result.exit_code == 0, result.output
    assert result.output.rstrip().endswith("all agree")


@pytest.mark.parametrize("kind", ["composition", "product"])
def test_verify_random_trials(kind):
    result = runner.invoke(app, ["verify", kind, "--trials", "10", "--seed", "7", "--json"])
    assert result.exit_code == 0, result.output
    report_text = result.output.rsplit("all agree", 1)[0]
    report = json.loads(report_text)
    assert report["seed"] == 7
    assert report["checked"] == 10
    assert report["ok"] is True


def test_verify_paths_and_cumulants():
    assert runner.invoke(app, ["verify", "paths", "--max-size", "5"]).exit_code == 0
    assert runner.invoke(app, ["verify", "cumulants", "--max-size", "4"]).exit_code == 0


def test_verify_mismatch_exits_4(monkeypatch):
    import mixdiff.oracle.verify as verify

    monkeypatch.setattr(verify, "multiplicity", lambda tau, mp: 0)
    result = runner.invoke(app, ["verify", "multiplicity", "--max-size", "2"])
    assert result.exit_code == 4
    assert "MISMATCH" in result.output


def test_verify_multiplicity_respects_set_guard(monkeypatch):
    from mixdiff.config import reset_guards

    monkeypatch.setenv("MIXDIFF_MAX_SET_SIZE", "5")
    reset_guards()
    result = runner.invoke(app, ["verify", "multiplicity", "--max-size", "8"])
    assert result.exit_code == 3
    assert "exceeds the limit of 5" in result.output

    result = runner.invoke(app, ["multiplicity", "x1^8", "[x1^8]", "--check"])
    assert result.exit_code == 3


def test_verify_random_trials_zero_size_exits_2():
    result = runner.invoke(app, ["verify", "composition", "--max-size", "0"])
    assert result.exit_code == 2
    assert "size at least 1" in result.output
    assert "randrange" not in result.output


def test_verify_unknown_kind_exits_2():
    assert runner.invoke(app, ["verify", "everything"]).exit_code == 2


def test_cumulants_to_moments(tmp_path):
    path = tmp_path / "kappa.json"
    path.write_text(json.dumps({"kind": "cumulants", "values": {"1:1": 2, "1:2": 3, "1:3": 5}}))
    result = runner.invoke(app, ["cumulants", "moments", str(path)])
    assert result.exit_code == 0, result.output
    assert result.output.splitlines() == [
        "E[x1] = 2",
        "E[x1^2] = 7",
        "E[x1^3] = 31",
    ]


def test_cumulants_from_moments_with_target(tmp_path):
    path = tmp_path / "mu.json"
    path.write_text(json.dumps({"kind": "moments", "values": {"1:1": "0", "1:2": "1/4"}}))
    result = runner.invoke(app, ["cumulants", "cumulants", str(path), "--target", "x1^2"])
    assert result.exit_code == 0, result.output
    assert result.output == "kappa[x1^2] = 1/4\n"


def test_cumulants_incomplete_assignment_exits_2(tmp_path):
    path = tmp_path / "kappa.json"
    path.write_text(json.dumps({"1:1": 1}))
    result = runner.invoke(app, ["cumulants", "moments", str(path), "--target", "x1^2"])
    assert result.exit_code == 2
    assert "1:2" in result.output


def test_cumulants_missing_file_exits_2(tmp_path):
    result = runner.invoke(app, ["cumulants", "moments", str(tmp_path / "nope.json")])
    assert result.exit_code == 2


def test_cumulants_wrong_kind_exits_2(tmp_path):
    path = tmp_path / "mu.json"
    path.write_text(json.dumps({"kind": "moments", "values": {"1:1": 1}}))
    assert runner.invoke(app, ["cumulants", "moments", str(path)]).exit_code == 2


def test_config_show_and_init(isolated_config):
    result = runner.invoke(app, ["config"])
    assert result.exit_code == 0
    assert "max_set_size" in result.output
    assert "MIXDIFF_SEED" in result.output

    result = runner.invoke(app, ["config", "--init"])
    assert result.exit_code == 0
    assert (isolated_config / "mixdiff" / "config.toml").exists()


def test_version():
    result = runner.invoke(app, ["version"])
    assert result.output == f"mixdiff {__version__}\n"
