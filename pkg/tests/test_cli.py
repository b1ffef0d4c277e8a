import json

import pytest

import main as cli_main
from cli.commands import build_parser, load_graphs
from utils.config import config
from utils.errors import GraphArgumentError, GroebnerBudgetExhausted


@pytest.fixture
def temp_data_dir(tmp_path_factory):
    temp_base = tmp_path_factory.mktemp("test_cli_base")
    original_base_dir = config.settings.directories.base
    config.settings.directories.base = str(temp_base)
    yield temp_base
    config.settings.directories.base = original_base_dir


def run(capsys, *argv):
    code = cli_main.main(list(argv))
    return code, capsys.readouterr().out


def test_gamma_json(capsys):
    code, out = run(capsys, "gamma", "Bw")
    assert code == cli_main.EXIT_OK
    payload = json.loads(out)
    assert payload["gamma"] == 1
    assert payload["graph6"] == "Bw"


def test_gamma_text_for_file(capsys, tmp_path):
    g6_file = tmp_path / "two.g6"
    g6_file.write_text("Bw\nCr\n", encoding="ascii")
    code, out = run(capsys, "--text", "gamma", "--g6-file", str(g6_file))
    assert code == cli_main.EXIT_OK
    assert "Bw: gamma = 1" in out
    assert "Cr: gamma = 2" in out


def test_ideal_with_groebner(capsys):
    code, out = run(capsys, "ideal", "--k", "3", "Bw", "--groebner")
    payload = json.loads(out)
    assert code == cli_main.EXIT_OK
    assert payload["generators"] == ["x1*x2*x3 - x1 - x2 - x3 - 2"]
    assert payload["groebner_basis"] == ["x1*x2*x3 - x1 - x2 - x3 - 2"]


def test_group_from_family(capsys):
    code, out = run(capsys, "--text", "group", "--family", "complete:4")
    assert code == cli_main.EXIT_OK
    assert "Z_4 x Z_4" in out
    assert "trees = 16" in out


def test_group_from_edge_list(capsys, tmp_path):
    edges = tmp_path / "double.txt"
    edges.write_text("2\n0 1 3\n", encoding="utf-8")
    code, out = run(capsys, "group", "--edges", str(edges))
    assert code == cli_main.EXIT_OK
    assert json.loads(out)["invariant_factors"] == [3]


def test_classify(capsys):
    code, out = run(capsys, "classify", "--family", "path:4")
    assert code == cli_main.EXIT_OK
    assert json.loads(out)["forbidden_hit"] == "P4"


def test_forb_search(capsys):
    code, out = run(capsys, "--jobs", "1", "forb-search", "--k", "0", "--n-max", "3")
    assert code == cli_main.EXIT_OK
    assert json.loads(out)["graphs"] == ["A_"]


def test_verify(capsys):
    code, out = run(capsys, "verify", "--n-max", "3", "--sweep-bound", "3", "--suites", "v1,v9")
    assert code == cli_main.EXIT_OK
    payload = json.loads(out)
    assert payload["passed"] is True
    assert [s["suite"] for s in payload["suites"]] == ["V1", "V9"]


@pytest.mark.parametrize("argv", [
    ("gamma", "B"),
    ("gamma",),
    ("gamma", "Bw", "--family", "complete:3"),
    ("group", "--family", "multipartite:2,0"),
    ("verify", "--n-max", "9"),
    ("gamma", "--edges", "/nonexistent/edges.txt"),
])
def test_input_errors_exit_2(capsys, argv):
    code, _ = run(capsys, *argv)
    assert code == cli_main.EXIT_INPUT


def test_budget_exhaustion_exit_3(capsys, monkeypatch):
    def exhausted(*args, **kwargs):
        raise GroebnerBudgetExhausted(5, 5, 2)

    monkeypatch.setattr("cli.commands.algebraic_corank", exhausted)
    code, _ = run(capsys, "gamma", "Bw")
    assert code == cli_main.EXIT_BUDGET


def test_save_writes_report(capsys, temp_data_dir):
    code, _ = run(capsys, "--save", "group", "Bw")
    assert code == cli_main.EXIT_OK
    saved = list((temp_data_dir / config.settings.directories.reports / "group").glob("group_*.json"))
    assert len(saved) == 1
    assert json.loads(saved[0].read_text(encoding="utf-8"))["invariant_factors"] == [1, 3]


def test_load_graphs_requires_one_source():
    args = build_parser().parse_args(["gamma"])
    with pytest.raises(GraphArgumentError):
        load_graphs(args)
    args = build_parser().parse_args(["gamma", "--family", "cycle:5"])
    assert load_graphs(args)[0].n == 5


def test_save_failure_exits_nonzero(capsys, temp_data_dir):
    blocker = temp_data_dir / "blocker"
    blocker.write_text("occupied", encoding="utf-8")
    config.settings.directories.base = str(blocker)
    code = cli_main.main(["--save", "group", "Bw"])
    captured = capsys.readouterr()
    assert code == cli_main.EXIT_FAILED
    assert "not writable" in captured.err
