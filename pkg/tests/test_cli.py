"""CLI surface: subcommands, exit codes, determinism, serialization."""

import json
from fractions import Fraction

import pytest

from cliquepack.cli import main
from cliquepack.errors import (
    EXIT_BUDGET_EXHAUSTED,
    EXIT_OK,
    EXIT_PARSE_ERROR,
)
from cliquepack.graph import Graph, format_graph


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text(format_graph(Graph.complete(4)))
    return str(path)


@pytest.fixture
def c5_file(tmp_path):
    path = tmp_path / "c5.txt"
    g = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    path.write_text(format_graph(g))
    return str(path)


def test_nu_star_k4(k4_file, capsys):
    assert main(["nu-star", k4_file, "--r", "3"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "2/1"


def test_nu_star_c5(c5_file, capsys):
    assert main(["nu-star", c5_file, "--r", "3"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "0/1"


def test_nu_star_packing_out(k4_file, tmp_path, capsys):
    out = tmp_path / "pack.json"
    assert main(["nu-star", k4_file, "--packing-out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert data["r"] == 3
    assert sum(Fraction(w) for w in data["weights"]) == 2


def test_nu_star_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("not a graph\n")
    assert main(["nu-star", str(bad)]) == EXIT_PARSE_ERROR


def test_nu_star_budget_exit(k4_file):
    assert main(["nu-star", k4_file, "--clique-budget", "1"]) == EXIT_BUDGET_EXHAUSTED


def test_nu_integral_cmd(k4_file, capsys):
    assert main(["nu", k4_file, "--r", "3", "--witness"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "1" and len(lines) == 2


def test_symmetrize_cmd(c5_file, tmp_path):
    out = tmp_path / "trace.json"
    assert main(["symmetrize", c5_file, "--r", "3", "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert data["profile"] and data["steps"]


def test_construct_and_scalars(capsys):
    assert main(["construct", "--profile", "2,2,2", "--r", "3"]) == EXIT_OK
    first = capsys.readouterr().out.strip()
    num, den = first.split("/")
    assert Fraction(int(num), int(den)) >= 2
    assert main(["scalars", "--profile", "2,2,2", "--r", "3"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["k_G"] == "3"


def test_phi_cmd(tmp_path):
    out = tmp_path / "phi.csv"
    assert main(["phi", "--n", "4", "--r", "3", "--out", str(out)]) == EXIT_OK
    rows = out.read_text().splitlines()
    assert rows[0] == "e,k,phi"
    assert "5,1,1" in rows and "6,2,1" in rows


def test_phi_rejects_big_n(capsys):
    assert main(["phi", "--n", "9", "--r", "3"]) == EXIT_PARSE_ERROR


def test_example_abc_cmd(tmp_path):
    out = tmp_path / "abc.csv"
    assert main(["example-abc", "--n", "12", "--t", "0,6", "--out", str(out)]) == EXIT_OK
    text = out.read_text()
    assert "12,6,50,14/1" in text


def test_verify_theorem_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["verify-theorem", "--family", "random-gnp", "--count", "20",
            "--seed", "42", "--p", "1/2", "--out"]
    assert main(args + [str(a)]) == EXIT_OK
    assert main(args + [str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_verify_theorem_jobs_match_serial(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    base = ["verify-theorem", "--family", "random-gnp", "--count", "12",
            "--seed", "7", "--p", "1/4,3/4"]
    assert main(base + ["--out", str(a)]) == EXIT_OK
    assert main(base + ["--jobs", "2", "--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_verify_theorem_multipartite(tmp_path):
    out = tmp_path / "mp.csv"
    args = ["verify-theorem", "--family", "random-multipartite",
            "--n-max", "6", "--r", "3", "--out", str(out)]
    assert main(args) == EXIT_OK
    import csv

    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert rows
    assert all(r["satisfied"] == "true" for r in rows)
    assert all("/" in r["constructed_value"] for r in rows)


def test_csv_rationals_round_trip(tmp_path):
    out = tmp_path / "mp.csv"
    main(["verify-theorem", "--family", "random-multipartite",
          "--n-max", "5", "--out", str(out)])
    import csv

    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    for cells in rows:
        for col in ("k", "nu_star", "bound_2k_over_r"):
            value = Fraction(cells[col])
            assert f"{value.numerator}/{value.denominator}" == cells[col]
