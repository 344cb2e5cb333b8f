from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from brauerkit.cli import run_command


def run(capsys, *argv) -> tuple[int, str, str]:
    code = run_command(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_relations_json(capsys):
    code, out, _ = run(capsys, "relations", "--group", "S 3", "--char", "0", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["rank"] == 1 and data["top_ideal"] == 2 and data["order"] == 6
    assert data["basis"] == [[1, -2, -1, 2]]


def test_prim_verify(capsys):
    code, out, _ = run(capsys, "prim", "--group", "A 4", "--char", "0", "--verify", "--json")
    data = json.loads(out)
    assert code == 0 and data["prim"] == "Z" and data["agree"]
    code, out, _ = run(capsys, "prim", "--group", "A5", "--char", "2")
    assert code == 0 and "Prim in characteristic 2 = Z" in out


def test_sweep_exit_zero(capsys):
    code, out, _ = run(capsys, "sweep", "--char", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["agree"]
    labels = [g["label"] for g in data["groups"]]
    assert labels[0] == "C1" and labels[-1] == "C3:C4"


def test_other_subcommands(capsys):
    code, out, _ = run(capsys, "classify", "--group", "S 3", "--json")
    data = json.loads(out)
    assert code == 0 and data["quasi_elementary_primes"] == [2] and data["hypo_elementary_primes"] == [3]
    code, out, _ = run(capsys, "subgroups", "--group", "A 4", "--json")
    assert code == 0 and json.loads(out)["num_subgroups"] == 10
    code, out, _ = run(capsys, "marks", "--group", "S 3", "--json")
    assert json.loads(out)["marks"] == [[6, 3, 2, 1], [0, 1, 0, 1], [0, 0, 2, 1], [0, 0, 0, 1]]
    code, out, _ = run(capsys, "verify", "--group", "S4", "--char", "0", "--char", "3")
    assert code == 0 and out.count("ok") == 2
    code, out, _ = run(capsys, "axioms", "--groups", "S 3; A 4", "--samples", "5", "--json")
    assert code == 0 and json.loads(out)["passed"]


@pytest.mark.parametrize(
    "argv",
    [
        ["relations", "--group", "X 9", "--char", "0"],
        ["relations", "--group", "S 3", "--char", "4"],
        ["relations", "--group", "S 3"],
        ["frobnicate"],
        ["marks", "--group", "S 6", "--order-cap", "100"],
        ["marks", "--group", "S 3", "--order-cap", "5000"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_text_output_is_stable(capsys):
    _, a, _ = run(capsys, "subgroups", "--group", "D 8")
    _, b, _ = run(capsys, "subgroups", "--group", "D 8")
    assert a == b and a.startswith("D 8: order 8, 8 classes, 10 subgroups")


@pytest.mark.parametrize("argv", [["sweep", "--char", "0", "--json"], ["prim", "--group", "S 4", "--char", "0", "--json"]])
def test_cache_does_not_change_output(tmp_path, argv):
    def cli(env_extra):
        env = {k: v for k, v in os.environ.items() if k != "BRAUERKIT_CACHE"} | env_extra
        proc = subprocess.run([sys.executable, "-m", "brauerkit", *argv], capture_output=True, env=env, check=True)
        return proc.stdout

    plain = cli({})
    cold = cli({"BRAUERKIT_CACHE": str(tmp_path)})
    warm = cli({"BRAUERKIT_CACHE": str(tmp_path)})
    assert any(tmp_path.iterdir())
    assert plain == cold == warm
