"""
End-to-end tests for the minorgraph command line
"""
import json
from pathlib import Path

import pytest

from src.cli import run
from src.conditions.builders import siggers
from src.conditions.combine import combine
from src.conditions.io import write_condition
from src.graphs.io import write_graph, write_struct
from src.graphs.model import complete_graph, cycle_graph, nae_template, petersen_graph
from src.solver.checker import check_homomorphism


def envelope_of(capsys) -> dict:
    out = capsys.readouterr().out.strip().splitlines()
    assert out, "nothing printed on stdout"
    return json.loads(out[-1])


@pytest.fixture
def files(tmp_path: Path):
    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


@pytest.fixture
def k3_file(files):
    return files("k3.graph", write_graph(complete_graph(3)))


@pytest.fixture
def k4_file(files):
    return files("k4.graph", write_graph(complete_graph(4)))


def test_sigma_perm(capsys):
    assert run(["sigma-perm", "1", "3"]) == 0
    envelope = envelope_of(capsys)
    assert envelope["command"] == "sigma-perm"
    assert envelope["answer"] == "value"
    assert envelope["witness"] == {"permutation": [3, 5, 1, 6, 2, 4]}
    assert envelope["params"] == {"i": 1, "j": 3}


def test_sigma_then_trivial_then_verify(capsys, files, k3_file):
    assert run(["sigma", k3_file]) == 0
    condition = files("k3.cond", json.dumps(envelope_of(capsys)["witness"]))

    assert run(["trivial", condition]) == 0
    recorded = envelope_of(capsys)
    assert recorded["answer"] == "yes"
    assert recorded["inputs"][0]["path"] == condition

    saved = files("trivial.json", json.dumps(recorded))
    assert run(["verify", saved, condition]) == 0
    check = envelope_of(capsys)
    assert check["answer"] == "pass"
    assert check["witness"] == {"problems": []}


def test_satisfies_replays(capsys, files):
    struct = files("k3.struct", "p struct 3 1\nr E 2 6\nt 1 2\nt 2 1\nt 1 3\nt 3 1\nt 2 3\nt 3 2\n")
    assert run(["qnu", "2"]) == 0
    qnu_condition = files("qnu2.cond", json.dumps(envelope_of(capsys)["witness"]))
    assert run(["satisfies", struct, qnu_condition]) == 0
    recorded = envelope_of(capsys)
    assert recorded["answer"] == "no"

    saved = files("sat.json", json.dumps(recorded))
    assert run(["verify", saved, struct, qnu_condition]) == 0
    assert envelope_of(capsys)["answer"] == "pass"


def test_color3(capsys, k4_file, files):
    assert run(["color3", k4_file]) == 0
    assert envelope_of(capsys)["answer"] == "no"

    c5 = files("c5.graph", write_graph(cycle_graph(5)))
    assert run(["color3", c5]) == 0
    recorded = envelope_of(capsys)
    assert recorded["answer"] == "yes"
    coloring = recorded["witness"]["coloring"]
    assert all(coloring[u] != coloring[v] for u, v in cycle_graph(5).sorted_edges)


def test_tampered_witness_fails(capsys, files):
    c5 = files("c5.graph", write_graph(cycle_graph(5)))
    run(["color3", c5])
    recorded = envelope_of(capsys)
    recorded["witness"]["coloring"] = [0, 0, 0, 0, 0]
    saved = files("bad.json", json.dumps(recorded))
    assert run(["verify", saved, c5]) == 0
    check = envelope_of(capsys)
    assert check["answer"] == "fail"
    assert check["witness"]["problems"]


def test_tampered_input_is_rejected(capsys, files, k3_file):
    run(["color3", k3_file])
    saved = files("k3.json", json.dumps(envelope_of(capsys)))
    Path(k3_file).write_text(write_graph(cycle_graph(5)), encoding="utf-8")
    assert run(["verify", saved, k3_file]) == 2


def test_usage_errors(tmp_path):
    assert run(["no-such-command"]) == 2
    assert run(["color3", str(tmp_path / "missing.graph")]) == 2
    assert run(["sigma-perm", "2", "2"]) == 2


def test_parse_error_exit_code(files):
    broken = files("broken.graph", "p graph 2 1\ne 1 3\n")
    assert run(["color3", broken]) == 2


def test_resource_guard_exit_code(capsys, k3_file, k4_file):
    assert run(["--max-vertices", "10", "qnu-check", k4_file, k3_file, "7"]) == 3
    assert capsys.readouterr().out == ""


def test_growth(capsys):
    assert run(["growth", "4"]) == 0
    envelope = envelope_of(capsys)
    assert envelope["witness"] == {"g": [1, 486], "k": [485]}


def test_glue_fixture(capsys, k4_file):
    gadget = str(Path(__file__).resolve().parent.parent / "fixtures" / "gadget.txt")
    assert run(["glue", k4_file, "1", "2", k4_file, "1", "2", gadget]) == 0
    envelope = envelope_of(capsys)
    assert envelope["witness"]["graph"]["n"] == 22
    assert envelope["params"] == {"e": [1, 2], "f": [1, 2]}


def test_chain_tensor_writes_steps(capsys, tmp_path):
    out_dir = tmp_path / "chain"
    assert run(["chain-tensor", "2", "4", "--out-dir", str(out_dir)]) == 0
    envelope = envelope_of(capsys)
    assert len(envelope["witness"]["steps"]) == 2
    assert sorted(p.name for p in out_dir.iterdir()) == [
        "step_1.graph", "step_1.json", "step_2.graph", "step_2.json",
    ]
    assert (out_dir / "step_2.graph").read_text(encoding="utf-8").startswith("p graph 16 ")


def test_output_is_deterministic(capsys, k4_file):
    run(["critical", k4_file])
    first = capsys.readouterr().out
    run(["critical", k4_file])
    assert capsys.readouterr().out == first


def test_css_takes_graph_then_pattern(capsys, files, k4_file):
    petersen = files("petersen.graph", write_graph(petersen_graph()))
    assert run(["css", petersen, k4_file]) == 0
    assert envelope_of(capsys)["answer"] == "accept"

    k5 = files("k5.graph", write_graph(complete_graph(5)))
    assert run(["css", k5, k4_file]) == 0
    recorded = envelope_of(capsys)
    assert recorded["answer"] == "reject"
    assert check_homomorphism(complete_graph(4), complete_graph(5), recorded["witness"]["map"]) == []

    saved = files("css.json", json.dumps(recorded))
    assert run(["verify", saved, k5, k4_file]) == 0
    assert envelope_of(capsys)["answer"] == "pass"


def test_indicator_row_guard_exit_code(capsys, files):
    struct = files("nae.struct", write_struct(nae_template()))
    condition = files("siggers2.cond", write_condition(combine(siggers(), siggers())))
    assert run(["satisfies", struct, condition]) == 3
    assert capsys.readouterr().out == ""
