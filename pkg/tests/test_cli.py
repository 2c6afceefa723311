from __future__ import annotations

import json

import pytest

from goodpairs.cli import main

C3 = '{"n": 3, "arcs": [[0, 1], [1, 2], [2, 0]]}'
SPEC_C3_K2BAR = (
    '{"T": {"n": 3, "arcs": [[0, 1], [1, 2], [2, 0]]}, '
    '"H": [{"n": 2, "arcs": []}, {"n": 2, "arcs": []}, {"n": 2, "arcs": []}]}'
)
SPEC_C3_K1 = (
    '{"T": {"n": 3, "arcs": [[0, 1], [1, 2], [2, 0]]}, '
    '"H": [{"n": 1, "arcs": []}, {"n": 1, "arcs": []}, {"n": 1, "arcs": []}]}'
)


@pytest.fixture
def spec_file(tmp_path):
    p = tmp_path / "spec.json"
    p.write_text(SPEC_C3_K2BAR)
    return str(p)


def test_compose(spec_file, capsys):
    assert main(["compose", spec_file]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["n"] == 6 and len(doc["arcs"]) == 12


def test_solve_then_verify_round_trip(spec_file, tmp_path, capsys):
    assert main(["solve", spec_file, "--root", "1.1"]) == 0
    pair_text = capsys.readouterr().out
    pair_file = tmp_path / "pair.json"
    pair_file.write_text(pair_text)
    assert main(["compose", spec_file]) == 0
    digraph_file = tmp_path / "q.json"
    digraph_file.write_text(capsys.readouterr().out)
    assert main(["verify", str(digraph_file), str(pair_file)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["valid"] is True


def test_solve_rejects_undersized_blob(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(SPEC_C3_K1)
    assert main(["solve", str(p), "--root", "1.1"]) == 2
    assert "fewer than 2" in capsys.readouterr().err


def test_solve_bad_root_syntax(spec_file, capsys):
    assert main(["solve", spec_file, "--root", "7"]) == 2
    assert "i.j" in capsys.readouterr().err


def test_decide_sc_absent(tmp_path, capsys):
    p = tmp_path / "spec.json"
    p.write_text(SPEC_C3_K1)
    assert main(["decide-sc", str(p), "--root", "1.1"]) == 1
    assert json.loads(capsys.readouterr().out) == {"status": "absent"}


def test_decide_sc_found(spec_file, capsys):
    assert main(["decide-sc", spec_file, "--root", "2.2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["root"] == 3


def test_oracle_absent_on_c3(tmp_path, capsys):
    p = tmp_path / "c3.json"
    p.write_text(C3)
    assert main(["oracle", str(p), "--root", "0"]) == 1


def test_oracle_found_and_dot(tmp_path, capsys):
    p = tmp_path / "two.json"
    p.write_text('{"n": 2, "arcs": [[0, 1], [1, 0]]}')
    dot = tmp_path / "out.dot"
    assert main(["oracle", str(p), "--root", "0", "--dot", str(dot)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"root": 0, "out_arcs": [[0, 1]], "in_arcs": [[1, 0]]}
    text = dot.read_text()
    assert "color=blue" in text and "color=red" in text


def test_oracle_undecided_above_cap(tmp_path, capsys):
    arcs = [[i, (i + 1) % 16] for i in range(16)]
    p = tmp_path / "big.json"
    p.write_text(json.dumps({"n": 16, "arcs": arcs}))
    assert main(["oracle", str(p), "--root", "0"]) == 3
    assert "undecided" in capsys.readouterr().err


def test_oracle_enumerate_with_limit(tmp_path, capsys):
    p = tmp_path / "b.json"
    p.write_text(
        '{"n": 3, "arcs": [[0, 1], [1, 0], [0, 2], [2, 0], [1, 2], [2, 1]]}'
    )
    assert main(["oracle", str(p), "--root", "0", "--enumerate", "--limit", "2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2
    assert json.loads(lines[0]) == {"root": 0, "arcs": [[0, 1], [0, 2]]}


def test_verify_rejects_tampered_pair(tmp_path, capsys):
    q = tmp_path / "q.json"
    q.write_text('{"n": 2, "arcs": [[0, 1], [1, 0]]}')
    pair = tmp_path / "p.json"
    pair.write_text('{"root": 0, "out_arcs": [[0, 1]], "in_arcs": [[0, 1]]}')
    assert main(["verify", str(q), str(pair)]) == 2
    report = json.loads(capsys.readouterr().out)
    assert report["valid"] is False


def test_shrink_command(tmp_path, capsys):
    spec = tmp_path / "spec.json"
    spec.write_text(SPEC_C3_K2BAR)
    assert main(["compose", str(spec)]) == 0
    q_text = capsys.readouterr().out
    q = tmp_path / "q.json"
    q.write_text(q_text)
    assert main(["oracle", str(q), "--root", "0"]) == 0
    pair = tmp_path / "pair.json"
    pair.write_text(capsys.readouterr().out)
    assert main(["shrink", str(q), str(pair), "--root", "0"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["removed"] == [1]
    assert doc["kept"] == [0, 2, 3, 4, 5]
    assert doc["pair"]["root"] == 0


def test_gen_commands_deterministic(capsys):
    assert main(["gen", "strong", "--t", "5", "--extra-arcs", "3", "--seed", "9"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "strong", "--t", "5", "--extra-arcs", "3", "--seed", "9"]) == 0
    assert capsys.readouterr().out == first
    assert main(["gen", "composition", "--t", "3", "--blob-min", "2",
                 "--blob-max", "2", "--outer", "strong", "--seed", "1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["H"]) == 3


def test_gen_invalid_params(capsys):
    assert main(["gen", "strong", "--t", "4", "--extra-arcs", "12"]) == 2


def test_ears_command(tmp_path, capsys):
    p = tmp_path / "c3.json"
    p.write_text(C3)
    assert main(["ears", str(p), "--vertex", "1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ears"][0] == {"kind": "initial_cycle", "vertices": [1, 2, 0, 1]}


def test_ears_rejects_non_strong(tmp_path, capsys):
    p = tmp_path / "path.json"
    p.write_text('{"n": 3, "arcs": [[0, 1], [1, 2]]}')
    assert main(["ears", str(p)]) == 2


def test_stdin_input(spec_file, capsys, monkeypatch):
    import io as _io

    monkeypatch.setattr("sys.stdin", _io.StringIO(SPEC_C3_K2BAR))
    assert main(["compose", "-"]) == 0
    assert json.loads(capsys.readouterr().out)["n"] == 6


def test_malformed_file_is_invalid_input(tmp_path, capsys):
    p = tmp_path / "junk.json"
    p.write_text("{nope")
    assert main(["compose", str(p)]) == 2
    assert "error" in capsys.readouterr().err
